#ifndef BELLCAT_UBI_HPP
#define BELLCAT_UBI_HPP

#include <array>
#include <cstdint>

#include "bellcat/scs_subspace.hpp"

namespace bellcat {

/// Three-direction inequality report. The violation quantity is
/// p_s = p(a,b) p(a,c) - |p(b,c)|; any positive value certifies violation.
struct UbiReport {
  double p_ab = 0.0;
  double p_ac = 0.0;
  double p_bc = 0.0;
  double p_s = 0.0;
  bool violated = false;
  bool scaled = false;
};

/// Classical side: p_s from the local subspace correlations only. Always
/// nonpositive; a positive value is reported as an internal error.
UbiReport ubi_local(const CatState& state, const Direction& a,
                    const Direction& b, const Direction& c);

/// Quantum side: p_s from the total (local + nonlocal) subspace
/// correlations. When scaled, each pair correlation is divided by the local
/// normalization sum_i rho_ii^lc, which equals the captured probability N
/// for every half-integer spin. See local_subspace_norm().
UbiReport ubi_quantum(const CatState& state, const Direction& a,
                      const Direction& b, const Direction& c, bool scaled);

/// Closed form of the scaled violation quantity at the equatorial
/// configuration theta = pi/2, xi = eta = pi/4:
///   sin[2s(phi_a -+ phi_b)] sin[2s(phi_a -+ phi_c)] - |sin[2s(phi_b -+ phi_c)]|.
/// Derived for half-integer spin; for that case the value is cross-checked
/// against ubi_quantum(scaled) within 1e-12.
double equatorial_ps(const Spin& spin, Polarization polarization, double phi_a,
                     double phi_b, double phi_c);

struct SearchConfig {
  int grid_points = 24;        // per angle on the equatorial grid
  int coarse_full_points = 6;  // per angle on the full 8-parameter grid
  int refine_iters = 200;      // coordinate-descent sweeps
  double tol = 1e-8;           // convergence tolerance on the step size
  int restarts = 0;            // optional seeded random restarts
  std::uint64_t seed = 0;      // seed for the restarts
};

struct ViolationSearchResult {
  double best_p_s = 0.0;
  // theta_a, phi_a, theta_b, phi_b, theta_c, phi_c
  std::array<double, 6> best_angles{};
  std::array<double, 2> best_state_params{};  // xi, eta
  long evaluations = 0;
  bool converged = false;
};

/// Deterministic two-stage search for the maximum of the scaled violation
/// quantity: equatorial + coarse full grids (the known maximizer family is
/// seeded explicitly), then coordinate descent with shrinking step. Ties are broken
/// toward the lexicographically smallest parameter tuple.
ViolationSearchResult max_violation_search(const Spin& spin,
                                           Polarization polarization,
                                           const SearchConfig& config = {});

}  // namespace bellcat

#endif
