#ifndef BELLCAT_SCS_SUBSPACE_HPP
#define BELLCAT_SCS_SUBSPACE_HPP

#include <array>

#include "bellcat/cat_state.hpp"
#include "bellcat/full_correlation.hpp"

namespace bellcat {

/// Phase convention of the |-r> expansion. PoleShift is the physical
/// south-pole gauge e^{i(s-m)(phi+pi)}; NoShift drops the pi offset and
/// exists only for the differential test that traces the parity factor back
/// to this gauge phase.
enum class SouthGauge { PoleShift, NoShift };

/// Extremal-projection eigenstates s.r|+-r> = +-s|+-r> expanded over the
/// Dicke basis.
struct ScsPair {
  StateVector plus;
  StateVector minus;
  Direction direction;
  Spin spin;
};

ScsPair scs_pair(const Spin& spin, const Direction& r,
                 SouthGauge gauge = SouthGauge::PoleShift);

/// Product base vectors |1>=|+a,+b>, |2>=|+a,-b>, |3>=|-a,+b>, |4>=|-a,-b>,
/// each of dimension d^2.
struct SubspaceBasis {
  std::array<StateVector, 4> vectors;
};

SubspaceBasis subspace_basis(const Spin& spin, const Direction& a,
                             const Direction& b,
                             SouthGauge gauge = SouthGauge::PoleShift);

/// Diagonal density-matrix elements over the four-vector subspace, split
/// into local and nonlocal parts, plus the captured probability
/// N = sum_i rho_ii and the half-angle amplitude factors.
struct SubspaceElements {
  std::array<double, 4> rho_lc{};
  std::array<double, 4> rho_nlc{};
  double total_probability = 0.0;  // N
  double k_a = 0.0, g_a = 0.0;     // cos(theta_a/2), sin(theta_a/2)
  double k_b = 0.0, g_b = 0.0;
};

/// Closed-form elements.
SubspaceElements subspace_elements_closed(const CatState& state,
                                          const Direction& a,
                                          const Direction& b);

/// Brute-force elements <i|rho|i> via explicit inner products with the
/// subspace basis vectors. The gauge knob feeds the differential test.
SubspaceElements subspace_elements_brute(const CatState& state,
                                         const Direction& a, const Direction& b,
                                         SouthGauge gauge = SouthGauge::PoleShift);

/// Cross-checks the closed forms against the brute-force route (throws
/// ConsistencyError beyond 1e-10) and returns the brute-force values.
SubspaceElements subspace_elements(const CatState& state, const Direction& a,
                                   const Direction& b);

/// Subspace correlation: p_local = -+(K_a^4s - G_a^4s)(K_b^4s - G_b^4s),
/// p_nonlocal = 2[1-(-1)^{2s}] rho_11^nlc, cross-checked against
/// rho_11 - rho_22 - rho_33 + rho_44.
CorrelationReport subspace_correlation(const CatState& state,
                                       const Direction& a, const Direction& b);

/// p_total / N. Throws NumericalError when N underflows (< 1e-300).
double scaled_subspace_correlation(const CatState& state, const Direction& a,
                                   const Direction& b);

/// Local normalization sum_i rho_ii^lc
///   = (K_a^4s + G_a^4s)(K_b^4s + G_b^4s).
/// Coincides with N for every half-integer spin, where the nonlocal
/// diagonal cancels pairwise.
double local_subspace_norm(const Direction& a, const Direction& b,
                           const Spin& spin);

/// base^power via the log domain, with exact short-circuits at base 0 so
/// theta in {0, pi} never reaches log(0).
double stable_pow(double base, double power);

}  // namespace bellcat

#endif
