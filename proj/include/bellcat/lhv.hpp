#ifndef BELLCAT_LHV_HPP
#define BELLCAT_LHV_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bellcat/types.hpp"

namespace bellcat {

/// Deterministic local-hidden-variable model. Party A's outcome is a
/// function of the measured direction and the hidden value; party B is
/// locked to -+A by the polarization. `weight` < 1 models a subnormalized
/// hidden-variable density (lambda-independent acceptance probability).
struct LhvModel {
  enum class Rule {
    Sign,   // A(r, lambda) = sign(lambda_hat . r_hat), lambda_hat uniform on S^2
    Phase,  // A(r, lambda) = sign(cos(k phi_r - lambda)), lambda uniform on [0, 2pi)
  };

  std::string id;
  Rule rule = Rule::Sign;
  int phase_k = 1;
  double weight = 1.0;
  Polarization polarization = Polarization::Antiparallel;

  int outcome_sign(const Direction& r, const double lambda[3]) const;
};

/// Built-in model families: unit-weight and subnormalized sign models, and
/// phase models with k = 1 and k = 3.
std::vector<LhvModel> builtin_models();

/// Lookup by id; throws std::invalid_argument for unknown ids.
LhvModel find_builtin_model(std::string_view id);

struct PairEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct LhvEstimate {
  PairEstimate p_ab, p_ac, p_bc;
  double p_s_lc = 0.0;
  double p_s_std_error = 0.0;  // propagated
  long samples = 0;
  std::uint64_t rng_seed = 0;
};

/// Monte Carlo estimate of the three pair correlations and the violation
/// quantity p_s_lc = p_ab p_ac - |p_bc|. Deterministic for a given seed:
/// samples are drawn in fixed-size partitions whose sub-seeds derive from
/// the master seed, so the merged estimate does not depend on how the
/// partitions would be scheduled. Requires samples >= 1000.
LhvEstimate estimate(const LhvModel& model, const Direction& a,
                     const Direction& b, const Direction& c, long samples,
                     std::uint64_t seed);

/// Exact midpoint quadrature over the hidden phase for Phase-rule models
/// (grid_points <= 1e6). Returns p_s_lc. Throws std::invalid_argument for
/// models whose hidden-variable space is not discretizable.
double exhaustive_check(const LhvModel& model, const Direction& a,
                        const Direction& b, const Direction& c,
                        long grid_points = 200000);

}  // namespace bellcat

#endif
