#ifndef BELLCAT_FULL_CORRELATION_HPP
#define BELLCAT_FULL_CORRELATION_HPP

#include "bellcat/cat_state.hpp"

namespace bellcat {

/// Local/nonlocal split of a measuring-outcome correlation. p_* are the
/// normalized probabilities, raw_P_* the unnormalized traces.
struct CorrelationReport {
  double p_local = 0.0;
  double p_nonlocal = 0.0;
  double p_total = 0.0;
  double normalization_used = 1.0;
  double raw_P_local = 0.0;
  double raw_P_nonlocal = 0.0;
};

/// Correlation Re Tr[(s.a x s.b) rho_{lc,nlc}] over the entire Hilbert
/// space, evaluated directly in the product Dicke basis and normalized by
/// s^2.
CorrelationReport full_correlation(const CatState& state, const Direction& a,
                                   const Direction& b);

/// Same quantity evaluated by summing m*m'*<a_m,b_m'|rho|a_m,b_m'> over the
/// complete product eigenbasis of (s.a x s.b). Validation path; agrees with
/// the direct trace to 1e-11. Requires twice_s <= 15 for runtime.
CorrelationReport full_correlation_via_eigenbasis(const CatState& state,
                                                  const Direction& a,
                                                  const Direction& b);

struct BiCheck {
  double lhs = 0.0;
  bool violated = false;
};

/// |p(a,b) - p(a,c)| - |p(b,c)| <= 1 with the full-space total correlation.
BiCheck extended_bi_check(const CatState& state, const Direction& a,
                          const Direction& b, const Direction& c);

}  // namespace bellcat

#endif
