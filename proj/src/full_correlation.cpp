#include "bellcat/full_correlation.hpp"

#include <cmath>

#include "bellcat/spin_ops.hpp"

namespace bellcat {

namespace {

void check_imag(Complex value, const char* what) {
  if (std::abs(value.imag()) > 1e-12)
    throw NumericalError(std::string("full_correlation: imaginary part of ") +
                         what + " trace exceeds 1e-12");
}

CorrelationReport normalize(const CatState& state, double raw_lc, double raw_nlc) {
  CorrelationReport rep;
  rep.raw_P_local = raw_lc;
  rep.raw_P_nonlocal = raw_nlc;
  rep.normalization_used = state.spin.value_squared();
  rep.p_local = raw_lc / rep.normalization_used;
  rep.p_nonlocal = raw_nlc / rep.normalization_used;
  rep.p_total = rep.p_local + rep.p_nonlocal;
  return rep;
}

}  // namespace

CorrelationReport full_correlation(const CatState& state, const Direction& a,
                                   const Direction& b) {
  const ComplexMatrix pa = projection_operator(state.spin, a);
  const ComplexMatrix pb = projection_operator(state.spin, b);
  const auto [i1, i2] = state.component1();
  const auto [j1, j2] = state.component2();

  // rho has rank <= 2 support on the two product components, so the trace
  // against (s.a x s.b) collapses to a handful of matrix elements.
  const Complex lc = std::sin(state.xi) * std::sin(state.xi) * pa(i1, i1) * pb(i2, i2) +
                     std::cos(state.xi) * std::cos(state.xi) * pa(j1, j1) * pb(j2, j2);
  check_imag(lc, "local");

  const Complex cross = pa(j1, i1) * pb(j2, i2);  // <P2|(s.a x s.b)|P1>
  const Complex phase = std::polar(1.0, 2.0 * state.eta);
  const double nlc = std::sin(2.0 * state.xi) * (phase * cross).real();

  return normalize(state, lc.real(), nlc);
}

CorrelationReport full_correlation_via_eigenbasis(const CatState& state,
                                                  const Direction& a,
                                                  const Direction& b) {
  if (state.spin.twice_s() > 15)
    throw std::invalid_argument(
        "full_correlation_via_eigenbasis: capped at twice_s <= 15");

  const auto ea = eigensystem(projection_operator(state.spin, a));
  const auto eb = eigensystem(projection_operator(state.spin, b));
  const auto [i1, i2] = state.component1();
  const auto [j1, j2] = state.component2();
  const double sx2 = std::sin(state.xi) * std::sin(state.xi);
  const double cx2 = std::cos(state.xi) * std::cos(state.xi);
  const Complex phase = std::polar(1.0, 2.0 * state.eta);
  const int d = state.spin.dim();

  double raw_lc = 0.0;
  double raw_nlc = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const double weight = ea.eigenvalues[m] * eb.eigenvalues[n];
      // Overlaps of the product eigenvector |a_m, b_n> with the two product
      // components (each a product Dicke basis vector).
      const Complex o1 = std::conj(ea.eigenvectors[m][i1] * eb.eigenvectors[n][i2]);
      const Complex o2 = std::conj(ea.eigenvectors[m][j1] * eb.eigenvectors[n][j2]);
      raw_lc += weight * (sx2 * std::norm(o1) + cx2 * std::norm(o2));
      raw_nlc += weight * std::sin(2.0 * state.xi) *
                 (phase * o1 * std::conj(o2)).real();
    }
  }
  return normalize(state, raw_lc, raw_nlc);
}

BiCheck extended_bi_check(const CatState& state, const Direction& a,
                          const Direction& b, const Direction& c) {
  const double p_ab = full_correlation(state, a, b).p_total;
  const double p_ac = full_correlation(state, a, c).p_total;
  const double p_bc = full_correlation(state, b, c).p_total;
  BiCheck out;
  out.lhs = std::abs(p_ab - p_ac) - std::abs(p_bc);
  out.violated = out.lhs > 1.0 + 1e-12;
  return out;
}

}  // namespace bellcat
