#include "bellcat/scs_subspace.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bellcat {

double stable_pow(double base, double power) {
  if (power == 0.0) return 1.0;
  if (base == 0.0) return 0.0;
  return std::exp(power * std::log(base));
}

ScsPair scs_pair(const Spin& spin, const Direction& r, SouthGauge gauge) {
  const int ts = spin.twice_s();
  const int d = spin.dim();
  const double k = std::cos(0.5 * r.theta);
  const double g = std::sin(0.5 * r.theta);
  const double phi_minus =
      gauge == SouthGauge::PoleShift ? r.phi + std::numbers::pi : r.phi;

  StateVector plus(d), minus(d);
  for (int i = 0; i < d; ++i) {
    // Index i carries m = s - i, so s+m = 2s-i and s-m = i.
    const double log_binom =
        std::lgamma(ts + 1.0) - std::lgamma(ts - i + 1.0) - std::lgamma(i + 1.0);
    const double sqrt_binom = std::exp(0.5 * log_binom);
    plus[i] = sqrt_binom * stable_pow(k, ts - i) * stable_pow(g, i) *
              std::polar(1.0, i * r.phi);
    minus[i] = sqrt_binom * stable_pow(k, i) * stable_pow(g, ts - i) *
               std::polar(1.0, i * phi_minus);
  }
  return ScsPair{std::move(plus), std::move(minus), r, spin};
}

SubspaceBasis subspace_basis(const Spin& spin, const Direction& a,
                             const Direction& b, SouthGauge gauge) {
  const auto sa = scs_pair(spin, a, gauge);
  const auto sb = scs_pair(spin, b, gauge);
  const int d = spin.dim();

  auto kron = [d](const StateVector& x, const StateVector& y) {
    StateVector out(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out[i * d + j] = x[i] * y[j];
    return out;
  };

  SubspaceBasis basis;
  basis.vectors[0] = kron(sa.plus, sb.plus);
  basis.vectors[1] = kron(sa.plus, sb.minus);
  basis.vectors[2] = kron(sa.minus, sb.plus);
  basis.vectors[3] = kron(sa.minus, sb.minus);
  return basis;
}

namespace {

void fill_amplitude_factors(SubspaceElements& el, const Direction& a,
                            const Direction& b) {
  el.k_a = std::cos(0.5 * a.theta);
  el.g_a = std::sin(0.5 * a.theta);
  el.k_b = std::cos(0.5 * b.theta);
  el.g_b = std::sin(0.5 * b.theta);
}

}  // namespace

SubspaceElements subspace_elements_closed(const CatState& state,
                                          const Direction& a,
                                          const Direction& b) {
  const int ts = state.spin.twice_s();
  SubspaceElements el;
  fill_amplitude_factors(el, a, b);

  const double Ka = stable_pow(el.k_a, 2.0 * ts);  // K_a^{4s}
  const double Ga = stable_pow(el.g_a, 2.0 * ts);
  const double Kb = stable_pow(el.k_b, 2.0 * ts);
  const double Gb = stable_pow(el.g_b, 2.0 * ts);
  const double sx2 = std::sin(state.xi) * std::sin(state.xi);
  const double cx2 = std::cos(state.xi) * std::cos(state.xi);

  if (state.polarization == Polarization::Antiparallel) {
    el.rho_lc = {sx2 * Ka * Gb + cx2 * Ga * Kb, sx2 * Ka * Kb + cx2 * Ga * Gb,
                 sx2 * Ga * Gb + cx2 * Ka * Kb, sx2 * Ga * Kb + cx2 * Ka * Gb};
  } else {
    el.rho_lc = {sx2 * Ka * Kb + cx2 * Ga * Gb, sx2 * Ka * Gb + cx2 * Ga * Kb,
                 sx2 * Ga * Kb + cx2 * Ka * Gb, sx2 * Ga * Gb + cx2 * Ka * Kb};
  }

  const double wa = stable_pow(el.k_a * el.g_a, ts);  // (K_a Gamma_a)^{2s}
  const double wb = stable_pow(el.k_b * el.g_b, ts);
  const double chi = state.polarization == Polarization::Antiparallel
                         ? ts * (a.phi - b.phi) + 2.0 * state.eta
                         : ts * (a.phi + b.phi) + 2.0 * state.eta;
  const double rho11 = std::sin(2.0 * state.xi) * wa * wb * std::cos(chi);
  const double parity = state.spin.parity();
  el.rho_nlc = {rho11, parity * rho11, parity * rho11, rho11};

  el.total_probability = 0.0;
  for (int i = 0; i < 4; ++i)
    el.total_probability += el.rho_lc[i] + el.rho_nlc[i];
  return el;
}

SubspaceElements subspace_elements_brute(const CatState& state,
                                         const Direction& a, const Direction& b,
                                         SouthGauge gauge) {
  const auto basis = subspace_basis(state.spin, a, b, gauge);
  const int d = state.spin.dim();
  StateVector comp1 = StateVector::Zero(d * d);
  StateVector comp2 = StateVector::Zero(d * d);
  comp1[state.component1_slot()] = 1.0;
  comp2[state.component2_slot()] = 1.0;

  const double sx2 = std::sin(state.xi) * std::sin(state.xi);
  const double cx2 = std::cos(state.xi) * std::cos(state.xi);
  const Complex phase = std::polar(1.0, 2.0 * state.eta);

  SubspaceElements el;
  fill_amplitude_factors(el, a, b);
  el.total_probability = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Complex o1 = basis.vectors[i].dot(comp1);  // <i|P1>
    const Complex o2 = basis.vectors[i].dot(comp2);  // <i|P2>
    el.rho_lc[i] = sx2 * std::norm(o1) + cx2 * std::norm(o2);
    el.rho_nlc[i] =
        std::sin(2.0 * state.xi) * (phase * o1 * std::conj(o2)).real();
    el.total_probability += el.rho_lc[i] + el.rho_nlc[i];
  }
  return el;
}

SubspaceElements subspace_elements(const CatState& state, const Direction& a,
                                   const Direction& b) {
  const auto closed = subspace_elements_closed(state, a, b);
  const auto brute = subspace_elements_brute(state, a, b);
  for (int i = 0; i < 4; ++i) {
    const double d_lc = std::abs(closed.rho_lc[i] - brute.rho_lc[i]);
    const double d_nlc = std::abs(closed.rho_nlc[i] - brute.rho_nlc[i]);
    if (d_lc > 1e-10 || d_nlc > 1e-10) {
      std::ostringstream msg;
      msg << "subspace_elements: closed form disagrees with inner-product route "
             "at element "
          << i + 1 << " (lc delta " << d_lc << ", nlc delta " << d_nlc << ")";
      throw ConsistencyError(msg.str());
    }
  }
  return brute;
}

double local_subspace_norm(const Direction& a, const Direction& b,
                           const Spin& spin) {
  const int ts = spin.twice_s();
  const double Ka = stable_pow(std::cos(0.5 * a.theta), 2.0 * ts);
  const double Ga = stable_pow(std::sin(0.5 * a.theta), 2.0 * ts);
  const double Kb = stable_pow(std::cos(0.5 * b.theta), 2.0 * ts);
  const double Gb = stable_pow(std::sin(0.5 * b.theta), 2.0 * ts);
  return (Ka + Ga) * (Kb + Gb);
}

CorrelationReport subspace_correlation(const CatState& state, const Direction& a,
                                       const Direction& b) {
  const auto el = subspace_elements(state, a, b);
  const int ts = state.spin.twice_s();
  const int sign = polarization_sign(state.polarization);

  const double Ka = stable_pow(el.k_a, 2.0 * ts);
  const double Ga = stable_pow(el.g_a, 2.0 * ts);
  const double Kb = stable_pow(el.k_b, 2.0 * ts);
  const double Gb = stable_pow(el.g_b, 2.0 * ts);
  const double p_local = sign * (Ka - Ga) * (Kb - Gb);
  // Parity-gated general form; 4 rho_11 for half-integer spin, 0 for integer.
  const double p_nonlocal =
      2.0 * (1.0 - state.spin.parity()) * el.rho_nlc[0];

  const double combo_lc = el.rho_lc[0] - el.rho_lc[1] - el.rho_lc[2] + el.rho_lc[3];
  const double combo_nlc =
      el.rho_nlc[0] - el.rho_nlc[1] - el.rho_nlc[2] + el.rho_nlc[3];
  if (std::abs(p_local - combo_lc) > 1e-12 ||
      std::abs(p_nonlocal - combo_nlc) > 1e-12)
    throw ConsistencyError(
        "subspace_correlation: closed form disagrees with the rho_ii "
        "combination beyond 1e-12");

  CorrelationReport rep;
  rep.p_local = p_local;
  rep.p_nonlocal = p_nonlocal;
  rep.p_total = rep.p_local + rep.p_nonlocal;
  rep.normalization_used = state.spin.value_squared();
  rep.raw_P_local = rep.p_local * rep.normalization_used;
  rep.raw_P_nonlocal = rep.p_nonlocal * rep.normalization_used;
  return rep;
}

double scaled_subspace_correlation(const CatState& state, const Direction& a,
                                   const Direction& b) {
  const auto el = subspace_elements(state, a, b);
  if (el.total_probability < 1e-300) {
    std::ostringstream msg;
    msg << "scaled_subspace_correlation: captured probability N underflows at "
           "theta_a="
        << a.theta << ", phi_a=" << a.phi << ", theta_b=" << b.theta
        << ", phi_b=" << b.phi;
    throw NumericalError(msg.str());
  }
  const auto rep = subspace_correlation(state, a, b);
  return rep.p_total / el.total_probability;
}

}  // namespace bellcat
