#include "bellcat/ubi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <tuple>

namespace bellcat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double pair_correlation(const CatState& state, const Direction& x,
                        const Direction& y, bool scaled) {
  const double p = subspace_correlation(state, x, y).p_total;
  if (!scaled) return p;
  return p / local_subspace_norm(x, y, state.spin);
}

UbiReport make_report(double p_ab, double p_ac, double p_bc, bool scaled) {
  UbiReport rep;
  rep.p_ab = p_ab;
  rep.p_ac = p_ac;
  rep.p_bc = p_bc;
  rep.p_s = p_ab * p_ac - std::abs(p_bc);
  rep.violated = rep.p_s > 1e-12;
  rep.scaled = scaled;
  return rep;
}

// Per-direction factors of the closed-form subspace correlation.
struct DirectionFactors {
  double u;  // K^{4s} - Gamma^{4s}
  double v;  // K^{4s} + Gamma^{4s}
  double w;  // (K Gamma)^{2s}
  double phi;

  DirectionFactors(const Spin& spin, double theta, double phi_in) : phi(phi_in) {
    const int ts = spin.twice_s();
    const double k = std::cos(0.5 * theta);
    const double g = std::sin(0.5 * theta);
    const double k4 = stable_pow(k, 2.0 * ts);
    const double g4 = stable_pow(g, 2.0 * ts);
    u = k4 - g4;
    v = k4 + g4;
    w = stable_pow(k * g, ts);
  }
};

// Scaled total subspace correlation from the closed forms; fast path for the
// search. Matches pair_correlation(..., scaled=true) to rounding.
class ScaledObjective {
 public:
  ScaledObjective(const Spin& spin, Polarization pol)
      : ts_(spin.twice_s()),
        spin_(spin),
        sign_(polarization_sign(pol)),
        nlc_gate_(2.0 * (1.0 - spin.parity())),
        phi_sign_(pol == Polarization::Antiparallel ? -1.0 : 1.0) {}

  double pair(const DirectionFactors& x, const DirectionFactors& y, double xi,
              double eta) const {
    const double chi = ts_ * (x.phi + phi_sign_ * y.phi) + 2.0 * eta;
    const double p = sign_ * x.u * y.u +
                     nlc_gate_ * std::sin(2.0 * xi) * x.w * y.w * std::cos(chi);
    return p / (x.v * y.v);
  }

  // params: theta_a, phi_a, theta_b, phi_b, theta_c, phi_c, xi, eta
  double operator()(const std::array<double, 8>& p) const {
    const DirectionFactors a(spin_, p[0], p[1]);
    const DirectionFactors b(spin_, p[2], p[3]);
    const DirectionFactors c(spin_, p[4], p[5]);
    const double p_ab = pair(a, b, p[6], p[7]);
    const double p_ac = pair(a, c, p[6], p[7]);
    const double p_bc = pair(b, c, p[6], p[7]);
    return p_ab * p_ac - std::abs(p_bc);
  }

 private:
  int ts_;
  Spin spin_;
  double sign_;
  double nlc_gate_;
  double phi_sign_;
};

bool lex_less(const std::array<double, 8>& lhs, const std::array<double, 8>& rhs) {
  for (int i = 0; i < 8; ++i) {
    if (lhs[i] < rhs[i]) return true;
    if (lhs[i] > rhs[i]) return false;
  }
  return false;
}

}  // namespace

UbiReport ubi_local(const CatState& state, const Direction& a,
                    const Direction& b, const Direction& c) {
  const double p_ab = subspace_correlation(state, a, b).p_local;
  const double p_ac = subspace_correlation(state, a, c).p_local;
  const double p_bc = subspace_correlation(state, b, c).p_local;
  UbiReport rep = make_report(p_ab, p_ac, p_bc, false);
  if (rep.violated)
    throw NumericalError(
        "ubi_local: local correlations reported a violation (p_s = " +
        std::to_string(rep.p_s) + "); this cannot happen");
  return rep;
}

UbiReport ubi_quantum(const CatState& state, const Direction& a,
                      const Direction& b, const Direction& c, bool scaled) {
  return make_report(pair_correlation(state, a, b, scaled),
                     pair_correlation(state, a, c, scaled),
                     pair_correlation(state, b, c, scaled), scaled);
}

double equatorial_ps(const Spin& spin, Polarization polarization, double phi_a,
                     double phi_b, double phi_c) {
  const double ts = spin.twice_s();
  const double sgn = polarization == Polarization::Antiparallel ? -1.0 : 1.0;
  const double value = std::sin(ts * (phi_a + sgn * phi_b)) *
                           std::sin(ts * (phi_a + sgn * phi_c)) -
                       std::abs(std::sin(ts * (phi_b + sgn * phi_c)));

  // The sine form is derived for half-integer spin, where the interference
  // term alone survives on the equator; for integer spin the scaled quantum
  // value is identically zero there, so the cross-check applies only to the
  // half-integer case.
  if (spin.half_integer()) {
    const CatState state =
        make_cat_state(spin, polarization, 0.25 * kPi, 0.25 * kPi);
    const UbiReport quantum = ubi_quantum(
        state, Direction(0.5 * kPi, phi_a), Direction(0.5 * kPi, phi_b),
        Direction(0.5 * kPi, phi_c), /*scaled=*/true);
    if (std::abs(value - quantum.p_s) > 1e-12)
      throw ConsistencyError(
          "equatorial_ps: closed form disagrees with the scaled quantum "
          "evaluation beyond 1e-12");
  }
  return value;
}

ViolationSearchResult max_violation_search(const Spin& spin,
                                           Polarization polarization,
                                           const SearchConfig& config) {
  const ScaledObjective objective(spin, polarization);
  long evaluations = 0;

  std::array<double, 8> best{};
  double best_value = -std::numeric_limits<double>::infinity();
  auto consider = [&](const std::array<double, 8>& params) {
    const double value = objective(params);
    ++evaluations;
    if (value > best_value + 1e-15 ||
        (value > best_value - 1e-15 && lex_less(params, best))) {
      best_value = value;
      best = params;
    }
  };

  // Known equatorial maximizer family, seeded explicitly.
  consider({0.5 * kPi, 0.5 * kPi / spin.value(), 0.5 * kPi, 0.0, 0.5 * kPi, 0.0,
            0.25 * kPi, 0.25 * kPi});

  // Equatorial grid: all polar angles at pi/2.
  {
    const int n = config.grid_points;
    const double step = kTwoPi / n;
    std::array<double, 8> p{0.5 * kPi, 0.0, 0.5 * kPi, 0.0, 0.5 * kPi, 0.0,
                            0.0,       0.0};
    for (int ia = 0; ia < n; ++ia)
      for (int ib = 0; ib < n; ++ib)
        for (int ic = 0; ic < n; ++ic)
          for (int ix = 0; ix < n; ++ix)
            for (int ie = 0; ie < n; ++ie) {
              p[1] = ia * step;
              p[3] = ib * step;
              p[5] = ic * step;
              p[6] = ix * step;
              p[7] = ie * step;
              consider(p);
            }
  }

  // Coarse full grid over all eight parameters.
  {
    const int n = config.coarse_full_points;
    const double theta_step = kPi / (n - 1);
    const double ang_step = kTwoPi / n;
    std::array<int, 8> idx{};
    std::array<double, 8> p{};
    while (true) {
      p[0] = idx[0] * theta_step;
      p[2] = idx[2] * theta_step;
      p[4] = idx[4] * theta_step;
      p[1] = idx[1] * ang_step;
      p[3] = idx[3] * ang_step;
      p[5] = idx[5] * ang_step;
      p[6] = idx[6] * ang_step;
      p[7] = idx[7] * ang_step;
      consider(p);
      int k = 7;
      for (; k >= 0; --k) {
        if (++idx[k] < n) break;
        idx[k] = 0;
      }
      if (k < 0) break;
    }
  }

  // Coordinate descent with shrinking step from a starting point.
  auto refine = [&](std::array<double, 8> point, double step) {
    double value = objective(point);
    ++evaluations;
    bool converged = false;
    for (int iter = 0; iter < config.refine_iters; ++iter) {
      bool improved = false;
      for (int k = 0; k < 8; ++k) {
        for (double delta : {step, -step}) {
          std::array<double, 8> trial = point;
          trial[k] += delta;
          const bool is_theta = (k == 0 || k == 2 || k == 4);
          if (is_theta) {
            trial[k] = std::clamp(trial[k], 0.0, kPi);
          } else {
            trial[k] = std::fmod(trial[k], kTwoPi);
            if (trial[k] < 0.0) trial[k] += kTwoPi;
          }
          const double trial_value = objective(trial);
          ++evaluations;
          if (trial_value > value) {
            value = trial_value;
            point = trial;
            improved = true;
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        if (step < config.tol) {
          converged = true;
          break;
        }
      }
    }
    return std::tuple{value, point, converged};
  };

  auto [value, point, converged] = refine(best, kTwoPi / config.grid_points);
  if (value > best_value + 1e-15) {
    best_value = value;
    best = point;
  }

  if (config.restarts > 0) {
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> theta_dist(0.0, kPi);
    std::uniform_real_distribution<double> ang_dist(0.0, kTwoPi);
    for (int r = 0; r < config.restarts; ++r) {
      std::array<double, 8> start{theta_dist(rng), ang_dist(rng), theta_dist(rng),
                                  ang_dist(rng),   theta_dist(rng), ang_dist(rng),
                                  ang_dist(rng),   ang_dist(rng)};
      auto [rv, rp, rc] = refine(start, kTwoPi / config.grid_points);
      if (rv > best_value + 1e-15) {
        best_value = rv;
        best = rp;
        converged = rc;
      }
    }
  }

  if (best_value > 1.0 + 1e-9)
    throw NumericalError("max_violation_search: best p_s " +
                         std::to_string(best_value) +
                         " exceeds the bound 1; this signals a defect");

  ViolationSearchResult result;
  result.best_p_s = best_value;
  result.best_angles = {best[0], best[1], best[2], best[3], best[4], best[5]};
  result.best_state_params = {best[6], best[7]};
  result.evaluations = evaluations;
  result.converged = converged;
  return result;
}

}  // namespace bellcat
