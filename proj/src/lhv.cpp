#include "bellcat/lhv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bellcat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// splitmix64; used to derive independent per-partition seeds.
std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e9b5ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// xorshift-free minimal PRNG: splitmix64 stream; uniform doubles in [0, 1).
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : state_(seed) {}
  double next_unit() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e9b5ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

constexpr long kPartitionSize = 1L << 16;

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  PairEstimate finish(long n) const {
    PairEstimate est;
    est.value = sum / n;
    const double var = std::max(0.0, sum_sq / n - est.value * est.value);
    est.std_error = std::sqrt(var / n);
    return est;
  }
};

}  // namespace

int LhvModel::outcome_sign(const Direction& r, const double lambda[3]) const {
  switch (rule) {
    case Rule::Sign: {
      const auto n = r.unit_vector();
      const double dot = n[0] * lambda[0] + n[1] * lambda[1] + n[2] * lambda[2];
      return dot >= 0.0 ? +1 : -1;
    }
    case Rule::Phase:
      return std::cos(phase_k * r.phi - lambda[0]) >= 0.0 ? +1 : -1;
  }
  return +1;
}

std::vector<LhvModel> builtin_models() {
  std::vector<LhvModel> models;
  models.push_back({"sign", LhvModel::Rule::Sign, 1, 1.0});
  models.push_back({"sign-half", LhvModel::Rule::Sign, 1, 0.5});
  models.push_back({"phase-1", LhvModel::Rule::Phase, 1, 1.0});
  models.push_back({"phase-3", LhvModel::Rule::Phase, 3, 1.0});
  models.push_back({"phase-1-half", LhvModel::Rule::Phase, 1, 0.5});
  return models;
}

LhvModel find_builtin_model(std::string_view id) {
  for (auto& model : builtin_models())
    if (model.id == id) return model;
  throw std::invalid_argument("unknown LHV model '" + std::string(id) + "'");
}

LhvEstimate estimate(const LhvModel& model, const Direction& a,
                     const Direction& b, const Direction& c, long samples,
                     std::uint64_t seed) {
  if (samples < 1000)
    throw std::invalid_argument("lhv estimate: need at least 1000 samples, got " +
                                std::to_string(samples));
  if (model.weight < 0.0 || model.weight > 1.0 + 1e-12)
    throw std::invalid_argument("lhv estimate: model weight must lie in [0, 1]");

  // B is locked to -+A by the polarization; the product A(x)B(y) then carries
  // an overall sign.
  const int b_sign = model.polarization == Polarization::Antiparallel ? -1 : +1;

  Accumulator acc_ab, acc_ac, acc_bc;
  long remaining = samples;
  std::uint64_t partition = 0;
  while (remaining > 0) {
    const long chunk = std::min(remaining, kPartitionSize);
    SampleStream stream(mix_seed(seed ^ mix_seed(partition)));
    for (long i = 0; i < chunk; ++i) {
      double lambda[3] = {0.0, 0.0, 0.0};
      if (model.rule == LhvModel::Rule::Sign) {
        // Uniform point on the sphere.
        const double z = 2.0 * stream.next_unit() - 1.0;
        const double az = kTwoPi * stream.next_unit();
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        lambda[0] = rho * std::cos(az);
        lambda[1] = rho * std::sin(az);
        lambda[2] = z;
      } else {
        lambda[0] = kTwoPi * stream.next_unit();
      }
      const int out_a = model.outcome_sign(a, lambda);
      const int out_b = model.outcome_sign(b, lambda);
      const int out_c = model.outcome_sign(c, lambda);
      acc_ab.add(model.weight * b_sign * out_a * out_b);
      acc_ac.add(model.weight * b_sign * out_a * out_c);
      acc_bc.add(model.weight * b_sign * out_b * out_c);
    }
    remaining -= chunk;
    ++partition;
  }

  LhvEstimate est;
  est.p_ab = acc_ab.finish(samples);
  est.p_ac = acc_ac.finish(samples);
  est.p_bc = acc_bc.finish(samples);
  est.p_s_lc = est.p_ab.value * est.p_ac.value - std::abs(est.p_bc.value);
  est.p_s_std_error = std::sqrt(
      est.p_ac.value * est.p_ac.value * est.p_ab.std_error * est.p_ab.std_error +
      est.p_ab.value * est.p_ab.value * est.p_ac.std_error * est.p_ac.std_error +
      est.p_bc.std_error * est.p_bc.std_error);
  est.samples = samples;
  est.rng_seed = seed;
  return est;
}

double exhaustive_check(const LhvModel& model, const Direction& a,
                        const Direction& b, const Direction& c,
                        long grid_points) {
  if (model.rule != LhvModel::Rule::Phase)
    throw std::invalid_argument(
        "exhaustive_check: only Phase-rule models have a discretizable "
        "hidden-variable space");
  if (grid_points < 1 || grid_points > 1000000)
    throw std::invalid_argument("exhaustive_check: grid must have 1..1e6 points");

  const int b_sign = model.polarization == Polarization::Antiparallel ? -1 : +1;
  double sum_ab = 0.0, sum_ac = 0.0, sum_bc = 0.0;
  for (long g = 0; g < grid_points; ++g) {
    const double lambda[3] = {kTwoPi * (g + 0.5) / grid_points, 0.0, 0.0};
    const int out_a = model.outcome_sign(a, lambda);
    const int out_b = model.outcome_sign(b, lambda);
    const int out_c = model.outcome_sign(c, lambda);
    sum_ab += out_a * out_b;
    sum_ac += out_a * out_c;
    sum_bc += out_b * out_c;
  }
  const double scale = model.weight * b_sign / grid_points;
  const double p_ab = scale * sum_ab;
  const double p_ac = scale * sum_ac;
  const double p_bc = scale * sum_bc;
  return p_ab * p_ac - std::abs(p_bc);
}

}  // namespace bellcat
