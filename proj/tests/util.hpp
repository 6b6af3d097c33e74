#ifndef BELLCAT_TESTS_UTIL_HPP
#define BELLCAT_TESTS_UTIL_HPP

#include <numbers>
#include <random>

#include "bellcat/types.hpp"

namespace test_util {

inline constexpr double kPi = std::numbers::pi;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  bellcat::Direction direction() {
    return bellcat::Direction(uniform(0.0, kPi), uniform(0.0, 2.0 * kPi));
  }
  bellcat::Polarization polarization() {
    return gen() % 2 == 0 ? bellcat::Polarization::Antiparallel
                          : bellcat::Polarization::Parallel;
  }
};

}  // namespace test_util

#endif
