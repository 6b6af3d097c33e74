#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bellcat/full_correlation.hpp"
#include "util.hpp"

using namespace bellcat;
using test_util::kPi;

TEST_CASE("polar configuration for s=3/2") {
  const auto state =
      make_cat_state(Spin(3), Polarization::Antiparallel, 0.8, 0.2);
  const auto rep =
      full_correlation(state, Direction(0.0, 0.0), Direction(0.0, 0.0));
  CHECK(std::abs(rep.raw_P_local - (-2.25)) <= 1e-14);
  CHECK(std::abs(rep.p_local - (-1.0)) <= 1e-14);
}

TEST_CASE("equatorial first direction kills the local part") {
  test_util::Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const Spin spin(1 + static_cast<int>(rng.gen() % 6));
    const auto state = make_cat_state(spin, rng.polarization(),
                                      rng.uniform(0, 2 * kPi),
                                      rng.uniform(0, 2 * kPi));
    const auto rep =
        full_correlation(state, Direction(kPi / 2, rng.uniform(0, 2 * kPi)),
                         rng.direction());
    CHECK(std::abs(rep.p_local) <= 1e-14);
  }
}

TEST_CASE("local part is -+ cos(theta_a) cos(theta_b)") {
  test_util::Rng rng(17);
  for (int ts : {1, 2, 3, 4, 5}) {
    for (auto pol : {Polarization::Antiparallel, Polarization::Parallel}) {
      for (int t = 0; t < 20; ++t) {
        const auto state = make_cat_state(Spin(ts), pol,
                                          rng.uniform(0, 2 * kPi),
                                          rng.uniform(0, 2 * kPi));
        const Direction a = rng.direction();
        const Direction b = rng.direction();
        const double expected =
            polarization_sign(pol) * std::cos(a.theta) * std::cos(b.theta);
        const auto rep = full_correlation(state, a, b);
        CHECK(std::abs(rep.p_local - expected) <= 1e-12);
      }
    }
  }
}

TEST_CASE("nonlocal part vanishes on the full space for s >= 1") {
  test_util::Rng rng(29);
  for (int ts : {2, 3, 4, 5}) {
    for (int t = 0; t < 20; ++t) {
      const auto state = make_cat_state(Spin(ts), rng.polarization(),
                                        rng.uniform(0, 2 * kPi),
                                        rng.uniform(0, 2 * kPi));
      const auto rep = full_correlation(state, rng.direction(), rng.direction());
      CHECK(std::abs(rep.p_nonlocal) <= 1e-12);
    }
  }
}

TEST_CASE("eigenbasis route agrees with the direct trace") {
  test_util::Rng rng(41);
  for (int ts : {1, 2, 3}) {
    for (int t = 0; t < 10; ++t) {
      const auto state = make_cat_state(Spin(ts), rng.polarization(),
                                        rng.uniform(0, 2 * kPi),
                                        rng.uniform(0, 2 * kPi));
      const Direction a = rng.direction();
      const Direction b = rng.direction();
      const auto direct = full_correlation(state, a, b);
      const auto via = full_correlation_via_eigenbasis(state, a, b);
      CHECK(std::abs(direct.p_local - via.p_local) <= 1e-11);
      CHECK(std::abs(direct.p_nonlocal - via.p_nonlocal) <= 1e-11);
      CHECK(std::abs(direct.p_total - via.p_total) <= 1e-11);
    }
  }
}

TEST_CASE("s=1/2 closed form on the equator") {
  const Direction a(kPi / 2, 1.3);
  const Direction b(kPi / 2, 1.3);
  const auto with_eta = make_cat_state(Spin(1), Polarization::Antiparallel,
                                       kPi / 4, kPi / 4);
  CHECK(std::abs(full_correlation(with_eta, a, b).p_total) <= 1e-14);
  const auto no_eta =
      make_cat_state(Spin(1), Polarization::Antiparallel, kPi / 4, 0.0);
  CHECK(std::abs(full_correlation(no_eta, a, b).p_total - 1.0) <= 1e-14);
}

TEST_CASE("s=1/2 closed form at random angles") {
  test_util::Rng rng(59);
  for (int t = 0; t < 100; ++t) {
    const double xi = rng.uniform(0, 2 * kPi);
    const double eta = rng.uniform(0, 2 * kPi);
    const auto state =
        make_cat_state(Spin(1), Polarization::Antiparallel, xi, eta);
    const Direction a = rng.direction();
    const Direction b = rng.direction();
    const double expected =
        -std::cos(a.theta) * std::cos(b.theta) +
        std::sin(2 * xi) * std::sin(a.theta) * std::sin(b.theta) *
            std::cos(a.phi - b.phi + 2 * eta);
    CHECK(std::abs(full_correlation(state, a, b).p_total - expected) <= 1e-12);
  }
}

TEST_CASE("s=1 local form survives as the total correlation") {
  test_util::Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    const auto state = make_cat_state(Spin(2), Polarization::Antiparallel,
                                      rng.uniform(0, 2 * kPi),
                                      rng.uniform(0, 2 * kPi));
    const Direction a = rng.direction();
    const Direction b = rng.direction();
    CHECK(std::abs(full_correlation(state, a, b).p_total +
                   std::cos(a.theta) * std::cos(b.theta)) <= 1e-12);
  }
}

TEST_CASE("extended inequality holds for s >= 1") {
  test_util::Rng rng(71);
  for (int ts : {2, 3, 4, 5}) {
    for (int t = 0; t < 50; ++t) {
      const auto state = make_cat_state(Spin(ts), rng.polarization(),
                                        rng.uniform(0, 2 * kPi),
                                        rng.uniform(0, 2 * kPi));
      const auto check = extended_bi_check(state, rng.direction(),
                                           rng.direction(), rng.direction());
      CHECK_FALSE(check.violated);
      CHECK(check.lhs <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("identical directions never violate") {
  test_util::Rng rng(73);
  const auto state = make_cat_state(Spin(3), Polarization::Antiparallel,
                                    0.7, 0.2);
  for (int t = 0; t < 10; ++t) {
    const Direction a = rng.direction();
    const auto check = extended_bi_check(state, a, a, a);
    CHECK(check.lhs <= 1e-14);
    CHECK_FALSE(check.violated);
  }
}

TEST_CASE("s=1/2 violates the extended inequality") {
  const auto state =
      make_cat_state(Spin(1), Polarization::Antiparallel, kPi / 4, 0.0);
  // Equatorial directions with phase gaps 3pi/4 and pi/4: correlations
  // cos(3pi/4), cos(pi/4), cos(pi/2) give lhs = sqrt(2).
  const auto check = extended_bi_check(state, Direction(kPi / 2, 0.0),
                                       Direction(kPi / 2, 2 * kPi - 3 * kPi / 4),
                                       Direction(kPi / 2, 2 * kPi - kPi / 4));
  CHECK(check.violated);
  CHECK(check.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}
