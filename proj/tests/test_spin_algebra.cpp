#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "bellcat/spin_ops.hpp"
#include "util.hpp"

using namespace bellcat;
using test_util::kPi;

TEST_CASE("spin type stores exact half-integers") {
  Spin half(1);
  CHECK(half.value() == 0.5);
  CHECK(half.half_integer());
  CHECK(half.parity() == -1);
  CHECK(Spin(4).parity() == +1);
  CHECK(Spin::parse("3/2").twice_s() == 3);
  CHECK(Spin::parse("2").twice_s() == 4);
  CHECK_THROWS_AS(Spin(0), std::invalid_argument);
  CHECK_THROWS_AS(Spin::parse("3/4"), std::invalid_argument);
  CHECK_THROWS_AS(Spin::parse("x"), std::invalid_argument);
}

TEST_CASE("direction wraps phi and validates theta") {
  Direction d(0.3, -0.5);
  CHECK(d.phi == doctest::Approx(2.0 * kPi - 0.5));
  const auto n = Direction(1.1, 2.2).unit_vector();
  CHECK(std::abs(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] - 1.0) <= 1e-15);
  CHECK_THROWS_AS(Direction(-0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Direction(kPi + 0.1, 0.0), std::invalid_argument);
}

TEST_CASE("sz is diagonal with descending m") {
  const auto half = spin_operators(Spin(1));
  CHECK(half.sz(0, 0) == Complex(0.5, 0.0));
  CHECK(half.sz(1, 1) == Complex(-0.5, 0.0));

  const auto three_half = spin_operators(Spin(3));
  for (int i = 0; i < 4; ++i)
    CHECK(three_half.sz(i, i) == Complex(1.5 - i, 0.0));
}

TEST_CASE("commutator and Casimir identities") {
  for (int ts : {1, 2, 3, 4, 5, 8}) {
    const Spin spin(ts);
    const auto ops = spin_operators(spin);
    const ComplexMatrix comm =
        ops.sx * ops.sy - ops.sy * ops.sx - Complex(0, 1) * ops.sz;
    CHECK(comm.cwiseAbs().maxCoeff() <= 1e-12);

    const double s = spin.value();
    const ComplexMatrix casimir = ops.sx * ops.sx + ops.sy * ops.sy +
                                  ops.sz * ops.sz -
                                  s * (s + 1.0) * ComplexMatrix::Identity(spin.dim(), spin.dim());
    CHECK(casimir.cwiseAbs().maxCoeff() <= 1e-11);
  }
}

TEST_CASE("projection operator at the poles") {
  const Spin spin(3);
  const auto ops = spin_operators(spin);
  CHECK((projection_operator(spin, Direction(0.0, 0.4)) - ops.sz)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((projection_operator(spin, Direction(kPi, 1.3)) + ops.sz)
            .cwiseAbs()
            .maxCoeff() <= 1e-15);
}

TEST_CASE("projection operator spectrum is {s, ..., -s}") {
  const auto sys = eigensystem(projection_operator(Spin(3), Direction(kPi / 2, 0.0)));
  REQUIRE(sys.eigenvalues.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(sys.eigenvalues[i] - (1.5 - i)) <= 1e-12);
}

TEST_CASE("projection spectrum property over spins and directions") {
  test_util::Rng rng(11);
  for (int ts = 1; ts <= 30; ++ts) {
    const Spin spin(ts);
    const int trials = ts <= 5 ? 20 : 5;
    for (int t = 0; t < trials; ++t) {
      const auto sys = eigensystem(projection_operator(spin, rng.direction()));
      for (int i = 0; i < spin.dim(); ++i)
        CHECK(std::abs(sys.eigenvalues[i] - spin.m_at(i)) <= 1e-11);
    }
  }
}

TEST_CASE("eigensystem of a diagonal matrix returns basis vectors") {
  const auto sys = eigensystem(spin_operators(Spin(2)).sz);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      const double expected = i == k ? 1.0 : 0.0;
      CHECK(std::abs(sys.eigenvectors[k][i] - expected) <= 1e-14);
    }
  }
}

TEST_CASE("eigensystem reconstruction of a random Hermitian matrix") {
  test_util::Rng rng(7);
  ComplexMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  m = ComplexMatrix(0.5 * (m + m.adjoint()));

  const auto sys = eigensystem(m);
  ComplexMatrix rebuilt = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k)
    rebuilt += sys.eigenvalues[k] * sys.eigenvectors[k] *
               sys.eigenvectors[k].adjoint();
  CHECK((rebuilt - m).cwiseAbs().maxCoeff() <= 1e-11);

  // Orthonormality.
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) {
      const Complex dot = sys.eigenvectors[k].dot(sys.eigenvectors[l]);
      CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) <= 1e-12);
    }
}

TEST_CASE("eigensystem rejects bad input") {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0, 1), Complex(0, 1), 0.0;  // anti-Hermitian off-diagonal
  CHECK_THROWS_AS(eigensystem(m), std::invalid_argument);
  CHECK_THROWS_AS(eigensystem(ComplexMatrix::Identity(3, 3)), NumericalError);
}

TEST_CASE("completeness of projection eigenvectors") {
  test_util::Rng rng(21);
  for (int ts : {1, 3, 4, 7}) {
    const Spin spin(ts);
    const auto sys = eigensystem(projection_operator(spin, rng.direction()));
    ComplexMatrix sum = ComplexMatrix::Zero(spin.dim(), spin.dim());
    for (const auto& v : sys.eigenvectors) sum += v * v.adjoint();
    CHECK((sum - ComplexMatrix::Identity(spin.dim(), spin.dim()))
              .cwiseAbs()
              .maxCoeff() <= 1e-11);
  }
}

TEST_CASE("analytic spin-3/2 eigenstates at the north pole") {
  const auto states = spin32_analytic_eigenstates(Direction(0.0, 0.9));
  CHECK(states[0][0] == Complex(1.0, 0.0));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(states[0][i]) == 0.0);
}

TEST_CASE("analytic spin-3/2 top state on the equator") {
  const auto states = spin32_analytic_eigenstates(Direction(kPi / 2, 0.0));
  const double scale = 1.0 / (2.0 * std::sqrt(2.0));
  const double expected[] = {scale, std::sqrt(3.0) * scale, std::sqrt(3.0) * scale,
                             scale};
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(states[0][i] - expected[i]) <= 1e-14);
}

TEST_CASE("analytic spin-3/2 states: residual, Gram matrix, fidelity") {
  test_util::Rng rng(33);
  const Spin spin(3);
  for (int t = 0; t < 50; ++t) {
    const Direction r = rng.direction();
    const auto states = spin32_analytic_eigenstates(r);
    const ComplexMatrix op = projection_operator(spin, r);

    for (int k = 0; k < 4; ++k) {
      const double m = 1.5 - k;
      CHECK((op * states[k] - m * states[k]).norm() <= 1e-12);
      for (int l = 0; l < 4; ++l) {
        const Complex dot = states[k].dot(states[l]);
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) <= 1e-12);
      }
    }

    const auto numeric = eigensystem(op);
    for (int k = 0; k < 4; ++k) {
      const double fidelity = std::abs(states[k].dot(numeric.eigenvectors[k]));
      CHECK(fidelity >= 1.0 - 1e-10);
    }
  }
}
