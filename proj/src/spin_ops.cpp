#include "bellcat/spin_ops.hpp"

#include <cmath>

namespace bellcat {

SpinOperators spin_operators(const Spin& spin) {
  const int d = spin.dim();
  const double s = spin.value();

  ComplexMatrix sz = ComplexMatrix::Zero(d, d);
  ComplexMatrix splus = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = spin.m_at(i);
    sz(i, i) = m;
    if (i > 0) {
      // S+|m> = sqrt(s(s+1) - m(m+1)) |m+1>, with |m+1> at index i-1.
      splus(i - 1, i) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    }
  }
  const ComplexMatrix sminus = splus.adjoint();

  SpinOperators ops;
  ops.sx = 0.5 * (splus + sminus);
  ops.sy = Complex(0.0, -0.5) * (splus - sminus);
  ops.sz = std::move(sz);
  return ops;
}

ComplexMatrix projection_operator(const Spin& spin, const Direction& r) {
  const auto ops = spin_operators(spin);
  const auto n = r.unit_vector();
  return n[0] * ops.sx + n[1] * ops.sy + n[2] * ops.sz;
}

std::array<StateVector, 4> spin32_analytic_eigenstates(const Direction& r) {
  const double c = std::cos(0.5 * r.theta);
  const double s = std::sin(0.5 * r.theta);
  const double rt3 = std::sqrt(3.0);
  const Complex e1 = std::polar(1.0, r.phi);
  const Complex e2 = std::polar(1.0, 2.0 * r.phi);
  const Complex e3 = std::polar(1.0, 3.0 * r.phi);

  std::array<StateVector, 4> out;
  for (auto& v : out) v = StateVector(4);

  // m = +3/2
  out[0] << c * c * c, rt3 * s * c * c * e1, rt3 * s * s * c * e2, s * s * s * e3;
  // m = +1/2
  out[1] << rt3 * s * c * c, -(1.0 - 3.0 * s * s) * c * e1,
      (1.0 - 3.0 * c * c) * s * e2, -rt3 * s * s * c * e3;
  // m = -1/2
  out[2] << rt3 * s * s * c, (1.0 - 3.0 * c * c) * s * e1,
      (1.0 - 3.0 * s * s) * c * e2, rt3 * s * c * c * e3;
  // m = -3/2
  out[3] << s * s * s, -rt3 * s * s * c * e1, rt3 * s * c * c * e2, -c * c * c * e3;
  return out;
}

}  // namespace bellcat
