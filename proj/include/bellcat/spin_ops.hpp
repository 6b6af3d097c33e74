#ifndef BELLCAT_SPIN_OPS_HPP
#define BELLCAT_SPIN_OPS_HPP

#include <array>

#include "bellcat/linalg.hpp"
#include "bellcat/types.hpp"

namespace bellcat {

struct SpinOperators {
  ComplexMatrix sx, sy, sz;
};

/// Angular-momentum matrices in the Dicke basis |m>, m = s, s-1, ..., -s.
/// sz is diagonal with descending m; [sx, sy] = i sz.
SpinOperators spin_operators(const Spin& spin);

/// Projection operator s.r = sin(theta)cos(phi) sx + sin(theta)sin(phi) sy
/// + cos(theta) sz. Hermitian with spectrum {s, s-1, ..., -s}.
ComplexMatrix projection_operator(const Spin& spin, const Direction& r);

/// The four closed-form eigenstates of the spin-3/2 projection operator
/// along r, ordered by eigenvalue m = 3/2, 1/2, -1/2, -3/2.
std::array<StateVector, 4> spin32_analytic_eigenstates(const Direction& r);

}  // namespace bellcat

#endif
