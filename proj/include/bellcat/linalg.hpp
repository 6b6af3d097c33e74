#ifndef BELLCAT_LINALG_HPP
#define BELLCAT_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bellcat/types.hpp"

namespace bellcat {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline double hermiticity_residual(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = 1e-13) {
  return m.rows() == m.cols() && hermiticity_residual(m) <= tol;
}

/// Eigenvalues sorted descending with orthonormal eigenvectors in the same
/// order. Each eigenvector's global phase is fixed so that its first
/// amplitude of non-negligible magnitude (scanning from index 0, i.e. from
/// m = +s downward) is real and positive.
struct EigenSystem {
  std::vector<double> eigenvalues;
  std::vector<StateVector> eigenvectors;
};

/// Dense Hermitian eigendecomposition.
/// Throws std::invalid_argument on non-Hermitian input and NumericalError
/// when two eigenvalues coincide within 1e-10 (spin projection operators are
/// always non-degenerate, so degeneracy signals a caller bug).
EigenSystem eigensystem(const ComplexMatrix& op);

/// Fix the global phase of v in place: first amplitude with |v_i| > tol is
/// made real positive.
void fix_global_phase(StateVector& v, double tol = 1e-9);

}  // namespace bellcat

#endif
