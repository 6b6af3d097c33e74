#include "bellcat/linalg.hpp"

#include <cmath>

namespace bellcat {

void fix_global_phase(StateVector& v, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > tol) {
      v *= std::conj(v[i]) / mag;
      // Scrub the rounding dust so the anchor amplitude is exactly real.
      v[i] = Complex(std::abs(v[i]), 0.0);
      return;
    }
  }
}

EigenSystem eigensystem(const ComplexMatrix& op) {
  if (op.rows() != op.cols())
    throw std::invalid_argument("eigensystem: matrix must be square");
  const double herm = hermiticity_residual(op);
  if (herm > 1e-13)
    throw std::invalid_argument("eigensystem: input not Hermitian, residual " +
                                std::to_string(herm));

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigensystem: solver failed to converge");

  const auto n = op.rows();
  EigenSystem out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    out.eigenvalues.push_back(solver.eigenvalues()[k]);
    StateVector v = solver.eigenvectors().col(k);
    fix_global_phase(v);
    out.eigenvectors.push_back(std::move(v));
  }

  for (std::size_t k = 1; k < out.eigenvalues.size(); ++k) {
    if (std::abs(out.eigenvalues[k - 1] - out.eigenvalues[k]) < 1e-10)
      throw NumericalError(
          "eigensystem: degenerate eigenvalues within 1e-10 (lambda ~ " +
          std::to_string(out.eigenvalues[k]) + ")");
  }

  // Residual contract ||op v - lambda v|| <= 1e-11.
  for (std::size_t k = 0; k < out.eigenvalues.size(); ++k) {
    const double res =
        (op * out.eigenvectors[k] - out.eigenvalues[k] * out.eigenvectors[k]).norm();
    if (res > 1e-11)
      throw NumericalError("eigensystem: residual " + std::to_string(res) +
                           " exceeds 1e-11");
  }
  return out;
}

}  // namespace bellcat
