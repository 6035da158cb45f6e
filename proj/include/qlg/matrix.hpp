#pragma once

// Dense complex matrix aliases and the small helpers shared by every module.
// Residual norms are max-abs-entry throughout, so tolerances compose additively.

#include <Eigen/Dense>
#include <complex>

namespace qlg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex I{0.0, 1.0};

/// Max-abs-entry norm; the residual norm used by all invariant checks.
inline double max_abs(const Matrix& m) {
  return m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vector& v) {
  return v.cwiseAbs().maxCoeff();
}

/// ||M - M^dag||_max
inline double hermiticity_residual(const Matrix& m) {
  return max_abs(Matrix(m - m.adjoint()));
}

/// ||U^dag U - 1||_max
inline double unitarity_residual(const Matrix& u) {
  return max_abs(Matrix(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())));
}

inline bool is_hermitian(const Matrix& m, double tol) {
  return hermiticity_residual(m) <= tol;
}

inline bool is_unitary(const Matrix& u, double tol) {
  return unitarity_residual(u) <= tol;
}

/// Kronecker product, left factor most significant.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace qlg
