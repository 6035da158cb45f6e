#include "qlg/operator_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace qlg {

const DiracMatrices& pauli_and_dirac_matrices() {
  static const DiracMatrices dm = [] {
    DiracMatrices d;
    Matrix id2 = Matrix::Identity(2, 2);
    d.sigma[0] = Matrix{{0.0, 1.0}, {1.0, 0.0}};
    d.sigma[1] = Matrix{{0.0, -I}, {I, 0.0}};
    d.sigma[2] = Matrix{{1.0, 0.0}, {0.0, -1.0}};
    d.gamma[0] = kron(d.sigma[0], id2);
    for (int i = 0; i < 3; ++i) {
      d.gamma[i + 1] = I * kron(d.sigma[1], d.sigma[i]);
      d.alpha[i] = kron(d.sigma[2], d.sigma[i]);
    }
    d.beta = d.gamma[0];
    d.gamma5 = I * d.gamma[0] * d.gamma[1] * d.gamma[2] * d.gamma[3];
    return d;
  }();
  return dm;
}

const char* to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::InvolutionRegular: return "involution";
    case OperatorKind::InvolutionSkew: return "involution_skew";
    case OperatorKind::IdempotentRegular: return "idempotent";
    case OperatorKind::IdempotentSkew: return "idempotent_skew";
    case OperatorKind::TriIdempotentRegular: return "tri_idempotent";
    case OperatorKind::TriIdempotentSkew: return "tri_idempotent_skew";
    case OperatorKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

NumberOperatorClass classify_number_operator(const Matrix& n, double tol) {
  if (n.rows() != n.cols() || n.rows() == 0)
    throw std::invalid_argument("classify_number_operator: square matrix required");

  NumberOperatorClass out;
  const Matrix id = Matrix::Identity(n.rows(), n.cols());
  const Matrix n2 = n * n;
  const Matrix n3 = n2 * n;
  out.residuals["hermiticity"] = hermiticity_residual(n);
  out.residuals["N^2-1"] = max_abs(Matrix(n2 - id));
  out.residuals["N^2+1"] = max_abs(Matrix(n2 + id));
  out.residuals["N^2-N"] = max_abs(Matrix(n2 - n));
  out.residuals["N^2+N"] = max_abs(Matrix(n2 + n));
  out.residuals["N^3-N"] = max_abs(Matrix(n3 - n));
  out.residuals["N^3+N"] = max_abs(Matrix(n3 + n));

  if (out.residuals["hermiticity"] > tol) return out;  // Unclassified

  if (out.residuals["N^2-1"] <= tol) out.kind = OperatorKind::InvolutionRegular;
  else if (out.residuals["N^2+1"] <= tol) out.kind = OperatorKind::InvolutionSkew;
  else if (out.residuals["N^2-N"] <= tol) out.kind = OperatorKind::IdempotentRegular;
  else if (out.residuals["N^2+N"] <= tol) out.kind = OperatorKind::IdempotentSkew;
  else if (out.residuals["N^3-N"] <= tol) out.kind = OperatorKind::TriIdempotentRegular;
  else if (out.residuals["N^3+N"] <= tol) out.kind = OperatorKind::TriIdempotentSkew;
  return out;
}

double epsilon(double x) {
  if (!(std::abs(x) <= 1.0))
    throw std::domain_error("epsilon: |x| <= 1 required");
  return std::sqrt(1.0 - x * x) - 1.0;
}

double gate_angle(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("gate_angle: x in [0, 1] required");
  return std::asin(x);
}

Matrix closed_form_exp(const Matrix& n, double theta, OperatorKind kind) {
  const Matrix id = Matrix::Identity(n.rows(), n.cols());
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  switch (kind) {
    case OperatorKind::InvolutionRegular:
      return c * id - I * s * n;
    case OperatorKind::IdempotentRegular:
      return id + (c - 1.0) * n - I * s * n;
    case OperatorKind::TriIdempotentRegular:
      return id + (c - 1.0) * (n * n).eval() - I * s * n;
    default:
      throw std::invalid_argument(
          "closed_form_exp: generator must classify as a regular involution, "
          "idempotent, or tri-idempotent");
  }
}

Matrix closed_form_exp(const Matrix& n, double theta, double tol) {
  return closed_form_exp(n, theta, classify_number_operator(n, tol).kind);
}

Matrix expm_oracle(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("expm_oracle: square matrix required");
  if (!m.allFinite())
    throw std::invalid_argument("expm_oracle: non-finite entries");

  const double norm = max_abs(m);
  int s = 0;
  while (norm / std::ldexp(1.0, s) > 0.5) ++s;
  const Matrix a = m / std::ldexp(1.0, s);

  // Horner evaluation of the order-18 Taylor polynomial of exp(a).
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  Matrix r = id;
  for (int k = 18; k >= 1; --k) r = id + (a * r) / static_cast<double>(k);

  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

Matrix trotter_product(const Matrix& h0, const Matrix& h1, double t, int n) {
  if (n < 1) throw std::invalid_argument("trotter_product: n >= 1 required");
  if (h0.rows() != h1.rows() || h0.cols() != h1.cols())
    throw std::invalid_argument("trotter_product: dimension mismatch");
  if (!is_hermitian(h0, kAlgebraTol) || !is_hermitian(h1, kAlgebraTol))
    throw std::invalid_argument("trotter_product: hermitian generators required");

  const double dt = t / static_cast<double>(n);
  const Matrix step = expm_oracle(Matrix(-I * dt * h0)) * expm_oracle(Matrix(-I * dt * h1));
  Matrix out = Matrix::Identity(h0.rows(), h0.cols());
  for (int i = 0; i < n; ++i) out = step * out;
  return out;
}

}  // namespace qlg
