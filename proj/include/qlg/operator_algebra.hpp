#pragma once

// Number-operator taxonomy and the closed-form unitaries it generates.
//
// A hermitian generator N falls into one of three algebraic classes, each of which
// collapses the exponential series exp(-i theta N) to a three-term closed form:
//
//   involution      N^2 = 1      exp = cos(theta) 1 - i sin(theta) N
//   idempotent      N^2 = N      exp = 1 + (cos(theta) - 1) N - i sin(theta) N
//   tri-idempotent  N^3 = N      exp = 1 + (cos(theta) - 1) N^2 - i sin(theta) N
//
// Skew variants carry the opposite sign (N^2 = -1, N^2 = -N, N^3 = -N) and are
// classified but not exponentiated here. An independent series oracle (scaling and
// squaring) backs every closed form in the tests; the two routes are never merged.

#include <map>
#include <string>

#include "qlg/matrix.hpp"

namespace qlg {

inline constexpr double kAlgebraTol = 1e-10;  // classification + hermiticity gate

struct DiracMatrices {
  Matrix sigma[3];  // 2x2 Pauli sigma_x, sigma_y, sigma_z
  Matrix alpha[3];  // 4x4 sigma_z (x) sigma_i
  Matrix beta;      // gamma0
  Matrix gamma[4];  // gamma0..gamma3, chiral representation
  Matrix gamma5;    // i gamma0 gamma1 gamma2 gamma3
};

/// Chiral-representation Dirac matrices: gamma0 = sigma_x (x) 1,
/// gamma_i = i sigma_y (x) sigma_i, alpha_i = sigma_z (x) sigma_i, beta = gamma0.
const DiracMatrices& pauli_and_dirac_matrices();

enum class OperatorKind {
  InvolutionRegular,
  InvolutionSkew,
  IdempotentRegular,
  IdempotentSkew,
  TriIdempotentRegular,
  TriIdempotentSkew,
  Unclassified,
};

const char* to_string(OperatorKind k);

struct NumberOperatorClass {
  OperatorKind kind = OperatorKind::Unclassified;
  /// Max-abs-entry residuals for every candidate relation, keyed
  /// "N^2-1", "N^2+1", "N^2-N", "N^2+N", "N^3-N", "N^3+N", "hermiticity".
  std::map<std::string, double> residuals;
};

/// Classify a hermitian N. Precedence involution > idempotent > tri-idempotent,
/// regular before skew; a non-hermitian input is Unclassified (residuals still
/// reported). Tri-idempotent is reported only when N^3 = +/-N holds and no
/// higher-precedence relation does.
NumberOperatorClass classify_number_operator(const Matrix& n, double tol = kAlgebraTol);

/// eps(x) = sqrt(1 - x^2) - 1 for |x| <= 1; throws std::domain_error outside.
double epsilon(double x);

/// Gate angle theta in [0, pi/2] with cos(theta) = sqrt(1 - x^2) and
/// sin(theta) = x, for x in [0, 1]; throws std::domain_error outside.
double gate_angle(double x);

/// exp(-i theta N) by the closed form for a pre-classified regular kind.
Matrix closed_form_exp(const Matrix& n, double theta, OperatorKind kind);

/// Classifies internally, then dispatches. Skew and unclassified generators are
/// rejected (std::invalid_argument): only the regular classes are exponentiated.
Matrix closed_form_exp(const Matrix& n, double theta, double tol = kAlgebraTol);

/// Matrix exponential by scaling-and-squaring with a fixed order-18 Taylor core;
/// halves until the max-entry norm is <= 0.5. Rejects non-finite input.
/// Deliberately has no shared code with closed_form_exp: it is the independent
/// route in every two-route check.
Matrix expm_oracle(const Matrix& m);

/// First-order split product (exp(-i t h0/n) exp(-i t h1/n))^n via expm_oracle.
/// h0, h1 must be hermitian (kAlgebraTol) and n >= 1.
Matrix trotter_product(const Matrix& h0, const Matrix& h1, double t, int n);

}  // namespace qlg
