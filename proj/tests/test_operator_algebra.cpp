#include "qlg/operator_algebra.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <numbers>

#include "qlg/rng.hpp"
#include "qlg/units.hpp"

using namespace qlg;

namespace {

constexpr double kTight = 1e-12;

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

}  // namespace

TEST_CASE("pauli_and_dirac_matrices_satisfy_clifford_algebra") {
  const auto& d = pauli_and_dirac_matrices();
  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix id4 = Matrix::Identity(4, 4);

  for (int i = 0; i < 3; ++i) {
    CHECK(max_abs(Matrix(d.sigma[i] * d.sigma[i] - id2)) < kTight);
    CHECK(is_hermitian(d.sigma[i], kTight));
    CHECK(is_hermitian(d.alpha[i], kTight));
    for (int j = 0; j < 3; ++j) {
      const double delta = (i == j) ? 2.0 : 0.0;
      CHECK(max_abs(Matrix(anticommutator(d.alpha[i], d.alpha[j]) - delta * id4)) <
            kTight);
    }
    // {alpha_i, beta} = 0: the mass term anticommutes with every stream generator.
    CHECK(max_abs(anticommutator(d.alpha[i], d.beta)) < kTight);
  }
  CHECK(max_abs(Matrix(d.gamma[0] * d.gamma[0] - id4)) < kTight);

  // Minkowski Clifford relations {gamma^mu, gamma^nu} = 2 eta^{mu nu}.
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double eta = (mu != nu) ? 0.0 : (mu == 0 ? 2.0 : -2.0);
      CHECK(max_abs(Matrix(anticommutator(d.gamma[mu], d.gamma[nu]) - eta * id4)) <
            kTight);
    }

  // gamma5 = i g0 g1 g2 g3 is diagonal (-1,-1,1,1) in the chiral basis and
  // anticommutes with every gamma^mu.
  Matrix g5_expected = Matrix::Zero(4, 4);
  g5_expected(0, 0) = g5_expected(1, 1) = -1.0;
  g5_expected(2, 2) = g5_expected(3, 3) = 1.0;
  CHECK(max_abs(Matrix(d.gamma5 - g5_expected)) < kTight);
  for (int mu = 0; mu < 4; ++mu)
    CHECK(max_abs(anticommutator(d.gamma5, d.gamma[mu])) < kTight);

  // alpha3 is diagonal (+1,-1,-1,+1): components 0 and 3 stream one way, 1 and 2
  // the other.
  const Matrix a3 = d.alpha[2];
  CHECK(a3(0, 0) == Complex{1.0, 0.0});
  CHECK(a3(1, 1) == Complex{-1.0, 0.0});
  CHECK(a3(2, 2) == Complex{-1.0, 0.0});
  CHECK(a3(3, 3) == Complex{1.0, 0.0});
}

TEST_CASE("classify_number_operator_examples") {
  const auto& d = pauli_and_dirac_matrices();

  CHECK(classify_number_operator(d.sigma[0]).kind == OperatorKind::InvolutionRegular);

  Matrix proj = Matrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  CHECK(classify_number_operator(proj).kind == OperatorKind::IdempotentRegular);

  Matrix tri = Matrix::Zero(3, 3);
  tri(0, 0) = 1.0;
  tri(2, 2) = -1.0;
  CHECK(classify_number_operator(tri).kind == OperatorKind::TriIdempotentRegular);

  // Negative projector: N^2 = -N.
  Matrix negproj = Matrix::Zero(2, 2);
  negproj(1, 1) = -1.0;
  CHECK(classify_number_operator(negproj).kind == OperatorKind::IdempotentSkew);

  // Identity satisfies both N^2 = 1 and N^2 = N; precedence reports involution.
  CHECK(classify_number_operator(Matrix(Matrix::Identity(4, 4))).kind ==
        OperatorKind::InvolutionRegular);

  // Non-hermitian input: unclassified, residuals still reported.
  Matrix nh = Matrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  const auto cls = classify_number_operator(nh);
  CHECK(cls.kind == OperatorKind::Unclassified);
  CHECK(cls.residuals.at("hermiticity") > 0.5);
  CHECK(cls.residuals.size() == 7);
  CHECK(cls.residuals.count("N^2-1") == 1);
  CHECK(cls.residuals.count("N^3+N") == 1);

  CHECK_THROWS_AS(classify_number_operator(Matrix::Zero(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("classification_recovers_spectral_construction") {
  SplitMix64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const Matrix v = random_unitary(4, rng);
    Matrix inv = Matrix::Zero(4, 4), idem = Matrix::Zero(4, 4),
           tri = Matrix::Zero(4, 4);
    const double spec_inv[4] = {1.0, -1.0, rng.uniform() < 0.5 ? 1.0 : -1.0,
                                rng.uniform() < 0.5 ? 1.0 : -1.0};
    const double spec_idem[4] = {1.0, 0.0, rng.uniform() < 0.5 ? 1.0 : 0.0,
                                 rng.uniform() < 0.5 ? 1.0 : 0.0};
    const double spec_tri[4] = {1.0, -1.0, 0.0, 1.0};
    for (int i = 0; i < 4; ++i) {
      const Matrix p = v.col(i) * v.col(i).adjoint();
      inv += spec_inv[i] * p;
      idem += spec_idem[i] * p;
      tri += spec_tri[i] * p;
    }
    CHECK(classify_number_operator(inv).kind == OperatorKind::InvolutionRegular);
    CHECK(classify_number_operator(idem).kind == OperatorKind::IdempotentRegular);
    CHECK(classify_number_operator(tri).kind == OperatorKind::TriIdempotentRegular);
  }
}

TEST_CASE("epsilon_values_and_domain") {
  CHECK(epsilon(0.0) == 0.0);
  CHECK(epsilon(1.0) == -1.0);
  CHECK(epsilon(0.6) == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK(epsilon(-0.6) == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK(epsilon(0.3) <= 0.0);
  CHECK_THROWS_AS(epsilon(1.5), std::domain_error);
  CHECK_THROWS_AS(epsilon(-1.0001), std::domain_error);
}

TEST_CASE("gate_angle_matches_cosine_root") {
  CHECK(gate_angle(0.0) == 0.0);
  CHECK(gate_angle(1.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  for (double x : {0.1, 0.35, 0.6, 0.99}) {
    const double th = gate_angle(x);
    CHECK(std::cos(th) == doctest::Approx(std::sqrt(1.0 - x * x)).epsilon(1e-14));
    CHECK(std::sin(th) == doctest::Approx(x).epsilon(1e-14));
  }
  CHECK_THROWS_AS(gate_angle(-0.1), std::domain_error);
  CHECK_THROWS_AS(gate_angle(1.1), std::domain_error);
}

TEST_CASE("closed_form_exp_known_values") {
  const auto& d = pauli_and_dirac_matrices();

  // Involution at theta = pi/2: cos term vanishes, leaving -i sigma_x.
  const Matrix u = closed_form_exp(d.sigma[0], std::numbers::pi / 2);
  CHECK(max_abs(Matrix(u + I * d.sigma[0])) < kTight);

  // Projector: exp(-i theta diag(1, 0)) = diag(e^{-i theta}, 1).
  Matrix proj = Matrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  const double th = 0.7;
  const Matrix up = closed_form_exp(proj, th);
  CHECK(std::abs(up(0, 0) - std::exp(-I * th)) < kTight);
  CHECK(std::abs(up(1, 1) - Complex{1.0, 0.0}) < kTight);
  CHECK(std::abs(up(0, 1)) < kTight);
  CHECK(std::abs(up(1, 0)) < kTight);

  // theta = 0 is the identity for every class.
  Matrix tri = Matrix::Zero(3, 3);
  tri(0, 0) = 1.0;
  tri(1, 1) = -1.0;
  CHECK(max_abs(Matrix(closed_form_exp(tri, 0.0) - Matrix::Identity(3, 3))) <
        kTight);
}

TEST_CASE("closed_form_exp_gate_angle_expansion_identity") {
  // With theta = arccos sqrt(1 - x^2): involution (1 + eps)1 - ixN;
  // idempotent 1 + eps N - ixN; tri-idempotent 1 + eps N^2 - ixN.
  SplitMix64 rng(5);
  const Matrix v = random_unitary(4, rng);
  Matrix inv = Matrix::Zero(4, 4), idem = Matrix::Zero(4, 4), tri = Matrix::Zero(4, 4);
  const double si[4] = {1.0, -1.0, 1.0, -1.0};
  const double sp[4] = {1.0, 0.0, 1.0, 0.0};
  const double st[4] = {1.0, -1.0, 0.0, 0.0};
  for (int i = 0; i < 4; ++i) {
    const Matrix p = v.col(i) * v.col(i).adjoint();
    inv += si[i] * p;
    idem += sp[i] * p;
    tri += st[i] * p;
  }
  const Matrix id = Matrix::Identity(4, 4);
  for (double x : {0.0, 0.25, 0.6, 0.95}) {
    const double theta = gate_angle(x);
    const double eps = epsilon(x);
    CHECK(max_abs(Matrix(closed_form_exp(inv, theta, OperatorKind::InvolutionRegular) -
                         ((1.0 + eps) * id - I * x * inv))) < kTight);
    CHECK(max_abs(Matrix(closed_form_exp(idem, theta, OperatorKind::IdempotentRegular) -
                         (id + eps * idem - I * x * idem))) < kTight);
    CHECK(max_abs(Matrix(closed_form_exp(tri, theta, OperatorKind::TriIdempotentRegular) -
                         (id + eps * (tri * tri).eval() - I * x * tri))) < kTight);
  }
}

TEST_CASE("closed_form_exp_matches_oracle_and_is_unitary") {
  SplitMix64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Matrix v = random_unitary(4, rng);
    const double theta = std::numbers::pi * rng.uniform();
    const double kinds[3][4] = {
        {1.0, -1.0, 1.0, -1.0}, {1.0, 0.0, 0.0, 1.0}, {1.0, -1.0, 0.0, 1.0}};
    for (const auto& spec : kinds) {
      Matrix n = Matrix::Zero(4, 4);
      for (int i = 0; i < 4; ++i) n += spec[i] * (v.col(i) * v.col(i).adjoint());
      const Matrix closed = closed_form_exp(n, theta);
      CHECK(max_abs(Matrix(closed - expm_oracle(Matrix(-I * theta * n)))) < kTight);
      CHECK(unitarity_residual(closed) < kTight);
    }
  }
}

TEST_CASE("closed_form_exp_rejects_unsupported_generators") {
  // Skew idempotent: classified but not exponentiated.
  Matrix negproj = Matrix::Zero(2, 2);
  negproj(0, 0) = -1.0;
  CHECK_THROWS_AS(closed_form_exp(negproj, 0.3), std::invalid_argument);

  // Generic hermitian with spectrum outside {-1, 0, 1}.
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 0.5;
  CHECK_THROWS_AS(closed_form_exp(h, 0.3), std::invalid_argument);

  // Non-hermitian.
  Matrix nh = Matrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(closed_form_exp(nh, 0.3), std::invalid_argument);
}

TEST_CASE("expm_oracle_reference_values") {
  CHECK(max_abs(Matrix(expm_oracle(Matrix(Matrix::Zero(3, 3))) -
                       Matrix::Identity(3, 3))) < 1e-15);

  const auto& d = pauli_and_dirac_matrices();
  const Matrix rot = expm_oracle(Matrix(-I * (std::numbers::pi / 2) * d.sigma[0]));
  CHECK(max_abs(Matrix(rot + I * d.sigma[0])) < 1e-14);

  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = Complex{0.3, -0.2};
  diag(1, 1) = Complex{-1.1, 0.7};
  const Matrix ed = expm_oracle(diag);
  CHECK(std::abs(ed(0, 0) - std::exp(diag(0, 0))) < 1e-14);
  CHECK(std::abs(ed(1, 1) - std::exp(diag(1, 1))) < 1e-14);
  CHECK(std::abs(ed(0, 1)) == 0.0);

  // Nilpotent: the series terminates, exp(N) = 1 + N exactly.
  Matrix nil = Matrix::Zero(2, 2);
  nil(0, 1) = 2.5;
  CHECK(max_abs(Matrix(expm_oracle(nil) - (Matrix::Identity(2, 2) + nil))) < 1e-15);

  CHECK_THROWS_AS(expm_oracle(Matrix::Zero(2, 3)), std::invalid_argument);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(expm_oracle(bad), std::invalid_argument);
}

TEST_CASE("expm_oracle_accuracy_against_eigendecomposition") {
  // Third route: hermitian H = V D V^dag gives exp(-iH) = V e^{-iD} V^dag.
  SplitMix64 rng(23);
  for (int t = 0; t < 25; ++t) {
    Matrix h(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h(i, j) = rng.normal_complex();
    h = ((h + h.adjoint()) * 2.0).eval();  // scale into the squaring path
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Matrix expected = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i)
      expected += std::exp(-I * es.eigenvalues()(i)) *
                  (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
    CHECK(max_abs(Matrix(expm_oracle(Matrix(-I * h)) - expected)) < 1e-13);
  }
}

TEST_CASE("expm_oracle_inverse_product") {
  SplitMix64 rng(31);
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rng.normal_complex();
  CHECK(max_abs(Matrix(expm_oracle(m) * expm_oracle(Matrix(-m)) -
                       Matrix::Identity(3, 3))) < 1e-13);
}

TEST_CASE("trotter_product_definition_and_commuting_case") {
  const auto& d = pauli_and_dirac_matrices();

  // n = 1 is exactly one split step.
  const Matrix one = trotter_product(d.sigma[0], d.sigma[2], 0.8, 1);
  const Matrix ref = expm_oracle(Matrix(-I * 0.8 * d.sigma[0])) *
                     expm_oracle(Matrix(-I * 0.8 * d.sigma[2]));
  CHECK(max_abs(Matrix(one - ref)) < 1e-14);

  // Commuting generators: exact for every n.
  Matrix h0 = Matrix::Zero(2, 2), h1 = Matrix::Zero(2, 2);
  h0(0, 0) = 0.4;
  h0(1, 1) = -0.3;
  h1(0, 0) = -1.2;
  h1(1, 1) = 0.9;
  const Matrix sum = expm_oracle(Matrix(-I * 1.7 * (h0 + h1)));
  for (int n : {1, 3, 16})
    CHECK(max_abs(Matrix(trotter_product(h0, h1, 1.7, n) - sum)) < kTight);

  CHECK_THROWS_AS(trotter_product(h0, h1, 1.0, 0), std::invalid_argument);
  Matrix nh = Matrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(trotter_product(nh, h1, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(trotter_product(h0, Matrix(Matrix::Zero(3, 3)), 1.0, 2),
                  std::invalid_argument);
}

TEST_CASE("trotter_error_decreases_for_noncommuting_pauli_pair") {
  const auto& d = pauli_and_dirac_matrices();
  const Matrix target = expm_oracle(Matrix(-I * (d.sigma[0] + d.sigma[2])));
  double prev = 1e300;
  for (int n = 1; n <= 256; n *= 2) {
    const double err = max_abs(Matrix(trotter_product(d.sigma[0], d.sigma[2], 1.0, n) - target));
    CHECK(err < prev);
    prev = err;
  }
  // First-order splitting: still visibly off at n = 256.
  CHECK(prev > 1e-6);
}

TEST_CASE("grid_units_consistency") {
  const GridUnits u = GridUnits::natural();
  CHECK(u.c() == 1.0);
  CHECK(u.hbar == 1.0);
  // hbar = m0 ell^2 / (2 pi tau) fixes the mass unit at 2 pi in natural units.
  CHECK(u.mass_unit() == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(u.consistent_mass_unit(2.0 * std::numbers::pi, 1e-12));
  CHECK(!u.consistent_mass_unit(1.0, 1e-12));
}
