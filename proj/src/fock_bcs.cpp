#include "qlg/fock_bcs.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qlg/operator_algebra.hpp"

namespace qlg {

FockSpace::FockSpace(int qubits) : qubits_(qubits) {
  if (qubits < 2 || qubits > kMaxDenseQubits)
    throw std::invalid_argument("FockSpace: 2 <= qubits <= 12 required");
  amps_ = Vector::Zero(dim());
}

FockSpace FockSpace::basis_state(int qubits, std::uint64_t bits) {
  FockSpace s(qubits);
  if (bits >= static_cast<std::uint64_t>(s.dim()))
    throw std::invalid_argument("FockSpace::basis_state: label out of range");
  s.amps_(static_cast<Eigen::Index>(bits)) = 1.0;
  return s;
}

JordanWignerOps jordan_wigner_ops(int qubits, int alpha) {
  if (qubits < 1 || qubits > kMaxDenseQubits)
    throw std::invalid_argument("jordan_wigner_ops: 1 <= qubits <= 12 required");
  if (alpha < 1 || alpha > qubits)
    throw std::invalid_argument("jordan_wigner_ops: mode index out of range");

  const Matrix sz = Matrix{{1.0, 0.0}, {0.0, -1.0}};
  const Matrix a1 = Matrix{{0.0, 1.0}, {0.0, 0.0}};  // a|1> = |0>
  const Matrix id2 = Matrix::Identity(2, 2);

  Matrix op = Matrix::Identity(1, 1);
  for (int q = 1; q <= qubits; ++q) {
    if (q < alpha) op = kron(op, sz);
    else if (q == alpha) op = kron(op, a1);
    else op = kron(op, id2);
  }
  JordanWignerOps out;
  out.a = op;
  out.a_dag = op.adjoint();
  out.n = out.a_dag * out.a;
  return out;
}

double BcsParams::energy() const {
  return std::sqrt(eps * eps + std::norm(delta));
}

void BcsParams::validate() const {
  if (!(energy() > 0.0))
    throw std::domain_error("BcsParams: quasiparticle energy must be positive");
  if (!(tau > 0.0)) throw std::domain_error("BcsParams: tau must be positive");
}

Matrix bcs_number_operator(int qubits, int alpha, int beta, const BcsParams& p,
                           PairSign sign) {
  if (alpha == beta)
    throw std::invalid_argument("bcs_number_operator: alpha != beta required");
  p.validate();
  const double s = (sign == PairSign::Plus) ? 1.0 : -1.0;
  const double e = p.energy();
  const auto oa = jordan_wigner_ops(qubits, alpha);
  const auto ob = jordan_wigner_ops(qubits, beta);
  return 0.5 * (1.0 + s * p.eps / e) * oa.n +
         0.5 * (1.0 - s * p.eps / e) * (ob.a * ob.a_dag).eval() +
         (s * p.delta / (2.0 * e)) * (oa.a_dag * ob.a_dag).eval() +
         (s * std::conj(p.delta) / (2.0 * e)) * (ob.a * oa.a).eval();
}

Matrix bcs_joint_generator(int qubits, int alpha, int beta,
                           const BcsParams& p) {
  return bcs_number_operator(qubits, alpha, beta, p, PairSign::Plus) -
         bcs_number_operator(qubits, alpha, beta, p, PairSign::Minus);
}

Matrix bcs_gate(const Matrix& n, double e_tau) {
  if (!(e_tau >= 0.0 && e_tau <= 1.0))
    throw std::domain_error("bcs_gate: E tau in [0, 1] required");
  const Matrix id = Matrix::Identity(n.rows(), n.cols());
  return id + epsilon(e_tau) * (n * n).eval() - I * e_tau * n;
}

Matrix bdg_hamiltonian(double eps, Complex delta) {
  Matrix h = Matrix::Zero(4, 4);
  h(0, 0) = eps;
  h(0, 3) = delta;
  h(3, 0) = std::conj(delta);
  h(3, 3) = -eps;
  return h;
}

std::array<int, 4> bdg_fock_index_map() { return {3, 2, 1, 0}; }

Vector step_bdg(const Vector& psi, double eps, Complex delta, double tau) {
  if (psi.size() != 4)
    throw std::invalid_argument("step_bdg: four-component state required");
  const double e = std::sqrt(eps * eps + std::norm(delta));
  if (!(e > 0.0)) throw std::domain_error("step_bdg: energy must be positive");
  const double et = e * tau;
  if (!(et >= 0.0 && et <= 1.0))
    throw std::domain_error("step_bdg: E tau in [0, 1] required");

  // Closed form of the tri-idempotent H/E: affine formula on the support,
  // identity on the kernel (middle components untouched).
  const double root = std::sqrt(1.0 - et * et);
  Vector out = psi;
  out(0) = root * psi(0) - I * tau * (eps * psi(0) + delta * psi(3));
  out(3) = root * psi(3) - I * tau * (std::conj(delta) * psi(0) - eps * psi(3));
  return out;
}

namespace {

// Fermion-parity block check: entries connecting {00,11} with {01,10} must vanish.
bool parity_preserving(const Matrix& g, double tol) {
  const int even[2] = {0, 3}, odd[2] = {1, 2};
  for (int r : even)
    for (int c : odd)
      if (std::abs(g(r, c)) > tol || std::abs(g(c, r)) > tol) return false;
  return true;
}

}  // namespace

FockSpace apply_pair_gate(const FockSpace& state, const Matrix& gate, int alpha,
                          int beta) {
  if (gate.rows() != 4 || gate.cols() != 4)
    throw std::invalid_argument("apply_pair_gate: 4x4 gate required");
  const int q = state.qubits();
  if (alpha < 1 || alpha > q || beta < 1 || beta > q || alpha == beta)
    throw std::invalid_argument("apply_pair_gate: invalid mode pair");
  if (!parity_preserving(gate, 1e-12))
    throw std::invalid_argument(
        "apply_pair_gate: gate mixes fermion parity sectors");

  const int lo = std::min(alpha, beta), hi = std::max(alpha, beta);
  // Bit positions from the LSB for 1-based qubit indices (qubit 1 = MSB).
  const int shift_a = q - alpha, shift_b = q - beta;
  const std::uint64_t mask_a = std::uint64_t{1} << shift_a;
  const std::uint64_t mask_b = std::uint64_t{1} << shift_b;
  // Qubits strictly between the pair, as a bitmask.
  std::uint64_t between = 0;
  for (int j = lo + 1; j < hi; ++j) between |= std::uint64_t{1} << (q - j);
  // Reordering the pair-creation monomial to a fixed mode order costs one sign.
  const double order_sign = (alpha < beta) ? 1.0 : -1.0;

  FockSpace out = state;
  const std::uint64_t dim = static_cast<std::uint64_t>(state.dim());
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & (mask_a | mask_b)) continue;  // enumerate outer configs once
    const double string_sign =
        (std::popcount(base & between) % 2 == 0) ? 1.0 : -1.0;

    const std::uint64_t idx[4] = {base, base | mask_b, base | mask_a,
                                  base | mask_a | mask_b};
    Complex in_amp[4];
    for (int rc = 0; rc < 4; ++rc)
      in_amp[rc] = state.amps()(static_cast<Eigen::Index>(idx[rc]));
    for (int r = 0; r < 4; ++r) {
      Complex acc{0.0, 0.0};
      for (int c = 0; c < 4; ++c) {
        double sgn = 1.0;
        const bool flips = ((r ^ c) & 1) || ((r ^ c) & 2);  // any bit changes
        if (flips) {
          sgn = string_sign;
          if (((r ^ c) & 3) == 3 && (r == 0 || r == 3)) sgn *= order_sign;
        }
        acc += sgn * gate(r, c) * in_amp[c];
      }
      out.amps()(static_cast<Eigen::Index>(idx[r])) = acc;
    }
  }
  return out;
}

}  // namespace qlg
