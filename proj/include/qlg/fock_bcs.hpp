#pragma once

// Jordan-Wigner fermions on a qubit register, BCS pairing generators, and the
// Bogoliubov-de Gennes quasiparticle step.
//
// Register conventions: qubit alpha (1-based) is the alpha-th Kronecker factor
// from the left, so qubit 1 carries the most significant basis bit; bit 1 means
// occupied, and sigma_z|0> = +|0>. The pair-creation sign that follows is
// adag_1 adag_2 |00> = +|11> (pinned by a regression test).

#include <array>
#include <cstdint>
#include <vector>

#include "qlg/matrix.hpp"

namespace qlg {

inline constexpr int kMaxDenseQubits = 12;

/// Amplitudes over a Q-qubit register, 2 <= Q <= 12.
class FockSpace {
 public:
  explicit FockSpace(int qubits);

  int qubits() const { return qubits_; }
  std::int64_t dim() const { return std::int64_t{1} << qubits_; }
  Vector& amps() { return amps_; }
  const Vector& amps() const { return amps_; }

  /// Basis state |b_1 b_2 ... b_Q> with b_1 the most significant bit.
  static FockSpace basis_state(int qubits, std::uint64_t bits);

  double norm() const { return amps_.norm(); }

 private:
  int qubits_;
  Vector amps_;
};

struct JordanWignerOps {
  Matrix a;         // annihilator, sigma_z string on lower-index qubits
  Matrix a_dag;
  Matrix n;         // a_dag * a
};

/// Dense 2^Q ladder operators for mode alpha (1-based).
JordanWignerOps jordan_wigner_ops(int qubits, int alpha);

enum class PairSign { Plus, Minus };

struct BcsParams {
  double eps = 0.0;       // single-particle energy
  Complex delta{0.0, 0.0};  // pairing amplitude
  double tau = 1.0;

  /// Quasiparticle energy sqrt(eps^2 + |delta|^2); must be positive.
  double energy() const;
  void validate() const;  // throws std::domain_error on E = 0 or tau <= 0
};

/// Pairing generator on modes (alpha, beta):
///   N+- = 1/2 (1 +- eps/E) adag_a a_a + 1/2 (1 -+ eps/E) a_b adag_b
///         +- delta/(2E) adag_a adag_b +- conj(delta)/(2E) a_b a_a.
/// Hermitian. Each branch is the occupation projector of one Bogoliubov
/// quasiparticle mode (gamma_dag gamma), so N^2 = N exactly for all
/// parameters.
Matrix bcs_number_operator(int qubits, int alpha, int beta, const BcsParams& p,
                           PairSign sign = PairSign::Plus);

/// Joint pairing generator N+ - N-. Hermitian with spectrum {-1, 0, +1}:
/// tri-idempotent (N^3 = N, N^2 != N) for every valid parameter set, with
/// both nonzero eigenvalues on the even-parity pair sector and the kernel on
/// the odd sector. E times this operator equals bdg_hamiltonian under
/// bdg_fock_index_map.
Matrix bcs_joint_generator(int qubits, int alpha, int beta,
                           const BcsParams& p);

/// U = 1 + eps(E tau) N^2 - i E tau N, the closed-form exponential of the
/// pairing generator; requires E tau in [0, 1].
Matrix bcs_gate(const Matrix& n, double e_tau);

/// 4x4 quasiparticle Hamiltonian: rows/cols ordered so that entries
/// (1,1) = eps, (1,4) = delta, (4,1) = conj(delta), (4,4) = -eps; the middle two
/// rows vanish. (H/E)^2 is exactly the projector onto the pairing support.
Matrix bdg_hamiltonian(double eps, Complex delta);

/// Component map between the 4-spinor psi and the two-qubit Fock basis:
/// psi_i corresponds to basis index map[i]. The identity
/// E (N+ - N-) = bdg_hamiltonian holds under exactly this embedding
/// (psi -> |11>, |10>, |01>, |00>).
std::array<int, 4> bdg_fock_index_map();

/// One exact quasiparticle step: the closed-form unitary of H/E at angle
/// asin(E tau). On the pairing support this is sqrt(1 - (E tau)^2) psi
/// - i tau H psi; on the kernel it is the identity (zero rows of H).
Vector step_bdg(const Vector& psi, double eps, Complex delta, double tau);

/// Apply a two-qubit gate on modes (alpha, beta) with Jordan-Wigner-consistent
/// signs: occupation-changing entries pick up (-1)^(occupied strictly between).
/// The gate must not mix fermion-parity sectors. At Q = 2 this is the plain
/// 4x4 product.
FockSpace apply_pair_gate(const FockSpace& state, const Matrix& gate, int alpha,
                          int beta);

}  // namespace qlg
