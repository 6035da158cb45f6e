#pragma once

// Self-coupled pairing dynamics on the four-spinor lattice: the phase-dressed
// SU(2) algebra of a complex gap, the two equivalent quartic interaction
// densities, the gap update, and the gap-rotated lattice step. The mass role is
// played by |Delta|: streaming is the Dirac one, the rotation generator is
// Nprime (x) 1 with Nprime = [[0, Delta/|Delta|], [conj(Delta)/|Delta|, 0]].

#include <array>
#include <stdexcept>
#include <vector>

#include "qlg/dirac.hpp"
#include "qlg/matrix.hpp"
#include "qlg/units.hpp"

namespace qlg {

enum class PairingMode { Uniform, Local, GlobalMean };

struct PairingParams {
  Complex delta{0.0, 0.0};  // gap used by Uniform mode / initial value
  double lambda = 0.0;      // quartic coupling in the gap update
  double tau = 1.0;
  PairingMode mode = PairingMode::GlobalMean;
  GridUnits grid{};
};

struct NonlinearAlgebra {
  Matrix sigma_x, sigma_y, sigma_z;  // 2x2, phase-dressed by arg(Delta)
  Matrix big_gamma0;                 // Sigma_x (x) 1
  Matrix big_gamma[3];               // i Sigma_y (x) sigma_i
};

/// Phase-dressed SU(2) triple and its 4x4 lift. Requires Delta != 0.
/// Satisfies Sigma_i^2 = 1, [Sigma_x, Sigma_y] = 2i Sigma_z, and
/// Gamma0 Gamma^mu = gamma0 gamma^mu (phase independent).
NonlinearAlgebra nonlinear_algebra(Complex delta);

/// Pairing energy density Delta conj(psi_L)psi_R + h.c., summed over spin:
/// real by construction; the imaginary residue is asserted below 1e-14.
double nl_interaction_density(const std::array<Complex, 4>& psi, Complex delta);

/// Quartic density computed two ways - the gamma-matrix form
/// lambda/4 [(psibar psi)^2 - (psibar gamma5 psi)^2] and the chiral-contraction
/// form lambda (psi_L^dag psi_R)(psi_R^dag psi_L) - asserting agreement to 1e-12.
double njl_interaction_density(const std::array<Complex, 4>& psi, double lambda);

struct PairingUpdate {
  std::vector<Complex> delta;  // per site (Local) or single value (GlobalMean)
  double spin_asymmetry = 0.0;  // max |up-estimate - down-estimate| over sites
};

/// Gap update Delta = lambda <conj(psi_R) psi_L>, spin averaged. Uniform mode
/// returns the configured gap unchanged. Throws GapOverflowError (with the
/// offending site) if |Delta(x)| tau > 1 anywhere.
PairingUpdate pairing_update(const SpinorField& field, const PairingParams& p);

class GapOverflowError : public std::runtime_error {
 public:
  GapOverflowError(int site, double value);
  int site() const { return site_; }

 private:
  int site_;
};

/// One self-consistent step. Uniform mode: collapsed form
/// psi' = sqrt(1 - |D|^2 tau^2) S psi - i |D| tau (Nprime (x) 1) psi.
/// Local / GlobalMean: gap update from psi(t) first, then collide-then-stream
/// with the per-site (or mean) gap. Returns the gap actually applied.
struct SuperfluidStep {
  SpinorField field;
  PairingUpdate gap;
};
SuperfluidStep step_superfluid(const SpinorField& in, const PairingParams& p,
                               int threads = 1);

/// Exact momentum-space step matrix for a uniform gap (mass role |Delta| tau).
Matrix superfluid_step_matrix(double k_ell, Complex delta_tau);

/// m_eff = |Delta| / c^2 in grid units.
double effective_mass(Complex delta, const GridUnits& grid);

}  // namespace qlg
