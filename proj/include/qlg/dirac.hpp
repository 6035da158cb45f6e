#pragma once

// 1D four-spinor lattice evolution: unitary streaming plus a mass rotation, with
// the exact momentum-space step matrix and its measured dispersion.
//
// Spinor component order is (L_up, L_dn, R_up, R_dn); alpha3 = sigma_z (x) sigma_z
// is diagonal (+1, -1, -1, +1) in this basis, so components 0 and 3 stream one
// site leftward-pull (value from x + 1) and components 1 and 2 from x - 1,
// periodic wrap. One step is psi(t + tau) = sqrt(1 - (m tau)^2) S psi - i m tau
// beta psi: exactly unitary at finite tau, no limiting procedure involved.

#include <array>
#include <vector>

#include "qlg/matrix.hpp"
#include "qlg/units.hpp"

namespace qlg {

struct DiracParams {
  double m_tau = 0.0;  // dimensionless mass coupling, in [0, 1]
  GridUnits grid{};
};

/// Periodic 1D lattice of four-spinors, site-major storage (4 amplitudes per site).
class SpinorField {
 public:
  SpinorField(int sites, Complex fill = Complex{0.0, 0.0});

  int sites() const { return sites_; }
  Complex& at(int x, int c) { return amps_[4 * static_cast<std::size_t>(x) + c]; }
  const Complex& at(int x, int c) const {
    return amps_[4 * static_cast<std::size_t>(x) + c];
  }
  std::vector<Complex>& amps() { return amps_; }
  const std::vector<Complex>& amps() const { return amps_; }

  /// Global l2 norm, accumulated by a fixed-order pairwise tree so the result is
  /// bit-identical for any thread count.
  double norm() const;
  double norm_sq() const;

  void normalize();

  bool operator==(const SpinorField& o) const = default;

 private:
  int sites_;
  std::vector<Complex> amps_;
};

/// Fixed-order pairwise-tree sum; deterministic reduction used for all field scalars.
double pairwise_sum(const double* data, std::size_t n);

/// One streaming substep (the mass-free step). threads > 1 splits the site loop;
/// output is bit-identical for any thread count.
SpinorField stream_1d(const SpinorField& in, int threads = 1);

/// One full unitary step at uniform mass.
SpinorField step_dirac(const SpinorField& in, const DiracParams& p, int threads = 1);

/// Collide-then-stream step with a per-site mass profile m_tau(x); the collide
/// gate is the closed-form mass rotation at each site. This is not the same
/// operator as step_dirac (collide acts before streaming) but is equally unitary.
SpinorField step_dirac_mass_profile(const SpinorField& in,
                                    const std::vector<double>& m_tau,
                                    int threads = 1);

/// Exact one-step matrix in momentum space, 1D signed k l in (-pi, pi]:
/// U(k) = sqrt(1 - (m tau)^2) (cos(k l) 1 + i alpha3 sin(k l)) - i m tau beta.
Matrix dirac_step_matrix(double k_ell, double m_tau);

/// 3D wavevector form using alpha . k_hat; rejects k = 0 (use the scalar form).
Matrix dirac_step_matrix(const std::array<double, 3>& k_ell, double m_tau);

struct DispersionRecord {
  double k_ell = 0.0;
  std::array<double, 4> omega_tau{};  // -arg(eigenvalue), ascending
  double p_eff_ell = 0.0;             // sqrt(1 - (m tau)^2) |sin(k l)|
  bool solver_ok = true;
};

/// Eigenphase dispersion of U(k) over a k-grid; solver failures are flagged
/// per record and the sweep continues.
std::vector<DispersionRecord> measure_dispersion(double m_tau,
                                                 const std::vector<double>& k_ell_grid);

/// Normalized plane wave e^{i 2 pi k_index x / N} (x) spinor, 0 <= k_index < sites;
/// the spinor must be unit norm.
SpinorField plane_wave_field(int sites, int k_index, const std::array<Complex, 4>& spinor);

}  // namespace qlg
