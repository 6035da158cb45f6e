#include "qlg/superfluid.hpp"

#include <cmath>
#include <string>

#include "qlg/operator_algebra.hpp"
#include "qlg/parallel.hpp"

namespace qlg {

NonlinearAlgebra nonlinear_algebra(Complex delta) {
  const double mag = std::abs(delta);
  if (!(mag > 0.0))
    throw std::domain_error("nonlinear_algebra: Delta != 0 required");
  const Complex d = delta / mag;
  NonlinearAlgebra out;
  out.sigma_x = Matrix{{0.0, d}, {std::conj(d), 0.0}};
  out.sigma_y = Matrix{{0.0, -I * d}, {I * std::conj(d), 0.0}};
  out.sigma_z = Matrix{{1.0, 0.0}, {0.0, -1.0}};
  const Matrix id2 = Matrix::Identity(2, 2);
  out.big_gamma0 = kron(out.sigma_x, id2);
  const auto& dm = pauli_and_dirac_matrices();
  for (int i = 0; i < 3; ++i)
    out.big_gamma[i] = I * kron(out.sigma_y, dm.sigma[i]);
  return out;
}

double nl_interaction_density(const std::array<Complex, 4>& psi, Complex delta) {
  // z = conj(psi_L) . psi_R summed over spin; density = Delta z + conj(Delta z).
  const Complex z = std::conj(psi[0]) * psi[2] + std::conj(psi[1]) * psi[3];
  const Complex val = delta * z + std::conj(delta * z);
  if (std::abs(val.imag()) > 1e-14 * (1.0 + std::abs(val.real())))
    throw std::logic_error("nl_interaction_density: nonreal density");
  return val.real();
}

double njl_interaction_density(const std::array<Complex, 4>& psi, double lambda) {
  const auto& dm = pauli_and_dirac_matrices();
  Vector v(4);
  for (int i = 0; i < 4; ++i) v(i) = psi[i];
  const Complex sbar = (v.adjoint() * dm.gamma[0] * v)(0);
  const Complex pbar = (v.adjoint() * dm.gamma[0] * dm.gamma5 * v)(0);
  const Complex quartic = (lambda / 4.0) * (sbar * sbar - pbar * pbar);

  const Complex lr = std::conj(psi[0]) * psi[2] + std::conj(psi[1]) * psi[3];
  const double contracted = lambda * std::norm(lr);

  const double scale = 1.0 + std::abs(contracted);
  if (std::abs(quartic.real() - contracted) > 1e-12 * scale ||
      std::abs(quartic.imag()) > 1e-12 * scale)
    throw std::logic_error(
        "njl_interaction_density: quartic and contracted forms disagree");
  return quartic.real();
}

GapOverflowError::GapOverflowError(int site, double value)
    : std::runtime_error("gap overflow: |Delta| tau = " + std::to_string(value) +
                         " > 1 at site " + std::to_string(site)),
      site_(site) {}

PairingUpdate pairing_update(const SpinorField& field, const PairingParams& p) {
  PairingUpdate out;
  if (p.mode == PairingMode::Uniform) {
    if (std::abs(p.delta) * p.tau > 1.0) throw GapOverflowError(-1, std::abs(p.delta) * p.tau);
    out.delta.assign(1, p.delta);
    return out;
  }

  const int n = field.sites();
  std::vector<Complex> up(n), dn(n);
  for (int x = 0; x < n; ++x) {
    up[x] = std::conj(field.at(x, 2)) * field.at(x, 0);
    dn[x] = std::conj(field.at(x, 3)) * field.at(x, 1);
  }
  double asym = 0.0;
  for (int x = 0; x < n; ++x)
    asym = std::max(asym, std::abs(p.lambda * up[x] - p.lambda * dn[x]));
  out.spin_asymmetry = asym;

  if (p.mode == PairingMode::Local) {
    out.delta.resize(n);
    for (int x = 0; x < n; ++x) {
      out.delta[x] = p.lambda * 0.5 * (up[x] + dn[x]);
      if (std::abs(out.delta[x]) * p.tau > 1.0)
        throw GapOverflowError(x, std::abs(out.delta[x]) * p.tau);
    }
    return out;
  }

  // GlobalMean: fixed-order pairwise reduction of both quadratures.
  std::vector<double> re(n), im(n);
  for (int x = 0; x < n; ++x) {
    const Complex b = 0.5 * (up[x] + dn[x]);
    re[x] = b.real();
    im[x] = b.imag();
  }
  const Complex mean{pairwise_sum(re.data(), re.size()) / n,
                     pairwise_sum(im.data(), im.size()) / n};
  const Complex d = p.lambda * mean;
  if (std::abs(d) * p.tau > 1.0) throw GapOverflowError(-1, std::abs(d) * p.tau);
  out.delta.assign(1, d);
  return out;
}

namespace {

// In-place collide: psi -> sqrt(1 - |d tau|^2) psi - i tau (|d| Nprime (x) 1) psi,
// i.e. the L/R blocks mix through the gap phase.
inline void collide_site(const SpinorField& in, SpinorField& out, int x,
                         Complex delta, double tau) {
  const double mag = std::abs(delta) * tau;
  if (mag == 0.0) {
    for (int c = 0; c < 4; ++c) out.at(x, c) = in.at(x, c);
    return;
  }
  const double root = std::sqrt(1.0 - mag * mag);
  const Complex dt = delta * tau;       // |d| tau * phase
  const Complex dtc = std::conj(dt);
  out.at(x, 0) = root * in.at(x, 0) - I * dt * in.at(x, 2);
  out.at(x, 1) = root * in.at(x, 1) - I * dt * in.at(x, 3);
  out.at(x, 2) = root * in.at(x, 2) - I * dtc * in.at(x, 0);
  out.at(x, 3) = root * in.at(x, 3) - I * dtc * in.at(x, 1);
}

}  // namespace

SuperfluidStep step_superfluid(const SpinorField& in, const PairingParams& p,
                               int threads) {
  SuperfluidStep result{SpinorField(in.sites()), pairing_update(in, p)};
  const int n = in.sites();

  if (p.mode == PairingMode::Local) {
    // Collide with the per-site gap, then stream.
    SpinorField collided(n);
    const auto& gap = result.gap.delta;
    parallel_for(n, threads, [&](int x) { collide_site(in, collided, x, gap[x], p.tau); });
    result.field = stream_1d(collided, threads);
    return result;
  }

  // Uniform and GlobalMean apply one spatially constant gap; collapsed form
  // streams first and rotates the unstreamed amplitudes.
  const Complex d = result.gap.delta.front();
  const double mag = std::abs(d) * p.tau;
  const double root = std::sqrt(1.0 - mag * mag);
  const Complex dt = d * p.tau;
  const Complex dtc = std::conj(dt);
  SpinorField& out = result.field;
  parallel_for(n, threads, [&](int x) {
    const int xp = (x + 1) % n;
    const int xm = (x - 1 + n) % n;
    out.at(x, 0) = root * in.at(xp, 0) - I * dt * in.at(x, 2);
    out.at(x, 1) = root * in.at(xm, 1) - I * dt * in.at(x, 3);
    out.at(x, 2) = root * in.at(xm, 2) - I * dtc * in.at(x, 0);
    out.at(x, 3) = root * in.at(xp, 3) - I * dtc * in.at(x, 1);
  });
  return result;
}

Matrix superfluid_step_matrix(double k_ell, Complex delta_tau) {
  const double mag = std::abs(delta_tau);
  if (!(mag <= 1.0))
    throw std::domain_error("superfluid_step_matrix: |Delta| tau <= 1 required");
  const auto& dm = pauli_and_dirac_matrices();
  const double root = std::sqrt(1.0 - mag * mag);
  const Matrix id = Matrix::Identity(4, 4);
  Matrix mass = Matrix::Zero(4, 4);
  mass(0, 2) = delta_tau;
  mass(1, 3) = delta_tau;
  mass(2, 0) = std::conj(delta_tau);
  mass(3, 1) = std::conj(delta_tau);
  return root * (std::cos(k_ell) * id + I * std::sin(k_ell) * dm.alpha[2]) -
         I * mass;
}

double effective_mass(Complex delta, const GridUnits& grid) {
  const double c = grid.c();
  return std::abs(delta) / (c * c);
}

}  // namespace qlg
