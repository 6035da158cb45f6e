#include "qlg/dirac.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qlg/operator_algebra.hpp"
#include "qlg/parallel.hpp"

namespace qlg {

SpinorField::SpinorField(int sites, Complex fill)
    : sites_(sites), amps_(4 * static_cast<std::size_t>(sites), fill) {
  if (sites < 1) throw std::invalid_argument("SpinorField: sites >= 1 required");
}

double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

double SpinorField::norm_sq() const {
  std::vector<double> site_norms(sites_);
  for (int x = 0; x < sites_; ++x) {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) s += std::norm(at(x, c));
    site_norms[x] = s;
  }
  return pairwise_sum(site_norms.data(), site_norms.size());
}

double SpinorField::norm() const { return std::sqrt(norm_sq()); }

void SpinorField::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("SpinorField::normalize: zero field");
  for (auto& a : amps_) a /= n;
}

SpinorField stream_1d(const SpinorField& in, int threads) {
  const int n = in.sites();
  SpinorField out(n);
  parallel_for(n, threads, [&](int x) {
    const int xp = (x + 1) % n;
    const int xm = (x - 1 + n) % n;
    // alpha3 eigenvalue +1 components pull from x+1, -1 components from x-1.
    out.at(x, 0) = in.at(xp, 0);
    out.at(x, 1) = in.at(xm, 1);
    out.at(x, 2) = in.at(xm, 2);
    out.at(x, 3) = in.at(xp, 3);
  });
  return out;
}

SpinorField step_dirac(const SpinorField& in, const DiracParams& p, int threads) {
  const double mt = p.m_tau;
  if (!(mt >= 0.0 && mt <= 1.0))
    throw std::domain_error("step_dirac: m_tau in [0, 1] required");
  const double root = std::sqrt(1.0 - mt * mt);
  const int n = in.sites();
  SpinorField out(n);
  parallel_for(n, threads, [&](int x) {
    const int xp = (x + 1) % n;
    const int xm = (x - 1 + n) % n;
    // beta = sigma_x (x) 1 swaps the chirality blocks: (0,1) <-> (2,3).
    out.at(x, 0) = root * in.at(xp, 0) - I * mt * in.at(x, 2);
    out.at(x, 1) = root * in.at(xm, 1) - I * mt * in.at(x, 3);
    out.at(x, 2) = root * in.at(xm, 2) - I * mt * in.at(x, 0);
    out.at(x, 3) = root * in.at(xp, 3) - I * mt * in.at(x, 1);
  });
  return out;
}

SpinorField step_dirac_mass_profile(const SpinorField& in,
                                    const std::vector<double>& m_tau,
                                    int threads) {
  const int n = in.sites();
  if (static_cast<int>(m_tau.size()) != n)
    throw std::invalid_argument("step_dirac_mass_profile: profile size mismatch");
  for (double mt : m_tau)
    if (!(mt >= 0.0 && mt <= 1.0))
      throw std::domain_error("step_dirac_mass_profile: m_tau(x) in [0, 1] required");

  // Collide locally (exact mass rotation), then stream.
  SpinorField collided(n);
  parallel_for(n, threads, [&](int x) {
    const double mt = m_tau[x];
    const double root = std::sqrt(1.0 - mt * mt);
    collided.at(x, 0) = root * in.at(x, 0) - I * mt * in.at(x, 2);
    collided.at(x, 1) = root * in.at(x, 1) - I * mt * in.at(x, 3);
    collided.at(x, 2) = root * in.at(x, 2) - I * mt * in.at(x, 0);
    collided.at(x, 3) = root * in.at(x, 3) - I * mt * in.at(x, 1);
  });
  return stream_1d(collided, threads);
}

Matrix dirac_step_matrix(double k_ell, double m_tau) {
  if (!(m_tau >= 0.0 && m_tau <= 1.0))
    throw std::domain_error("dirac_step_matrix: m_tau in [0, 1] required");
  const auto& d = pauli_and_dirac_matrices();
  const double root = std::sqrt(1.0 - m_tau * m_tau);
  const Matrix id = Matrix::Identity(4, 4);
  return root * (std::cos(k_ell) * id + I * std::sin(k_ell) * d.alpha[2]) -
         I * m_tau * d.beta;
}

Matrix dirac_step_matrix(const std::array<double, 3>& k_ell, double m_tau) {
  if (!(m_tau >= 0.0 && m_tau <= 1.0))
    throw std::domain_error("dirac_step_matrix: m_tau in [0, 1] required");
  const double k = std::sqrt(k_ell[0] * k_ell[0] + k_ell[1] * k_ell[1] +
                             k_ell[2] * k_ell[2]);
  if (k == 0.0)
    throw std::invalid_argument(
        "dirac_step_matrix: k = 0 has no direction; use the scalar form");
  const auto& d = pauli_and_dirac_matrices();
  Matrix alpha_khat = Matrix::Zero(4, 4);
  for (int i = 0; i < 3; ++i) alpha_khat += (k_ell[i] / k) * d.alpha[i];
  const double root = std::sqrt(1.0 - m_tau * m_tau);
  const Matrix id = Matrix::Identity(4, 4);
  return root * (std::cos(k) * id + I * std::sin(k) * alpha_khat) - I * m_tau * d.beta;
}

std::vector<DispersionRecord> measure_dispersion(double m_tau,
                                                 const std::vector<double>& k_ell_grid) {
  std::vector<DispersionRecord> out;
  out.reserve(k_ell_grid.size());
  for (double kl : k_ell_grid) {
    if (!(kl > -std::numbers::pi - 1e-12 && kl <= std::numbers::pi + 1e-12))
      throw std::domain_error("measure_dispersion: k l in (-pi, pi] required");
    DispersionRecord rec;
    rec.k_ell = kl;
    rec.p_eff_ell = std::sqrt(1.0 - m_tau * m_tau) * std::abs(std::sin(kl));
    Eigen::ComplexEigenSolver<Matrix> es(dirac_step_matrix(kl, m_tau), false);
    if (es.info() != Eigen::Success) {
      rec.solver_ok = false;
      out.push_back(rec);
      continue;
    }
    for (int b = 0; b < 4; ++b) rec.omega_tau[b] = -std::arg(es.eigenvalues()(b));
    std::sort(rec.omega_tau.begin(), rec.omega_tau.end());
    out.push_back(rec);
  }
  return out;
}

SpinorField plane_wave_field(int sites, int k_index,
                             const std::array<Complex, 4>& spinor) {
  if (k_index < 0 || k_index >= sites)
    throw std::invalid_argument("plane_wave_field: k_index in [0, sites) required");
  double ssq = 0.0;
  for (const auto& s : spinor) ssq += std::norm(s);
  if (std::abs(ssq - 1.0) > 1e-9)
    throw std::invalid_argument("plane_wave_field: spinor must be unit norm");

  SpinorField f(sites);
  const double scale = 1.0 / std::sqrt(static_cast<double>(sites));
  for (int x = 0; x < sites; ++x) {
    const double phase =
        2.0 * std::numbers::pi * static_cast<double>(k_index) * x / sites;
    const Complex w = std::polar(scale, phase);
    for (int c = 0; c < 4; ++c) f.at(x, c) = w * spinor[c];
  }
  return f;
}

}  // namespace qlg
