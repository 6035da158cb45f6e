#pragma once

// Counter-based 64-bit generator (splitmix64) used for every random draw in the
// harness and tests. Chosen over std::mt19937 so that a (seed, counter) pair fully
// determines a draw on any platform; the algorithm name is recorded in run metadata.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "qlg/matrix.hpp"

namespace qlg {

class SplitMix64 {
 public:
  static constexpr const char* kName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  Complex normal_complex() { return {normal(), normal()}; }

  /// Derive an independent stream; safe for per-site or per-draw splitting.
  SplitMix64 split() { return SplitMix64(next_u64() ^ 0x6a09e667f3bcc909ULL); }

 private:
  std::uint64_t state_;
};

/// Haar-ish random unitary from QR of a complex Ginibre draw. Test utility; the
/// distribution's exact measure is irrelevant, only that draws are generic.
inline Matrix random_unitary(int dim, SplitMix64& rng) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.normal_complex();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix column phases so the factorization is unique-ish (not required, tidy).
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline Vector random_state(int dim, SplitMix64& rng) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.normal_complex();
  v /= v.norm();
  return v;
}

}  // namespace qlg
