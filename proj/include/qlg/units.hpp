#pragma once

// Lattice units. Natural units are the default: hbar = 1 and c = ell/tau = 1.

#include <cmath>
#include <numbers>

namespace qlg {

struct GridUnits {
  double ell = 1.0;   // lattice spacing
  double tau = 1.0;   // time step
  double hbar = 1.0;

  static GridUnits natural() { return {}; }

  double c() const { return ell / tau; }

  /// The mass unit m0 is tied to the grid by hbar = m0 ell^2 / (2 pi tau); it is a
  /// consistency relation, not an independent knob.
  double mass_unit() const {
    return 2.0 * std::numbers::pi * hbar * tau / (ell * ell);
  }

  bool consistent_mass_unit(double m0, double tol = 1e-12) const {
    const double expect = m0 * ell * ell / (2.0 * std::numbers::pi * tau);
    return std::abs(hbar - expect) <= tol * (1.0 + std::abs(hbar));
  }
};

}  // namespace qlg
