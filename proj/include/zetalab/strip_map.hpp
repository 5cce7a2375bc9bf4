#pragma once

#include <cstdint>

#include "zetalab/common.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab::strip {

/// A point of the open unit disk.
class DiskPoint {
 public:
  explicit DiskPoint(Complex z) : z_(require_finite(z, "DiskPoint")) {
    if (!(std::abs(z) < 1.0)) throw DomainError("DiskPoint: |z| must be < 1");
  }
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}
  Complex value() const { return z_; }

 private:
  Complex z_;
};

/// The map parameter b in (0, 1).
class MapParam {
 public:
  explicit MapParam(double b) : b_(b) {
    if (!(b > 0.0 && b < 1.0)) throw DomainError("MapParam: b must lie in (0, 1)");
  }
  double value() const { return b_; }

 private:
  double b_;
};

// theta(z; b) = (z - bi) / (1 + z b i), a disk automorphism sending bi to 0.
DiskPoint theta(const DiskPoint& z, const MapParam& b);
DiskPoint theta_inverse(const DiskPoint& t, const MapParam& b);

/// phi(z; b) = 1/4 - (i / 2pi) Log[(1 + theta)/(1 - theta)], principal Log.
/// (1 + theta)/(1 - theta) lies in the right half plane, so Re(phi) is in (0, 1/2).
HalfStripPoint phi(const DiskPoint& z, const MapParam& b);

/// Inverse of phi. theta is recovered from psi = exp(2 pi i (omega - 1/4)) as
/// (psi - 1)/(psi + 1), then mapped back through theta_inverse.
/// Throws DomainError when Re(omega) is 0 or 1/2 (those go to |z| = 1).
DiskPoint phi_inverse(const HalfStripPoint& omega, const MapParam& b);

/// theta recovered from omega alone; b does not enter at this level.
Complex theta_from_omega(Complex omega);

/// H(theta; b) = sqrt((b^2 + |t|^2 + 2b Im t) / (1 + b^2 |t|^2 + 2b Im t)) = |theta_inverse(t, b)|.
double disk_modulus_H(const DiskPoint& t, const MapParam& b);

/// F_omega(phi(z; b)).
Complex f_on_disk(const DiskPoint& z, const MapParam& b, double tol, std::int64_t budget = quad::kDefaultEvalBudget);

}  // namespace zetalab::strip
