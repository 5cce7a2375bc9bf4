#include "zetalab/strip_map.hpp"

namespace zetalab::strip {

namespace {
constexpr Complex kI{0.0, 1.0};
}

DiskPoint theta(const DiskPoint& z, const MapParam& b) {
  const Complex zz = z.value();
  const double bb = b.value();
  return DiskPoint((zz - bb * kI) / (1.0 + zz * bb * kI));
}

DiskPoint theta_inverse(const DiskPoint& t, const MapParam& b) {
  const Complex tt = t.value();
  const double bb = b.value();
  return DiskPoint((tt + bb * kI) / (1.0 - tt * bb * kI));
}

HalfStripPoint phi(const DiskPoint& z, const MapParam& b) {
  const Complex t = theta(z, b).value();
  const Complex q = (1.0 + t) / (1.0 - t);
  const double re = 0.25 + std::arg(q) / (2.0 * kPi);
  const double im = -std::log(std::abs(q)) / (2.0 * kPi);
  return HalfStripPoint(re, im);
}

Complex theta_from_omega(Complex omega) {
  const Complex psi = std::exp(2.0 * kPi * kI * (omega - 0.25));
  return (psi - 1.0) / (psi + 1.0);
}

DiskPoint phi_inverse(const HalfStripPoint& omega, const MapParam& b) {
  const double re = omega.value().real();
  if (re <= 0.0 || re >= 0.5) throw DomainError("phi_inverse: Re(omega) must lie in the open interval (0, 1/2)");
  return theta_inverse(DiskPoint(theta_from_omega(omega.value())), b);
}

double disk_modulus_H(const DiskPoint& t, const MapParam& b) {
  const Complex tt = t.value();
  const double bb = b.value();
  const double mod2 = std::norm(tt);
  const double cross = 2.0 * bb * tt.imag();
  return std::sqrt((bb * bb + mod2 + cross) / (1.0 + bb * bb * mod2 + cross));
}

Complex f_on_disk(const DiskPoint& z, const MapParam& b, double tol, std::int64_t budget) {
  return quad::f_shifted(phi(z, b), tol, budget).value;
}

}  // namespace zetalab::strip
