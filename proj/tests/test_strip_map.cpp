#include <random>

#include "doctest.h"
#include "zetalab/quadrature.hpp"
#include "zetalab/strip_map.hpp"

using namespace zetalab;
using namespace zetalab::strip;

namespace {

DiskPoint random_disk(std::mt19937_64& rng, double rmax = 0.999) {
  std::uniform_real_distribution<double> r(0.0, 1.0), a(0.0, 2 * kPi);
  return DiskPoint(std::polar(rmax * std::sqrt(r(rng)), a(rng)));
}

}  // namespace

TEST_CASE("theta sends bi to the origin and is an automorphism") {
  const MapParam b(0.5);
  CHECK(std::abs(theta(DiskPoint(0.0, 0.5), b).value()) < 1e-15);
  CHECK(std::abs(theta(DiskPoint(0.0, 0.0), b).value() - Complex(0.0, -0.5)) < 1e-15);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 1000; ++k) {
    const DiskPoint z = random_disk(rng);
    const DiskPoint t = theta(z, b);
    CHECK(std::abs(t.value()) < 1.0);
    CHECK(std::abs(theta_inverse(t, b).value() - z.value()) < 1e-12);
  }
}

TEST_CASE("phi at the centre and at bi") {
  const MapParam b(0.5);
  CHECK(std::abs(phi(DiskPoint(0.0, 0.5), b).value() - 0.25) < 1e-15);
  const Complex w0 = phi(DiskPoint(0.0, 0.0), b).value();
  CHECK(std::abs(w0.real() - quad::omega0(0.5)) < 1e-14);
  CHECK(std::abs(w0.imag()) < 1e-14);
}

TEST_CASE("phi lands in the open half strip, 1e4 random points") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> bd(0.01, 0.99);
  for (int k = 0; k < 10'000; ++k) {
    const MapParam b(bd(rng));
    const Complex w = phi(random_disk(rng), b).value();
    CHECK(w.real() > 0.0);
    CHECK(w.real() < 0.5);
  }
}

TEST_CASE("phi round trip") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> bd(0.01, 0.99);
  double worst = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const MapParam b(bd(rng));
    const DiskPoint z = random_disk(rng, 0.99);
    worst = std::max(worst, std::abs(phi_inverse(phi(z, b), b).value() - z.value()));
  }
  CHECK(worst < 1e-10);
  std::uniform_real_distribution<double> re(0.01, 0.49), im(-1.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const MapParam b(bd(rng));
    const HalfStripPoint w(re(rng), im(rng));
    CHECK(std::abs(phi(phi_inverse(w, b), b).value() - w.value()) < 1e-10);
  }
}

TEST_CASE("phi_inverse rejects the strip edges") {
  const MapParam b(0.3);
  CHECK_THROWS_AS(phi_inverse(HalfStripPoint(0.0, 1.0), b), DomainError);
  CHECK_THROWS_AS(phi_inverse(HalfStripPoint(0.5, 1.0), b), DomainError);
}

TEST_CASE("H equals the modulus of the preimage") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> bd(0.01, 0.99);
  for (int k = 0; k < 2000; ++k) {
    const MapParam b(bd(rng));
    const DiskPoint t = random_disk(rng);
    CHECK(std::abs(disk_modulus_H(t, b) - std::abs(theta_inverse(t, b).value())) < 1e-12);
  }
}

TEST_CASE("theta_from_omega agrees with theta") {
  const MapParam b(0.7);
  const DiskPoint z(0.2, -0.3);
  CHECK(std::abs(theta_from_omega(phi(z, b).value()) - theta(z, b).value()) < 1e-13);
}

TEST_CASE("phi(0; b) tends to 0 as b tends to 1") {
  const Complex w = phi(DiskPoint(0.0, 0.0), MapParam(1.0 - 1e-5)).value();
  CHECK(std::abs(w) < 1e-5);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(DiskPoint(0.8, 0.8), DomainError);
  CHECK_THROWS_AS(MapParam(0.0), DomainError);
  CHECK_THROWS_AS(MapParam(1.0), DomainError);
  CHECK_THROWS_AS(MapParam(std::nan("")), DomainError);
}

TEST_CASE("f_on_disk matches the shifted integral") {
  const MapParam b(0.9);
  const DiskPoint z(0.1, 0.2);
  const Complex direct = quad::f_shifted(phi(z, b), 1e-10).value;
  CHECK(std::abs(f_on_disk(z, b, 1e-10) - direct) < 1e-12);
  // at z = bi the value is F(3/4)
  CHECK(std::abs(f_on_disk(DiskPoint(0.0, 0.9), b, 1e-10) - 0.797888029465994) < 1e-9);
}
