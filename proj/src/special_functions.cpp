#include "zetalab/special_functions.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace zetalab::special {

namespace {

// B_{2k} / (2k (2k - 1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kShiftTarget = 15.0;

Complex stirling_log_gamma(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + kHalfLog2Pi + series;
}

void check_pole(Complex s) {
  const double nearest = std::round(s.real());
  if (nearest <= 0.0 && std::abs(s - Complex(nearest, 0.0)) < kPoleTol)
    throw PoleError("gamma: argument within pole tolerance of a non-positive integer");
}

}  // namespace

Complex log_gamma_unwrapped(Complex s) {
  require_finite(s, "gamma");
  check_pole(s);
  const int shift = s.real() < kShiftTarget ? static_cast<int>(std::ceil(kShiftTarget - s.real())) : 0;
  Complex correction = 0.0;
  for (int k = 0; k < shift; ++k) correction += std::log(s + static_cast<double>(k));
  return stirling_log_gamma(s + static_cast<double>(shift)) - correction;
}

Complex gamma(Complex s) {
  if (s.imag() == 0.0 && s.real() > 0.0) return {std::tgamma(s.real()), 0.0};
  return std::exp(log_gamma_unwrapped(s));
}

double gamma_abs_product(double alpha, double beta, std::int64_t n_terms) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("gamma_abs_product: alpha must lie in (0, 1)");
  if (n_terms < 1) throw DomainError("gamma_abs_product: n_terms must be >= 1");
  if (!std::isfinite(beta)) throw DomainError("gamma_abs_product: beta must be finite");
  const double b2 = beta * beta;
  // smallest terms first
  double log_sum = 0.0;
  for (std::int64_t k = n_terms - 1; k >= 0; --k) {
    const double a = static_cast<double>(k) + alpha;
    log_sum += std::log1p(b2 / (a * a));
  }
  return std::tgamma(alpha) * std::exp(-0.5 * log_sum);
}

EtaResult eta_with_bound(Complex s) {
  require_finite(s, "eta");
  const double sigma = s.real();
  if (!(sigma > 0.0)) throw DomainError("eta: requires Re(s) > 0");

  constexpr double kTarget = 1e-14;
  constexpr int kMaxTerms = 4000;
  const double log_rho = std::log(3.0 + std::sqrt(8.0));
  const double log_ratio = std::lgamma(sigma) - log_gamma_unwrapped(s).real();
  int n = static_cast<int>(std::ceil((std::log(2.0 / kTarget) + log_ratio) / log_rho));
  n = std::clamp(n, 1, kMaxTerms);

  // e_i = n (n+i-1)! 4^i / ((n-i)! (2i)!), normalized so e_n = 1; d_k = sum_{i<=k} e_i.
  std::vector<double> e(static_cast<std::size_t>(n) + 1);
  e[static_cast<std::size_t>(n)] = 1.0;
  for (int i = n - 1; i >= 0; --i) {
    const double num = (2.0 * i + 1.0) * (2.0 * i + 2.0);
    const double den = 4.0 * (static_cast<double>(n) + i) * (static_cast<double>(n) - i);
    e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i) + 1] * num / den;
  }
  // tail[k] = d_n - d_k
  std::vector<double> tail(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = n - 1; k >= 0; --k) tail[static_cast<std::size_t>(k)] = tail[static_cast<std::size_t>(k) + 1] + e[static_cast<std::size_t>(k) + 1];
  const double d_n = tail[0] + e[0];

  Complex sum = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double w = tail[static_cast<std::size_t>(k)] / d_n;
    const Complex term = w * std::exp(-s * std::log(static_cast<double>(k) + 1.0));
    sum += (k % 2 == 0) ? term : -term;
  }

  const double log_dn = n * log_rho - std::log(2.0);
  const double bound = std::exp(log_ratio - log_dn);
  return {sum, bound, n};
}

Complex eta(Complex s) { return eta_with_bound(s).value; }

Complex zeta_right_half(Complex s) {
  require_finite(s, "zeta");
  if (!(s.real() > 0.0)) throw DomainError("zeta: requires Re(s) > 0");
  if (std::abs(s - 1.0) < kPoleTol) throw PoleError("zeta: pole at s = 1");
  const Complex factor = 1.0 - std::exp((1.0 - s) * kLn2);
  return eta(s) / factor;
}

Complex zeta(const StripPoint& s) { return zeta_right_half(s.value()); }

double functional_equation_residual(const StripPoint& s) {
  const Complex z = s.value();
  const Complex lhs = zeta_right_half(1.0 - z);
  const Complex chi = gamma(z) * 2.0 * std::exp(-z * std::log(2.0 * kPi)) * std::cos(z * kPi / 2.0);
  return std::abs(lhs - chi * zeta(s));
}

}  // namespace zetalab::special
