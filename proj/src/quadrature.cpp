#include "zetalab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace zetalab::quad {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(center);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

struct Adaptive {
  Complex value;
  double error;
  std::int64_t evals;
};

// Globally adaptive bisection: always split the panel with the largest error.
template <class F>
Adaptive integrate(F&& f, double a, double b, double tol, std::int64_t budget) {
  constexpr std::int64_t kPerPanel = 15;
  std::priority_queue<Panel> panels;
  std::vector<Panel> frozen;  // panels too narrow to split further
  Panel first = gauss_kronrod(f, a, b);
  std::int64_t evals = kPerPanel;
  Complex total = first.value;
  double error = first.error;
  panels.push(first);

  while (error > tol) {
    if (panels.empty()) break;
    if (evals + 2 * kPerPanel > budget)
      throw ToleranceNotMet("quadrature: evaluation budget of " + std::to_string(budget) +
                            " exhausted with error estimate " + std::to_string(error));
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      frozen.push_back(worst);
      continue;
    }
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    evals += 2 * kPerPanel;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Resum to shed drift from the running updates.
  Complex value = 0.0;
  double err = 0.0;
  for (const Panel& p : frozen) {
    value += p.value;
    err += p.error;
  }
  while (!panels.empty()) {
    value += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  if (err > tol)
    throw ToleranceNotMet("quadrature: panels cannot be refined below error " + std::to_string(err));
  return {value, err, evals};
}

double fermi_weight(double x) {
  const double e = std::exp(-x);
  return e / (1.0 + e);
}

double tail_cut(double tol, int log_power) {
  return std::max(40.0, -std::log(tol / 10.0)) + 5.0 * log_power;
}

QuadratureEstimate segment(Complex s, int log_power, double lo, double hi, double tol, std::int64_t budget) {
  if (!(tol > 0.0)) throw DomainError("quadrature: tol must be positive");
  if (!(lo >= 0.0 && hi > lo)) throw DomainError("quadrature: need 0 <= lo < hi");
  const double sigma = s.real();
  const double t = s.imag();
  const double cut = tail_cut(tol, log_power);
  const double upper = std::min(hi, cut);

  QuadratureEstimate out{0.0, 0.0, 0};
  std::int64_t remaining = budget;

  if (lo < 1.0) {
    // x = u^{1/sigma}:  x^{s-1} dx = u^{i t / sigma} du / sigma
    const double u_lo = lo == 0.0 ? 0.0 : std::pow(lo, sigma);
    const double u_hi = std::pow(std::min(hi, 1.0), sigma);
    const double freq = t / sigma;
    auto head = [&](double u) -> Complex {
      const double log_u = std::log(u);
      const double log_x = log_u / sigma;
      double scale = fermi_weight(std::exp(log_x)) / sigma;
      for (int k = 0; k < log_power; ++k) scale *= log_x;
      return scale * std::polar(1.0, freq * log_u);
    };
    const double share = upper > 1.0 ? 0.5 : 0.9;
    const Adaptive r = integrate(head, u_lo, u_hi, share * tol, remaining);
    out.value += r.value;
    out.abs_error += r.error;
    out.n_evals += r.evals;
    remaining -= r.evals;
  }

  const double body_lo = std::max(lo, 1.0);
  if (upper > body_lo) {
    const Complex sm1 = s - 1.0;
    auto body = [&](double x) -> Complex {
      const double log_x = std::log(x);
      double scale = fermi_weight(x);
      for (int k = 0; k < log_power; ++k) scale *= log_x;
      return scale * std::exp(sm1 * log_x);
    };
    const Adaptive r = integrate(body, body_lo, upper, 0.4 * tol, remaining);
    out.value += r.value;
    out.abs_error += r.error;
    out.n_evals += r.evals;
  }

  if (hi > cut) {
    // int_X^inf x^{sigma-1} |log x|^k e^{-x} dx <= (log X)^k e^{-X} for sigma <= 1, X >= e^k
    out.abs_error += std::pow(std::log(cut), log_power) * std::exp(-cut);
  }
  return out;
}

}  // namespace

QuadratureEstimate fermi_mellin(const StripPoint& s, double tol, std::int64_t budget) {
  return segment(s.value(), 0, 0.0, std::numeric_limits<double>::infinity(), tol, budget);
}

QuadratureEstimate fermi_mellin_log_weighted(const StripPoint& s, int log_power, double tol, std::int64_t budget) {
  if (log_power < 0) throw DomainError("fermi_mellin_log_weighted: log_power must be >= 0");
  return segment(s.value(), log_power, 0.0, std::numeric_limits<double>::infinity(), tol, budget);
}

QuadratureEstimate fermi_mellin_segment(const StripPoint& s, double lo, double hi, double tol, std::int64_t budget) {
  return segment(s.value(), 0, lo, hi, tol, budget);
}

QuadratureEstimate f_shifted(const HalfStripPoint& omega, double tol, std::int64_t budget) {
  return fermi_mellin(omega.to_strip(), tol, budget);
}

double m_bound(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("m_bound: alpha must lie in (0, 1]");
  return 0.5 / alpha + kInvE;
}

namespace {

StripPoint real_point(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("m_star: alpha must lie in (0, 1]");
  return alpha == 1.0 ? StripPoint::upper_half(1.0) : StripPoint(alpha, 0.0);
}

}  // namespace

double m_star(double alpha, double tol, std::int64_t budget) {
  const QuadratureEstimate q = fermi_mellin(real_point(alpha), tol, budget);
  if (std::abs(q.value.imag()) >= tol) throw NumericalError("m_star: imaginary residue above tolerance");
  return q.value.real();
}

double m_star_derivative(double alpha, int order, double tol, std::int64_t budget) {
  if (order != 1 && order != 2) throw DomainError("m_star_derivative: order must be 1 or 2");
  if (!(alpha >= 0.5 && alpha <= 1.0)) throw DomainError("m_star_derivative: alpha must lie in [1/2, 1]");
  return fermi_mellin_log_weighted(real_point(alpha), order, tol, budget).value.real();
}

double omega0(double b) { return 0.25 - std::atan(b) / kPi; }

double omega0_derivative(double b) { return -1.0 / (kPi * (1.0 + b * b)); }

double g_of_b(double b, double tol, std::int64_t budget) {
  if (!(b > 0.0 && b < 1.0)) throw DomainError("g_of_b: b must lie in (0, 1)");
  return m_star(omega0(b) + 0.5, tol, budget);
}

BoundsSample bounds_sample(double alpha, double tol, std::int64_t budget) {
  BoundsSample row;
  row.alpha = alpha;
  row.m = m_bound(alpha);
  row.m_star = m_star(alpha, tol, budget);
  if (alpha >= 0.5) {
    row.m_star_d1 = m_star_derivative(alpha, 1, tol, budget);
    row.m_star_d2 = m_star_derivative(alpha, 2, tol, budget);
  } else {
    row.m_star_d1 = std::numeric_limits<double>::quiet_NaN();
    row.m_star_d2 = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

}  // namespace zetalab::quad
