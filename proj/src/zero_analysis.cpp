#include "zetalab/zero_analysis.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "zetalab/quadrature.hpp"
#include "zetalab/special_functions.hpp"

namespace zetalab::zeros {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPiE = 2.0 * kPi * 2.71828182845904523536028747135266;

struct ContourWalker {
  const AnalyticFn& fn;
  const WindingOptions& opt;
  std::int64_t evals = 0;

  Complex eval(Complex z) {
    if (++evals > opt.eval_budget) throw NonConvergence("winding_count: evaluation budget exhausted");
    const Complex v = fn(z);
    if (!is_finite(v)) throw NonConvergence("winding_count: non-finite function value on contour");
    if (std::abs(v) < opt.boundary_min_modulus)
      throw BoundaryZeroError("winding_count: |f| below boundary_min_modulus on the contour");
    return v;
  }

  double step(Complex za, Complex fa, Complex zb, Complex fb, int depth) {
    const double d = std::arg(fb / fa);
    if (std::abs(d) <= 0.5 * kPi) return d;
    if (depth >= opt.max_refine_depth) throw NonConvergence("winding_count: phase refinement depth exhausted");
    const Complex zm = 0.5 * (za + zb);
    const Complex fm = eval(zm);
    return step(za, fa, zm, fm, depth + 1) + step(zm, fm, zb, fb, depth + 1);
  }
};

int segments_for(double length, int min_segments, double per_unit) {
  return std::max(min_segments, static_cast<int>(std::ceil(length * per_unit)));
}

}  // namespace

RectangleRegion RectangleRegion::make(double re_min, double re_max, double im_min, double im_max) {
  if (!(re_min < re_max && im_min < im_max)) throw DomainError("RectangleRegion: need re_min < re_max and im_min < im_max");
  return {re_min, re_max, im_min, im_max};
}

int winding_count(const AnalyticFn& fn, const RectangleRegion& rect, int samples_per_side,
                  const WindingOptions& options) {
  if (samples_per_side < 1) throw DomainError("winding_count: samples_per_side must be >= 1");
  ContourWalker walker{fn, options};
  const std::array<Complex, 5> corners = {
      Complex(rect.re_min, rect.im_min), Complex(rect.re_max, rect.im_min), Complex(rect.re_max, rect.im_max),
      Complex(rect.re_min, rect.im_max), Complex(rect.re_min, rect.im_min)};

  double total = 0.0;
  Complex z_prev = corners[0];
  Complex f_prev = walker.eval(z_prev);
  const Complex f_start = f_prev;
  for (std::size_t side = 0; side < 4; ++side) {
    const Complex a = corners[side];
    const Complex b = corners[side + 1];
    const int n = segments_for(std::abs(b - a), samples_per_side, options.samples_per_unit);
    for (int k = 1; k <= n; ++k) {
      const Complex z = (side == 3 && k == n) ? corners[0] : a + (b - a) * (static_cast<double>(k) / n);
      const Complex f = (side == 3 && k == n) ? f_start : walker.eval(z);
      total += walker.step(z_prev, f_prev, z, f, 0);
      z_prev = z;
      f_prev = f;
    }
  }
  const double turns = total / (2.0 * kPi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6) throw NonConvergence("winding_count: accumulated phase is not a multiple of 2 pi");
  return static_cast<int>(rounded);
}

// ---------------------------------------------------------------------------
// Critical-line zeros

namespace {

struct ZeroSearch {
  double zero_tol;
  const ZeroSearchOptions& opt;
  AnalyticFn eta_fn = [](Complex s) { return special::eta(s); };
  CriticalZeroList out;

  int count(const RectangleRegion& r) { return winding_count(eta_fn, r, opt.min_samples_per_side, opt.winding); }

  // Split point offsets tried when a cut line runs through a zero.
  static constexpr std::array<double, 5> kCuts = {0.5, 0.4637, 0.5391, 0.4213, 0.5827};

  std::pair<RectangleRegion, RectangleRegion> split_height(const RectangleRegion& r, int parent, int& lo_n, int& hi_n) {
    for (double c : kCuts) {
      const double cut = r.im_min + c * r.height();
      const RectangleRegion lo{r.re_min, r.re_max, r.im_min, cut};
      const RectangleRegion hi{r.re_min, r.re_max, cut, r.im_max};
      try {
        lo_n = count(lo);
        hi_n = count(hi);
      } catch (const BoundaryZeroError&) {
        continue;
      }
      if (lo_n + hi_n != parent) throw NonConvergence("critical_line_zeros: child counts do not add up to the parent count");
      return {lo, hi};
    }
    throw NonConvergence("critical_line_zeros: every trial cut passes through a zero");
  }

  std::pair<RectangleRegion, RectangleRegion> split_width(const RectangleRegion& r, int parent, int& lo_n, int& hi_n) {
    for (double c : kCuts) {
      const double cut = r.re_min + c * r.width();
      const RectangleRegion lo{r.re_min, cut, r.im_min, r.im_max};
      const RectangleRegion hi{cut, r.re_max, r.im_min, r.im_max};
      try {
        lo_n = count(lo);
        hi_n = count(hi);
      } catch (const BoundaryZeroError&) {
        continue;
      }
      if (lo_n + hi_n != parent) throw NonConvergence("critical_line_zeros: child counts do not add up to the parent count");
      return {lo, hi};
    }
    throw NonConvergence("critical_line_zeros: every trial cut passes through a zero");
  }

  void record_on_line(const RectangleRegion& r) {
    double beta = r.center().imag();
    if (opt.polish) {
      const Complex s = polish_eta_zero(r.center());
      if (s.real() > r.re_min && s.real() < r.re_max && s.imag() > r.im_min && s.imag() < r.im_max) beta = s.imag();
    }
    out.betas.push_back(beta);
    out.certificates.push_back(r);
  }

  // Cells that stay centred on Re(s) = 1/2.
  void centred(const RectangleRegion& r, int n) {
    if (n == 0) return;
    const double half_width = 0.5 * r.width();
    if (r.height() >= zero_tol) {
      int lo_n = 0, hi_n = 0;
      auto [lo, hi] = split_height(r, n, lo_n, hi_n);
      centred(lo, lo_n);
      centred(hi, hi_n);
      return;
    }
    if (half_width >= zero_tol) {
      const double w = 0.5 * half_width;
      const RectangleRegion inner{0.5 - w, 0.5 + w, r.im_min, r.im_max};
      int inner_n = 0;
      try {
        inner_n = count(inner);
      } catch (const BoundaryZeroError&) {
        // a zero sits on the new vertical sides, off the critical line
        inner_n = -1;
      }
      if (inner_n == n) {
        centred(inner, n);
        return;
      }
      off_line_generic(r, n);
      return;
    }
    if (n > 1) throw MultiplicityAmbiguity("critical_line_zeros: final cell still encloses " + std::to_string(n) + " zeros");
    record_on_line(r);
  }

  void off_line_generic(const RectangleRegion& r, int n) {
    if (n == 0) return;
    const bool tall = r.height() / zero_tol >= r.width() / (2.0 * zero_tol);
    if (r.height() < zero_tol && r.width() < 2.0 * zero_tol) {
      if (n > 1) throw MultiplicityAmbiguity("critical_line_zeros: final cell still encloses " + std::to_string(n) + " zeros");
      if (r.re_min < 0.5 && r.re_max > 0.5 && std::abs(r.center().real() - 0.5) < zero_tol)
        record_on_line(r);
      else
        out.off_line.push_back(r.center());
      return;
    }
    int lo_n = 0, hi_n = 0;
    auto [lo, hi] = tall ? split_height(r, n, lo_n, hi_n) : split_width(r, n, lo_n, hi_n);
    off_line_generic(lo, lo_n);
    off_line_generic(hi, hi_n);
  }
};

}  // namespace

Complex polish_eta_zero(Complex s0) {
  constexpr double h = 1e-5;
  Complex s = s0;
  for (int it = 0; it < 12; ++it) {
    const Complex f = special::eta(s);
    const Complex df = (special::eta(s + h) - special::eta(s - h)) / (2.0 * h);
    if (std::abs(df) == 0.0) return s0;
    const Complex step = f / df;
    s -= step;
    if (!is_finite(s) || std::abs(s - s0) > 1e-2) return s0;
    if (std::abs(step) < 1e-15) break;
  }
  return s;
}

CriticalZeroList critical_line_zeros(double tau, double zero_tol, const ZeroSearchOptions& options) {
  if (!(tau > 0.0)) throw DomainError("critical_line_zeros: tau must be positive");
  if (!(zero_tol > 0.0)) throw DomainError("critical_line_zeros: zero_tol must be positive");
  const double m = options.strip_margin;
  ZeroSearch search{zero_tol, options, [](Complex s) { return special::eta(s); }, {}};
  search.out.tau = tau;

  // A zero exactly on the top edge: lift the edge, filter afterwards.
  double top = tau;
  int n = -1;
  for (int attempt = 0; attempt < 8 && n < 0; ++attempt) {
    try {
      n = search.count({m, 1.0 - m, 0.0, top});
    } catch (const BoundaryZeroError&) {
      top += 5.0 * kExclusionTol;
    }
  }
  if (n < 0) throw NonConvergence("critical_line_zeros: could not find a zero-free top edge");
  search.centred({m, 1.0 - m, 0.0, top}, n);

  CriticalZeroList out = std::move(search.out);
  std::vector<std::size_t> order(out.betas.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.betas[a] < out.betas[b]; });
  CriticalZeroList sorted;
  sorted.tau = tau;
  sorted.off_line = out.off_line;
  for (std::size_t i : order) {
    if (out.betas[i] > tau) continue;
    sorted.betas.push_back(out.betas[i]);
    sorted.certificates.push_back(out.certificates[i]);
  }
  return sorted;
}

double riemann_von_mangoldt(double T) {
  if (!(T >= kTwoPiE)) throw DomainError("riemann_von_mangoldt: requires T >= 2 pi e");
  return T / (2.0 * kPi) * std::log(T / kTwoPiE) + 0.875;
}

// ---------------------------------------------------------------------------
// Jensen / Titchmarsh

JensenResult jensen_check(const AnalyticFn& fn, std::span<const Complex> zeros, double R, int samples, double tol) {
  if (!(R > 0.0)) throw DomainError("jensen_check: R must be positive");
  if (samples < 3) throw DomainError("jensen_check: need at least 3 samples");
  const Complex f0 = fn(0.0);
  if (std::abs(f0) < tol) throw ZeroAtCenter("jensen_check: |f(0)| below tolerance");
  JensenResult r;
  r.lhs = std::log(std::abs(f0));
  for (const Complex& z : zeros) {
    if (std::abs(std::abs(z) - R) < tol) throw BoundaryZeroError("jensen_check: listed zero lies on |z| = R");
    r.lhs += std::log(R / std::abs(z));
  }
  double acc = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double angle = 2.0 * kPi * k / samples;
    acc += std::log(std::abs(fn(std::polar(R, angle))));
  }
  r.rhs = acc / samples;
  return r;
}

double titchmarsh_zero_bound(double M, double f0_abs, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("titchmarsh_zero_bound: delta must lie in (0, 1)");
  if (!(f0_abs > 0.0)) throw DomainError("titchmarsh_zero_bound: |f(0)| must be positive");
  if (f0_abs > M) throw DomainError("titchmarsh_zero_bound: |f(0)| exceeds the modulus bound M");
  return std::log(M / f0_abs) / std::log(1.0 / delta);
}

bool titchmarsh_zero_free(double M, double f0_abs, double delta) {
  titchmarsh_zero_bound(M, f0_abs, delta);  // domain checks
  return delta * M < f0_abs;
}

// ---------------------------------------------------------------------------
// Neutralizer and Rouche scan

Complex blaschke_L(Complex omega, std::span<const double> betas, double pole_tol) {
  Complex product = 1.0;
  for (double beta : betas) {
    const Complex d = omega - kI * beta;
    if (std::abs(d) < pole_tol) throw PoleProximity("blaschke_L: omega within pole_tol of i*beta_j");
    product *= std::conj(d) / d;
  }
  return product;
}

double triangle_margin(Complex f, Complex g) {
  const double af = std::abs(f);
  const double ag = std::abs(g);
  const double denom = af + ag + std::abs(f + g);
  if (denom == 0.0) return 0.0;
  const double half_angle = 0.5 * std::arg(f * std::conj(g));
  const double s = std::sin(half_angle);
  return 4.0 * af * ag * s * s / denom;
}

bool triangle_equality_condition(Complex w, Complex v, double tol) {
  return std::abs(w) + std::abs(v) - std::abs(w + v) < tol;
}

double collinearity_cross_term(Complex w, Complex v) { return w.real() * v.imag() - v.real() * w.imag(); }

double lambda_choice(double theta_abs, double epsilon, double nu, double quad_tol) {
  if (!(theta_abs > 0.0 && epsilon > 0.0 && nu > 0.0)) throw DomainError("lambda_choice: inputs must be positive");
  return (quad::m_star(0.5, quad_tol) + nu) / (theta_abs * epsilon);
}

namespace {

struct ScanPoint {
  Complex f;
  double normalized;  // |f| / |Gamma(s)|
  int neutralized_index;  // -1 when away from every i beta_j
};

ScanPoint evaluate_f(Complex omega, const std::vector<double>& betas, const RoucheOptions& opt) {
  const Complex s = omega + 0.5;
  const Complex gamma = special::gamma(s);
  int near = -1;
  for (std::size_t j = 0; j < betas.size(); ++j)
    if (std::abs(omega - kI * betas[j]) < opt.pole_tol) near = static_cast<int>(j);

  if (near < 0) {
    const Complex eta = special::eta(s);
    const Complex f = gamma * eta * blaschke_L(omega, betas, 0.0);
    return {f, std::abs(eta), -1};
  }

  // eta(s)/(omega - c) is analytic at c = i beta_j; take it from a ring of radius pole_tol.
  const Complex c = kI * betas[static_cast<std::size_t>(near)];
  const double r = opt.pole_tol;
  Complex quotient = 0.0;
  for (int k = 0; k < opt.ring_points; ++k) {
    const Complex zeta = c + std::polar(r, 2.0 * kPi * k / opt.ring_points);
    const Complex q = special::eta(zeta + 0.5) / (zeta - c);
    quotient += q * (zeta - c) / (zeta - omega);
  }
  quotient /= static_cast<double>(opt.ring_points);

  Complex others = 1.0;
  for (std::size_t j = 0; j < betas.size(); ++j) {
    if (static_cast<int>(j) == near) continue;
    const Complex d = omega - kI * betas[j];
    others *= std::conj(d) / d;
  }
  const Complex eta_times_factor = quotient * std::conj(omega - c);
  return {gamma * eta_times_factor * others, std::abs(eta_times_factor), near};
}

}  // namespace

RoucheScanResult rouche_scan(double tau, double lambda, double epsilon, int samples_per_side, double tol,
                             const RoucheOptions& options) {
  if (!(tau > 0.0)) throw DomainError("rouche_scan: tau must be positive");
  if (!(lambda > 0.0 && epsilon > 0.0)) throw DomainError("rouche_scan: lambda and epsilon must be positive");
  if (samples_per_side < 1) throw DomainError("rouche_scan: samples_per_side must be >= 1");

  RoucheScanResult res;
  res.lambda = lambda;
  res.epsilon = epsilon;

  CriticalZeroList zl = critical_line_zeros(tau + 2.0 * options.exclusion_tol, options.zero_tol);
  for (int guard = 0; guard < 100; ++guard) {
    const bool clash = std::any_of(zl.betas.begin(), zl.betas.end(),
                                   [&](double b) { return std::abs(b - tau) < options.exclusion_tol; });
    if (!clash) break;
    tau += 5.0 * options.exclusion_tol;
    res.tau_shifted = true;
    zl = critical_line_zeros(tau + 2.0 * options.exclusion_tol, options.zero_tol);
  }
  res.tau = tau;
  for (double b : zl.betas)
    if (b <= tau) res.betas.push_back(b);

  const double period = 2.0 * kPi / kLn2;
  for (double t = period; t <= tau; t += period) res.edge_factor_zeros.push_back(t);

  // Counter-clockwise: bottom, right, top, left (the critical line).
  std::vector<Complex> samples;
  auto add_side = [&](Complex a, Complex b) {
    const int n = std::max(samples_per_side, static_cast<int>(std::ceil(std::abs(b - a) * options.samples_per_unit)));
    for (int k = 0; k < n; ++k) samples.push_back(a + (b - a) * (static_cast<double>(k) / n));
  };
  add_side({0.0, 0.0}, {0.5, 0.0});
  add_side({0.5, 0.0}, {0.5, tau});
  add_side({0.5, tau}, {0.0, tau});
  add_side({0.0, tau}, {0.0, 0.0});
  for (double b : res.betas) samples.emplace_back(0.0, b);

  res.min_margin = std::numeric_limits<double>::infinity();
  res.min_normalized_f = std::numeric_limits<double>::infinity();
  res.neutralized.resize(res.betas.size());
  for (std::size_t j = 0; j < res.betas.size(); ++j) res.neutralized[j] = {res.betas[j], std::numeric_limits<double>::infinity()};

  for (const Complex& omega : samples) {
    const ScanPoint p = evaluate_f(omega, res.betas, options);
    const Complex g = lambda * (epsilon + omega);
    const double margin = triangle_margin(p.f, g);
    if (margin < res.min_margin) {
      res.min_margin = margin;
      res.argmin_omega = omega;
    }
    if (p.neutralized_index >= 0) {
      auto& slot = res.neutralized[static_cast<std::size_t>(p.neutralized_index)];
      slot.abs_f = std::min(slot.abs_f, std::abs(p.f));
      continue;
    }
    if (p.normalized < res.min_normalized_f) {
      res.min_normalized_f = p.normalized;
      res.argmin_normalized_f = omega;
    }
    if (p.normalized < options.boundary_min_modulus)
      throw ZeroOnBoundary("rouche_scan: f vanishes on the boundary of K(tau) away from the neutralized zeros");
  }
  res.boundary_samples = static_cast<std::int64_t>(samples.size());
  if (res.min_margin < -tol) throw NumericalError("rouche_scan: triangle margin below -tol");
  return res;
}

}  // namespace zetalab::zeros
