#include "zetalab/claim_audit.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

#include "zetalab/quadrature.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/strip_map.hpp"
#include "zetalab/zero_analysis.hpp"

namespace zetalab::audit {

namespace {

constexpr double kE = 2.71828182845904523536028747135266;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = false;
  std::optional<Complex> observed;
  std::string note;
};

Outcome result(bool pass, double observed, std::string note = {}) { return {pass, Complex(observed, 0.0), std::move(note)}; }

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

// Random monic polynomial given by its zeros, all inside |z| < 0.9.
struct Poly {
  std::vector<Complex> zeros;
  Complex operator()(Complex z) const {
    Complex p = 1.0;
    for (const Complex& r : zeros) p *= z - r;
    return p;
  }
};

std::vector<Poly> random_polys(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(1, 4);
  std::uniform_real_distribution<double> radius(0.05, 0.9);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::vector<Poly> out;
  for (int i = 0; i < count; ++i) {
    Poly p;
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) p.zeros.push_back(std::polar(radius(rng), angle(rng)));
    out.push_back(p);
  }
  return out;
}

double max_on_unit_circle(const Poly& p) {
  constexpr int n = 8192;
  double m = 0.0;
  for (int k = 0; k < n; ++k) m = std::max(m, std::abs(p(std::polar(1.0, 2.0 * kPi * k / n))));
  return m;
}

// Shared state; expensive pieces are computed on first use.
class Context {
 public:
  explicit Context(const AuditConfig& c) : cfg(c) {}
  const AuditConfig& cfg;

  double qt(double claim_tol) const { return std::min(cfg.quad_tol, claim_tol / 100.0); }

  double m_star_half() {
    if (!m_half_) m_half_ = quad::m_star(0.5, 1e-12, cfg.eval_budget);
    return *m_half_;
  }

  double m_star_one() {
    if (!m_one_) m_one_ = quad::m_star(1.0, 1e-12, cfg.eval_budget);
    return *m_one_;
  }

  std::vector<double> alpha_grid() const {
    std::vector<double> g;
    for (int k = 0; k < cfg.alpha_count; ++k) g.push_back(0.5 + 0.5 * k / (cfg.alpha_count - 1));
    return g;
  }

  std::vector<double> b_grid() const {
    std::vector<double> g;
    for (int k = 1; k <= cfg.alpha_count; ++k) g.push_back(static_cast<double>(k) / (cfg.alpha_count + 1));
    return g;
  }

  std::vector<Complex> strip_grid() const {
    std::vector<Complex> g;
    for (int i = 0; i < cfg.strip_re_count; ++i) {
      const double re = cfg.strip_re_count == 1
                            ? cfg.strip_re_min
                            : cfg.strip_re_min + (cfg.strip_re_max - cfg.strip_re_min) * i / (cfg.strip_re_count - 1);
      for (int j = 0; j < cfg.strip_im_count; ++j) {
        const double im = cfg.strip_im_count == 1
                              ? cfg.strip_im_min
                              : cfg.strip_im_min + (cfg.strip_im_max - cfg.strip_im_min) * j / (cfg.strip_im_count - 1);
        g.emplace_back(re, im);
      }
    }
    return g;
  }

  // |F(s)| at random points of the closed upper half strip.
  struct UpperSample {
    Complex s;
    double abs_f;
  };
  const std::vector<UpperSample>& upper_samples() {
    if (upper_.empty()) {
      std::mt19937_64 rng(cfg.seed ^ 0x5eedULL);
      std::uniform_real_distribution<double> re(0.5, 1.0);
      std::uniform_real_distribution<double> im(-cfg.tau_max, cfg.tau_max);
      for (int k = 0; k < cfg.random_points; ++k) {
        const Complex s(re(rng), im(rng));
        upper_.push_back({s, std::abs(quad::fermi_mellin(StripPoint::upper_half(s), qt(1e-6), cfg.eval_budget).value)});
      }
    }
    return upper_;
  }

  const zeros::CriticalZeroList& zero_list() {
    if (!zeros_) {
      zeros_ = zeros::critical_line_zeros(cfg.tau_max, cfg.zero_tol);
    }
    return *zeros_;
  }

  int strip_count(double T) {
    static const zeros::AnalyticFn eta = [](Complex s) { return special::eta(s); };
    return zeros::winding_count(eta, zeros::RectangleRegion::make(0.05, 0.95, 0.0, T), 8);
  }

  const std::vector<Poly>& polys() {
    if (polys_.empty()) polys_ = random_polys(cfg.seed ^ 0x9017ULL, 100);
    return polys_;
  }

  const zeros::RoucheScanResult& scan() {
    if (!scan_) {
      const double lambda = zeros::lambda_choice(1.0, 0.1, 0.01);
      scan_ = zeros::rouche_scan(16.0, lambda, 0.1, 64, 1e-12);
    }
    return *scan_;
  }

 private:
  std::optional<double> m_half_, m_one_;
  std::vector<UpperSample> upper_;
  std::optional<zeros::CriticalZeroList> zeros_;
  std::vector<Poly> polys_;
  std::optional<zeros::RoucheScanResult> scan_;
};

struct Claim {
  ClaimRecord record;
  std::function<Outcome(Context&)> check;  // empty for flagged claims
};

using K = CheckKind;

Claim make(const char* id, const char* ref, const char* desc, K kind, double tol, std::function<Outcome(Context&)> check) {
  ClaimRecord r;
  r.id = id;
  r.paper_ref = ref;
  r.description = desc;
  r.check_kind = kind;
  r.tolerance = tol;
  return {r, std::move(check)};
}

Claim flag(const char* id, const char* ref, const char* desc, const char* note) {
  Claim c = make(id, ref, desc, K::flagged, 0.0, {});
  c.record.note = note;
  return c;
}

// Per-point bound |F(s)| <= bound(s) + tol over the upper-half sample.
Outcome upper_bound_check(Context& ctx, double tol, const std::function<double(Complex)>& bound) {
  double worst = -kInf;
  for (const auto& p : ctx.upper_samples()) worst = std::max(worst, p.abs_f - bound(p.s));
  return result(worst <= tol, worst, "max of |F(s)| - bound over the random sample");
}

std::vector<Claim> registry() {
  std::vector<Claim> c;

  c.push_back(make("EQ2", "Eq. (2)", "functional equation zeta(1-s) = Gamma(s) 2 (2pi)^-s cos(pi s/2) zeta(s)", K::equality,
                   1e-7, [](Context&) {
                     double worst = 0.0;
                     for (int i = 0; i < 7; ++i)
                       for (int j = 0; j < 7; ++j)
                         worst = std::max(worst, special::functional_equation_residual(StripPoint(0.2 + 0.1 * i, 5.0 * j)));
                     return result(worst < 1e-7, worst, "max residual on alpha in {0.2..0.8}, beta in {0..30}");
                   }));

  c.push_back(make("EQ3", "Eq. (3)", "|Gamma(a+ib)| equals |Gamma(a)| times the infinite product", K::equality, 1e-6,
                   [](Context&) {
                     double worst = 0.0;
                     for (int i = 0; i < 5; ++i)
                       for (int j = 0; j < 5; ++j) {
                         const double a = 0.1 + 0.2 * i, b = 2.5 * j;
                         const double prod = special::gamma_abs_product(a, b, 1'000'000);
                         worst = std::max(worst, std::abs(prod - std::abs(special::gamma(Complex(a, b)))));
                       }
                     return result(worst < 1e-6, worst, "product truncated at 1e6 factors, 5x5 grid");
                   }));

  c.push_back(make("EQ3-POS", "Eq. (3)", "|Gamma(s)| > 0 on the critical strip", K::inequality, 0.0, [](Context& ctx) {
    double least = kInf;
    for (int i = 1; i <= 9; ++i)
      for (int j = 0; j <= 10; ++j)
        least = std::min(least, std::abs(special::gamma(Complex(0.1 * i, 0.1 * j * ctx.cfg.tau_max))));
    return result(least > 0.0, least, "min |Gamma| on a 9x11 strip grid");
  }));

  c.push_back(make("EQ4", "Eq. (4)", "F(s) = Gamma(s) eta(s) on the strip grid", K::equality, 1e-8, [](Context& ctx) {
    double worst = 0.0;
    for (const Complex& s : ctx.strip_grid()) {
      const Complex f = quad::fermi_mellin(StripPoint(s), ctx.qt(1e-8), ctx.cfg.eval_budget).value;
      worst = std::max(worst, std::abs(f - special::gamma(s) * special::eta(s)));
    }
    return result(worst < 1e-8, worst, "max |F - Gamma eta|");
  }));

  c.push_back(make("EQ6", "Eq. (6), Eq. (7)", "|F(s)| <= M(Re s) on the open strip", K::inequality, 1e-6, [](Context& ctx) {
    std::mt19937_64 rng(ctx.cfg.seed ^ 0x6ULL);
    std::uniform_real_distribution<double> re(0.05, 0.95);
    std::uniform_real_distribution<double> im(-ctx.cfg.tau_max, ctx.cfg.tau_max);
    double worst = -kInf;
    for (int k = 0; k < ctx.cfg.random_points; ++k) {
      const StripPoint s(re(rng), im(rng));
      const double f = std::abs(quad::fermi_mellin(s, ctx.qt(1e-6), ctx.cfg.eval_budget).value);
      worst = std::max(worst, f - quad::m_bound(s.re()));
    }
    return result(worst <= 1e-6, worst, "max of |F| - M(alpha), Re(s) in [0.05, 0.95]");
  }));

  c.push_back(make("EQ7", "Eq. (7), Eq. (5A)", "M(alpha) = 1/(2 alpha) + 1/e agrees with the unsimplified bound and decreases",
                   K::equality, 1e-12, [](Context&) {
                     double worst = 0.0;
                     bool decreasing = true;
                     double prev = kInf;
                     for (int k = 1; k < 100; ++k) {
                       const double a = k / 100.0;
                       const double raw = 1.0 / (a * (kE + 1.0)) + (0.5 - 1.0 / (kE + 1.0)) / a + kInvE;
                       const double m = quad::m_bound(a);
                       worst = std::max(worst, std::abs(raw - m));
                       decreasing = decreasing && m < prev;
                       prev = m;
                     }
                     return result(worst < 1e-12 && decreasing, worst, "max deviation on alpha = 0.01..0.99");
                   }));

  c.push_back(make("EQ8A", "Eq. (8a), Eq. (6A)", "|F(s)| < 1 + 1/e = 1.36788 on Re(s) in [1/2, 1]", K::inequality, 1e-4,
                   [](Context& ctx) {
                     const double m_half = quad::m_bound(0.5);
                     double sup = 0.0;
                     for (const auto& p : ctx.upper_samples()) sup = std::max(sup, p.abs_f);
                     const bool quoted = std::abs(m_half - 1.36788) < 1e-4;
                     return result(quoted && sup < m_half, sup, "max |F| over the sample; M(1/2) = " + num(m_half));
                   }));

  c.push_back(make("EQ8B", "Eq. (8b)", "|F(s)| <= F(1/2) < M(1/2) on the upper half strip", K::inequality, 1e-6,
                   [](Context& ctx) {
                     const double f_half = ctx.m_star_half();
                     Outcome o = upper_bound_check(ctx, 1e-6, [&](Complex) { return f_half; });
                     o.pass = o.pass && f_half < quad::m_bound(0.5);
                     return o;
                   }));

  c.push_back(make("EQ8C", "Eq. (8c)", "F(1/2) > 0", K::inequality, 0.0, [](Context& ctx) {
    const double v = ctx.m_star_half();
    return result(v > 0.0, v);
  }));

  c.push_back(make("EQ9", "Eq. (9)", "|F(s)| <= M*(Re s)", K::inequality, 1e-6, [](Context& ctx) {
    return upper_bound_check(ctx, 1e-6, [&](Complex s) {
      return quad::m_star(s.real(), ctx.qt(1e-6), ctx.cfg.eval_budget);
    });
  }));

  c.push_back(make("EQ10B", "Eq. (10b)", "M*(1/2) < M(1/2) = 1 + 1/e", K::inequality, 0.0, [](Context& ctx) {
    const double gap = quad::m_bound(0.5) - ctx.m_star_half();
    return result(gap > 0.0, gap, "M(1/2) - M*(1/2)");
  }));

  c.push_back(make("EQ10C", "Eq. (10c)", "dM*/dalpha < 0 on [1/2, 1]", K::inequality, 0.0, [](Context& ctx) {
    double most = -kInf;
    for (double a : ctx.alpha_grid())
      most = std::max(most, quad::m_star_derivative(a, 1, ctx.qt(1e-6), ctx.cfg.eval_budget));
    return result(most < 0.0, most, "max first derivative on the alpha grid");
  }));

  c.push_back(make("EQ10D", "Eq. (10d)", "d2M*/dalpha2 > 0 on [1/2, 1]", K::inequality, 0.0, [](Context& ctx) {
    double least = kInf;
    for (double a : ctx.alpha_grid())
      least = std::min(least, quad::m_star_derivative(a, 2, ctx.qt(1e-6), ctx.cfg.eval_budget));
    return result(least > 0.0, least, "min second derivative on the alpha grid");
  }));

  c.push_back(make("EQ11B", "Eq. (11b), Lemma 2", "M*(alpha) lies below the chord between 1/2 and 1", K::inequality, 1e-8,
                   [](Context& ctx) {
                     std::mt19937_64 rng(ctx.cfg.seed ^ 0x11bULL);
                     std::uniform_real_distribution<double> tdist(0.0, 1.0);
                     const double a = ctx.m_star_half(), b = ctx.m_star_one();
                     double worst = -kInf;
                     for (int k = 0; k < 100; ++k) {
                       const double t = tdist(rng);
                       const double alpha = 0.5 * t + (1.0 - t);
                       worst = std::max(worst, quad::m_star(alpha, ctx.qt(1e-8), ctx.cfg.eval_budget) - (t * a + (1.0 - t) * b));
                     }
                     return result(worst <= 1e-8, worst, "max of M*(alpha) - chord over 100 random t");
                   }));

  c.push_back(make("EQ12A", "Eq. (12a)", "M*(1/2) > M*(1)", K::inequality, 0.0, [](Context& ctx) {
    const double gap = ctx.m_star_half() - ctx.m_star_one();
    return result(gap > 0.0, gap, "M*(1/2) - M*(1)");
  }));

  c.push_back(make("EQ12B", "Eq. (12b)", "M*(alpha) strictly decreasing and <= M*(1/2) on [1/2, 1]", K::monotonicity, 1e-8,
                   [](Context& ctx) {
                     double prev = kInf, top = -kInf;
                     bool decreasing = true;
                     for (double a : ctx.alpha_grid()) {
                       const double m = quad::m_star(a, ctx.qt(1e-8), ctx.cfg.eval_budget);
                       decreasing = decreasing && m < prev;
                       prev = m;
                       top = std::max(top, m - ctx.m_star_half());
                     }
                     return result(decreasing && top <= 1e-8, top, "max of M*(alpha) - M*(1/2) on the grid");
                   }));

  c.push_back(make("EQ13A", "Eq. (13a)", "M*(1/2) = 1.07215 < 1.36788", K::equality, 1e-4, [](Context& ctx) {
    const double v = ctx.m_star_half();
    return result(std::abs(v - 1.07215) < 1e-4 && v < 1.36788, v);
  }));

  c.push_back(make("EQ13B", "Eq. (13b)", "M*(1) = log 2 = 0.69315", K::equality, 1e-8, [](Context& ctx) {
    const double v = ctx.m_star_one();
    return result(std::abs(v - kLn2) < 1e-8 && std::abs(v - 0.69315) < 1e-4, v);
  }));

  c.push_back(make("EQ14", "Eq. (14)", "M*(alpha) <= chord <= M*(1/2)", K::inequality, 1e-8, [](Context& ctx) {
    std::mt19937_64 rng(ctx.cfg.seed ^ 0x14ULL);
    std::uniform_real_distribution<double> tdist(0.0, 1.0);
    const double a = ctx.m_star_half(), b = ctx.m_star_one();
    double worst = -kInf;
    for (int k = 0; k < 100; ++k) {
      const double t = tdist(rng);
      const double chord = t * a + (1.0 - t) * b;
      const double m = quad::m_star(0.5 * t + (1.0 - t), ctx.qt(1e-8), ctx.cfg.eval_budget);
      worst = std::max({worst, m - chord, chord - a});
    }
    return result(worst <= 1e-8, worst, "max violation of either inequality");
  }));

  c.push_back(make("EQ15A", "Eq. (15)", "dM*/dalpha at 1/2 = -1.76259", K::equality, 1e-4, [](Context& ctx) {
    const double v = quad::m_star_derivative(0.5, 1, ctx.qt(1e-10), ctx.cfg.eval_budget);
    return result(std::abs(v + 1.76259) < 1e-4, v);
  }));

  c.push_back(make("EQ15B", "Eq. (15)", "dM*/dalpha at 1 = -(log 2)^2 / 2 = -0.240227", K::equality, 1e-6, [](Context& ctx) {
    const double v = quad::m_star_derivative(1.0, 1, ctx.qt(1e-10), ctx.cfg.eval_budget);
    const double exact = -0.5 * kLn2 * kLn2;
    return result(std::abs(v + 0.240227) < 1e-6 && std::abs(v - exact) < 1e-8, v);
  }));

  c.push_back(make("EQ16", "Eq. (16), Eq. (28b)", "|F(s)| <= M*(1/2) on the upper half strip", K::inequality, 1e-6,
                   [](Context& ctx) {
                     const double bound = ctx.m_star_half();
                     return upper_bound_check(ctx, 1e-6, [&](Complex) { return bound; });
                   }));

  c.push_back(make("EQ17B", "Eq. (17b)", "(1 - 2^(1-s)) Gamma(s) != 0 on the open strip", K::inequality, 0.0, [](Context& ctx) {
    double least = kInf;
    for (int i = 1; i <= 9; ++i)
      for (int j = 0; j <= 100; ++j) {
        const Complex s(0.1 * i, 0.01 * j * ctx.cfg.tau_max);
        least = std::min(least, std::abs((1.0 - std::pow(2.0, 1.0 - s)) * special::gamma(s)));
      }
    return result(least > 0.0, least,
                  "min modulus on a 9x101 grid; the factor 1 - 2^(1-s) does vanish at Re(s) = 1, Im(s) = 2 pi k / log 2");
  }));

  c.push_back(make("EQ17D", "Eq. (17d)", "zeta(s) = 0 exactly where F(s) = 0 in the strip", K::equality, 1e-8,
                   [](Context& ctx) {
                     double worst = 0.0;
                     for (double beta : ctx.zero_list().betas) {
                       const Complex s(0.5, beta);
                       worst = std::max({worst, std::abs(special::zeta(StripPoint(s))), std::abs(special::eta(s))});
                     }
                     // away from the zeros neither vanishes
                     double least = kInf;
                     for (const Complex& s : ctx.strip_grid()) {
                       if (std::abs(s.real() - 0.5) < 1e-3) continue;
                       least = std::min(least, std::abs(special::eta(s)));
                     }
                     return result(worst < 1e-8 && least > 1e-8, worst,
                                   "max |zeta|, |eta| at located zeros; F = Gamma eta with Gamma nonzero (EQ4, EQ3-POS)");
                   }));

  c.push_back(make("EQ18", "Eq. (18)", "located zeros up to tau_max all lie on Re(s) = 1/2 within zero_tol", K::count, 0.0,
                   [](Context& ctx) {
                     const auto& zl = ctx.zero_list();
                     bool ok = zl.off_line.empty();
                     for (const auto& cell : zl.certificates)
                       ok = ok && cell.width() < 2.0 * ctx.cfg.zero_tol + 1e-15 && cell.re_min < 0.5 && cell.re_max > 0.5;
                     const int total = ctx.strip_count(ctx.cfg.tau_max);
                     ok = ok && total == static_cast<int>(zl.betas.size());
                     return result(ok, static_cast<double>(zl.betas.size()),
                                   "zeros on the line vs winding count " + std::to_string(total) +
                                       " (finite-height evidence only)");
                   }));

  c.push_back(make("EQ19A", "Eq. (19a), Lemma 3", "Jensen formula on random polynomials, R = 1", K::equality, 1e-8,
                   [](Context& ctx) {
                     double worst = 0.0;
                     for (const Poly& p : ctx.polys()) {
                       const auto j = zeros::jensen_check(std::cref(p), p.zeros, 1.0, 2048);
                       worst = std::max(worst, std::abs(j.lhs - j.rhs));
                     }
                     return result(worst < 1e-8, worst, "max |lhs - rhs| over 100 polynomials");
                   }));

  c.push_back(make("EQ19B", "Eq. (19b)", "zero-free Jensen form for F on the disk, b = 0.9, R = 0.95", K::equality, 1e-4,
                   [](Context& ctx) {
                     const strip::MapParam b(0.9);
                     const double qt = ctx.qt(1e-4);
                     zeros::AnalyticFn f = [&](Complex z) { return strip::f_on_disk(strip::DiskPoint(z), b, qt, ctx.cfg.eval_budget); };
                     const auto j = zeros::jensen_check(f, {}, 0.95, 512);
                     return result(std::abs(j.lhs - j.rhs) < 1e-4, std::abs(j.lhs - j.rhs), "|lhs - rhs|");
                   }));

  c.push_back(make("EQ20A", "Eq. (20a), Lemma 4", "zero count in |z| <= delta never exceeds the bound", K::count, 0.0,
                   [](Context& ctx) {
                     int violations = 0;
                     for (const Poly& p : ctx.polys()) {
                       const double M = max_on_unit_circle(p);
                       const double f0 = std::abs(p(0.0));
                       for (double delta : {0.5, 0.7, 0.9}) {
                         const double bound = zeros::titchmarsh_zero_bound(M, f0, delta);
                         const auto n = std::count_if(p.zeros.begin(), p.zeros.end(), [&](Complex z) { return std::abs(z) <= delta; });
                         if (static_cast<double>(n) > bound + 1e-12) ++violations;
                       }
                     }
                     return result(violations == 0, violations, "violations over 100 polynomials x 3 deltas");
                   }));

  c.push_back(make("EQ20C", "Eq. (20b), Eq. (20c), Eq. (20d)", "bound < 1 if and only if delta M < |f(0)|", K::equality, 0.0,
                   [](Context& ctx) {
                     std::mt19937_64 rng(ctx.cfg.seed ^ 0x20cULL);
                     std::uniform_real_distribution<double> u(0.01, 0.99);
                     int mismatches = 0;
                     for (int k = 0; k < 10'000; ++k) {
                       const double M = 1.0 + 9.0 * u(rng), f0 = M * u(rng), delta = u(rng);
                       const bool lt1 = zeros::titchmarsh_zero_bound(M, f0, delta) < 1.0;
                       if (lt1 != zeros::titchmarsh_zero_free(M, f0, delta)) ++mismatches;
                     }
                     return result(mismatches == 0, mismatches, "mismatches over 1e4 random triples");
                   }));

  c.push_back(make("EQ20D", "Eq. (20d)", "no polynomial zero inside |z| <= delta when delta M < |f(0)|", K::count, 0.0,
                   [](Context& ctx) {
                     int violations = 0;
                     for (const Poly& p : ctx.polys()) {
                       const double M = max_on_unit_circle(p);
                       const double f0 = std::abs(p(0.0));
                       for (double delta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                         if (!zeros::titchmarsh_zero_free(M, f0, delta)) continue;
                         for (const Complex& z : p.zeros)
                           if (std::abs(z) <= delta) ++violations;
                       }
                     }
                     return result(violations == 0, violations, "zeros found in disks declared zero-free");
                   }));

  c.push_back(make("EQ20E", "Eq. (20e), Eq. (20f)", "|f(0)| <= M, so delta < |f(0)|/M <= 1 is consistent", K::inequality,
                   0.0, [](Context& ctx) {
                     double worst = -kInf;
                     for (const Poly& p : ctx.polys()) worst = std::max(worst, std::abs(p(0.0)) / max_on_unit_circle(p));
                     return result(worst <= 1.0, worst, "max |p(0)| / M");
                   }));

  c.push_back(make("EQ25A", "Eq. (25a)", "phi(0; b) is real and equals 1/4 + Arg[(1-bi)/(1+bi)]/(2 pi)", K::equality, 1e-12,
                   [](Context& ctx) {
                     double worst = 0.0;
                     for (double b : ctx.b_grid()) {
                       const Complex w = strip::phi(strip::DiskPoint(0.0, 0.0), strip::MapParam(b)).value();
                       const double expect = 0.25 + std::arg(Complex(1.0, -b) / Complex(1.0, b)) / (2.0 * kPi);
                       worst = std::max({worst, std::abs(w.imag()), std::abs(w.real() - expect),
                                         std::abs(w.real() - quad::omega0(b))});
                     }
                     return result(worst < 1e-12, worst);
                   }));

  c.push_back(make("EQ25B", "Eq. (25b)", "phi(0; b) -> 0 as b -> 1", K::limit, 1e-5, [](Context&) {
    const double v = std::abs(strip::phi(strip::DiskPoint(0.0, 0.0), strip::MapParam(1.0 - 1e-5)).value());
    return result(v < 1e-5, v, "|phi(0; 1 - 1e-5)|");
  }));

  c.push_back(make("EQ26A", "Eq. (26a)", "Re phi(z; b) in (0, 1/2) on the disk", K::inequality, 0.0, [](Context& ctx) {
    std::mt19937_64 rng(ctx.cfg.seed ^ 0x26aULL);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int outside = 0;
    double closest = kInf;
    for (int k = 0; k < 10'000; ++k) {
      const Complex z = std::polar(0.999 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
      const double b = 0.001 + 0.998 * u(rng);
      const double re = strip::phi(strip::DiskPoint(z), strip::MapParam(b)).value().real();
      if (!(re > 0.0 && re < 0.5)) ++outside;
      closest = std::min({closest, re, 0.5 - re});
    }
    return result(outside == 0, closest, std::to_string(outside) + " of 1e4 outside; observed = min distance to the edges");
  }));

  c.push_back(make("EQ26B", "Eq. (26b)", "Arg[(1 + theta)/(1 - theta)] in (-pi/2, pi/2)", K::inequality, 0.0,
                   [](Context& ctx) {
                     std::mt19937_64 rng(ctx.cfg.seed ^ 0x26bULL);
                     std::uniform_real_distribution<double> u(0.0, 1.0);
                     double largest = 0.0;
                     for (int k = 0; k < 10'000; ++k) {
                       const Complex z = std::polar(0.999 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
                       const double b = 0.001 + 0.998 * u(rng);
                       const Complex t = strip::theta(strip::DiskPoint(z), strip::MapParam(b)).value();
                       largest = std::max(largest, std::abs(std::arg((1.0 + t) / (1.0 - t))));
                     }
                     return result(largest < 0.5 * kPi, largest, "max |Arg|");
                   }));

  c.push_back(make("EQ28A", "Eq. (28a)", "F on the disk at z = 0 tends to M*(1/2) as b -> 1", K::limit, 1e-4,
                   [](Context& ctx) {
                     const Complex v = strip::f_on_disk(strip::DiskPoint(0.0, 0.0), strip::MapParam(1.0 - 1e-6), ctx.qt(1e-4),
                                                        ctx.cfg.eval_budget);
                     const double gap = std::abs(v - ctx.m_star_half());
                     return result(gap < 1e-4, gap, "|F(phi(0; 1 - 1e-6)) - M*(1/2)|");
                   }));

  c.push_back(make("EQ28B", "Eq. (28b)", "|F(phi(z; b))| <= M*(1/2) on the disk", K::inequality, 1e-6, [](Context& ctx) {
    std::mt19937_64 rng(ctx.cfg.seed ^ 0x28bULL);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double bound = ctx.m_star_half();
    double worst = -kInf;
    for (int k = 0; k < ctx.cfg.random_points; ++k) {
      const Complex z = std::polar(0.99 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
      const double b = 0.01 + 0.98 * u(rng);
      const Complex f = strip::f_on_disk(strip::DiskPoint(z), strip::MapParam(b), ctx.qt(1e-6), ctx.cfg.eval_budget);
      worst = std::max(worst, std::abs(f) - bound);
    }
    return result(worst <= 1e-6, worst, "max of |F| - M*(1/2)");
  }));

  c.push_back(make("EQ30C", "Eq. (30c)", "G(b) <= M*(1/2) on (0, 1)", K::inequality, 1e-8, [](Context& ctx) {
    double worst = -kInf;
    for (double b : ctx.b_grid()) worst = std::max(worst, quad::g_of_b(b, ctx.qt(1e-8), ctx.cfg.eval_budget) - ctx.m_star_half());
    return result(worst <= 1e-8, worst, "max of G(b) - M*(1/2)");
  }));

  c.push_back(make("EQ31", "Eq. (31)", "G(b) increasing: G' < 0 at omega0, d omega0/db < 0", K::monotonicity, 0.0,
                   [](Context& ctx) {
                     double prev = -kInf, least_step = kInf;
                     bool ok = true;
                     for (double b : ctx.b_grid()) {
                       const double g = quad::g_of_b(b, ctx.qt(1e-8), ctx.cfg.eval_budget);
                       least_step = std::min(least_step, g - prev);
                       prev = g;
                       ok = ok && quad::omega0_derivative(b) < 0.0 &&
                            quad::m_star_derivative(quad::omega0(b) + 0.5, 1, ctx.qt(1e-6), ctx.cfg.eval_budget) < 0.0;
                     }
                     return result(ok && least_step > 0.0, least_step, "smallest consecutive increase of G on the b grid");
                   }));

  c.push_back(flag("EQ32", "Eq. (32)", "d omega0/db written through a Dirac Delta of a complex argument",
                   "Delta(.) of a complex argument has no finite numerical value; d omega0/db = -1/(pi (1 + b^2)) is "
                   "checked separately under EQ31"));

  c.push_back(make("EQ33A", "Eq. (33a)", "for each delta some b has delta < G(b)/M*(1/2) <= 1", K::inequality, 0.0,
                   [](Context& ctx) {
                     int missing = 0;
                     for (double delta : {0.5, 0.9, 0.99, 0.999, 0.9999}) {
                       bool found = false;
                       for (int k = 1; k <= 10 && !found; ++k) {
                         const double b = 1.0 - std::pow(10.0, -k);
                         const double ratio = quad::g_of_b(b, ctx.qt(1e-8), ctx.cfg.eval_budget) / ctx.m_star_half();
                         found = delta < ratio && ratio <= 1.0 + 1e-12;
                       }
                       if (!found) ++missing;
                     }
                     return result(missing == 0, missing, "deltas without a witness b = 1 - 10^-k");
                   }));

  c.push_back(make("EQ33B", "Eq. (33b)", "G(b)/M*(1/2) -> 1 as b -> 1", K::limit, 1e-4, [](Context& ctx) {
    const double ratio = quad::g_of_b(1.0 - 1e-6, ctx.qt(1e-4), ctx.cfg.eval_budget) / ctx.m_star_half();
    return result(std::abs(ratio - 1.0) < 1e-4, ratio);
  }));

  c.push_back(flag("EQ34G-DELTA", "Eq. (34g)", "first-order term of G(b) carrying Delta(-i)",
                   "Delta(-i), the Dirac delta at a complex point, is not a number; the true slope is "
                   "G'(1) = -M*'(1/2)/(2 pi) = 0.2805"));

  c.push_back(make("EQ34H", "Eq. (34h)", "H(theta; b) equals the modulus of the preimage z", K::equality, 1e-12,
                   [](Context& ctx) {
                     std::mt19937_64 rng(ctx.cfg.seed ^ 0x34ULL);
                     std::uniform_real_distribution<double> u(0.0, 1.0);
                     double worst = 0.0;
                     for (int k = 0; k < 10'000; ++k) {
                       const strip::DiskPoint t(std::polar(0.999 * std::sqrt(u(rng)), 2.0 * kPi * u(rng)));
                       const strip::MapParam b(0.001 + 0.998 * u(rng));
                       worst = std::max(worst, std::abs(strip::disk_modulus_H(t, b) - std::abs(strip::theta_inverse(t, b).value())));
                     }
                     return result(worst < 1e-12, worst);
                   }));

  c.push_back(make("EQ34I", "Eq. (34i)", "dH/db at b = 1 equals 2 (1 - |theta|^2)/(1 + |theta|^2 + 2 Im theta)", K::equality,
                   1e-4, [](Context& ctx) {
                     std::mt19937_64 rng(ctx.cfg.seed ^ 0x34aULL);
                     std::uniform_real_distribution<double> u(0.0, 1.0);
                     constexpr double h = 1e-7;
                     double worst = 0.0, ratio = 0.0;
                     for (int k = 0; k < 100; ++k) {
                       const strip::DiskPoint t(std::polar(0.9 * std::sqrt(u(rng)), 2.0 * kPi * u(rng)));
                       const Complex tv = t.value();
                       const double r2 = std::norm(tv);
                       const double claimed = 2.0 * (1.0 - r2) / (1.0 + r2 + 2.0 * tv.imag());
                       // H(theta; 1) = 1; one-sided difference from inside the parameter range
                       const double slope = (1.0 - strip::disk_modulus_H(t, strip::MapParam(1.0 - h))) / h;
                       const double err = std::abs(claimed - slope) / std::abs(slope);
                       if (err > worst) {
                         worst = err;
                         ratio = claimed / slope;
                       }
                     }
                     return result(worst < 1e-4, ratio,
                                   "observed = claimed / numerical slope; the slope is (1 - |theta|^2)/(1 + |theta|^2 + 2 Im theta), "
                                   "the claimed coefficient carries an extra factor 2");
                   }));

  c.push_back(flag("EQ34J", "Eq. (34j)", "linearised bound on H containing Delta(-i)",
                   "inherits the Delta(-i) term of the G(b) expansion; no finite numerical reading"));

  c.push_back(flag("EQ34K", "Eq. (34k), footnote 11", "inequality with Delta(-i) ~ 4.66920",
                   "the value 4.66920 attributed to Delta(-i) cannot be reproduced; the Dirac delta has no value at -i"));

  c.push_back(make("EQ42B", "Eq. (42b)", "|L(omega)| = 1 away from the poles i beta_j", K::equality, 1e-12, [](Context& ctx) {
    std::mt19937_64 rng(ctx.cfg.seed ^ 0x42bULL);
    std::uniform_real_distribution<double> re(0.0, 0.5), im(0.0, 50.0);
    std::uniform_int_distribution<int> count(0, 10);
    double worst = 0.0;
    int evaluated = 0;
    while (evaluated < 10'000) {
      std::vector<double> betas(static_cast<std::size_t>(count(rng)));
      for (double& b : betas) b = im(rng);
      const Complex w(re(rng), im(rng));
      try {
        worst = std::max(worst, std::abs(std::abs(zeros::blaschke_L(w, betas)) - 1.0));
        ++evaluated;
      } catch (const zeros::PoleProximity&) {
      }
    }
    return result(worst < 1e-12, worst, "max ||L| - 1| over 1e4 pairs");
  }));

  c.push_back(make("EQ42C", "Eq. (42c)", "F_omega(i beta_j) = 0 at the located zeros", K::equality, 1e-4, [](Context& ctx) {
    double worst = 0.0;
    for (double beta : ctx.zero_list().betas) worst = std::max(worst, std::abs(special::eta(Complex(0.5, beta))));
    return result(worst < ctx.cfg.zero_tol, worst,
                  "max |eta(1/2 + i beta_j)| over " + std::to_string(ctx.zero_list().betas.size()) + " zeros");
  }));

  c.push_back(make("EQ43", "Eq. (43)", "|F_omega L| > 0 on the boundary of K(tau), tau = 16", K::inequality, 0.0,
                   [](Context& ctx) {
                     const auto& scan = ctx.scan();
                     double least = kInf;
                     for (const auto& n : scan.neutralized) least = std::min(least, n.abs_f);
                     // F_omega on the right edge Re(omega) = 1/2 at the zeros of 1 - 2^(1-s)
                     double edge = kInf;
                     for (double t : scan.edge_factor_zeros) {
                       const Complex s(1.0, t);
                       edge = std::min(edge, std::abs(special::gamma(s) * special::eta(s)));
                     }
                     least = std::min(least, edge);
                     std::string note =
                         "f = F_omega L equals conj(omega - i beta) times a finite quotient, so it vanishes at omega = i beta_j: "
                         "L is unimodular, it cannot cancel a zero. |F_omega| at the right-edge points 1/2 + 2 pi k i / log 2 is " +
                         num(edge) + ". Sampled min of |f|/|Gamma| away from these points: " + num(scan.min_normalized_f);
                     return result(least > 0.0, least, note);
                   }));

  c.push_back(make("EQ45", "Eq. (45)", "|g(omega)| = lambda |epsilon + omega| > 0 on the boundary", K::inequality, 0.0,
                   [](Context& ctx) {
                     const auto& scan = ctx.scan();
                     // |epsilon + omega| >= epsilon whenever Re(omega) >= 0
                     double least = kInf;
                     for (int k = 0; k <= 1000; ++k) {
                       const double t = scan.tau * k / 1000.0;
                       for (const Complex w : {Complex(0.0, t), Complex(0.5, t), Complex(0.5 * k / 1000.0, 0.0),
                                               Complex(0.5 * k / 1000.0, scan.tau)})
                         least = std::min(least, scan.lambda * std::abs(scan.epsilon + w));
                     }
                     return result(least > 0.0, least, "min |g| on the boundary");
                   }));

  c.push_back(make("EQ46A", "Eq. (46a), Eq. (18A)", "|f + g| <= |f| + |g| on the boundary of K(16)", K::inequality, 1e-12,
                   [](Context& ctx) {
                     const auto& scan = ctx.scan();
                     return result(scan.min_margin >= -1e-12, scan.min_margin,
                                   "min margin over " + std::to_string(scan.boundary_samples) +
                                       " samples; the margin is 0 where f = 0, so the strict inequality does not hold there");
                   }));

  c.push_back(make("EQ50C", "Eq. (50c), Eq. (50b)", "[M*(1/2) + nu] |epsilon + omega| / epsilon > M*(1/2) >= |F_omega|",
                   K::inequality, 1e-6, [](Context& ctx) {
                     const auto& scan = ctx.scan();
                     const double m = ctx.m_star_half();
                     double worst = kInf;
                     for (int k = 0; k <= 1000; ++k) {
                       const double t = scan.tau * k / 1000.0;
                       for (const Complex w : {Complex(0.0, t), Complex(0.5, t), Complex(0.5 * k / 1000.0, 0.0),
                                               Complex(0.5 * k / 1000.0, scan.tau)}) {
                         const double lhs = (m + 0.01) * std::abs(scan.epsilon + w) / scan.epsilon;
                         const double f = std::abs(special::gamma(w + 0.5) * special::eta(w + 0.5));
                         worst = std::min({worst, lhs - m, m + 1e-6 - f});
                       }
                     }
                     return result(worst > 0.0, worst, "smallest slack in either inequality");
                   }));

  // S(T) is dropped from the formula, so only |count - N(T)| < 1.5 is asked for
  auto rvm = [](const char* id, double T) {
    return make(id, "Riemann-von Mangoldt", "argument-principle zero count vs (T/2pi) log(T/2pi e) + 7/8", K::count, 1.5,
                [T](Context& ctx) {
                  const int n = ctx.strip_count(T);
                  const double est = zeros::riemann_von_mangoldt(T);
                  return result(std::abs(n - est) < 1.5, n, "formula gives " + num(est));
                });
  };
  c.push_back(rvm("RVM30", 30.0));
  c.push_back(rvm("RVM40", 40.0));
  c.push_back(rvm("RVM50", 50.0));

  c.push_back(make("P1A", "Proposition 1A, Eqs. (1A)-(5A)", "integration-by-parts bound chain for |F(s)|", K::inequality,
                   1e-8, [](Context& ctx) {
                     std::mt19937_64 rng(ctx.cfg.seed ^ 0x1aULL);
                     std::uniform_real_distribution<double> u(0.02, 0.98);
                     double slack = kInf;
                     const double tail = std::log1p(kInvE);  // int_1^inf dx/(e^x + 1)
                     for (int k = 0; k < 50; ++k) {
                       const double a = u(rng);
                       const StripPoint s(a, 0.0);
                       const double head = quad::fermi_mellin_segment(s, 0.0, 1.0, ctx.qt(1e-8), ctx.cfg.eval_budget).value.real();
                       const double head_bound = 1.0 / (a * (kE + 1.0)) + (0.5 - 1.0 / (kE + 1.0)) / a;
                       slack = std::min({slack, head_bound - head, kInvE - tail,
                                         quad::m_bound(a) - quad::m_star(a, ctx.qt(1e-8), ctx.cfg.eval_budget)});
                     }
                     return result(slack > 0.0, slack, "smallest slack along the chain");
                   }));

  c.push_back(make("P2A", "Proposition 2A, Eqs. (7A)-(9A)", "convexity consequences for M* on [1/2, 1]", K::inequality, 1e-8,
                   [](Context& ctx) {
                     std::mt19937_64 rng(ctx.cfg.seed ^ 0x2aULL);
                     std::uniform_real_distribution<double> u(0.5, 1.0), tt(0.0, 1.0);
                     double worst = -kInf;
                     for (int k = 0; k < 50; ++k) {
                       double x = u(rng), y = u(rng);
                       if (x > y) std::swap(x, y);
                       const double t = tt(rng);
                       const double gx = quad::m_star(x, ctx.qt(1e-8), ctx.cfg.eval_budget);
                       const double gy = quad::m_star(y, ctx.qt(1e-8), ctx.cfg.eval_budget);
                       const double g = quad::m_star(t * x + (1.0 - t) * y, ctx.qt(1e-8), ctx.cfg.eval_budget);
                       worst = std::max({worst, g - (t * gx + (1.0 - t) * gy), g - std::max(gx, gy)});
                     }
                     double prev = -kInf;
                     bool increasing = true;
                     for (double a : ctx.alpha_grid()) {
                       const double d = quad::m_star_derivative(a, 1, ctx.qt(1e-6), ctx.cfg.eval_budget);
                       increasing = increasing && d > prev;
                       prev = d;
                     }
                     return result(worst <= 1e-8 && increasing, worst, "max chord violation; derivative increasing on the grid");
                   }));

  c.push_back(make("P4A", "Proposition 4A, Eqs. (18A)-(29A)", "|w| + |v| = |w + v| forces w = theta v with theta real",
                   K::equality, 1e-9, [](Context& ctx) {
                     std::mt19937_64 rng(ctx.cfg.seed ^ 0x4aULL);
                     std::normal_distribution<double> n(0.0, 1.0);
                     double worst = 0.0;
                     int converse_counterexamples = 0;
                     for (int k = 0; k < 10'000; ++k) {
                       const Complex v(n(rng), n(rng));
                       const double theta = n(rng);
                       const Complex w = (k % 2 == 0) ? theta * v : Complex(n(rng), n(rng));
                       const double scale = std::abs(w) * std::abs(v);
                       if (zeros::triangle_equality_condition(w, v, 1e-12 * (std::abs(w) + std::abs(v))))
                         worst = std::max(worst, std::abs(zeros::collinearity_cross_term(w, v)) / scale);
                       if (k % 2 == 0 && theta < 0.0 && !zeros::triangle_equality_condition(w, v, 1e-9)) ++converse_counterexamples;
                     }
                     return result(worst < 1e-9, worst,
                                   "equality implies collinearity (checked). The converse needs theta >= 0: " +
                                       std::to_string(converse_counterexamples) +
                                       " collinear pairs with theta < 0 miss equality, e.g. w = -v");
                   }));

  return c;
}

}  // namespace

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::equality: return "equality";
    case CheckKind::inequality: return "inequality";
    case CheckKind::limit: return "limit";
    case CheckKind::monotonicity: return "monotonicity";
    case CheckKind::count: return "count";
    case CheckKind::flagged: return "flagged";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::not_numeric: return "NOT_NUMERIC";
    case Verdict::skipped: return "SKIPPED";
  }
  return "unknown";
}

const std::vector<std::string>& flagged_claims() {
  static const std::vector<std::string> ids = {"EQ32", "EQ34G-DELTA", "EQ34J", "EQ34K"};
  return ids;
}

std::vector<ClaimRecord> list_claims() {
  std::vector<ClaimRecord> out;
  for (auto& c : registry()) out.push_back(c.record);
  return out;
}

AuditReport run_audit(const AuditConfig& config) {
  config.validate();
  Context ctx(config);
  AuditReport report;
  report.config_digest = config_digest(config);
  for (auto& claim : registry()) {
    ClaimRecord r = claim.record;
    if (!claim.check) {
      r.verdict = Verdict::not_numeric;
    } else {
      try {
        const Outcome o = claim.check(ctx);
        r.verdict = o.pass ? Verdict::pass : Verdict::fail;
        r.observed = o.observed;
        r.note = o.note;
      } catch (const ToleranceNotMet& e) {
        r.verdict = Verdict::skipped;
        r.note = std::string("infrastructure: ") + e.what();
      } catch (const NonConvergence& e) {
        r.verdict = Verdict::skipped;
        r.note = std::string("infrastructure: ") + e.what();
      } catch (const std::exception& e) {
        r.verdict = Verdict::fail;
        r.note = std::string("check raised: ") + e.what();
      }
    }
    ++report.totals[static_cast<std::size_t>(r.verdict)];
    report.claims.push_back(std::move(r));
  }
  return report;
}

namespace {

nlohmann::json record_json(const ClaimRecord& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["paper_ref"] = r.paper_ref;
  j["description"] = r.description;
  j["check_kind"] = to_string(r.check_kind);
  j["tolerance"] = r.tolerance;
  j["verdict"] = to_string(r.verdict);
  if (r.observed) {
    const Complex v = *r.observed;
    if (v.imag() == 0.0)
      j["observed"] = v.real();
    else
      j["observed"] = {{"re", v.real()}, {"im", v.imag()}};
  } else {
    j["observed"] = nullptr;
  }
  j["note"] = r.note;
  return j;
}

nlohmann::json totals_json(const AuditReport& report) {
  nlohmann::json t;
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::not_numeric, Verdict::skipped}) t[to_string(v)] = report.count(v);
  return t;
}

}  // namespace

std::string report_document(const AuditReport& report) {
  nlohmann::json doc;
  doc["config_digest"] = report.config_digest;
  doc["totals"] = totals_json(report);
  nlohmann::json claims = nlohmann::json::object();
  for (const auto& r : report.claims) claims[r.id] = record_json(r);
  doc["claims"] = claims;
  return doc.dump(2) + "\n";
}

std::string report_json_lines(const AuditReport& report) {
  std::string out;
  for (const auto& r : report.claims) out += record_json(r).dump() + "\n";
  nlohmann::json t;
  t["config_digest"] = report.config_digest;
  t["totals"] = totals_json(report);
  out += t.dump() + "\n";
  return out;
}

std::string report_summary(const AuditReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(13) << "id" << std::setw(13) << "verdict" << "observed\n";
  for (const auto& r : report.claims) {
    os << std::setw(13) << r.id << std::setw(13) << to_string(r.verdict);
    if (r.observed) {
      os << std::setprecision(10) << r.observed->real();
      if (r.observed->imag() != 0.0) os << (r.observed->imag() < 0 ? " - " : " + ") << std::abs(r.observed->imag()) << "i";
    }
    os << "\n";
  }
  os << "PASS " << report.count(Verdict::pass) << "  FAIL " << report.count(Verdict::fail) << "  NOT_NUMERIC "
     << report.count(Verdict::not_numeric) << "  SKIPPED " << report.count(Verdict::skipped) << "  digest "
     << report.config_digest << "\n";
  return os.str();
}

}  // namespace zetalab::audit
