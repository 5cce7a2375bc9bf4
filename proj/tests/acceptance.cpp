// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "zetalab/claim_audit.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/strip_map.hpp"
#include "zetalab/zero_analysis.hpp"

using namespace zetalab;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class Fn>
void criterion(int n, const char* title, Fn&& fn) {
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", n, title, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Complex poly(const std::vector<Complex>& roots, Complex z) {
  Complex v = 1.0;
  for (auto w : roots) v *= z - w;
  return v;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240607);

  criterion(1, "M*(1/2)", [](std::string& d) {
    const auto t0 = Clock::now();
    const double v = quad::m_star(0.5, 1e-10);
    const double dt = seconds_since(t0);
    d = fmt("%.12f in %.3f s", v, dt);
    return std::abs(v - 1.07215) < 1e-4 && dt < 1.0;
  });

  criterion(2, "M*(1) = ln 2", [](std::string& d) {
    const auto t0 = Clock::now();
    const double v = quad::m_star(1.0, 1e-12);
    const double dt = seconds_since(t0);
    d = fmt("error %.2e in %.3f s", std::abs(v - kLn2), dt);
    return std::abs(v - kLn2) < 1e-10 && dt < 1.0;
  });

  criterion(3, "M* derivatives", [](std::string& d) {
    auto t0 = Clock::now();
    const double a = quad::m_star_derivative(0.5, 1, 1e-10);
    const double ta = seconds_since(t0);
    t0 = Clock::now();
    const double b = quad::m_star_derivative(1.0, 1, 1e-10);
    const double tb = seconds_since(t0);
    d = fmt("dM*(1/2) = %.8f, dM*(1) = %.10f", a, b) + fmt(" in %.3f s and %.3f s", ta, tb);
    return std::abs(a + 1.76259) < 1e-4 && std::abs(b + 0.240227) < 1e-6 && ta < 1.0 && tb < 1.0;
  });

  criterion(4, "M(1/2) = 1 + 1/e", [](std::string& d) {
    const double v = quad::m_bound(0.5);
    d = fmt("%.15f", v);
    return std::abs(v - (1.0 + kInvE)) < 1e-10 && std::abs(v - 1.36788) < 1e-5;
  });

  criterion(5, "integral equals Gamma eta on 7x7 grid", [](std::string& d) {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        const Complex s(0.45 + 0.5 * i / 6.0, 30.0 * j / 6.0);
        const Complex f = quad::fermi_mellin(StripPoint(s), 1e-10).value;
        worst = std::max(worst, std::abs(f - special::gamma(s) * special::eta(s)));
      }
    const double dt = seconds_since(t0);
    d = fmt("max error %.2e in %.2f s", worst, dt);
    return worst < 1e-8 && dt < 30.0;
  });

  criterion(6, "bound chain at 1000 random points", [&](std::string& d) {
    const auto t0 = Clock::now();
    std::uniform_real_distribution<double> re(0.5, 1.0), im(-50.0, 50.0);
    const double top = quad::m_star(0.5, 1e-12);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      const Complex s(re(rng), im(rng));
      const double f = std::abs(quad::fermi_mellin(StripPoint::upper_half(s), 1e-8).value);
      const double ms = quad::m_star(s.real(), 1e-10);
      if (!(f <= ms + 1e-6 && ms <= top + 1e-6)) ++bad;
    }
    const double dt = seconds_since(t0);
    d = std::to_string(bad) + fmt(" violations in %.2f s", dt);
    return bad == 0 && dt < 120.0;
  });

  criterion(7, "M* convex and decreasing on [1/2, 1]", [&](std::string& d) {
    std::uniform_real_distribution<double> a(0.5, 1.0), t(0.0, 1.0);
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
      const double a1 = a(rng), a2 = a(rng), tt = t(rng);
      if (quad::m_star(tt * a1 + (1 - tt) * a2, 1e-11) >
          tt * quad::m_star(a1, 1e-11) + (1 - tt) * quad::m_star(a2, 1e-11) + 1e-8)
        ++bad;
    }
    double prev = 1e9;
    for (int k = 0; k < 50; ++k) {
      const double v = quad::m_star(0.5 + 0.5 * k / 49.0, 1e-11);
      if (!(v < prev + 1e-8)) ++bad;
      prev = v;
    }
    d = std::to_string(bad) + " violations";
    return bad == 0;
  });

  criterion(8, "strip map", [&](std::string& d) {
    const auto t0 = Clock::now();
    std::uniform_real_distribution<double> u(0.0, 1.0), ang(0.0, 2 * kPi), bd(0.01, 0.99);
    int out_of_strip = 0;
    double trip = 0.0, h_err = 0.0;
    for (int k = 0; k < 10'000; ++k) {
      const strip::MapParam b(bd(rng));
      const strip::DiskPoint z(std::polar(0.999 * std::sqrt(u(rng)), ang(rng)));
      const Complex w = strip::phi(z, b).value();
      if (!(w.real() > 0.0 && w.real() < 0.5)) ++out_of_strip;
      if (std::abs(z.value()) < 0.99) trip = std::max(trip, std::abs(strip::phi_inverse(strip::phi(z, b), b).value() - z.value()));
      const strip::DiskPoint t = strip::theta(z, b);
      trip = std::max(trip, std::abs(strip::theta(strip::theta_inverse(t, b), b).value() - t.value()));
      const HalfStripPoint v(0.01 + 0.48 * u(rng), 2.0 * u(rng) - 1.0);
      trip = std::max(trip, std::abs(strip::phi(strip::phi_inverse(v, b), b).value() - v.value()));
      h_err = std::max(h_err, std::abs(strip::disk_modulus_H(t, b) - std::abs(z.value())));
    }
    const double edge = std::abs(strip::phi(strip::DiskPoint(0.0, 0.0), strip::MapParam(1.0 - 1e-5)).value());
    d = fmt("round trip %.1e, H %.1e, |phi(0; 1 - 1e-5)| %.1e", trip, h_err, edge) + ", outside " + std::to_string(out_of_strip);
    return seconds_since(t0) < 30.0 && out_of_strip == 0 && trip < 1e-10 && h_err < 1e-12 && edge < 1e-5;
  });

  criterion(9, "zeros and counts", [](std::string& d) {
    const auto t0 = Clock::now();
    const double zero_tol = 1e-4;
    const auto z = zeros::critical_line_zeros(30.0, zero_tol);
    const double expect[] = {14.1347, 21.0220, 25.0109};
    bool ok = z.betas.size() == 3 && z.off_line.empty();
    for (std::size_t k = 0; ok && k < 3; ++k)
      ok = std::abs(z.betas[k] - expect[k]) < 1e-3 && std::abs(z.certificates[k].center().real() - 0.5) < zero_tol;
    const int n50 = zeros::winding_count([](Complex s) { return special::eta(s); },
                                         zeros::RectangleRegion::make(0.05, 0.95, 0.0, 50.0), 8);
    const double rvm = zeros::riemann_von_mangoldt(50.0);
    d = std::to_string(z.betas.size()) + " zeros below 30, winding(50) = " + std::to_string(n50) + fmt(", N(50) = %.4f", rvm);
    const double dt = seconds_since(t0);
    d += fmt(", %.2f s", dt);
    return ok && n50 == 10 && std::abs(n50 - rvm) < 1.5 && dt < 300.0;
  });

  criterion(10, "Jensen formula", [&](std::string& d) {
    std::uniform_real_distribution<double> r(0.05, 0.9), ang(0.0, 2 * kPi);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      std::vector<Complex> roots;
      const int deg = 1 + static_cast<int>(rng() % 5);
      for (int j = 0; j < deg; ++j) roots.push_back(std::polar(r(rng), ang(rng)));
      const auto jr = zeros::jensen_check([&](Complex z) { return poly(roots, z); }, roots, 1.0, 512);
      worst = std::max(worst, std::abs(jr.lhs - jr.rhs));
    }
    const strip::MapParam b(0.9);
    const auto jf = zeros::jensen_check([&](Complex z) { return strip::f_on_disk(strip::DiskPoint(z), b, 1e-12); }, {},
                                        0.95, 256);
    d = fmt("polynomials %.1e, F on disk %.1e", worst, std::abs(jf.lhs - jf.rhs));
    return worst < 1e-8 && std::abs(jf.lhs - jf.rhs) < 1e-4;
  });

  criterion(11, "Titchmarsh bound soundness", [&](std::string& d) {
    std::uniform_real_distribution<double> r(0.0, 0.99), ang(0.0, 2 * kPi);
    int bad = 0, trials = 0;
    for (double delta : {0.5, 0.7, 0.9})
      for (int k = 0; k < 100; ++k) {
        std::vector<Complex> roots;
        for (int j = 0; j < 4; ++j) roots.push_back(std::polar(r(rng), ang(rng)));
        double M = 0.0;
        for (int j = 0; j < 1024; ++j) M = std::max(M, std::abs(poly(roots, std::polar(1.0, 2 * kPi * j / 1024.0))));
        M *= 1.0 + 1e-3;
        const double f0 = std::abs(poly(roots, 0.0));
        if (f0 < 1e-12) continue;
        ++trials;
        int inside = 0;
        for (auto w : roots) inside += std::abs(w) <= delta;
        if (inside > zeros::titchmarsh_zero_bound(M, f0, delta) + 1e-9) ++bad;
        if (zeros::titchmarsh_zero_free(M, f0, delta) && inside > 0) ++bad;
      }
    d = std::to_string(bad) + " violations in " + std::to_string(trials) + " trials";
    return bad == 0;
  });

  criterion(12, "|L| = 1", [&](std::string& d) {
    std::uniform_real_distribution<double> re(0.0, 0.5), im(0.0, 50.0);
    double worst = 0.0;
    int used = 0;
    for (int k = 0; k < 10'000; ++k) {
      const double betas[] = {im(rng), im(rng), im(rng)};
      const Complex w(re(rng), im(rng));
      try {
        worst = std::max(worst, std::abs(std::abs(zeros::blaschke_L(w, betas)) - 1.0));
        ++used;
      } catch (const zeros::PoleProximity&) {
      }
    }
    d = fmt("max deviation %.1e", worst) + " over " + std::to_string(used) + " pairs";
    return worst < 1e-12;
  });

  criterion(13, "Rouche margin on K(16)", [](std::string& d) {
    const auto t0 = Clock::now();
    const auto r = zeros::rouche_scan(16.0, zeros::lambda_choice(1.0, 0.1, 0.01), 0.1, 64, 1e-12);
    d = fmt("min margin %.2e, min |f|/|Gamma| away from i beta %.2e, neutralized |f| %.1e", r.min_margin,
            r.min_normalized_f, r.neutralized.empty() ? -1.0 : r.neutralized[0].abs_f);
    return r.min_margin >= -1e-12 && r.min_normalized_f > 0.0 && seconds_since(t0) < 300.0;
  });

  criterion(14, "functional equation residual", [](std::string& d) {
    double worst = 0.0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        worst = std::max(worst, special::functional_equation_residual(StripPoint(0.45 + 0.5 * i / 6.0, 30.0 * j / 6.0)));
    d = fmt("max residual %.2e", worst);
    return worst < 1e-7;
  });

  criterion(15, "claim audit", [](std::string& d) {
    const auto t0 = Clock::now();
    const audit::AuditConfig cfg;
    const auto a = audit::run_audit(cfg);
    const auto b = audit::run_audit(cfg);
    const bool same = audit::report_document(a) == audit::report_document(b);
    d = "PASS " + std::to_string(a.count(audit::Verdict::pass)) + ", FAIL " + std::to_string(a.count(audit::Verdict::fail)) +
        ", NOT_NUMERIC " + std::to_string(a.count(audit::Verdict::not_numeric)) + ", SKIPPED " +
        std::to_string(a.count(audit::Verdict::skipped)) + (same ? ", reports identical" : ", reports differ");
    return seconds_since(t0) < 900.0 && a.count(audit::Verdict::pass) >= 25 && a.count(audit::Verdict::not_numeric) == 4 &&
           a.count(audit::Verdict::skipped) == 0 && same;
  });

  return failures == 0 ? 0 : 1;
}
