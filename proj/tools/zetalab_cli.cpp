// zetalab: batch checks for the Fermi-Mellin integral, its bounds and zeros.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetalab/claim_audit.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/strip_map.hpp"
#include "zetalab/zero_analysis.hpp"

using namespace zetalab;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailVerdicts = 1, kNumerical = 2, kUsage = 3 };

struct Globals {
  double tol = 1e-10;
  std::int64_t budget = quad::kDefaultEvalBudget;
  std::string format = "csv";
  std::string config;
  std::int64_t seed = -1;
};

std::string g15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void print_table(const Globals& g, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  if (g.format == "doc") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o;
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = std::isfinite(r[i]) ? json(r[i]) : json(nullptr);
      arr.push_back(o);
    }
    std::cout << arr.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
  std::cout << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << g15(r[i]);
    std::cout << "\n";
  }
}

int cmd_eval(const Globals& g, const std::string& fn, double re, double im) {
  const Complex s(re, im);
  Complex value;
  double err = 0.0;
  if (fn == "zeta") {
    value = (re > 0.0 && re < 1.0) ? special::zeta(StripPoint(s)) : special::zeta_right_half(s);
  } else if (fn == "eta") {
    const auto r = special::eta_with_bound(s);
    value = r.value;
    err = r.error_bound;
  } else if (fn == "gamma") {
    value = special::gamma(s);
  } else if (fn == "F") {
    const StripPoint p = re == 1.0 ? StripPoint::upper_half(s) : StripPoint(s);
    const auto q = quad::fermi_mellin(p, g.tol, g.budget);
    value = q.value;
    err = q.abs_error;
  } else {  // F_shifted
    const auto q = quad::f_shifted(HalfStripPoint(s), g.tol, g.budget);
    value = q.value;
    err = q.abs_error;
  }
  print_table(g, {"re", "im", "value_re", "value_im", "abs", "error"},
              {{re, im, value.real(), value.imag(), std::abs(value), err}});
  return kOk;
}

int cmd_bounds(const Globals& g, double from, double to, double step) {
  if (!(step > 0.0) || !(from <= to)) throw DomainError("bounds: need from <= to and step > 0");
  std::vector<std::vector<double>> rows;
  const int n = static_cast<int>(std::floor((to - from) / step + 1e-9));
  for (int k = 0; k <= n; ++k) {
    const double a = from + k * step;
    const auto b = quad::bounds_sample(a, g.tol, g.budget);
    rows.push_back({b.alpha, b.m, b.m_star, b.m_star_d1, b.m_star_d2});
  }
  print_table(g, {"alpha", "m", "m_star", "m_star_d1", "m_star_d2"}, rows);
  return kOk;
}

int cmd_map(const Globals& g, double re, double im, double b, bool inverse) {
  const strip::MapParam param(b);
  if (inverse) {
    const HalfStripPoint w(re, im);
    const Complex z = strip::phi_inverse(w, param).value();
    const Complex back = strip::phi(strip::DiskPoint(z), param).value();
    print_table(g, {"omega_re", "omega_im", "z_re", "z_im", "abs_z", "roundtrip_error"},
                {{re, im, z.real(), z.imag(), std::abs(z), std::abs(back - w.value())}});
    return kOk;
  }
  const strip::DiskPoint z(re, im);
  const Complex t = strip::theta(z, param).value();
  const Complex w = strip::phi(z, param).value();
  const double H = strip::disk_modulus_H(strip::DiskPoint(t), param);
  print_table(g, {"z_re", "z_im", "theta_re", "theta_im", "phi_re", "phi_im", "H"},
              {{re, im, t.real(), t.imag(), w.real(), w.imag(), H}});
  return kOk;
}

int cmd_zeros(const Globals& g, double tau, double zero_tol) {
  const auto zl = zeros::critical_line_zeros(tau, zero_tol);
  const zeros::AnalyticFn eta = [](Complex s) { return special::eta(s); };
  const int count = zeros::winding_count(eta, zeros::RectangleRegion::make(0.05, 0.95, 0.0, zl.tau), 8);
  const double twopie = 2.0 * kPi * std::exp(1.0);
  const double rvm = tau >= twopie ? zeros::riemann_von_mangoldt(tau) : std::nan("");
  if (g.format == "doc") {
    json o;
    o["tau"] = tau;
    o["betas"] = zl.betas;
    o["winding_count"] = count;
    o["riemann_von_mangoldt"] = std::isfinite(rvm) ? json(rvm) : json(nullptr);
    json off = json::array();
    for (const Complex& z : zl.off_line) off.push_back({z.real(), z.imag()});
    o["off_line"] = off;
    std::cout << o.dump(2) << "\n";
  } else {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < zl.betas.size(); ++i)
      rows.push_back({static_cast<double>(i + 1), 0.5, zl.betas[i], std::abs(special::eta(Complex(0.5, zl.betas[i])))});
    print_table(g, {"index", "re", "beta", "abs_eta"}, rows);
    std::cout << "# zeros " << zl.betas.size() << ", winding count " << count << ", off line " << zl.off_line.size()
              << ", riemann_von_mangoldt " << (std::isfinite(rvm) ? g15(rvm) : "n/a") << "\n";
  }
  return kOk;
}

int cmd_jensen(const Globals& g, double b, double radius, int samples) {
  const strip::MapParam param(b);
  const zeros::AnalyticFn f = [&](Complex z) { return strip::f_on_disk(strip::DiskPoint(z), param, g.tol, g.budget); };
  const auto j = zeros::jensen_check(f, {}, radius, samples);
  print_table(g, {"b", "radius", "samples", "lhs", "rhs", "difference"},
              {{b, radius, static_cast<double>(samples), j.lhs, j.rhs, j.lhs - j.rhs}});
  return kOk;
}

int cmd_rouche(const Globals& g, double tau, double lambda, double epsilon, double nu, int samples) {
  if (!(lambda > 0.0)) lambda = zeros::lambda_choice(1.0, epsilon, nu);
  const auto r = zeros::rouche_scan(tau, lambda, epsilon, samples, 1e-12);
  if (g.format == "doc") {
    json o;
    o["tau"] = r.tau;
    o["tau_shifted"] = r.tau_shifted;
    o["lambda"] = r.lambda;
    o["epsilon"] = r.epsilon;
    o["min_margin"] = r.min_margin;
    o["argmin_omega"] = {r.argmin_omega.real(), r.argmin_omega.imag()};
    o["boundary_samples"] = r.boundary_samples;
    o["betas"] = r.betas;
    o["min_normalized_f"] = r.min_normalized_f;
    o["argmin_normalized_f"] = {r.argmin_normalized_f.real(), r.argmin_normalized_f.imag()};
    json n = json::array();
    for (const auto& p : r.neutralized) n.push_back({{"beta", p.beta}, {"abs_f", p.abs_f}});
    o["neutralized"] = n;
    o["edge_factor_zeros"] = r.edge_factor_zeros;
    std::cout << o.dump(2) << "\n";
  } else {
    print_table(g, {"tau", "lambda", "epsilon", "min_margin", "argmin_re", "argmin_im", "boundary_samples", "min_normalized_f"},
                {{r.tau, r.lambda, r.epsilon, r.min_margin, r.argmin_omega.real(), r.argmin_omega.imag(),
                  static_cast<double>(r.boundary_samples), r.min_normalized_f}});
    for (const auto& p : r.neutralized) std::cout << "# neutralized beta " << g15(p.beta) << " |f| " << g15(p.abs_f) << "\n";
    for (double t : r.edge_factor_zeros) std::cout << "# F_omega vanishes at omega = 1/2 + " << g15(t) << "i\n";
  }
  return kOk;
}

int cmd_audit(const Globals& g, const std::string& out, const std::string& jsonl) {
  audit::AuditConfig cfg = g.config.empty() ? audit::AuditConfig{} : audit::load_config(g.config);
  if (g.seed >= 0) cfg.seed = static_cast<std::uint64_t>(g.seed);
  cfg.validate();
  const auto report = audit::run_audit(cfg);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw audit::ConfigError("audit: cannot write '" + out + "'");
    f << audit::report_document(report);
  }
  if (!jsonl.empty()) {
    std::ofstream f(jsonl);
    if (!f) throw audit::ConfigError("audit: cannot write '" + jsonl + "'");
    f << audit::report_json_lines(report);
  }
  if (g.format == "doc" && out.empty())
    std::cout << audit::report_document(report);
  else
    std::cout << audit::report_summary(report);
  return report.count(audit::Verdict::fail) > 0 ? kFailVerdicts : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetalab: numerical checks for the Fermi-Mellin integral F(s) = Gamma(s) eta(s)"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "integrand evaluation budget")->check(CLI::Range(std::int64_t{1000}, INT64_MAX));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "doc"}));
  app.add_option("--config", g.config, "audit config file (key=value)");
  app.add_option("--seed", g.seed, "seed for randomized sweeps")->check(CLI::NonNegativeNumber);

  std::string fn;
  double re = 0.0, im = 0.0, b = 0.5;
  auto* eval = app.add_subcommand("eval", "evaluate zeta, eta, gamma, F or F_shifted at re + i im");
  eval->add_option("function", fn)->required()->check(CLI::IsMember({"zeta", "eta", "gamma", "F", "F_shifted"}));
  eval->add_option("re", re)->required();
  eval->add_option("im", im)->required();

  double from = 0.5, to = 1.0, step = 0.1;
  auto* bounds = app.add_subcommand("bounds", "CSV of M, M*, dM*, d2M* over an alpha grid");
  bounds->add_option("--from", from)->capture_default_str();
  bounds->add_option("--to", to)->capture_default_str();
  bounds->add_option("--step", step)->capture_default_str();

  bool inverse = false;
  auto* map = app.add_subcommand("map", "conformal map phi(z; b) of the disk onto the half strip");
  map->add_option("re", re)->required();
  map->add_option("im", im)->required();
  map->add_option("b", b)->required();
  map->add_flag("--inverse", inverse, "treat the input as omega and apply phi^-1");

  double tau = 30.0, zero_tol = 1e-4;
  auto* zeros_cmd = app.add_subcommand("zeros", "critical-line zeros up to height tau");
  zeros_cmd->add_option("tau", tau)->required();
  zeros_cmd->add_option("--zero-tol", zero_tol)->capture_default_str();

  double radius = 0.95;
  int samples = 512;
  auto* jensen = app.add_subcommand("jensen", "zero-free Jensen check for F(phi(z; b)) on |z| = radius");
  jensen->add_option("--b", b)->capture_default_str();
  jensen->add_option("--radius", radius)->capture_default_str();
  jensen->add_option("--samples", samples)->capture_default_str();

  double lambda = 0.0, epsilon = 0.1, nu = 0.01;
  int per_side = 64;
  auto* rouche = app.add_subcommand("rouche", "boundary scan of f = F_omega L against g = lambda (epsilon + omega)");
  rouche->add_option("tau", tau)->required();
  rouche->add_option("--lambda", lambda, "default: (M*(1/2) + nu) / epsilon");
  rouche->add_option("--epsilon", epsilon)->capture_default_str();
  rouche->add_option("--nu", nu)->capture_default_str();
  rouche->add_option("--samples-per-side", per_side)->capture_default_str();

  std::string out, jsonl;
  auto* audit_cmd = app.add_subcommand("audit", "run every registered claim check");
  audit_cmd->add_option("--out", out, "write the report document here");
  audit_cmd->add_option("--jsonl", jsonl, "write one record per line here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(g, fn, re, im);
    if (*bounds) return cmd_bounds(g, from, to, step);
    if (*map) return cmd_map(g, re, im, b, inverse);
    if (*zeros_cmd) return cmd_zeros(g, tau, zero_tol);
    if (*jensen) return cmd_jensen(g, b, radius, samples);
    if (*rouche) return cmd_rouche(g, tau, lambda, epsilon, nu, per_side);
    if (*audit_cmd) return cmd_audit(g, out, jsonl);
  } catch (const audit::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}
