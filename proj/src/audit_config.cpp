#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zetalab/claim_audit.hpp"

namespace zetalab::audit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw ConfigError("config: '" + key + "' is not a number: " + v);
  return out;
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  // allow 1e6 style for counts
  const double d = parse_double(key, v);
  if (d != std::floor(d)) throw ConfigError("config: '" + key + "' must be an integer: " + v);
  return static_cast<std::int64_t>(d);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void AuditConfig::validate() const {
  if (!(quad_tol > 0.0)) throw ConfigError("config: quad_tol must be > 0");
  if (!(zero_tol > 0.0)) throw ConfigError("config: zero_tol must be > 0");
  if (eval_budget < 1000) throw ConfigError("config: eval_budget must be >= 1000");
  if (!(tau_max > 0.0)) throw ConfigError("config: tau_max must be > 0");
  if (!(strip_re_min > 0.0 && strip_re_max < 1.0 && strip_re_min <= strip_re_max))
    throw ConfigError("config: strip real range must lie inside (0, 1)");
  if (!(strip_im_min <= strip_im_max)) throw ConfigError("config: strip_im_min > strip_im_max");
  if (strip_re_count < 1 || strip_im_count < 1 || alpha_count < 2 || random_points < 1)
    throw ConfigError("config: grids must be nonempty");
  if (format != "doc" && format != "csv") throw ConfigError("config: format must be doc or csv");
}

AuditConfig parse_config_text(const std::string& text) {
  AuditConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "quad_tol") c.quad_tol = parse_double(key, val);
    else if (key == "zero_tol") c.zero_tol = parse_double(key, val);
    else if (key == "eval_budget") c.eval_budget = parse_int(key, val);
    else if (key == "tau_max") c.tau_max = parse_double(key, val);
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_int(key, val));
    else if (key == "strip_re_min") c.strip_re_min = parse_double(key, val);
    else if (key == "strip_re_max") c.strip_re_max = parse_double(key, val);
    else if (key == "strip_im_min") c.strip_im_min = parse_double(key, val);
    else if (key == "strip_im_max") c.strip_im_max = parse_double(key, val);
    else if (key == "strip_re_count") c.strip_re_count = static_cast<int>(parse_int(key, val));
    else if (key == "strip_im_count") c.strip_im_count = static_cast<int>(parse_int(key, val));
    else if (key == "alpha_count") c.alpha_count = static_cast<int>(parse_int(key, val));
    else if (key == "random_points") c.random_points = static_cast<int>(parse_int(key, val));
    else if (key == "format") c.format = val;
    else throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

AuditConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::string canonical_config(const AuditConfig& c) {
  std::string s;
  s += "quad_tol=" + fmt(c.quad_tol) + "\n";
  s += "zero_tol=" + fmt(c.zero_tol) + "\n";
  s += "eval_budget=" + std::to_string(c.eval_budget) + "\n";
  s += "tau_max=" + fmt(c.tau_max) + "\n";
  s += "seed=" + std::to_string(c.seed) + "\n";
  s += "strip_re_min=" + fmt(c.strip_re_min) + "\n";
  s += "strip_re_max=" + fmt(c.strip_re_max) + "\n";
  s += "strip_im_min=" + fmt(c.strip_im_min) + "\n";
  s += "strip_im_max=" + fmt(c.strip_im_max) + "\n";
  s += "strip_re_count=" + std::to_string(c.strip_re_count) + "\n";
  s += "strip_im_count=" + std::to_string(c.strip_im_count) + "\n";
  s += "alpha_count=" + std::to_string(c.alpha_count) + "\n";
  s += "random_points=" + std::to_string(c.random_points) + "\n";
  s += "format=" + c.format + "\n";
  return s;
}

std::string config_digest(const AuditConfig& c) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical_config(c)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace zetalab::audit
