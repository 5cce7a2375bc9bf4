#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab::audit {

/// Bad or missing configuration file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class CheckKind { equality, inequality, limit, monotonicity, count, flagged };
enum class Verdict { pass, fail, not_numeric, skipped };

std::string to_string(CheckKind kind);
std::string to_string(Verdict verdict);

struct AuditConfig {
  double quad_tol = 1e-8;
  double zero_tol = 1e-4;
  std::int64_t eval_budget = 1'000'000;
  double tau_max = 50.0;
  std::uint64_t seed = 20240607;
  // strip sampling grid
  double strip_re_min = 0.45;
  double strip_re_max = 0.95;
  double strip_im_min = 0.0;
  double strip_im_max = 30.0;
  int strip_re_count = 7;
  int strip_im_count = 7;
  // alpha grid on [1/2, 1] and random sweep sizes
  int alpha_count = 50;
  int random_points = 200;
  std::string format = "doc";  // doc | csv

  /// Throws ConfigError on tolerances <= 0, budget < 1e3, empty grids.
  void validate() const;
};

/// Flat key=value file; '#' starts a comment. Unknown keys are an error.
AuditConfig parse_config_text(const std::string& text);
AuditConfig load_config(const std::string& path);

/// FNV-1a over the canonical key=value rendering of every field.
std::string config_digest(const AuditConfig& config);
std::string canonical_config(const AuditConfig& config);

struct ClaimRecord {
  std::string id;
  std::string paper_ref;
  std::string description;
  CheckKind check_kind = CheckKind::equality;
  double tolerance = 0.0;
  Verdict verdict = Verdict::skipped;
  std::optional<Complex> observed;
  std::string note;
};

struct AuditReport {
  std::vector<ClaimRecord> claims;  // ordered by registration
  std::string config_digest;
  std::array<int, 4> totals{};  // indexed by Verdict

  int count(Verdict v) const { return totals[static_cast<std::size_t>(v)]; }
};

/// The fixed set of claims that have no finite numerical reading.
const std::vector<std::string>& flagged_claims();

/// Full registry, unexecuted (verdict SKIPPED).
std::vector<ClaimRecord> list_claims();

/// Runs every registered check. Failing checks become FAIL, infrastructure
/// errors (budget, convergence) become SKIPPED with the reason in note.
AuditReport run_audit(const AuditConfig& config);

/// One document: {"config_digest", "totals", "claims": {id: record}}.
std::string report_document(const AuditReport& report);
/// One JSON record per line, claims in registry order, then a totals line.
std::string report_json_lines(const AuditReport& report);
/// Plain-text table for terminals.
std::string report_summary(const AuditReport& report);

}  // namespace zetalab::audit
