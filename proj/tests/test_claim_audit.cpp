#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "zetalab/claim_audit.hpp"

using namespace zetalab;
using namespace zetalab::audit;

namespace {

const AuditReport& default_report() {
  static const AuditReport r = run_audit(AuditConfig{});
  return r;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config_text("# comment\nquad_tol = 1e-9\nzero_tol=1e-5  # trailing\n\nseed=7\nformat=csv\n");
  CHECK(c.quad_tol == 1e-9);
  CHECK(c.zero_tol == 1e-5);
  CHECK(c.seed == 7);
  CHECK(c.format == "csv");
  CHECK(c.tau_max == 50.0);
  CHECK(parse_config_text("eval_budget=1e6").eval_budget == 1'000'000);
}

TEST_CASE("config rejects bad input") {
  CHECK_THROWS_AS(parse_config_text("quad_tol=0"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("quad_tol=-1e-3"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("eval_budget=10"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("bogus=1"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("quad_tol"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("quad_tol=abc"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("alpha_count=1.5"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("format=xml"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/zetalab.cfg"), ConfigError);
}

TEST_CASE("config digest") {
  const AuditConfig a;
  AuditConfig b;
  CHECK(config_digest(a) == config_digest(b));
  CHECK(config_digest(a).size() == 16);
  b.seed += 1;
  CHECK(config_digest(a) != config_digest(b));
  CHECK(config_digest(parse_config_text(canonical_config(a))) == config_digest(a));
}

TEST_CASE("registry") {
  const auto claims = list_claims();
  CHECK(claims.size() >= 30);
  std::set<std::string> ids;
  for (const auto& c : claims) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.paper_ref.empty());
    CHECK_FALSE(c.description.empty());
    CHECK(c.verdict == Verdict::skipped);
  }
  const auto& flagged = flagged_claims();
  CHECK(flagged == std::vector<std::string>{"EQ32", "EQ34G-DELTA", "EQ34J", "EQ34K"});
  for (const auto& c : claims) {
    const bool is_flagged = std::find(flagged.begin(), flagged.end(), c.id) != flagged.end();
    CHECK((c.check_kind == CheckKind::flagged) == is_flagged);
  }
}

TEST_CASE("audit totals") {
  const auto& r = default_report();
  CHECK(r.claims.size() == list_claims().size());
  CHECK(r.count(Verdict::pass) >= 25);
  CHECK(r.count(Verdict::not_numeric) == 4);
  CHECK(r.count(Verdict::skipped) == 0);
  int sum = 0;
  for (int t : r.totals) sum += t;
  CHECK(sum == static_cast<int>(r.claims.size()));
  for (const auto& c : r.claims) {
    if (c.check_kind == CheckKind::flagged) CHECK(c.verdict == Verdict::not_numeric);
    else CHECK(c.verdict != Verdict::not_numeric);
  }
}

TEST_CASE("known verdicts") {
  const auto& r = default_report();
  auto verdict = [&](const std::string& id) {
    for (const auto& c : r.claims)
      if (c.id == id) return c.verdict;
    FAIL("missing claim " << id);
    return Verdict::skipped;
  };
  CHECK(verdict("EQ8A") == Verdict::pass);
  CHECK(verdict("RVM30") == Verdict::pass);
  CHECK(verdict("RVM50") == Verdict::pass);
  // both are false as stated; see the notes on the records
  CHECK(verdict("EQ34I") == Verdict::fail);
  CHECK(verdict("EQ43") == Verdict::fail);
}

TEST_CASE("report serialisation is deterministic") {
  const auto& r1 = default_report();
  const auto r2 = run_audit(AuditConfig{});
  CHECK(report_document(r1) == report_document(r2));
  CHECK(report_json_lines(r1) == report_json_lines(r2));

  const auto doc = nlohmann::json::parse(report_document(r1));
  CHECK(doc["config_digest"] == config_digest(AuditConfig{}));
  CHECK(doc["claims"].size() == r1.claims.size());
  CHECK(doc["totals"]["NOT_NUMERIC"] == 4);
  for (const auto& [id, rec] : doc["claims"].items()) {
    CHECK(rec["id"] == id);
    for (const char* key : {"paper_ref", "description", "check_kind", "tolerance", "verdict", "observed", "note"})
      CHECK(rec.contains(key));
  }

  const std::string lines = report_json_lines(r1);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == static_cast<long>(r1.claims.size()) + 1);
  CHECK(report_summary(r1).find("NOT_NUMERIC 4") != std::string::npos);
}

TEST_CASE("coarser quadrature tolerance leaves verdicts unchanged") {
  AuditConfig c;
  c.quad_tol = 1e-3;
  const auto r = run_audit(c);
  const auto& base = default_report();
  REQUIRE(r.claims.size() == base.claims.size());
  for (std::size_t k = 0; k < r.claims.size(); ++k) {
    CAPTURE(r.claims[k].id);
    CHECK(r.claims[k].verdict == base.claims[k].verdict);
  }
}

TEST_CASE("invalid config is rejected by run_audit") {
  AuditConfig c;
  c.zero_tol = 0.0;
  CHECK_THROWS_AS(run_audit(c), ConfigError);
}
