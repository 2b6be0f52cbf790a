#pragma once

// Reports for the command-line front end: JSON, CSV and plain text renderings
// of a run, plus the census table.

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "figplane/checks.hpp"

namespace figplane {

inline constexpr const char* kToolName = "figplane";
inline constexpr const char* kToolVersion = "1.0.0";

/// Raised for invalid parameters; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CensusRow {
  std::string category;
  std::int64_t count = 0;
  std::uint32_t orbit_size = 0;
  std::string point_type;
  std::string line_type;
};

struct Report {
  Json header = Json::object();
  bool has_census = false;
  std::vector<CensusRow> census;
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
  bool passed() const { return count(Status::Fail) == 0; }
  int exit_code() const { return passed() ? 0 : 1; }
};

inline std::string join_types(const std::set<ObjType>& ts) {
  std::string out;
  for (ObjType t : ts) {
    if (!out.empty()) out += '/';
    out += to_string(t);
  }
  return out;
}

inline std::vector<CensusRow> census_rows(const Workspace& ws) {
  const auto& part = ws.partition();
  std::vector<CensusRow> rows(kNumCategories);
  std::vector<std::set<ObjType>> pt(kNumCategories), lt(kNumCategories);
  for (std::size_t i = 0; i < kNumCategories; ++i) {
    const auto c = static_cast<Category>(i);
    rows[i].category = std::string(category_name(c));
    rows[i].count = part.census.counts[i];
    rows[i].orbit_size = c == Category::FixedPoint ? 1 : ws.field().norm_exponent();
  }
  for (const auto& cls : part.classes) {
    const auto i = static_cast<std::size_t>(cls.category);
    pt[i].insert(cls.point_type);
    if (cls.line_type) lt[i].insert(*cls.line_type);
  }
  for (std::size_t i = 0; i < kNumCategories; ++i) {
    rows[i].point_type = join_types(pt[i]);
    rows[i].line_type = join_types(lt[i]);
  }
  return rows;
}

inline Json field_header(const FieldCtx& f) {
  Json j;
  j["q"] = f.q();
  j["p"] = f.p();
  j["k"] = f.k();
  j["order"] = f.size();
  j["irreducible"] = f.irreducible();
  j["generator_log_base"] = f.generator_code();
  return j;
}

inline Json config_json(const RunConfig& cfg) {
  Json j;
  j["suite"] = cfg.suite;
  j["check"] = cfg.check.empty() ? Json(nullptr) : Json(cfg.check);
  j["format"] = cfg.format;
  j["jobs"] = cfg.jobs;
  j["seed"] = cfg.seed;
  j["full_pairs"] = cfg.full_pairs;
  return j;
}

/// Field parameters for q, or UsageError.
inline std::pair<std::uint32_t, std::uint32_t> field_params(std::uint64_t q) {
  const auto pk = factor_prime_power(q);
  if (!pk) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  return *pk;
}

/// Validates a configuration against its suites and check selector.
inline void validate(const RunConfig& cfg) {
  static const std::set<std::string> suites = {"default", "census", "maps", "figueroa", "all"};
  static const std::set<std::string> formats = {"json", "csv", "text"};
  if (!suites.count(cfg.suite)) throw UsageError("unknown suite: " + cfg.suite);
  if (!formats.count(cfg.format)) throw UsageError("unknown format: " + cfg.format);
  if (cfg.jobs == 0) throw UsageError("--jobs must be at least 1");
  if (!detail::is_prime(cfg.p)) throw UsageError("p must be prime");
  const auto sel = selected_suites(cfg);
  const bool fig = std::find(sel.begin(), sel.end(), "figueroa") != sel.end();
  if (fig && cfg.q() < 3)
    throw UsageError("Figueroa plane needs q a prime power, q>2 (got q=" +
                     std::to_string(cfg.q()) + ")");
  if (!cfg.check.empty()) {
    bool found = false;
    for (const auto& s : sel) found = found || known_group(s, cfg.check);
    for (const auto& d : check_registry())
      if (cfg.check == d.id && std::find(sel.begin(), sel.end(), d.suite) != sel.end()) found = true;
    if (!found) throw UsageError("unknown check for the selected suites: " + cfg.check);
  }
}

/// Runs the configured suites on an existing workspace.
inline Report run_report(const Workspace& ws, const RunConfig& cfg) {
  validate(cfg);
  Report rep;
  rep.header["tool"] = kToolName;
  rep.header["version"] = kToolVersion;
  rep.header["field"] = field_header(ws.field());
  rep.header["config"] = config_json(cfg);
  const auto sel = selected_suites(cfg);
  if (std::find(sel.begin(), sel.end(), "census") != sel.end()) {
    rep.has_census = true;
    rep.census = census_rows(ws);
  }
  rep.checks = run_checks(ws, cfg);
  return rep;
}

inline Report cmd_verify(const RunConfig& cfg) {
  validate(cfg);
  const Workspace ws(cfg.p, cfg.k, cfg.jobs);
  return run_report(ws, cfg);
}

inline Report cmd_census(RunConfig cfg) {
  cfg.suite = "census";
  return cmd_verify(cfg);
}

inline Report cmd_maps(RunConfig cfg) {
  cfg.suite = "maps";
  return cmd_verify(cfg);
}

inline Report cmd_figueroa(RunConfig cfg) {
  cfg.suite = "figueroa";
  return cmd_verify(cfg);
}

// ---------------------------------------------------------------------------
// rendering

inline Json report_json(const Report& rep, bool timing) {
  Json j = rep.header;
  if (rep.has_census) {
    Json c = Json::object();
    for (const auto& row : rep.census) c[row.category] = row.count;
    j["census"] = c;
  }
  Json arr = Json::array();
  for (const auto& r : rep.checks) {
    Json e;
    e["id"] = r.id;
    e["claim"] = r.claim;
    e["paper_anchor"] = r.anchor;
    e["status"] = to_string(r.status);
    e["counts"] = r.counts;
    e["witnesses"] = r.witnesses;
    e["elapsed_ms"] = timing ? Json(r.elapsed_ms) : Json(nullptr);
    arr.push_back(std::move(e));
  }
  j["checks"] = arr;
  Json s;
  s["total"] = rep.checks.size();
  s["passed"] = rep.count(Status::Pass);
  s["failed"] = rep.count(Status::Fail);
  s["skipped"] = rep.count(Status::Skip);
  s["status"] = rep.passed() ? "pass" : "fail";
  j["summary"] = s;
  return j;
}

inline std::string census_csv(const Report& rep) {
  std::ostringstream os;
  os << "category,count,orbit_size,point_type,line_type\n";
  for (const auto& r : rep.census)
    os << r.category << ',' << r.count << ',' << r.orbit_size << ',' << r.point_type << ','
       << r.line_type << '\n';
  return os.str();
}

inline std::string render(const Report& rep, const std::string& format, bool timing) {
  if (format == "json") return report_json(rep, timing).dump(2) + "\n";
  if (format == "csv") {
    std::string out;
    if (rep.has_census) out = census_csv(rep);
    const bool other = std::any_of(rep.checks.begin(), rep.checks.end(),
                                   [](const auto& c) { return c.id.rfind("census.", 0) != 0; });
    if (!rep.has_census || other) {
      if (!out.empty()) out += '\n';
      out += "check,status\n";
      for (const auto& c : rep.checks) out += c.id + "," + std::string(to_string(c.status)) + "\n";
    }
    return out;
  }
  std::ostringstream os;
  const auto& fld = rep.header["field"];
  os << kToolName << ' ' << kToolVersion << "  q=" << fld["q"].get<std::uint32_t>()
     << " seed=" << rep.header["config"]["seed"].get<std::uint64_t>() << '\n';
  if (rep.has_census) {
    for (const auto& r : rep.census) os << "  " << r.category << ": " << r.count << '\n';
  }
  for (const auto& c : rep.checks) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
    os << tag << "  " << c.id << "  " << c.claim;
    if (timing) os << "  (" << static_cast<long long>(c.elapsed_ms) << " ms)";
    os << '\n';
    for (const auto& w : c.witnesses) os << "      " << w << '\n';
  }
  os << rep.count(Status::Pass) << " passed, " << rep.count(Status::Fail) << " failed, "
     << rep.count(Status::Skip) << " skipped\n";
  return os.str();
}

}  // namespace figplane
