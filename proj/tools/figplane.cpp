// figplane: verification harness for PG(2,q^3), orb(S_T) and FIG(q^3).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "figplane/report.hpp"

using namespace figplane;

namespace {

struct Options {
  std::uint64_t q = 3;
  std::string suite = "default";
  std::string check;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  bool full_pairs = false;
  bool timing = false;
  std::string emit_plane;
  std::int64_t theta_log = 0;
  std::string side = "T";
};

RunConfig to_config(const Options& o) {
  const auto [p, k] = field_params(o.q);
  RunConfig cfg;
  cfg.p = p;
  cfg.k = k;
  cfg.suite = o.suite;
  cfg.check = o.check;
  cfg.format = o.format;
  cfg.jobs = o.jobs;
  cfg.seed = o.seed;
  cfg.full_pairs = o.full_pairs;
  cfg.timing = o.timing;
  return cfg;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--q", o.q, "base field order q (prime power)")->required();
  sub->add_option("--format", o.format, "json, csv or text");
  sub->add_option("--jobs", o.jobs, "worker threads");
  sub->add_option("--seed", o.seed, "seed for sampled checks");
  sub->add_flag("--timing", o.timing, "record elapsed time per check");
}

int emit(const Report& rep, const RunConfig& cfg) {
  std::cout << render(rep, cfg.format, cfg.timing);
  return rep.exit_code();
}

Side parse_side(const std::string& s) {
  if (s == "T") return Side::T;
  if (s == "T^phi" || s == "Tphi") return Side::TPhi;
  if (s == "T^phi^2" || s == "Tphi2") return Side::TPhi2;
  throw UsageError("unknown side: " + s + " (use T, Tphi or Tphi2)");
}

int list_points(const Options& o, bool plane) {
  RunConfig cfg = to_config(o);
  validate(cfg);
  const FieldCtx f(cfg.p, cfg.k);
  const ProjectivePlane pg(f);
  const Elem theta = pg.field().tau_pow(o.theta_log);
  const Side side = parse_side(o.side);
  Json j;
  j["q"] = pg.q();
  j["theta_log"] = o.theta_log;
  j["side"] = to_string(side);
  j["norm_class"] = pg.field().norm(theta).v;
  Json pts = Json::array();
  if (plane) {
    const SubplaneSet B = side_plane(pg, theta, side);
    for (PointId p : B.points) pts.push_back(to_string(pg.point(p)));
    Json lines = Json::array();
    for (LineId l : B.lines) lines.push_back(to_string(pg.line(l)));
    j["points"] = pts;
    j["lines"] = lines;
  } else {
    for (PointId p : sls_points(pg, theta, side)) pts.push_back(to_string(pg.point(p)));
    j["points"] = pts;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for PG(2,q^3), the S_T orbit partition and the Figueroa plane"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  add_common(verify, o);
  verify->add_option("--suite", o.suite, "default, census, maps, figueroa or all");
  verify->add_option("--check", o.check, "restrict to one check group or id");
  verify->add_flag("--full-pairs", o.full_pairs, "exhaustive pair check for the axioms");

  auto* census = app.add_subcommand("census", "orbit census of orb(S_T)");
  add_common(census, o);

  auto* maps = app.add_subcommand("maps", "mu, projection, splash and fixed planes");
  add_common(maps, o);
  maps->add_option("--check", o.check, "mu, pr-sp, vertices or fixed");

  auto* fig = app.add_subcommand("figueroa", "Fig-blocks and the Figueroa plane");
  add_common(fig, o);
  fig->add_option("--check", o.check,
                  "build, axioms, pr, arching, theorem16, even-structure or sp-mu");
  fig->add_flag("--full-pairs", o.full_pairs, "exhaustive pair check for the axioms");
  fig->add_option("--emit-plane", o.emit_plane, "write the blocks of FIG(q^3) to a file");

  auto* sls = app.add_subcommand("sls", "points of the T-sls S_theta, theta = tau^e");
  add_common(sls, o);
  sls->add_option("--theta", o.theta_log, "exponent e of theta");
  sls->add_option("--side", o.side, "T, Tphi or Tphi2");

  auto* tplane = app.add_subcommand("tplane", "points and lines of the T-plane Pi_theta");
  add_common(tplane, o);
  tplane->add_option("--theta", o.theta_log, "exponent e of theta");
  tplane->add_option("--side", o.side, "T, Tphi or Tphi2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*sls) return list_points(o, false);
    if (*tplane) return list_points(o, true);

    RunConfig cfg = to_config(o);
    if (*census) cfg.suite = "census";
    if (*maps) cfg.suite = "maps";
    if (*fig) cfg.suite = "figueroa";
    validate(cfg);
    const Workspace ws(cfg.p, cfg.k, cfg.jobs);
    const Report rep = run_report(ws, cfg);
    if (*fig && !o.emit_plane.empty()) {
      std::ofstream out(o.emit_plane);
      if (!out) throw UsageError("cannot write " + o.emit_plane);
      out << emit_plane_text(build_fig_plane(ws), ws.q());
    }
    return emit(rep, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
