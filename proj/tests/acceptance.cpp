// Acceptance run: one PASS/FAIL line per criterion. Expected values are
// pinned literals; timings are wall clock on the build machine.
//
//   acceptance              all criteria
//   acceptance --criterion N

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "figplane/report.hpp"
#include "oracle.hpp"

using namespace figplane;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok: " : "FAILED: ") + what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

// Workspaces are shared between criteria; the build time of each is kept for
// the timing requirements.
struct Built {
  std::unique_ptr<Workspace> ws;
  double seconds = 0;
};

const Workspace& workspace(std::uint32_t q, double* build_seconds = nullptr) {
  static std::map<std::uint32_t, Built> cache;
  auto it = cache.find(q);
  if (it == cache.end()) {
    const auto [p, k] = field_params(q);
    const auto t0 = Clock::now();
    Built b;
    b.ws = std::make_unique<Workspace>(p, k);
    b.seconds = seconds_since(t0);
    it = cache.emplace(q, std::move(b)).first;
  }
  if (build_seconds) *build_seconds = it->second.seconds;
  return *it->second.ws;
}

std::string join_witnesses(const CheckResult& r) {
  std::string s;
  for (const auto& w : r.witnesses) s += (s.empty() ? "" : "; ") + w;
  return s;
}

/// Runs one library check at q and records its outcome.
void run_check(Outcome& out, std::uint32_t q, const char* name,
               void (*fn)(CheckContext&, CheckResult&)) {
  RunConfig cfg;
  const auto [p, k] = field_params(q);
  cfg.p = p;
  cfg.k = k;
  CheckContext ctx(workspace(q), cfg);
  CheckResult r;
  try {
    fn(ctx, r);
  } catch (const std::exception& e) {
    fail(r, std::string("exception: ") + e.what());
  }
  std::string what = std::string(name) + " q=" + std::to_string(q);
  if (r.status == Status::Fail) what += " (" + join_witnesses(r) + ")";
  out.require(r.status == Status::Pass, what);
}

template <class T>
std::string list_text(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------

Outcome c1_census() {
  Outcome o;
  const std::map<std::uint32_t, std::vector<std::int64_t>> full = {
      {3, {3, 3, 3, 1, 21, 21, 9}},
      {4, {3, 3, 6, 1, 57, 57, 74}},
  };
  for (const auto& [q, want] : full) {
    double secs = 0;
    const auto& ws = workspace(q, &secs);
    const auto& c = ws.partition().census;
    const std::vector<std::int64_t> got(c.counts.begin(), c.counts.end());
    o.require(got == want, "q=" + std::to_string(q) + " categories " + list_text(got));
    if (q == 3) {
      o.require(c.orbits == 61, "q=3 orbit total " + std::to_string(c.orbits));
      o.require(secs < 1.0, "q=3 build " + fmt_seconds(secs) + " < 1 s");
    }
  }
  double secs = 0;
  const auto& c5 = workspace(5, &secs).partition().census;
  const std::vector<std::int64_t> planes5 = {c5.counts[4], c5.counts[5], c5.counts[6]};
  o.require(planes5 == std::vector<std::int64_t>{117, 117, 261},
            "q=5 plane categories " + list_text(planes5));
  o.require(secs < 30.0, "q=5 build " + fmt_seconds(secs) + " < 30 s");
  return o;
}

Outcome c2_types() {
  Outcome o;
  const std::map<std::uint32_t, std::array<std::uint64_t, 3>> want = {
      {3, {13, 312, 432}}, {4, {21, 1260, 2880}}, {5, {31, 3720, 12000}}};
  for (const auto& [q, w] : want) {
    const auto& ws = workspace(q);
    std::array<std::uint64_t, 3> pts{}, lns{};
    for (ObjType t : ws.types().points) ++pts[static_cast<int>(t) - 1];
    for (ObjType t : ws.types().lines) ++lns[static_cast<int>(t) - 1];
    o.require(pts == w, "q=" + std::to_string(q) + " point types " +
                            list_text(std::vector<std::uint64_t>(pts.begin(), pts.end())));
    o.require(lns == w, "q=" + std::to_string(q) + " line types " +
                            list_text(std::vector<std::uint64_t>(lns.begin(), lns.end())));
  }
  // independent orbit geometry on every point
  for (std::uint32_t q : {3u, 4u}) {
    const auto& ws = workspace(q);
    const auto& pg = ws.pg();
    const auto& f = pg.field();
    const auto rf = oracle::ref_field(f);
    std::uint64_t mismatches = 0;
    for (PointId id = 0; id < pg.num_points(); ++id) {
      const Point P = pg.point(id);
      const oracle::RTriple t{oracle::to_ref(rf, f, P.c[0]), oracle::to_ref(rf, f, P.c[1]),
                              oracle::to_ref(rf, f, P.c[2])};
      mismatches += oracle::orbit_geometry_type(rf, q, t) != static_cast<int>(ws.types().of(id));
    }
    o.require(mismatches == 0, "q=" + std::to_string(q) + " rank types agree with orbit geometry (" +
                                   std::to_string(mismatches) + " mismatches)");
  }
  return o;
}

Outcome c3_e11() {
  Outcome o;
  for (std::uint32_t q : {3u, 4u, 5u}) run_check(o, q, "10^4 seeded samples", check_e11);
  return o;
}

Outcome c4_fixed() {
  Outcome o;
  const std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> want = {
      {3, {1, 0}}, {4, {3, 2}}, {5, {1, 0}}, {7, {3, 2}}};
  for (const auto& [q, w] : want) {
    const auto& ws = workspace(q);
    const std::size_t phi = scan_phi_fixed(ws).size(), mu = scan_mu_fixed(ws).size();
    o.require(phi == w.first && mu == w.second,
              "q=" + std::to_string(q) + " scan (" + std::to_string(phi) + "," + std::to_string(mu) + ")");
    o.require(phi_fixed_planes(ws.pg()).size() == phi && mu_fixed_planes(ws.pg()).size() == mu,
              "q=" + std::to_string(q) + " closed forms agree with scan");
    run_check(o, q, "phi-fixed plane list", check_phi_fixed);
    run_check(o, q, "mu-fixed plane list", check_mu_fixed);
  }
  return o;
}

Outcome c5_mu() {
  Outcome o;
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto& ws = workspace(q);
    const auto& pg = ws.pg();
    const auto& f = pg.field();
    bool ok = true;
    for (Elem theta : norm_class_reps(f)) {
      if (f.norm(theta) == kOne) continue;
      const auto B = t_plane(pg, theta);
      const auto ml = mu_on_plane_lines(ws, B);
      const auto mp = mu_on_plane_points(ws, B);
      ok = ok && ml.kind == MuImageKind::Sls && ml.points == sls_points(pg, f.neg(f.inv(theta)));
      ok = ok && mp.kind == MuImageKind::Pencil && mp.lines == pencil_lines(pg, f.inv(theta));
    }
    o.require(ok, "q=" + std::to_string(q) + " mu on every T-plane with N(theta) != 1");
    run_check(o, q, "mu on all three sides", check_mu_t_planes);
  }
  run_check(o, 3, "mu involution on Type III", check_mu_involution);
  return o;
}

Outcome c6_pr_sp() {
  Outcome o;
  for (std::uint32_t q : {3u, 4u, 5u}) {
    run_check(o, q, "Pr/Sp of T-planes", check_pr_sp_t_planes);
    run_check(o, q, "parity table", check_pr_sp_parity);
  }
  return o;
}

Outcome c7_vertex_lemma() {
  Outcome o;
  for (std::uint32_t q : {3u, 4u}) run_check(o, q, "vertices in T-planes", check_vertex_lemma);
  return o;
}

Outcome c8_vertex_census() {
  Outcome o;
  const std::map<std::uint32_t, std::uint64_t> totals = {{3, 14}, {4, 43}, {5, 94}};
  for (const auto& [q, want] : totals) {
    const auto& ws = workspace(q);
    const auto vc = vertex_census(ws, t_plane(ws.pg(), kOne));
    std::vector<std::size_t> per;
    for (const auto& v : vc.vertices) per.push_back(v.size());
    o.require(vc.total() == want, "q=" + std::to_string(q) + " total " +
                                      std::to_string(vc.total()) + " per sls " + list_text(per));
    run_check(o, q, "per-sls distribution", check_vertex_census);
  }
  return o;
}

Outcome c9_pr_fig() {
  Outcome o;
  const std::map<std::uint32_t, std::size_t> sizes = {{3, 28}, {4, 65}, {5, 64}};
  for (const auto& [q, want] : sizes) {
    const auto got = pr_fig_block(workspace(q), Side::T).size();
    o.require(got == want, "q=" + std::to_string(q) + " |Pr(Fig(T))| = " + std::to_string(got));
  }
  o.require(pr_fig_block(workspace(4), Side::T) == workspace(4).pg().points_on(kFrame.m_T),
            "q=4 Pr(Fig(T)) is all of m_T");
  for (std::uint32_t q : {3u, 4u}) {
    const auto& pg = workspace(q).pg();
    PointSet want = pg.points_on(kFrame.m_T);
    const PointSet S1 = sls_points(pg, kOne);
    PointSet drop = S1;
    drop.push_back(pg.T_phi2());
    sort_unique(drop);
    PointSet rest;
    std::set_difference(want.begin(), want.end(), drop.begin(), drop.end(), std::back_inserter(rest));
    const PointSet got = pr_fig_block(workspace(q), Side::TPhi);
    std::string what = "q=" + std::to_string(q) + " Pr(Fig(T^phi)) = m_T minus S_1 and T^phi^2";
    if (got != rest) {
      what += " (image has " + std::to_string(got.size()) + " points; contains T^phi: " +
              (contains(got, pg.T_phi()) ? "yes" : "no") + ", contains T^phi^2: " +
              (contains(got, pg.T_phi2()) ? "yes" : "no") + ")";
    }
    o.require(got == rest, what);
  }
  return o;
}

Outcome c10_arching() {
  Outcome o;
  const auto a4 = arching_census(workspace(4));
  o.require(a4 == std::vector<int>{1, 1, 1}, "q=4 " + list_text(a4));
  const auto a3 = arching_census(workspace(3));
  o.require(a3 == std::vector<int>{2, 0}, "q=3 " + list_text(a3));
  auto a5 = arching_census(workspace(5));
  const std::string raw = list_text(a5);
  std::sort(a5.rbegin(), a5.rend());
  o.require(a5 == std::vector<int>{2, 2, 0, 0}, "q=5 multiset " + list_text(a5) +
                                                    ", norm-class order " + raw);
  return o;
}

Outcome c11_axioms() {
  Outcome o;
  struct Case {
    std::uint32_t q;
    std::size_t blocks, size;
    double limit;
  };
  for (const Case& c : {Case{3, 757, 28, 10.0}, Case{4, 4161, 65, 180.0}}) {
    const auto& ws = workspace(c.q);
    const auto t0 = Clock::now();
    const auto plane = build_fig_plane(ws);
    const auto rep = check_axioms(plane);
    const double secs = seconds_since(t0);
    const bool sizes = plane.blocks.size() == c.blocks &&
                       std::all_of(plane.blocks.begin(), plane.blocks.end(),
                                   [&](const PointSet& b) { return b.size() == c.size; });
    const std::string tag = "FIG(" + std::to_string(c.q * c.q * c.q) + ")";
    o.require(sizes, tag + ": " + std::to_string(plane.blocks.size()) + " blocks of size " +
                         std::to_string(c.size));
    o.require(rep.pass() && !rep.sampled,
              tag + ": all point pairs on one block, all block pairs meet once (" +
                  std::to_string(rep.point_pairs_checked) + " point pairs, " +
                  std::to_string(rep.block_pairs_checked) + " block pairs)");
    o.require(secs < c.limit, tag + " build and check " + fmt_seconds(secs) + " < " +
                                  fmt_seconds(c.limit));
  }
  auto plane = build_fig_plane(workspace(3));
  std::size_t i = 0;
  while (plane.kinds[i] != BlockKind::FigBlock) ++i;
  const auto& pg = workspace(3).pg();
  plane.blocks[i] = pg.points_on(pg.line(plane.keys[i]));
  const auto rep = check_axioms(plane);
  std::string what = "mutation (one Fig-block replaced by its line) is rejected";
  if (!rep.witnesses.empty()) {
    const auto& w = rep.witnesses.front();
    what += " with witness " + w.kind + " " + std::to_string(w.a) + "," + std::to_string(w.b) +
            " multiplicity " + std::to_string(w.multiplicity);
  }
  o.require(!rep.pass() && !rep.witnesses.empty(), what);
  return o;
}

Outcome c12_theorem16() {
  Outcome o;
  for (std::uint32_t q : {3u, 4u}) {
    const auto r = characterize_fig_points(workspace(q));
    o.require(r.equivalence_holds(),
              "q=" + std::to_string(q) + " sls image iff in Fig(T) over " + std::to_string(r.scanned) +
                  " points (" + std::to_string(r.vertex_not_in_block.size()) + " vertices outside, " +
                  std::to_string(r.block_not_vertex.size()) + " block points not vertices)");
  }
  return o;
}

Outcome c13_even() {
  Outcome o;
  for (std::uint32_t q : {4u, 8u}) {
    const auto& ws = workspace(q);
    const auto r = even_structure_check(ws);
    const char* names[3] = {"T", "T^phi", "T^phi^2"};
    for (int v = 0; v < 3; ++v) {
      std::string what = "q=" + std::to_string(q) + " every line through " + names[v] + " (" +
                         std::to_string(r.lines_checked[v]) + " lines)";
      for (const auto& s : r.failures[v])
        what += "; line " + to_string(ws.pg().line(s.line)) + " has " + std::to_string(s.f_points) +
                " of F_T and " + std::to_string(s.e_points) + " of E";
      o.require(r.failures[v].empty(), what);
    }
  }
  return o;
}

Outcome c14_sp_mu() {
  Outcome o;
  for (std::uint32_t q : {3u, 4u}) run_check(o, q, "Sp o mu_pt on F_T", check_sp_mu);
  o.require(sp_mu_image(workspace(4)).image.size() == 44, "q=4 image has 44 points");
  return o;
}

Outcome c15_determinism() {
  Outcome o;
  for (std::uint32_t q : {3u, 4u}) {
    RunConfig cfg;
    const auto [p, k] = field_params(q);
    cfg.p = p;
    cfg.k = k;
    cfg.suite = "all";
    const std::string a = render(cmd_verify(cfg), "json", false);
    const std::string b = render(cmd_verify(cfg), "json", false);
    o.require(a == b, "q=" + std::to_string(q) + " two full runs are byte-identical (" +
                          std::to_string(a.size()) + " bytes)");
  }
  return o;
}

struct Criterion {
  int n;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "orbit census", c1_census},
      {2, "point and line type counts", c2_types},
      {3, "norm/determinant identity fuzz", c3_e11},
      {4, "phi-fixed and mu-fixed planes", c4_fixed},
      {5, "mu action on T-planes", c5_mu},
      {6, "projection and splash of T-planes", c6_pr_sp},
      {7, "vertex projection lemma", c7_vertex_lemma},
      {8, "projection-vertex census of P_{2,q}", c8_vertex_census},
      {9, "projection of Fig-blocks", c9_pr_fig},
      {10, "arching census", c10_arching},
      {11, "Figueroa plane axioms", c11_axioms},
      {12, "Fig(T) characterised by projection vertices", c12_theorem16},
      {13, "even-q line structure", c13_even},
      {14, "Sp o mu bijection", c14_sp_mu},
      {15, "determinism", c15_determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.n != only) continue;
    ++ran;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.n << ": " << c.title << " ["
              << fmt_seconds(secs) << "]\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    failed += !o.pass;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
