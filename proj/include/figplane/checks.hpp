#pragma once

// Registry of verification checks. Each check recomputes one statement about
// PG(2,q^3), orb(S_T) or FIG(q^3) from scratch and records counts and, on
// failure, witnesses in coordinate syntax.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "figplane/figueroa.hpp"
#include "figplane/geometry_maps.hpp"
#include "figplane/workspace.hpp"

namespace figplane {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::uint32_t p = 3, k = 1;
  std::string suite = "default";  // default | census | maps | figueroa | all
  std::string check;              // empty: every check of the selected suites
  std::string format = "json";    // json | csv | text
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  bool full_pairs = false;
  bool timing = false;

  std::uint32_t q() const {
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < k; ++i) v *= p;
    return v;
  }
};

enum class Status : std::uint8_t { Pass, Fail, Skip };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  std::string group;
  std::string claim;
  std::string anchor;
  Status status = Status::Pass;
  Json counts = Json::object();
  std::vector<std::string> witnesses;
  double elapsed_ms = 0;
};

/// Lazily shared objects for one run.
class CheckContext {
 public:
  CheckContext(const Workspace& ws, const RunConfig& cfg) : ws_(ws), cfg_(cfg) {}

  const Workspace& ws() const { return ws_; }
  const ProjectivePlane& pg() const { return ws_.pg(); }
  const FieldCtx& f() const { return ws_.field(); }
  const RunConfig& cfg() const { return cfg_; }
  std::uint32_t q() const { return ws_.q(); }

  const FigBlock& fig_T() {
    if (!fig_T_) fig_T_ = std::make_unique<FigBlock>(fig_block(ws_, kFrame.T));
    return *fig_T_;
  }
  const IncidencePlane& fig_plane() {
    if (!plane_) plane_ = std::make_unique<IncidencePlane>(build_fig_plane(ws_));
    return *plane_;
  }
  const VertexCensus& p2q_vertices() {
    if (!p2q_census_) p2q_census_ = std::make_unique<VertexCensus>(vertex_census(ws_, t_plane(pg(), kOne)));
    return *p2q_census_;
  }

  std::string P(PointId id) const { return "(" + to_string(pg().point(id)) + ")"; }
  std::string L(LineId id) const { return to_string(pg().line(id)); }

 private:
  const Workspace& ws_;
  const RunConfig& cfg_;
  std::unique_ptr<FigBlock> fig_T_;
  std::unique_ptr<IncidencePlane> plane_;
  std::unique_ptr<VertexCensus> p2q_census_;
};

inline constexpr std::size_t kMaxWitnesses = 5;

/// Appends a witness and marks the result failed.
inline void fail(CheckResult& r, std::string witness) {
  r.status = Status::Fail;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(witness));
}

inline void expect(CheckResult& r, bool ok, const std::string& witness) {
  if (!ok) fail(r, witness);
}

/// Compares two point sets, reporting a few points from each side of the
/// symmetric difference.
inline bool expect_same_points(CheckContext& c, CheckResult& r, const PointSet& got,
                               const PointSet& want, const std::string& what) {
  if (got == want) return true;
  PointSet missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  std::string w = what + ": got " + std::to_string(got.size()) + " points, want " +
                  std::to_string(want.size());
  if (!missing.empty()) w += "; missing " + c.P(missing.front());
  if (!extra.empty()) w += "; extra " + c.P(extra.front());
  fail(r, w);
  return false;
}

inline std::string theta_text(const FieldCtx& f, Elem theta) {
  return "theta=tau^" + std::to_string(f.log(theta));
}

inline PointSet union_of(std::initializer_list<const PointSet*> parts) {
  PointSet out;
  for (const auto* s : parts) out.insert(out.end(), s->begin(), s->end());
  sort_unique(out);
  return out;
}

inline PointSet minus(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// census suite

inline void check_categories(CheckContext& c, CheckResult& r) {
  const auto want = expected_census(c.q());
  const auto& got = c.ws().partition().census;
  std::int64_t orbits = 0;
  for (std::size_t i = 0; i < kNumCategories; ++i) {
    const auto name = std::string(category_name(static_cast<Category>(i)));
    r.counts[name] = got.counts[i];
    orbits += want[i];
    expect(r, got.counts[i] == want[i],
           name + ": got " + std::to_string(got.counts[i]) + ", want " + std::to_string(want[i]));
  }
  r.counts["orbits"] = got.orbits;
  expect(r, got.orbits == orbits, "orbit total " + std::to_string(got.orbits));
}

inline void check_orbit_sizes(CheckContext& c, CheckResult& r) {
  const auto& part = c.ws().partition();
  const std::uint32_t big = c.f().norm_exponent();
  std::uint64_t covered = 0;
  for (const auto& cls : part.classes) {
    covered += cls.members.size();
    expect(r, cls.members.size() == 1 || cls.members.size() == big,
           "orbit of " + c.P(cls.representative) + " has size " + std::to_string(cls.members.size()));
    for (PointId m : cls.members)
      if (c.ws().types().of(m) != cls.point_type) {
        fail(r, "orbit of " + c.P(cls.representative) + " mixes types at " + c.P(m));
        break;
      }
  }
  r.counts["points_covered"] = covered;
  expect(r, covered == c.pg().num_points(), "orbits cover " + std::to_string(covered) + " points");
}

inline void type_counts(CheckResult& r, const char* what, const std::vector<ObjType>& table,
                        std::uint64_t q) {
  std::uint64_t n[4] = {0, 0, 0, 0};
  for (ObjType t : table) ++n[static_cast<int>(t)];
  const std::uint64_t total = q * q * q * q * q * q + q * q * q + 1;
  const std::uint64_t want1 = q * q + q + 1;
  const std::uint64_t want2 = (q * q * q - q) * (q * q + q + 1);
  r.counts[std::string(what) + "_type_i"] = n[1];
  r.counts[std::string(what) + "_type_ii"] = n[2];
  r.counts[std::string(what) + "_type_iii"] = n[3];
  expect(r, n[1] == want1, std::string(what) + " Type I count " + std::to_string(n[1]));
  expect(r, n[2] == want2, std::string(what) + " Type II count " + std::to_string(n[2]));
  expect(r, n[3] == total - want1 - want2,
         std::string(what) + " Type III count " + std::to_string(n[3]));
}

inline void check_point_types(CheckContext& c, CheckResult& r) {
  type_counts(r, "point", c.ws().types().points, c.q());
}

inline void check_line_types(CheckContext& c, CheckResult& r) {
  type_counts(r, "line", c.ws().types().lines, c.q());
}

inline void check_e11(CheckContext& c, CheckResult& r) {
  const auto& f = c.f();
  std::mt19937_64 rng(c.cfg().seed);
  std::uniform_int_distribution<std::uint32_t> nz(1, f.size() - 1);
  constexpr int kSamples = 10'000;
  for (int i = 0; i < kSamples; ++i) {
    const Point P{{Elem{nz(rng)}, Elem{nz(rng)}, Elem{nz(rng)}}};
    expect(r, e11_identity_check(f, P), "identity fails at (" + to_string(P) + ")");
  }
  r.counts["samples"] = kSamples;
}

inline ObjType uniform_point_type(CheckContext& c, const PointSet& pts) {
  const ObjType t = c.ws().types().of(pts.front());
  for (PointId p : pts)
    if (c.ws().types().of(p) != t) throw InconsistencyError("mixed point types in a T-sls");
  return t;
}

inline void check_pencil_types(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  int type_ii_pencils = 0, type_ii_sls = 0;
  int ii_pencil_on_ii_sls = 0, iii_pencil_on_ii_sls = 0, ii_pencil_on_iii_sls = 0;
  for (Elem theta : norm_class_reps(c.f())) {
    const ObjType lt = pencil_type(pg, theta);
    const ObjType pt = uniform_point_type(c, sls_points(pg, theta));
    type_ii_pencils += lt == ObjType::II;
    type_ii_sls += pt == ObjType::II;
    ii_pencil_on_ii_sls += lt == ObjType::II && pt == ObjType::II;
    iii_pencil_on_ii_sls += lt == ObjType::III && pt == ObjType::II;
    ii_pencil_on_iii_sls += lt == ObjType::II && pt == ObjType::III;
  }
  r.counts["type_ii_pencils"] = type_ii_pencils;
  r.counts["type_ii_sls"] = type_ii_sls;
  r.counts["type_ii_pencil_on_type_ii_sls"] = ii_pencil_on_ii_sls;
  r.counts["type_iii_pencil_on_type_ii_sls"] = iii_pencil_on_ii_sls;
  expect(r, type_ii_pencils == 1, "Type II pencils: " + std::to_string(type_ii_pencils));
  expect(r, type_ii_sls == 1, "Type II T-slses: " + std::to_string(type_ii_sls));
  if (c.q() % 2 == 0) {
    expect(r, ii_pencil_on_ii_sls == 1, "q even: the Type II pencil does not meet the Type II sls");
  } else {
    expect(r, ii_pencil_on_iii_sls == 1, "q odd: the Type II pencil does not meet a Type III sls");
    expect(r, iii_pencil_on_ii_sls == 1,
           "q odd: Type III pencils on the Type II sls: " + std::to_string(iii_pencil_on_ii_sls));
  }
}

inline void check_t_planes(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& part = c.ws().partition();
  int subplanes = 0;
  for (Elem theta : norm_class_reps(c.f())) {
    const SubplaneSet B = t_plane(pg, theta);
    const bool sub = is_subplane(pg, B);
    subplanes += sub;
    expect(r, sub, "Pi is not a subplane for " + theta_text(c.f(), theta));
    const auto& cls = part.containing(B.points.front());
    expect(r, cls.members == B.points,
           "Pi is not an S_T-orbit for " + theta_text(c.f(), theta));
    expect(r, plane_class_lines(pg, cls) == B.lines,
           "line set of Pi differs from its orbit's lines for " + theta_text(c.f(), theta));
    if (theta == kOne)
      expect(r, cls.category == Category::P2q, "Pi_1 is not the Type I plane P_{2,q}");
  }
  r.counts["t_planes"] = subplanes;
}

// ---------------------------------------------------------------------------
// maps suite

inline void check_mu_involution(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& f = c.f();
  std::uint64_t pts = 0, lines = 0;
  for (PointId p = 0; p < pg.num_points(); ++p) {
    if (c.ws().types().of(p) != ObjType::III) continue;
    ++pts;
    const Line m = mu_pt(f, pg.point(p));
    expect(r, classify_type(f, m) == ObjType::III, "mu_pt image not Type III at " + c.P(p));
    expect(r, mu_line(f, m) == pg.point(p), "mu_line(mu_pt(P)) != P at " + c.P(p));
  }
  for (LineId l = 0; l < pg.num_lines(); ++l) {
    if (c.ws().types().of_line(l) != ObjType::III) continue;
    ++lines;
    const Point X = mu_line(f, pg.line(l));
    expect(r, classify_type(f, X) == ObjType::III, "mu_line image not Type III at " + c.L(l));
    expect(r, mu_pt(f, X) == pg.line(l), "mu_pt(mu_line(l)) != l at " + c.L(l));
  }
  const bool frame = mu_pt(f, kFrame.T) == kFrame.m_T;
  expect(r, frame, "T^mu != m_T");
  r.counts["type_iii_points"] = pts;
  r.counts["type_iii_lines"] = lines;
}

/// mu commutes with phi and with the generator psi_tau of S_T, on every
/// Type III point and line.
inline void check_mu_equivariance(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& f = c.f();
  const auto& types = c.ws().types();
  const Elem t = f.tau();
  std::uint64_t checked = 0;
  for (PointId p = 0; p < pg.num_points(); ++p) {
    if (types.of(p) != ObjType::III) continue;
    ++checked;
    const Point P = pg.point(p);
    const Line m = mu_pt(f, P);
    expect(r, mu_pt(f, apply_phi(f, P)) == apply_phi(f, m), "mu_pt and phi at " + c.P(p));
    expect(r, mu_pt(f, apply_psi(f, t, P)) == apply_psi(f, t, m), "mu_pt and psi at " + c.P(p));
  }
  for (LineId l = 0; l < pg.num_lines(); ++l) {
    if (types.of_line(l) != ObjType::III) continue;
    ++checked;
    const Line L = pg.line(l);
    const Point X = mu_line(f, L);
    expect(r, mu_line(f, apply_phi(f, L)) == apply_phi(f, X), "mu_line and phi at " + c.L(l));
    expect(r, mu_line(f, apply_psi(f, t, L)) == apply_psi(f, t, X), "mu_line and psi at " + c.L(l));
  }
  r.counts["objects_checked"] = checked;
}

/// mu_line(Pi_theta) = S_{-1/theta}, mu_pt(Pi_theta) = T S_{1/theta} for
/// N(theta) != 1, and the phi-conjugate statements on the other sides.
inline void check_mu_t_planes(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& f = c.f();
  int planes = 0;
  const Side sides[3] = {Side::T, Side::TPhi, Side::TPhi2};
  for (Elem theta : norm_class_reps(f)) {
    if (f.norm(theta) == kOne) continue;
    for (unsigned s = 0; s < 3; ++s) {
      const SubplaneSet B = side_plane(pg, theta, sides[s]);
      ++planes;
      const MuImage ml = mu_on_plane_lines(c.ws(), B);
      const PointSet want_pts = sls_points(pg, f.neg(f.inv(theta)), sides[s]);
      expect_same_points(c, r, ml.points, want_pts,
                         "mu_line on side " + std::string(to_string(sides[s])) + " plane, " +
                             theta_text(f, theta));
      const MuImage mp = mu_on_plane_points(c.ws(), B);
      LineSet want_lines = pencil_lines(pg, f.inv(theta));
      for (auto& l : want_lines) l = pg.id(apply_phi(f, pg.line(l), s));
      sort_unique(want_lines);
      expect(r, mp.lines == want_lines && mp.kind == MuImageKind::Pencil,
             "mu_pt on side " + std::string(to_string(sides[s])) + " plane is not T S_{1/theta}, " +
                 theta_text(f, theta));
    }
  }
  r.counts["planes"] = planes;
}

/// mu maps the other qualifying plane classes onto F_q-planes of orb(S_T).
inline void check_mu_orbit_planes(CheckContext& c, CheckResult& r) {
  const auto& part = c.ws().partition();
  const auto& pg = c.pg();
  std::vector<char> special(part.classes.size(), 0);
  for (Elem theta : norm_class_reps(c.f()))
    for (Side s : {Side::T, Side::TPhi, Side::TPhi2})
      special[part.class_of[side_plane(pg, theta, s).points.front()]] = 1;
  std::uint64_t line_images = 0, point_images = 0;
  for (std::uint32_t i = 0; i < part.classes.size(); ++i) {
    const auto& cls = part.classes[i];
    if (!is_plane_category(cls.category) || special[i]) continue;
    const SubplaneSet B = class_as_plane(c.ws(), i);
    if (cls.line_type == ObjType::III) {
      ++line_images;
      const MuImage img = mu_on_plane_lines(c.ws(), B);
      expect(r, img.kind == MuImageKind::PlanePoints,
             "mu_line image of the plane through " + c.P(cls.representative) +
                 " is not an orbit plane");
    }
    if (cls.point_type == ObjType::III) {
      ++point_images;
      const MuImage img = mu_on_plane_points(c.ws(), B);
      expect(r, img.kind == MuImageKind::PlaneLines,
             "mu_pt image of the plane through " + c.P(cls.representative) +
                 " is not an orbit plane's line set");
    }
  }
  r.counts["mu_line_planes"] = line_images;
  r.counts["mu_pt_planes"] = point_images;
}

inline void check_pr_sp_t_planes(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& f = c.f();
  for (Elem theta : norm_class_reps(f)) {
    const SubplaneSet B = t_plane(pg, theta);
    const Elem t2 = f.mul(theta, theta);
    expect_same_points(c, r, pr_set(pg, B).points, sls_points(pg, t2),
                       "Pr(Pi) vs S_{theta^2}, " + theta_text(f, theta));
    expect_same_points(c, r, sp_set(pg, B).points, sls_points(pg, f.neg(t2)),
                       "Sp(Pi) vs S_{-theta^2}, " + theta_text(f, theta));
  }
  r.counts["t_planes"] = norm_class_reps(f).size();
}

inline void check_pr_sp_parity(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& f = c.f();
  const SubplaneSet P2q = t_plane(pg, kOne);
  const PointSet S1 = sls_points(pg, kOne);
  expect_same_points(c, r, pr_set(pg, P2q).points, S1, "Pr(P_{2,q}) vs S_1");
  if (c.q() % 2 == 0) {
    expect_same_points(c, r, sp_set(pg, P2q).points, S1, "Sp(P_{2,q}) vs S_1");
  } else {
    const SubplaneSet Pm = t_plane(pg, f.minus_one());
    const PointSet Sm = sls_points(pg, f.minus_one());
    expect_same_points(c, r, pr_set(pg, Pm).points, S1, "Pr(Pi_{-1}) vs S_1");
    expect_same_points(c, r, sp_set(pg, P2q).points, Sm, "Sp(P_{2,q}) vs S_{-1}");
    expect_same_points(c, r, sp_set(pg, Pm).points, Sm, "Sp(Pi_{-1}) vs S_{-1}");
  }
  r.counts["q_even"] = c.q() % 2 == 0;
}

/// Lemma on vertices in T-planes: V in Pi_kappa projects Pi_theta onto S_{-kappa theta}
/// whenever N(kappa) != N(theta).
inline void check_vertex_lemma(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& f = c.f();
  std::uint64_t pairs = 0, vertices = 0;
  for (Elem kappa : norm_class_reps(f))
    for (Elem theta : norm_class_reps(f)) {
      if (f.norm(kappa) == f.norm(theta)) continue;
      ++pairs;
      const SubplaneSet B = t_plane(pg, theta);
      const PointSet want = sls_points(pg, f.neg(f.mul(kappa, theta)));
      for (PointId v : t_plane(pg, kappa).points) {
        ++vertices;
        const auto img = project_from_vertex(pg, pg.point(v), B);
        if (img.points != want) {
          fail(r, "V=" + c.P(v) + " in Pi_kappa, kappa=tau^" + std::to_string(f.log(kappa)) +
                      ", " + theta_text(f, theta));
        }
      }
    }
  r.counts["norm_pairs"] = pairs;
  r.counts["vertices"] = vertices;
}

/// Projection from the vertex T agrees with Pr on every plane class.
inline void check_vertex_T(CheckContext& c, CheckResult& r) {
  const auto& part = c.ws().partition();
  std::uint64_t planes = 0;
  for (std::uint32_t i = 0; i < part.classes.size(); ++i) {
    if (!is_plane_category(part.classes[i].category)) continue;
    ++planes;
    const SubplaneSet B = class_as_plane(c.ws(), i);
    const auto a = project_from_vertex(c.pg(), kFrame.T, B);
    const auto b = pr_set(c.pg(), B);
    expect(r, a.points == b.points,
           "plane through " + c.P(part.classes[i].representative));
    expect(r, b.sls.has_value(),
           "Pr of the plane through " + c.P(part.classes[i].representative) + " is not a T-sls");
  }
  r.counts["planes"] = planes;
}

/// Vertex census for P_{2,q}: total q^3-q^2-q-1 and the per-sls distribution.
inline void check_vertex_census(CheckContext& c, CheckResult& r) {
  const auto& f = c.f();
  const auto& vc = c.p2q_vertices();
  const std::uint64_t q = c.q();
  const std::uint64_t n = f.norm_exponent();
  const auto reps = norm_class_reps(f);
  Json per = Json::array();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Elem N = f.norm(reps[i]);
    std::uint64_t want = n;
    if (q % 2 == 0) {
      if (N == kOne) want = 1;
    } else {
      if (N == kOne) want = n + 1;
      else if (N == f.minus_one()) want = 0;
    }
    per.push_back(vc.vertices[i].size());
    expect(r, vc.vertices[i].size() == want,
           "vertices onto S_theta with " + theta_text(f, reps[i]) + ": " +
               std::to_string(vc.vertices[i].size()) + ", want " + std::to_string(want));
  }
  const std::uint64_t want_total = q * q * q - q * q - q - 1;
  r.counts["total"] = vc.total();
  r.counts["per_sls"] = per;
  r.counts["clubs"] = vc.clubs;
  r.counts["scanned"] = vc.scanned;
  expect(r, vc.total() == want_total, "total " + std::to_string(vc.total()) + ", want " +
                                          std::to_string(want_total));
}

/// Per plane and sls the vertex count is 1 or q^2+q+1 (q even), 0, q^2+q+1
/// or q^2+q+2 (q odd); the vertices onto Sp(B) are exactly {T} for q even
/// and none for q odd. All plane classes for q <= 4, T-planes beyond.
inline void check_vertex_admissible(CheckContext& c, CheckResult& r) {
  const auto& part = c.ws().partition();
  const auto& pg = c.pg();
  const std::uint64_t n = c.f().norm_exponent();
  std::vector<std::uint32_t> planes;
  if (c.q() <= 4) {
    for (std::uint32_t i = 0; i < part.classes.size(); ++i)
      if (is_plane_category(part.classes[i].category)) planes.push_back(i);
  } else {
    for (Elem theta : norm_class_reps(c.f()))
      planes.push_back(part.class_of[t_plane(pg, theta).points.front()]);
  }
  for (std::uint32_t i : planes) {
    const SubplaneSet B = class_as_plane(c.ws(), i);
    const VertexCensus vc = vertex_census(c.ws(), B);
    const std::string where = "plane through " + c.P(part.classes[i].representative);
    for (std::size_t s = 0; s < vc.vertices.size(); ++s) {
      const auto k = vc.vertices[s].size();
      const bool ok = c.q() % 2 == 0 ? (k == 1 || k == n) : (k == 0 || k == n || k == n + 1);
      expect(r, ok, where + ": " + std::to_string(k) + " vertices onto sls class " + std::to_string(s));
    }
    const auto sp = sp_set(pg, B);
    if (!sp.sls) {
      fail(r, where + ": splash is not a T-sls");
      continue;
    }
    const auto& onto_sp = vc.vertices[c.ws().norm_class_index(sp.sls->norm_class)];
    if (c.q() % 2 == 0)
      expect(r, onto_sp == PointSet{pg.T()}, where + ": vertices onto Sp(B) are not {T}");
    else
      expect(r, onto_sp.empty(), where + ": " + std::to_string(onto_sp.size()) +
                                     " vertices onto Sp(B), want 0");
  }
  r.counts["planes"] = planes.size();
  r.counts["all_plane_classes"] = c.q() <= 4;
}

inline std::uint32_t gcd3(std::uint32_t q) { return std::gcd(3u, q - 1); }

inline void check_phi_fixed(CheckContext& c, CheckResult& r) {
  const auto scan = scan_phi_fixed(c.ws());
  const auto closed = phi_fixed_planes(c.pg());
  std::vector<std::uint32_t> closed_ids;
  for (const auto& B : closed) closed_ids.push_back(c.ws().partition().class_of[B.points.front()]);
  std::sort(closed_ids.begin(), closed_ids.end());
  r.counts["scan"] = scan.size();
  r.counts["closed_form"] = closed.size();
  expect(r, scan.size() == gcd3(c.q()), "phi-fixed planes: " + std::to_string(scan.size()));
  expect(r, scan == closed_ids, "scan and closed form list different planes");
  for (const auto& B : closed) {
    expect(r, is_subplane(c.pg(), B), "pi_lambda is not a subplane");
    if (B.points != t_plane(c.pg(), kOne).points) {
      const auto& cls = c.ws().partition().containing(B.points.front());
      expect(r, cls.category == Category::IIIPointsIIILines,
             "extra phi-fixed plane through " + c.P(cls.representative) + " is not all Type III");
    }
  }
}

inline void check_mu_fixed(CheckContext& c, CheckResult& r) {
  const auto scan = scan_mu_fixed(c.ws());
  const auto closed = mu_fixed_planes(c.pg());
  std::vector<std::uint32_t> closed_ids;
  for (const auto& B : closed) closed_ids.push_back(c.ws().partition().class_of[B.points.front()]);
  std::sort(closed_ids.begin(), closed_ids.end());
  r.counts["scan"] = scan.size();
  r.counts["closed_form"] = closed.size();
  const std::size_t want = gcd3(c.q()) == 3 ? 2 : 0;
  expect(r, scan.size() == want, "mu-fixed planes: " + std::to_string(scan.size()));
  expect(r, scan == closed_ids, "scan and closed form list different planes");
  Json reps = Json::array();
  for (auto i : scan) reps.push_back(c.P(c.ws().partition().classes[i].representative));
  r.counts["representatives"] = reps;
}

// ---------------------------------------------------------------------------
// figueroa suite

inline void check_block_structure(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& f = c.f();
  const FigBlock& fig = c.fig_T();
  const std::uint64_t q = c.q();
  r.counts["size"] = fig.points.size();
  r.counts["E"] = fig.E.size();
  r.counts["F"] = fig.F.size();
  expect(r, fig.points.size() == q * q * q + 1, "|Fig(T)| = " + std::to_string(fig.points.size()));
  expect(r, fig.E.size() == f.norm_exponent(), "|E_T| = " + std::to_string(fig.E.size()));
  expect(r, !contains(fig.points, pg.T()), "T lies in Fig(T)");
  PointSet want_F{pg.T_phi(), pg.T_phi2()};
  for (Elem theta : norm_class_reps(f)) {
    if (f.norm(theta) == kOne) continue;
    const auto pts = t_plane(pg, theta).points;
    want_F.insert(want_F.end(), pts.begin(), pts.end());
  }
  sort_unique(want_F);
  expect_same_points(c, r, fig.F, want_F, "F_T vs {T^phi, T^phi^2} u T-planes with N != 1");
  PointSet on_line;
  for (PointId p : fig.points)
    if (pg.incident(pg.point(p), kFrame.m_T)) on_line.push_back(p);
  PointSet want_meet = fig.E;
  want_meet.push_back(pg.T_phi());
  want_meet.push_back(pg.T_phi2());
  sort_unique(want_meet);
  expect_same_points(c, r, on_line, want_meet, "Fig(T) meet T^mu");
  r.counts["meet_T_mu"] = on_line.size();
}

/// Blocks and their kinds; Type I/II blocks are PG lines, Fig-blocks are not.
inline void check_plane_build(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const IncidencePlane& plane = c.fig_plane();
  std::uint64_t kinds[3] = {0, 0, 0};
  for (std::size_t i = 0; i < plane.blocks.size(); ++i) {
    const auto& b = plane.blocks[i];
    ++kinds[static_cast<int>(plane.kinds[i])];
    const Line key = pg.line(plane.keys[i]);
    if (plane.kinds[i] != BlockKind::FigBlock) {
      expect(r, b == pg.points_on(key), "block " + std::to_string(i) + " is not the line " + c.L(plane.keys[i]));
      continue;
    }
    // three non-collinear members
    const Line l = pg.join(pg.point(b[0]), pg.point(b[1]));
    const bool collinear = std::all_of(b.begin(), b.end(),
                                       [&](PointId p) { return pg.incident(pg.point(p), l); });
    expect(r, !collinear, "Fig-block replacing " + c.L(plane.keys[i]) + " is a PG line");
  }
  r.counts["points"] = plane.num_points;
  r.counts["blocks"] = plane.blocks.size();
  r.counts["type_i_lines"] = kinds[0];
  r.counts["type_ii_lines"] = kinds[1];
  r.counts["fig_blocks"] = kinds[2];
  expect(r, plane.blocks.size() == pg.num_lines(), "block count");
  const std::uint64_t q = c.q();
  expect(r, kinds[0] == q * q + q + 1, "Type I line count");
  expect(r, kinds[1] == (q * q * q - q) * (q * q + q + 1), "Type II line count");
}

/// Fig(T)^phi = Fig(T^phi) and the block set is closed under phi.
inline void check_phi_equivariance(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& f = c.f();
  const IncidencePlane& plane = c.fig_plane();
  auto image = [&](const PointSet& s) {
    PointSet out;
    for (PointId p : s) out.push_back(pg.id(apply_phi(f, pg.point(p))));
    sort_unique(out);
    return out;
  };
  expect_same_points(c, r, image(c.fig_T().points), fig_block(c.ws(), kFrame.T_phi).points,
                     "Fig(T)^phi vs Fig(T^phi)");
  std::vector<PointSet> blocks = plane.blocks;
  std::sort(blocks.begin(), blocks.end());
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < plane.blocks.size(); ++i) {
    ++checked;
    if (!std::binary_search(blocks.begin(), blocks.end(), image(plane.blocks[i])))
      fail(r, "image of block " + std::to_string(i) + " replacing " + c.L(plane.keys[i]) +
                  " is not a block");
  }
  r.counts["blocks_checked"] = checked;
}

inline void check_axioms_entry(CheckContext& c, CheckResult& r) {
  AxiomOptions opt;
  opt.full_pairs = c.q() <= 4 || c.cfg().full_pairs;
  opt.seed = c.cfg().seed;
  const AxiomReport ax = check_axioms(c.fig_plane(), opt);
  r.counts["blocks"] = c.fig_plane().blocks.size();
  r.counts["sampled"] = ax.sampled;
  r.counts["point_pairs_checked"] = ax.point_pairs_checked;
  r.counts["block_pairs_checked"] = ax.block_pairs_checked;
  r.counts["bad_point_pairs"] = ax.bad_point_pairs;
  r.counts["bad_block_pairs"] = ax.bad_block_pairs;
  expect(r, ax.block_sizes_ok, "some block does not have q^3+1 points");
  expect(r, ax.point_degrees_ok, "some point is not on q^3+1 blocks");
  for (const auto& w : ax.witnesses) {
    if (w.kind == "point_pair")
      fail(r, "points " + c.P(w.a) + " and " + c.P(w.b) + " share " +
                  std::to_string(w.multiplicity) + " blocks");
    else
      fail(r, "blocks replacing " + c.L(c.fig_plane().keys[w.a]) + " and " +
                  c.L(c.fig_plane().keys[w.b]) + " share " + std::to_string(w.multiplicity) +
                  " points");
  }
}

/// Pr(Fig(T)): all of m_T for q even; for q odd T^phi, T^phi^2, S_{-1} and
/// the S_theta with N(theta) a nonzero square.
inline void check_pr_T(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto& f = c.f();
  const PointSet got = pr_fig_block(c.ws(), Side::T);
  PointSet want;
  if (c.q() % 2 == 0) {
    want = pg.points_on(kFrame.m_T);
  } else {
    want = {pg.T_phi(), pg.T_phi2()};
    const PointSet sm = sls_points(pg, f.minus_one());
    want.insert(want.end(), sm.begin(), sm.end());
    for (Elem theta : norm_class_reps(f))
      if (f.is_nonzero_square(f.norm(theta))) {
        const PointSet s = sls_points(pg, theta);
        want.insert(want.end(), s.begin(), s.end());
      }
    sort_unique(want);
  }
  r.counts["image"] = got.size();
  expect_same_points(c, r, got, want, "Pr(Fig(T))");
}

/// Pr(Fig(V)) for V = T^phi, T^phi^2 is m_T minus S_1 and minus V itself.
inline void check_pr_side(CheckContext& c, CheckResult& r, Side which) {
  const auto& pg = c.pg();
  const PointSet got = pr_fig_block(c.ws(), which);
  const PointSet S1 = sls_points(pg, kOne);
  const PointSet V{pg.id(vertex_point(which))};
  const PointSet want = minus(minus(pg.points_on(kFrame.m_T), S1), V);
  r.counts["image"] = got.size();
  expect_same_points(c, r, got, want, "Pr(Fig(" + std::string(to_string(which)) + "))");
}

inline void check_arching(CheckContext& c, CheckResult& r) {
  const auto& f = c.f();
  const auto census = arching_census(c.ws());
  const auto reps = norm_class_reps(f);
  Json arr = Json::array();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    arr.push_back(census[i]);
    int want = 1;
    if (c.q() % 2 == 1) want = f.is_nonzero_square(f.norm(reps[i])) ? 2 : 0;
    expect(r, census[i] == want, "pencil with " + theta_text(f, reps[i]) + " arches over " +
                                     std::to_string(census[i]) + " T-planes, want " +
                                     std::to_string(want));
  }
  r.counts["per_pencil"] = arr;
}

inline void check_theorem16(CheckContext& c, CheckResult& r) {
  const auto rep = characterize_fig_points(c.ws());
  const std::uint64_t q = c.q();
  r.counts["scanned"] = rep.scanned;
  r.counts["in_plane_points"] = rep.in_plane;
  r.counts["vertices_total"] = rep.total_vertices;
  r.counts["t_is_vertex"] = rep.t_is_vertex;
  for (PointId p : rep.vertex_not_in_block) fail(r, "vertex not in Fig(T): " + c.P(p));
  for (PointId p : rep.block_not_vertex) fail(r, "Fig(T) point is not a vertex: " + c.P(p));
  expect(r, rep.t_is_vertex, "T is not a projection vertex");
  expect(r, rep.total_vertices == q * q * q - q * q - q - 1,
         "vertex total " + std::to_string(rep.total_vertices));
}

/// q even: every line through T carries one point of F_T or one of E_T;
/// through T^phi (T^phi^2) the same with E_T^phi (E_T^phi^2), except for the
/// line to T, which carries neither.
inline void check_even_structure(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const auto rep = even_structure_check(c.ws());
  const LineId exempt[3] = {0, pg.id(pg.join(kFrame.T_phi, kFrame.T)),
                            pg.id(pg.join(kFrame.T_phi2, kFrame.T))};
  const char* names[3] = {"T", "T^phi", "T^phi^2"};
  Json lines = Json::array(), bad = Json::array();
  for (int v = 0; v < 3; ++v) {
    lines.push_back(rep.lines_checked[v]);
    bad.push_back(rep.failures[v].size());
    for (const auto& s : rep.failures[v]) {
      if (v > 0 && s.line == exempt[v] && s.f_points == 0 && s.e_points == 0) continue;
      fail(r, std::string("line ") + c.L(s.line) + " through " + names[v] + ": " +
                  std::to_string(s.f_points) + " of F_T, " + std::to_string(s.e_points) + " of E");
    }
    if (v > 0) {
      const bool hit = std::any_of(rep.failures[v].begin(), rep.failures[v].end(),
                                   [&](const auto& s) { return s.line == exempt[v]; });
      expect(r, hit, std::string("line ") + c.L(exempt[v]) + " through " + names[v] +
                         " unexpectedly satisfies the property");
    }
  }
  r.counts["lines_checked"] = lines;
  r.counts["lines_with_neither_or_both"] = bad;
}

inline void check_sp_mu(CheckContext& c, CheckResult& r) {
  const auto& pg = c.pg();
  const SpMuReport rep = sp_mu_image(c.ws());
  const PointSet m_T = pg.points_on(kFrame.m_T);
  const PointSet want = minus(m_T, sls_points(pg, kOne));
  PointSet type_iii;
  for (PointId p : m_T)
    if (c.ws().types().of(p) == ObjType::III) type_iii.push_back(p);
  r.counts["domain"] = rep.domain_size;
  r.counts["image"] = rep.image.size();
  expect(r, rep.injective, "Sp o mu_pt is not injective on F_T");
  expect_same_points(c, r, rep.image, want, "Sp(mu_pt(F_T)) vs m_T \\ S_1");
  const bool equal_iii = rep.image == type_iii;
  r.counts["equals_type_iii_points"] = equal_iii;
  expect(r, equal_iii == (c.q() % 2 == 0), "image equals Type III points of m_T iff q even");
}

// ---------------------------------------------------------------------------
// registry

struct CheckDef {
  const char* id;
  const char* suite;
  const char* group;
  const char* claim;
  const char* anchor;
  std::function<bool(const CheckContext&)> applicable;
  std::function<void(CheckContext&, CheckResult&)> run;
};

inline bool always(const CheckContext&) { return true; }

inline const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = {
      {"census.categories", "census", "categories",
       "orb(S_T) has the closed-form number of orbits in each of the seven categories",
       "orbit census, seven categories", always, check_categories},
      {"census.orbit_sizes", "census", "categories",
       "S_T-orbits have size 1 or q^2+q+1, are type-uniform and partition the points",
       "orbit census, orbit sizes", always, check_orbit_sizes},
      {"census.point_types", "census", "types",
       "Type I/II/III point counts are q^2+q+1, (q^3-q)(q^2+q+1) and the rest",
       "type counts, points", always, check_point_types},
      {"census.line_types", "census", "types",
       "Type I/II/III line counts match the point counts",
       "type counts, lines", always, check_line_types},
      {"census.e11", "census", "e11",
       "Norm(X) - Norm(x) equals det A_P on random points with xyz != 0",
       "norm identity for A_P", always, check_e11},
      {"census.pencil_types", "census", "pencils",
       "T-sls pencil and T-sls types follow the parity table",
       "pencil and sls types", always, check_pencil_types},
      {"census.t_planes", "census", "t-planes",
       "each Pi_theta is an F_q-subplane and an S_T-orbit, Pi_1 = P_{2,q}",
       "T-planes", always, check_t_planes},

      {"maps.mu_involution", "maps", "mu",
       "mu is an involution between Type III points and Type III lines, T^mu = m_T",
       "mu involution", always, check_mu_involution},
      {"maps.mu_equivariance", "maps", "mu",
       "mu commutes with phi and with S_T on Type III points and lines",
       "mu commutes with phi and S_T", always, check_mu_equivariance},
      {"maps.mu_t_planes", "maps", "mu",
       "mu_line(Pi_theta) = S_{-1/theta}, mu_pt(Pi_theta) = T S_{1/theta} for N(theta) != 1, on all three sides",
       "mu on T-planes", always, check_mu_t_planes},
      {"maps.mu_orbit_planes", "maps", "mu",
       "mu maps the remaining qualifying orbit planes onto orbit planes",
       "mu on orbit planes", always, check_mu_orbit_planes},
      {"maps.pr_sp_t_planes", "maps", "pr-sp",
       "Pr(Pi_theta) = S_{theta^2} and Sp(Pi_theta) = S_{-theta^2}",
       "projection and splash of T-planes", always, check_pr_sp_t_planes},
      {"maps.pr_sp_parity", "maps", "pr-sp",
       "S_1 = Pr(P_{2,q}) = Sp(P_{2,q}) for q even; S_1 = Pr(P_{2,q}) = Pr(Pi_{-1}), S_{-1} = Sp(P_{2,q}) = Sp(Pi_{-1}) for q odd",
       "projection and splash of P_{2,q}", always, check_pr_sp_parity},
      {"maps.vertex_lemma", "maps", "vertices",
       "every V in Pi_kappa projects Pi_theta onto S_{-kappa theta} when N(kappa) != N(theta)",
       "vertices in T-planes", always, check_vertex_lemma},
      {"maps.vertex_T", "maps", "vertices",
       "projection from the vertex T equals Pr on every orbit plane",
       "vertex T", always, check_vertex_T},
      {"maps.vertex_census", "maps", "vertices",
       "P_{2,q} has q^3-q^2-q-1 projection vertices with the parity distribution over T-slses",
       "projection vertices of P_{2,q}", always, check_vertex_census},
      {"maps.vertex_admissible", "maps", "vertices",
       "vertex counts per plane and sls are admissible; the vertices onto Sp(B) are {T} (q even) or none (q odd)",
       "projection vertex counts", always, check_vertex_admissible},
      {"maps.phi_fixed", "maps", "fixed",
       "exactly gcd(3,q-1) orbit planes are fixed by phi, the closed-form pi_lambda",
       "phi-fixed planes", always, check_phi_fixed},
      {"maps.mu_fixed", "maps", "fixed",
       "mu fixes exactly the pi_lambda with lambda != 1",
       "mu-fixed planes", always, check_mu_fixed},

      {"figueroa.block_structure", "figueroa", "build",
       "Fig(T) has q^3+1 points, F_T = {T^phi, T^phi^2} u Pi_theta (N(theta) != 1), Fig(T) meets T^mu in E_T u {T^phi, T^phi^2}",
       "Fig-block of T", always, check_block_structure},
      {"figueroa.plane_build", "figueroa", "build",
       "FIG(q^3) keeps the Type I/II lines and replaces every Type III line by a non-collinear Fig-block",
       "Figueroa plane blocks", always, check_plane_build},
      {"figueroa.phi_equivariance", "figueroa", "build",
       "Fig(T)^phi = Fig(T^phi) and phi permutes the blocks of FIG(q^3)",
       "phi-equivariance", always, check_phi_equivariance},
      {"figueroa.axioms", "figueroa", "axioms",
       "FIG(q^3) is a projective plane of order q^3",
       "projective plane axioms", always, check_axioms_entry},
      {"figueroa.pr_T", "figueroa", "pr",
       "Pr(Fig(T)) is m_T (q even) or T^phi, T^phi^2, S_{-1} and the S_theta with square N(theta) (q odd)",
       "projection of Fig(T)", always, check_pr_T},
      {"figueroa.pr_T_phi", "figueroa", "pr",
       "Pr(Fig(T^phi)) = m_T \\ (S_1 u {T^phi})",
       "projection of Fig(T^phi)", always,
       [](CheckContext& c, CheckResult& r) { check_pr_side(c, r, Side::TPhi); }},
      {"figueroa.pr_T_phi2", "figueroa", "pr",
       "Pr(Fig(T^phi^2)) = m_T \\ (S_1 u {T^phi^2})",
       "projection of Fig(T^phi^2)", always,
       [](CheckContext& c, CheckResult& r) { check_pr_side(c, r, Side::TPhi2); }},
      {"figueroa.arching", "figueroa", "arching",
       "each pencil T S_theta arches over 1 T-plane (q even); 2 or 0 as N(theta) is a square or not (q odd)",
       "arching pencils", always, check_arching},
      {"figueroa.theorem16", "figueroa", "theorem16",
       "for P off m_T u {T}: P projects P_{2,q} onto a T-sls iff P in Fig(T); q^3-q^2-q-1 vertices with T",
       "Fig(T) characterised by projection vertices", always, check_theorem16},
      {"figueroa.even_structure", "figueroa", "even-structure",
       "q even: lines through T, T^phi, T^phi^2 carry one point of F_T or of E_T, E_T^phi, E_T^phi^2, except T^phi T and T^phi^2 T",
       "even-q structure of Fig(T)",
       [](const CheckContext& c) { return c.q() % 2 == 0; }, check_even_structure},
      {"figueroa.sp_mu", "figueroa", "sp-mu",
       "Sp o mu_pt maps F_T bijectively onto m_T \\ S_1, the Type III points of m_T iff q even",
       "splash of mu(F_T)", always, check_sp_mu},
  };
  return defs;
}

/// Suites that run when the suite selector is "default".
inline std::vector<std::string> default_suites(std::uint32_t q) {
  if (q >= 7) return {"census"};
  if (q < 3) return {"census", "maps"};
  return {"census", "maps", "figueroa"};
}

inline std::vector<std::string> selected_suites(const RunConfig& cfg) {
  if (cfg.suite == "default") return default_suites(cfg.q());
  if (cfg.suite == "all") return {"census", "maps", "figueroa"};
  return {cfg.suite};
}

inline bool known_group(const std::string& suite, const std::string& group) {
  for (const auto& d : check_registry())
    if ((suite.empty() || suite == d.suite) && group == d.group) return true;
  return false;
}

/// Runs the selected checks in registry order.
inline std::vector<CheckResult> run_checks(const Workspace& ws, const RunConfig& cfg) {
  CheckContext ctx(ws, cfg);
  const auto suites = selected_suites(cfg);
  std::vector<CheckResult> out;
  for (const auto& d : check_registry()) {
    if (std::find(suites.begin(), suites.end(), d.suite) == suites.end()) continue;
    if (!cfg.check.empty() && cfg.check != d.group && cfg.check != d.id) continue;
    CheckResult r;
    r.id = d.id;
    r.group = d.group;
    r.claim = d.claim;
    r.anchor = d.anchor;
    const auto t0 = std::chrono::steady_clock::now();
    if (!d.applicable(ctx)) {
      r.status = Status::Skip;
    } else {
      try {
        d.run(ctx, r);
      } catch (const std::exception& e) {
        fail(r, std::string("exception: ") + e.what());
      }
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace figplane
