#pragma once

// Fig-blocks, the Figueroa plane FIG(q^3) and its projective-plane axioms,
// plus the structural statements about Fig-blocks as projected onto m_T.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "figplane/geometry_maps.hpp"
#include "figplane/parallel.hpp"
#include "figplane/workspace.hpp"

namespace figplane {

/// Fig(A) = E_A u F_A for a Type III anchor A.
struct FigBlock {
  PointId anchor = 0;
  LineId replaced_line = 0;  // A^mu, the PG line this block stands in for
  PointSet E;  // Type II points of A^mu
  PointSet F;  // mu(l) for the Type III lines l through A
  PointSet points;  // E u F
};

inline FigBlock fig_block(const Workspace& ws, const Point& anchor) {
  const auto& pg = ws.pg();
  const auto& f = pg.field();
  const PointId aid = pg.id(anchor);
  if (ws.types().of(aid) != ObjType::III)
    throw PreconditionError("Fig-block anchor must be a Type III point: " + to_string(anchor));
  FigBlock b;
  b.anchor = aid;
  const Line m = mu_pt(f, anchor);
  b.replaced_line = pg.id(m);
  // Every line through the anchor meets m exactly once.
  for (PointId x : pg.points_on(m)) {
    if (ws.types().of(x) == ObjType::II) b.E.push_back(x);
    const Line l = pg.join(anchor, pg.point(x));
    if (ws.types().of_line(pg.id(l)) == ObjType::III) b.F.push_back(pg.id(mu_line(f, l)));
  }
  sort_unique(b.E);
  sort_unique(b.F);
  b.points = b.E;
  b.points.insert(b.points.end(), b.F.begin(), b.F.end());
  sort_unique(b.points);
  return b;
}

enum class BlockKind : std::uint8_t { TypeILine, TypeIILine, FigBlock };

inline std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::TypeILine: return "type_i_line";
    case BlockKind::TypeIILine: return "type_ii_line";
    case BlockKind::FigBlock: return "fig_block";
  }
  return "?";
}

/// Abstract point/block incidence structure on the dense point indices.
struct IncidencePlane {
  std::uint32_t order = 0;  // intended order n; blocks have n+1 points
  std::uint32_t num_points = 0;
  std::vector<PointSet> blocks;
  std::vector<BlockKind> kinds;
  std::vector<LineId> keys;  // PG line each block corresponds to
};

/// PG(2,q^3) itself as an incidence structure (every block a line).
inline IncidencePlane pg_incidence(const Workspace& ws) {
  const auto& pg = ws.pg();
  IncidencePlane out;
  out.order = pg.field().size();
  out.num_points = pg.num_points();
  out.blocks.resize(pg.num_lines());
  out.kinds.resize(pg.num_lines());
  out.keys.resize(pg.num_lines());
  parallel_for(pg.num_lines(), ws.jobs(), [&](std::size_t i) {
    const LineId l = static_cast<LineId>(i);
    out.blocks[i] = pg.points_on(pg.line(l));
    out.kinds[i] = ws.types().of_line(l) == ObjType::I ? BlockKind::TypeILine
                                                        : BlockKind::TypeIILine;
    out.keys[i] = l;
  });
  return out;
}

inline constexpr const char* kFigueroaOrderMessage =
    "the Figueroa plane is defined for q a prime power with q > 2";

/// Type I and Type II lines of PG(2,q^3) plus, for every Type III line m,
/// the Fig-block Fig(m^mu) in place of m. Blocks follow line index order.
inline IncidencePlane build_fig_plane(const Workspace& ws) {
  const auto& pg = ws.pg();
  if (!pg.field().figueroa_capable()) throw PreconditionError(kFigueroaOrderMessage);
  IncidencePlane out;
  out.order = pg.field().size();
  out.num_points = pg.num_points();
  out.blocks.resize(pg.num_lines());
  out.kinds.resize(pg.num_lines());
  out.keys.resize(pg.num_lines());
  parallel_for(pg.num_lines(), ws.jobs(), [&](std::size_t i) {
    const LineId l = static_cast<LineId>(i);
    out.keys[i] = l;
    switch (ws.types().of_line(l)) {
      case ObjType::I:
        out.kinds[i] = BlockKind::TypeILine;
        out.blocks[i] = pg.points_on(pg.line(l));
        break;
      case ObjType::II:
        out.kinds[i] = BlockKind::TypeIILine;
        out.blocks[i] = pg.points_on(pg.line(l));
        break;
      case ObjType::III:
        out.kinds[i] = BlockKind::FigBlock;
        out.blocks[i] = fig_block(ws, mu_line(pg.field(), pg.line(l))).points;
        break;
    }
  });
  return out;
}

/// Writes "FIG q^3 <npoints>" followed by one block per line.
inline std::string emit_plane_text(const IncidencePlane& plane, std::uint32_t q) {
  std::string out = "FIG " + std::to_string(q) + "^3 " + std::to_string(plane.num_points) + "\n";
  for (const auto& b : plane.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(b[i]);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// axiom checking

struct AxiomWitness {
  std::string kind;  // "point_pair" or "block_pair"
  std::uint32_t a = 0, b = 0;
  std::uint32_t multiplicity = 0;  // number of common blocks / points
};

struct AxiomOptions {
  bool full_pairs = true;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::size_t max_witnesses = 5;
};

struct AxiomReport {
  bool block_sizes_ok = true;
  bool point_degrees_ok = true;
  bool point_pairs_ok = true;
  bool block_pairs_ok = true;
  bool sampled = false;
  std::uint64_t point_pairs_checked = 0;
  std::uint64_t block_pairs_checked = 0;
  std::uint64_t bad_point_pairs = 0;
  std::uint64_t bad_block_pairs = 0;
  std::vector<AxiomWitness> witnesses;

  bool pass() const {
    return block_sizes_ok && point_degrees_ok && point_pairs_ok && block_pairs_ok;
  }
};

namespace detail {

inline std::size_t tri_index(std::uint32_t i, std::uint32_t j) {
  if (i > j) std::swap(i, j);
  return std::size_t{j} * (j - 1) / 2 + i;
}

inline std::uint32_t sorted_intersection_size(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
  std::uint32_t n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++n; ++i; ++j; }
  }
  return n;
}

// Counts, for every unordered pair drawn from the same group, how many groups
// contain it; returns the pairs whose count is not exactly one.
inline void pair_coverage(std::uint32_t universe,
                          const std::vector<std::vector<std::uint32_t>>& groups,
                          const char* kind, std::uint64_t& checked, std::uint64_t& bad,
                          std::vector<AxiomWitness>& witnesses, std::size_t max_witnesses) {
  std::vector<std::uint8_t> count(std::size_t{universe} * (universe - 1) / 2, 0);
  for (const auto& g : groups)
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < x; ++y) {
        auto& c = count[tri_index(g[x], g[y])];
        if (c < 255) ++c;
      }
  checked = count.size();
  for (std::uint32_t j = 1; j < universe; ++j)
    for (std::uint32_t i = 0; i < j; ++i) {
      const auto c = count[tri_index(i, j)];
      if (c == 1) continue;
      ++bad;
      if (witnesses.size() < max_witnesses) witnesses.push_back({kind, i, j, c});
    }
}

}  // namespace detail

/// Checks that blocks have n+1 points, points lie on n+1 blocks, two points
/// share exactly one block and two blocks share exactly one point.
/// Pair checks are exhaustive when options.full_pairs, else sampled.
inline AxiomReport check_axioms(const IncidencePlane& plane, const AxiomOptions& options = {}) {
  AxiomReport r;
  const std::uint32_t want = plane.order + 1;
  std::vector<std::vector<std::uint32_t>> through(plane.num_points);
  for (std::uint32_t b = 0; b < plane.blocks.size(); ++b) {
    if (plane.blocks[b].size() != want) r.block_sizes_ok = false;
    for (std::uint32_t p : plane.blocks[b]) through[p].push_back(b);
  }
  for (const auto& t : through)
    if (t.size() != want) r.point_degrees_ok = false;

  const auto nblocks = static_cast<std::uint32_t>(plane.blocks.size());
  if (options.full_pairs) {
    detail::pair_coverage(plane.num_points, plane.blocks, "point_pair", r.point_pairs_checked,
                          r.bad_point_pairs, r.witnesses, options.max_witnesses);
    detail::pair_coverage(nblocks, through, "block_pair", r.block_pairs_checked,
                          r.bad_block_pairs, r.witnesses, options.max_witnesses);
  } else {
    r.sampled = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> pick_point(0, plane.num_points - 1);
    std::uniform_int_distribution<std::uint32_t> pick_block(0, nblocks - 1);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      std::uint32_t a = pick_point(rng), b = pick_point(rng);
      if (a == b) continue;
      ++r.point_pairs_checked;
      const auto c = detail::sorted_intersection_size(through[a], through[b]);
      if (c != 1) {
        ++r.bad_point_pairs;
        if (r.witnesses.size() < options.max_witnesses)
          r.witnesses.push_back({"point_pair", std::min(a, b), std::max(a, b), c});
      }
    }
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      std::uint32_t a = pick_block(rng), b = pick_block(rng);
      if (a == b) continue;
      ++r.block_pairs_checked;
      const auto c = detail::sorted_intersection_size(plane.blocks[a], plane.blocks[b]);
      if (c != 1) {
        ++r.bad_block_pairs;
        if (r.witnesses.size() < options.max_witnesses)
          r.witnesses.push_back({"block_pair", std::min(a, b), std::max(a, b), c});
      }
    }
  }
  r.point_pairs_ok = r.bad_point_pairs == 0;
  r.block_pairs_ok = r.bad_block_pairs == 0;
  return r;
}

// ---------------------------------------------------------------------------
// projections of Fig-blocks

inline Point vertex_point(Side which) {
  switch (which) {
    case Side::T: return kFrame.T;
    case Side::TPhi: return kFrame.T_phi;
    case Side::TPhi2: return kFrame.T_phi2;
    case Side::None: break;
  }
  throw PreconditionError("expected one of T, T^phi, T^phi^2");
}

/// Pr(Fig(V)) for V in {T, T^phi, T^phi^2}: every point of the block other
/// than T projected from T onto m_T.
inline PointSet pr_fig_block(const Workspace& ws, Side which) {
  const auto& pg = ws.pg();
  const FigBlock b = fig_block(ws, vertex_point(which));
  PointSet out;
  for (PointId p : b.points) {
    if (p == pg.T()) continue;
    out.push_back(pg.id(project_from_T(pg.field(), pg.point(p))));
  }
  sort_unique(out);
  return out;
}

/// For each pencil T S_theta_i (i indexing norm_class_reps), the number of
/// T-planes it arches over: every pencil line meets the plane exactly once.
inline std::vector<int> arching_census(const Workspace& ws) {
  const auto& pg = ws.pg();
  const auto reps = norm_class_reps(pg.field());
  std::vector<SubplaneSet> tplanes;
  for (Elem k : reps) tplanes.push_back(t_plane(pg, k));
  std::vector<int> out;
  for (Elem theta : reps) {
    const LineSet pencil = pencil_lines(pg, theta);
    int arched = 0;
    for (const auto& B : tplanes) {
      std::vector<std::uint32_t> hits;
      for (PointId x : B.points) hits.push_back(pg.id(pg.join(kFrame.T, pg.point(x))));
      std::sort(hits.begin(), hits.end());
      const bool once = std::adjacent_find(hits.begin(), hits.end()) == hits.end();
      if (once && hits == pencil) ++arched;
    }
    out.push_back(arched);
  }
  return out;
}

/// Fig(T) membership against projection vertices of P_{2,q}.
struct CharacterizationReport {
  std::uint64_t scanned = 0;  // P off m_T, P != T
  std::uint64_t in_plane = 0;  // P in P_{2,q}; treated as non-vertices
  std::vector<PointId> vertex_not_in_block;
  std::vector<PointId> block_not_vertex;
  std::uint64_t total_vertices = 0;  // including T when it qualifies
  std::vector<std::uint64_t> per_sls;  // indexed like norm_class_reps
  bool t_is_vertex = false;

  bool equivalence_holds() const {
    return vertex_not_in_block.empty() && block_not_vertex.empty();
  }
};

inline CharacterizationReport characterize_fig_points(const Workspace& ws) {
  const auto& pg = ws.pg();
  const SubplaneSet p2q = t_plane(pg, kOne);
  const FigBlock fig = fig_block(ws, kFrame.T);
  const VertexCensus census = vertex_census(ws, p2q);

  CharacterizationReport r;
  std::vector<char> is_vertex(pg.num_points(), 0);
  for (std::size_t i = 0; i < census.vertices.size(); ++i) {
    r.per_sls.push_back(census.vertices[i].size());
    r.total_vertices += census.vertices[i].size();
    for (PointId v : census.vertices[i]) is_vertex[v] = 1;
  }
  r.t_is_vertex = is_vertex[pg.T()];
  for (PointId p = 0; p < pg.num_points(); ++p) {
    if (p == pg.T() || pg.incident(pg.point(p), kFrame.m_T)) continue;
    ++r.scanned;
    if (contains(p2q.points, p)) ++r.in_plane;
    const bool in_block = contains(fig.points, p);
    if (is_vertex[p] && !in_block) r.vertex_not_in_block.push_back(p);
    if (!is_vertex[p] && in_block) r.block_not_vertex.push_back(p);
  }
  return r;
}

/// Per-vertex outcome of the even-q structure properties: lines through V
/// with exactly one point of F_T (V excluded) and none of E, or exactly one
/// point of E and none of F_T.
struct EvenStructureLine {
  LineId line = 0;
  std::uint32_t f_points = 0;
  std::uint32_t e_points = 0;
};

struct EvenStructureReport {
  std::uint32_t lines_checked[3] = {0, 0, 0};
  std::vector<EvenStructureLine> failures[3];  // per vertex T, T^phi, T^phi^2

  bool pass() const { return failures[0].empty() && failures[1].empty() && failures[2].empty(); }
};

/// Scans the lines through T, T^phi and T^phi^2 against F_T and E_T, E_T^phi,
/// E_T^phi^2 respectively. F overrides F_T (used for mutation tests).
inline EvenStructureReport even_structure_check(const Workspace& ws,
                                                std::optional<PointSet> F = std::nullopt) {
  const auto& pg = ws.pg();
  const auto& f = pg.field();
  if (pg.q() % 2 != 0) throw PreconditionError("even-q structure check needs q even");
  const FigBlock fig = fig_block(ws, kFrame.T);
  const PointSet F_T = F ? *F : fig.F;
  EvenStructureReport r;
  const Point verts[3] = {kFrame.T, kFrame.T_phi, kFrame.T_phi2};
  for (unsigned v = 0; v < 3; ++v) {
    PointSet E;
    for (PointId e : fig.E) E.push_back(pg.id(apply_phi(f, pg.point(e), v)));
    sort_unique(E);
    const Point V = verts[v];
    const PointId vid = pg.id(V);
    for (LineId l : pg.lines_through(V)) {
      const Line line = pg.line(l);
      EvenStructureLine s{l, 0, 0};
      for (PointId x : F_T) s.f_points += x != vid && pg.incident(pg.point(x), line);
      for (PointId x : E) s.e_points += pg.incident(pg.point(x), line);
      ++r.lines_checked[v];
      const bool ok = (s.f_points == 1 && s.e_points == 0) || (s.f_points == 0 && s.e_points == 1);
      if (!ok) r.failures[v].push_back(s);
    }
  }
  return r;
}

/// Sp o mu_pt over the Type III points of Fig(T).
struct SpMuReport {
  PointSet image;
  std::uint64_t domain_size = 0;
  bool injective = true;
};

inline SpMuReport sp_mu_image(const Workspace& ws) {
  const auto& pg = ws.pg();
  const auto& f = pg.field();
  const FigBlock fig = fig_block(ws, kFrame.T);
  SpMuReport r;
  for (PointId p : fig.F) {
    r.image.push_back(pg.id(splash_line(f, mu_pt(f, pg.point(p)))));
    ++r.domain_size;
  }
  const std::size_t before = r.image.size();
  sort_unique(r.image);
  r.injective = r.image.size() == before;
  return r;
}

}  // namespace figplane
