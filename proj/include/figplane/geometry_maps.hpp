#pragma once

// The involution mu between Type III points and Type III lines, projection
// from T and from arbitrary vertices onto m_T, the splash, and the planes of
// orb(S_T) fixed setwise by phi or by mu.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "figplane/parallel.hpp"
#include "figplane/workspace.hpp"

namespace figplane {

/// P -> P^phi P^phi^2, defined for Type III points only.
inline Line mu_pt(const FieldCtx& f, const Point& P) {
  if (classify_type(f, P) != ObjType::III)
    throw PreconditionError("mu is only defined on Type III points: " + to_string(P));
  return join(f, apply_phi(f, P), apply_phi(f, P, 2));
}

/// l -> l^phi meet l^phi^2, defined for Type III lines only.
inline Point mu_line(const FieldCtx& f, const Line& l) {
  if (classify_type(f, l) != ObjType::III)
    throw PreconditionError("mu is only defined on Type III lines: " + to_string(l));
  return meet(f, apply_phi(f, l), apply_phi(f, l, 2));
}

// ---------------------------------------------------------------------------
// mu on planes

enum class MuImageKind : std::uint8_t { Sls, Pencil, PlanePoints, PlaneLines, Other };

struct MuImage {
  MuImageKind kind = MuImageKind::Other;
  PointSet points;                      // mu_line images
  LineSet lines;                        // mu_pt images
  std::optional<SlsId> sls;             // Sls, or the base of a Pencil
  std::optional<PointId> vertex;        // Pencil only
  std::optional<std::uint32_t> plane_class;  // PlanePoints / PlaneLines
};

/// mu_line applied to every line of B (all of which must be Type III).
inline MuImage mu_on_plane_lines(const Workspace& ws, const SubplaneSet& B) {
  const auto& pg = ws.pg();
  MuImage img;
  for (LineId l : B.lines) {
    if (ws.types().of_line(l) != ObjType::III)
      throw PreconditionError("mu_line needs a plane with only Type III lines");
    img.points.push_back(pg.id(mu_line(pg.field(), pg.line(l))));
  }
  sort_unique(img.points);
  if ((img.sls = identify_sls(pg, img.points))) {
    img.kind = MuImageKind::Sls;
    return img;
  }
  const auto& cls = ws.partition().containing(img.points.front());
  if (is_plane_category(cls.category) && cls.members == img.points) {
    img.kind = MuImageKind::PlanePoints;
    img.plane_class = ws.partition().class_of[img.points.front()];
  }
  return img;
}

/// mu_pt applied to every point of B (all of which must be Type III).
inline MuImage mu_on_plane_points(const Workspace& ws, const SubplaneSet& B) {
  const auto& pg = ws.pg();
  const auto& f = pg.field();
  MuImage img;
  for (PointId p : B.points) {
    if (ws.types().of(p) != ObjType::III)
      throw PreconditionError("mu_pt needs a plane with only Type III points");
    img.lines.push_back(pg.id(mu_pt(f, pg.point(p))));
  }
  sort_unique(img.lines);

  // Pencil through one of the triangle vertices, with base on the opposite side.
  const std::pair<Point, Line> vertices[] = {
      {kFrame.T, kFrame.m_T},
      {kFrame.T_phi, Line{{kOne, kZero, kZero}}},
      {kFrame.T_phi2, Line{{kZero, kOne, kZero}}},
  };
  for (const auto& [V, opposite] : vertices) {
    const bool all_through = std::all_of(img.lines.begin(), img.lines.end(), [&](LineId l) {
      return pg.incident(V, pg.line(l));
    });
    if (!all_through) continue;
    PointSet base;
    for (LineId l : img.lines) {
      const Line line = pg.line(l);
      if (line == opposite) return img;  // not a sls-pencil
      base.push_back(pg.id(pg.meet(line, opposite)));
    }
    sort_unique(base);
    img.vertex = pg.id(V);
    img.sls = identify_sls(pg, base);
    img.kind = img.sls ? MuImageKind::Pencil : MuImageKind::Other;
    return img;
  }

  const Point X = pg.meet(pg.line(img.lines[0]), pg.line(img.lines[1]));
  const auto cls_idx = ws.partition().class_of[pg.id(X)];
  const auto& cls = ws.partition().classes[cls_idx];
  if (is_plane_category(cls.category) && plane_class_lines(pg, cls) == img.lines) {
    img.kind = MuImageKind::PlaneLines;
    img.plane_class = cls_idx;
  }
  return img;
}

// ---------------------------------------------------------------------------
// projection and splash onto m_T

inline Point project_from_T(const FieldCtx& f, const Point& P) {
  if (P == kFrame.T) throw PreconditionError("projection from T is undefined at T");
  return meet(f, join(f, kFrame.T, P), kFrame.m_T);
}

inline Point splash_line(const FieldCtx& f, const Line& l) {
  if (l == kFrame.m_T) throw PreconditionError("splash is undefined on m_T");
  return meet(f, l, kFrame.m_T);
}

enum class LinearSetKind : std::uint8_t { Scattered, Club, Other };

inline std::string_view to_string(LinearSetKind k) {
  switch (k) {
    case LinearSetKind::Scattered: return "scattered";
    case LinearSetKind::Club: return "club";
    case LinearSetKind::Other: return "other";
  }
  return "?";
}

/// A point set on m_T obtained by projecting (or splashing) a subplane.
struct LinearSetImage {
  PointSet points;
  LinearSetKind kind = LinearSetKind::Other;
  std::optional<SlsId> sls;  // set when the image is one of the T-slses
  PointId vertex = 0;
};

/// Classifies by cardinality: q^2+q+1 is scattered, q^2+1 is a club.
inline LinearSetImage classify_linear_set(const ProjectivePlane& pg, PointSet pts,
                                          PointId vertex) {
  const std::uint32_t q = pg.q();
  LinearSetImage img;
  img.vertex = vertex;
  img.points = std::move(pts);
  if (img.points.size() == q * q + q + 1) {
    img.kind = LinearSetKind::Scattered;
    img.sls = identify_sls(pg, img.points);
  } else if (img.points.size() == q * q + 1) {
    img.kind = LinearSetKind::Club;
  }
  return img;
}

inline LinearSetImage pr_set(const ProjectivePlane& pg, const SubplaneSet& B) {
  PointSet out;
  for (PointId p : B.points) out.push_back(pg.id(project_from_T(pg.field(), pg.point(p))));
  sort_unique(out);
  return classify_linear_set(pg, std::move(out), pg.T());
}

inline LinearSetImage sp_set(const ProjectivePlane& pg, const SubplaneSet& B) {
  PointSet out;
  for (LineId l : B.lines) out.push_back(pg.id(splash_line(pg.field(), pg.line(l))));
  sort_unique(out);
  return classify_linear_set(pg, std::move(out), pg.T());
}

namespace detail {

// Images on m_T of the points of B other than V, seen from V (V off m_T).
inline PointSet project_points_from(const ProjectivePlane& pg, const Point& V,
                                    const std::vector<Point>& members) {
  const FieldCtx& f = pg.field();
  PointSet out;
  out.reserve(members.size());
  for (const Point& X : members) {
    if (X == V) continue;
    out.push_back(pg.id(meet(f, join(f, V, X), kFrame.m_T)));
  }
  sort_unique(out);
  return out;
}

}  // namespace detail

/// Projection of B from V onto m_T. V must lie neither on m_T nor in B.
inline LinearSetImage project_from_vertex(const ProjectivePlane& pg, const Point& V,
                                          const SubplaneSet& B) {
  if (pg.incident(V, kFrame.m_T))
    throw PreconditionError("projection vertex on m_T is degenerate: " + to_string(V));
  const PointId vid = pg.id(V);
  if (contains(B.points, vid))
    throw PreconditionError("projection vertex lies in the plane: " + to_string(V));
  return classify_linear_set(pg, detail::project_points_from(pg, V, pg.points_of(B.points)),
                             vid);
}

/// Projection vertices of B sorted by target: vertices[i] lists every V
/// (off m_T, not in B) projecting B onto the T-sls with norm class index i.
struct VertexCensus {
  std::vector<PointSet> vertices;  // indexed like norm_class_reps
  std::uint64_t clubs = 0;
  std::uint64_t scattered_non_sls = 0;
  std::uint64_t other = 0;
  std::uint64_t scanned = 0;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& v : vertices) t += v.size();
    return t;
  }
};

inline VertexCensus vertex_census(const Workspace& ws, const SubplaneSet& B) {
  const auto& pg = ws.pg();
  const auto members = pg.points_of(B.points);
  struct Hit {
    PointId v;
    LinearSetImage img;
  };
  auto hits = parallel_collect<Hit>(pg.num_points(), ws.jobs(), [&](std::size_t i)
                                        -> std::optional<Hit> {
    const PointId vid = static_cast<PointId>(i);
    const Point V = pg.point(vid);
    if (pg.incident(V, kFrame.m_T) || contains(B.points, vid)) return std::nullopt;
    return Hit{vid, classify_linear_set(pg, detail::project_points_from(pg, V, members), vid)};
  });
  VertexCensus c;
  c.vertices.resize(ws.q() - 1);
  for (const auto& h : hits) {
    ++c.scanned;
    if (h.img.sls) {
      c.vertices[ws.norm_class_index(h.img.sls->norm_class)].push_back(h.v);
    } else if (h.img.kind == LinearSetKind::Club) {
      ++c.clubs;
    } else if (h.img.kind == LinearSetKind::Scattered) {
      ++c.scattered_non_sls;
    } else {
      ++c.other;
    }
  }
  return c;
}

/// All projection vertices of B onto S_theta.
inline PointSet projection_vertices(const Workspace& ws, const SubplaneSet& B, Elem theta) {
  if (theta.is_zero()) throw PreconditionError("projection_vertices needs theta != 0");
  const auto idx = ws.norm_class_index(ws.field().norm(theta));
  return vertex_census(ws, B).vertices[idx];
}

// ---------------------------------------------------------------------------
// planes fixed by phi and by mu

/// lambda in GF(q) with lambda^3 = 1, in table order.
inline std::vector<Elem> cube_roots_of_unity(const FieldCtx& f) {
  std::vector<Elem> out;
  for (Elem x : f.elements())
    if (!x.is_zero() && f.in_base_subfield(x) && f.pow(x, 3) == kOne) out.push_back(x);
  return out;
}

/// pi_lambda = {(x, x^q, lambda x^{q^2})} for each cube root of unity lambda.
inline std::vector<SubplaneSet> phi_fixed_planes(const ProjectivePlane& pg) {
  std::vector<SubplaneSet> out;
  for (Elem lambda : cube_roots_of_unity(pg.field()))
    out.push_back(plane_from_rep(pg, Point{{kOne, kOne, lambda}}));
  return out;
}

/// The pi_lambda with lambda != 1.
inline std::vector<SubplaneSet> mu_fixed_planes(const ProjectivePlane& pg) {
  std::vector<SubplaneSet> out;
  for (Elem lambda : cube_roots_of_unity(pg.field()))
    if (lambda != kOne) out.push_back(plane_from_rep(pg, Point{{kOne, kOne, lambda}}));
  return out;
}

/// Plane classes of orb(S_T) mapped onto themselves by phi (exhaustive).
inline std::vector<std::uint32_t> scan_phi_fixed(const Workspace& ws) {
  const auto& pg = ws.pg();
  const auto& part = ws.partition();
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < part.classes.size(); ++i) {
    const auto& c = part.classes[i];
    if (!is_plane_category(c.category)) continue;
    bool fixed = true;
    for (PointId p : c.members) {
      if (part.class_of[pg.id(apply_phi(pg.field(), pg.point(p)))] != i) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(i);
  }
  return out;
}

/// Plane classes with Type III points and lines whose point set mu maps onto
/// the class's line set and whose line set mu maps back onto the points.
inline std::vector<std::uint32_t> scan_mu_fixed(const Workspace& ws) {
  const auto& pg = ws.pg();
  const auto& part = ws.partition();
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < part.classes.size(); ++i) {
    const auto& c = part.classes[i];
    if (c.category != Category::IIIPointsIIILines) continue;
    SubplaneSet B{c.members, plane_class_lines(pg, c), PlaneTag::Generic, std::nullopt};
    if (mu_on_plane_points(ws, B).lines == B.lines && mu_on_plane_lines(ws, B).points == B.points)
      out.push_back(i);
  }
  return out;
}

/// The orbit class as a SubplaneSet (plane classes only).
inline SubplaneSet class_as_plane(const Workspace& ws, std::uint32_t class_index) {
  const auto& c = ws.partition().classes[class_index];
  return SubplaneSet{c.members, plane_class_lines(ws.pg(), c), PlaneTag::Generic, std::nullopt};
}

}  // namespace figplane
