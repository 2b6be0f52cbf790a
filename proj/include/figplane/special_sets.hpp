#pragma once

// Closed-form members of orb(S_T): the T-slses S_theta on m_T, their pencils
// T S_theta, the T-planes Pi_theta and generic F_q-planes from a representative.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "figplane/collineations.hpp"

namespace figplane {

/// A scattered linear set on one side of the triangle, named by the norm of
/// its theta (S_theta = S_kappa iff N(theta) = N(kappa)).
struct SlsId {
  Side side = Side::T;
  Elem norm_class;
  friend bool operator==(const SlsId&, const SlsId&) = default;
  friend auto operator<=>(const SlsId&, const SlsId&) = default;
};

/// theta_i = tau^i for i = 0..q-2; N(theta_i) = w^i with w = tau^(q^2+q+1),
/// so the list runs through GF(q)* in generator order.
inline std::vector<Elem> norm_class_reps(const FieldCtx& f) {
  std::vector<Elem> out(f.q() - 1);
  for (std::uint32_t i = 0; i + 1 < f.q(); ++i) out[i] = f.tau_pow(i);
  return out;
}

/// Representative theta with N(theta) = c, for c in GF(q)*.
inline Elem theta_with_norm(const FieldCtx& f, Elem c) {
  if (c.is_zero() || !f.in_base_subfield(c))
    throw PreconditionError("norm class must be a nonzero element of GF(q)");
  return f.tau_pow(f.log(c) / f.norm_exponent());
}

/// Which sls a side point belongs to. For a T-side point (x,y,0) the class
/// is N(x/y); the other sides follow by rotating coordinates.
inline std::optional<SlsId> sls_id_of(const FieldCtx& f, const Point& P) {
  const Side s = side_of(P);
  const auto& [x, y, z] = P.c;
  switch (s) {
    case Side::T: return SlsId{s, f.norm(f.div(x, y))};
    case Side::TPhi: return SlsId{s, f.norm(f.div(y, z))};
    case Side::TPhi2: return SlsId{s, f.norm(f.div(z, x))};
    case Side::None: break;
  }
  return std::nullopt;
}

inline std::string to_string(const FieldCtx& f, const SlsId& id) {
  (void)f;
  return std::string(to_string(id.side)) + "-sls[N=" + std::to_string(id.norm_class.v) + "]";
}

/// S_theta = {(x theta, x^q, 0)} on m_T, moved to the requested side by phi.
inline PointSet sls_points(const ProjectivePlane& pg, Elem theta, Side side = Side::T) {
  const FieldCtx& f = pg.field();
  if (theta.is_zero()) throw PreconditionError("sls needs theta != 0");
  unsigned turns = 0;
  switch (side) {
    case Side::T: turns = 0; break;
    case Side::TPhi: turns = 1; break;
    case Side::TPhi2: turns = 2; break;
    case Side::None: throw PreconditionError("sls needs a triangle side");
  }
  PointSet out;
  for (Elem x : st_elements(f)) {
    Point P = make_point(f, {f.mul(x, theta), f.frobenius(x, 1), kZero});
    out.push_back(pg.id(apply_phi(f, P, turns)));
  }
  sort_unique(out);
  return out;
}

/// The sls equal to the given point set, if any.
inline std::optional<SlsId> identify_sls(const ProjectivePlane& pg, const PointSet& pts) {
  const FieldCtx& f = pg.field();
  if (pts.size() != f.norm_exponent()) return std::nullopt;
  const auto first = sls_id_of(f, pg.point(pts.front()));
  if (!first) return std::nullopt;
  for (PointId p : pts) {
    const auto id = sls_id_of(f, pg.point(p));
    if (!id || *id != *first) return std::nullopt;
  }
  return first;
}

/// Lines T X for X in S_theta.
inline LineSet pencil_lines(const ProjectivePlane& pg, Elem theta) {
  LineSet out;
  for (PointId x : sls_points(pg, theta))
    out.push_back(pg.id(pg.join(kFrame.T, pg.point(x))));
  sort_unique(out);
  return out;
}

/// Type shared by all lines of the pencil T S_theta.
inline ObjType pencil_type(const ProjectivePlane& pg, Elem theta) {
  const LineSet lines = pencil_lines(pg, theta);
  const ObjType t = classify_type(pg.field(), pg.line(lines.front()));
  for (LineId l : lines)
    if (classify_type(pg.field(), pg.line(l)) != t)
      throw InconsistencyError("pencil lines of mixed type");
  return t;
}

enum class PlaneTag : std::uint8_t { TPlane, TPhiPlane, TPhi2Plane, Generic };

/// An F_q-subplane given by its points and lines.
struct SubplaneSet {
  PointSet points;
  LineSet lines;
  PlaneTag tag = PlaneTag::Generic;
  std::optional<Elem> theta;  // T-planes (and their phi images) only
};

/// Pi_theta: points (r theta^{q+1}, r^q, r^{q^2} theta),
/// lines [s, s^q theta^{q+1}, s^{q^2} theta^q].
inline SubplaneSet t_plane(const ProjectivePlane& pg, Elem theta) {
  const FieldCtx& f = pg.field();
  if (theta.is_zero()) throw PreconditionError("T-plane needs theta != 0");
  const Elem tq1 = f.pow(theta, f.q() + 1);
  const Elem tq = f.frobenius(theta, 1);
  SubplaneSet B;
  B.tag = PlaneTag::TPlane;
  B.theta = theta;
  for (Elem r : st_elements(f)) {
    B.points.push_back(pg.id(make_point(
        f, {f.mul(r, tq1), f.frobenius(r, 1), f.mul(f.frobenius(r, 2), theta)})));
    B.lines.push_back(pg.id(make_line(
        f, {r, f.mul(f.frobenius(r, 1), tq1), f.mul(f.frobenius(r, 2), tq)})));
  }
  sort_unique(B.points);
  sort_unique(B.lines);
  return B;
}

/// Image of a subplane under phi^turns.
inline SubplaneSet apply_phi(const ProjectivePlane& pg, const SubplaneSet& B, unsigned turns) {
  const FieldCtx& f = pg.field();
  SubplaneSet out = B;
  for (auto& p : out.points) p = pg.id(apply_phi(f, pg.point(p), turns));
  for (auto& l : out.lines) l = pg.id(apply_phi(f, pg.line(l), turns));
  sort_unique(out.points);
  sort_unique(out.lines);
  if (B.tag == PlaneTag::TPlane && turns % 3 != 0)
    out.tag = turns % 3 == 1 ? PlaneTag::TPhiPlane : PlaneTag::TPhi2Plane;
  return out;
}

/// Pi_theta^phi (side TPhi) or Pi_theta^phi^2 (side TPhi2).
inline SubplaneSet side_plane(const ProjectivePlane& pg, Elem theta, Side side) {
  switch (side) {
    case Side::T: return t_plane(pg, theta);
    case Side::TPhi: return apply_phi(pg, t_plane(pg, theta), 1);
    case Side::TPhi2: return apply_phi(pg, t_plane(pg, theta), 2);
    case Side::None: break;
  }
  throw PreconditionError("side_plane needs a triangle vertex");
}

/// The F_q-plane P^{S_T} for P = (x,y,z), xyz != 0, with lines
/// [yz s, xz s^q, xy s^{q^2}].
inline SubplaneSet plane_from_rep(const ProjectivePlane& pg, const Point& P) {
  const FieldCtx& f = pg.field();
  const auto& [x, y, z] = P.c;
  if (x.is_zero() || y.is_zero() || z.is_zero())
    throw PreconditionError("plane_from_rep needs all coordinates nonzero: " + to_string(P));
  SubplaneSet B;
  const Elem yz = f.mul(y, z), xz = f.mul(x, z), xy = f.mul(x, y);
  for (Elem t : st_elements(f)) {
    B.points.push_back(pg.id(apply_psi(f, t, P)));
    B.lines.push_back(pg.id(make_line(
        f, {f.mul(yz, t), f.mul(xz, f.frobenius(t, 1)), f.mul(xy, f.frobenius(t, 2))})));
  }
  sort_unique(B.points);
  sort_unique(B.lines);
  return B;
}

/// Subplane of order q: q^2+q+1 points and lines, each line holding exactly
/// q+1 of the points. Since two lines share at most one point this already
/// forces every pair of points onto a member line.
inline bool is_subplane(const ProjectivePlane& pg, const SubplaneSet& B) {
  const FieldCtx& f = pg.field();
  const std::size_t n = f.norm_exponent();
  if (B.points.size() != n || B.lines.size() != n) return false;
  const auto pts = pg.points_of(B.points);
  for (LineId l : B.lines) {
    const Line line = pg.line(l);
    std::size_t on = 0;
    for (const Point& P : pts) on += pg.incident(P, line);
    if (on != f.q() + 1) return false;
  }
  return true;
}

}  // namespace figplane
