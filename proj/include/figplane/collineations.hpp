#pragma once

// The order-3 collineation phi, point/line types, the group S_T = {psi_t}
// and the orbit partition orb(S_T) with its seven-category census.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "figplane/finite_field.hpp"
#include "figplane/parallel.hpp"
#include "figplane/projective_plane.hpp"

namespace figplane {

enum class ObjType : std::uint8_t { I = 1, II = 2, III = 3 };

inline std::string_view to_string(ObjType t) {
  switch (t) {
    case ObjType::I: return "I";
    case ObjType::II: return "II";
    case ObjType::III: return "III";
  }
  return "?";
}

using Mat3 = std::array<Triple, 3>;

/// Rank of a 3x3 matrix over GF(q^3) by Gaussian elimination.
inline int rank(const FieldCtx& f, Mat3 m) {
  int r = 0;
  for (int col = 0; col < 3 && r < 3; ++col) {
    int piv = -1;
    for (int i = r; i < 3; ++i)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    const Elem inv = f.inv(m[r][col]);
    for (int i = r + 1; i < 3; ++i) {
      if (m[i][col].is_zero()) continue;
      const Elem factor = f.mul(m[i][col], inv);
      for (int j = col; j < 3; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    ++r;
  }
  return r;
}

inline Elem det(const FieldCtx& f, const Mat3& m) {
  const Elem a = f.mul(m[0][0], f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1])));
  const Elem b = f.mul(m[0][1], f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0])));
  const Elem c = f.mul(m[0][2], f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0])));
  return f.add(f.sub(a, b), c);
}

/// (x,y,z) -> (z^q, x^q, y^q); lines transform by the same rule.
inline Triple phi_triple(const FieldCtx& f, const Triple& t) {
  return {f.frobenius(t[2], 1), f.frobenius(t[0], 1), f.frobenius(t[1], 1)};
}

inline Point apply_phi(const FieldCtx& f, const Point& P) {
  return make_point(f, phi_triple(f, P.c));
}
inline Line apply_phi(const FieldCtx& f, const Line& l) {
  return make_line(f, phi_triple(f, l.c));
}
template <class Obj>
Obj apply_phi(const FieldCtx& f, const Obj& o, unsigned times) {
  Obj r = o;
  for (unsigned i = 0; i < times % 3; ++i) r = apply_phi(f, r);
  return r;
}

/// Rows P, P^phi-coordinates, P^phi^2-coordinates (unnormalised).
inline Mat3 point_matrix(const FieldCtx& f, const Triple& P) {
  const auto& [x, y, z] = P;
  return {Triple{x, y, z},
          Triple{f.frobenius(z, 1), f.frobenius(x, 1), f.frobenius(y, 1)},
          Triple{f.frobenius(y, 2), f.frobenius(z, 2), f.frobenius(x, 2)}};
}

/// Columns l, l^phi, l^phi^2 (unnormalised).
inline Mat3 line_matrix(const FieldCtx& f, const Triple& l) {
  const auto& [d, e, g] = l;
  return {Triple{d, f.frobenius(g, 1), f.frobenius(e, 2)},
          Triple{e, f.frobenius(d, 1), f.frobenius(g, 2)},
          Triple{g, f.frobenius(e, 1), f.frobenius(d, 2)}};
}

inline ObjType type_from_rank(int r) {
  if (r < 1 || r > 3) throw std::logic_error("rank of a phi-orbit matrix must be 1..3");
  return static_cast<ObjType>(r);
}

inline ObjType classify_type(const FieldCtx& f, const Point& P) {
  return type_from_rank(rank(f, point_matrix(f, P.c)));
}
inline ObjType classify_type(const FieldCtx& f, const Line& l) {
  return type_from_rank(rank(f, line_matrix(f, l.c)));
}

/// psi_t: (x,y,z) -> (t x, t^q y, t^{q^2} z). Lines take the contragredient
/// action [d/t, e/t^q, f/t^{q^2}] so that incidence is preserved.
inline Point apply_psi(const FieldCtx& f, Elem t, const Point& P) {
  if (t.is_zero()) throw PreconditionError("psi_t needs t != 0");
  return make_point(f, {f.mul(t, P.c[0]), f.mul(f.frobenius(t, 1), P.c[1]),
                        f.mul(f.frobenius(t, 2), P.c[2])});
}
inline Line apply_psi(const FieldCtx& f, Elem t, const Line& l) {
  if (t.is_zero()) throw PreconditionError("psi_t needs t != 0");
  const Elem ti = f.inv(t);
  return make_line(f, {f.mul(ti, l.c[0]), f.mul(f.frobenius(ti, 1), l.c[1]),
                       f.mul(f.frobenius(ti, 2), l.c[2])});
}

/// Coset representatives tau^0 .. tau^{q^2+q} of GF(q)* in GF(q^3)*; these
/// give the q^2+q+1 distinct elements of S_T.
inline std::vector<Elem> st_elements(const FieldCtx& f) {
  std::vector<Elem> out(f.norm_exponent());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = f.tau_pow(i);
  return out;
}

inline PointSet orbit_points(const ProjectivePlane& pg, const Point& P) {
  const FieldCtx& f = pg.field();
  PointSet out;
  out.reserve(f.norm_exponent());
  for (Elem t : st_elements(f)) out.push_back(pg.id(apply_psi(f, t, P)));
  sort_unique(out);
  return out;
}

inline LineSet orbit_lines(const ProjectivePlane& pg, const Line& l) {
  const FieldCtx& f = pg.field();
  LineSet out;
  out.reserve(f.norm_exponent());
  for (Elem t : st_elements(f)) out.push_back(pg.id(apply_psi(f, t, l)));
  sort_unique(out);
  return out;
}

/// Point and line types for the whole plane, indexed by PointId / LineId.
struct TypeTable {
  std::vector<ObjType> points;
  std::vector<ObjType> lines;

  ObjType of(PointId i) const { return points[i]; }
  ObjType of_line(LineId i) const { return lines[i]; }
};

inline TypeTable compute_types(const ProjectivePlane& pg, unsigned jobs = 1) {
  const FieldCtx& f = pg.field();
  TypeTable t;
  t.points.resize(pg.num_points());
  t.lines.resize(pg.num_lines());
  parallel_for(pg.num_points(), jobs, [&](std::size_t i) {
    const Triple c = pg.point(static_cast<PointId>(i)).c;
    t.points[i] = type_from_rank(rank(f, point_matrix(f, c)));
    t.lines[i] = type_from_rank(rank(f, line_matrix(f, c)));
  });
  return t;
}

enum class Side : std::uint8_t { None, T, TPhi, TPhi2 };

inline std::string_view to_string(Side s) {
  switch (s) {
    case Side::None: return "-";
    case Side::T: return "T";
    case Side::TPhi: return "T^phi";
    case Side::TPhi2: return "T^phi^2";
  }
  return "?";
}

/// Side of the triangle T T^phi T^phi^2 that a non-vertex point lies on:
/// T-slses sit on m_T (z=0), T^phi-slses on x=0, T^phi^2-slses on y=0.
inline Side side_of(const Point& P) {
  const int zeros = P.c[0].is_zero() + P.c[1].is_zero() + P.c[2].is_zero();
  if (zeros != 1) return Side::None;
  if (P.c[2].is_zero()) return Side::T;
  if (P.c[0].is_zero()) return Side::TPhi;
  return Side::TPhi2;
}

enum class Category : std::uint8_t {
  FixedPoint,
  TypeIISls,
  TypeIIISls,
  P2q,
  IIPointsIIILines,
  IIIPointsIILines,
  IIIPointsIIILines,
};
inline constexpr std::size_t kNumCategories = 7;

inline std::string_view category_name(Category c) {
  switch (c) {
    case Category::FixedPoint: return "fixed_point";
    case Category::TypeIISls: return "type_ii_sls";
    case Category::TypeIIISls: return "type_iii_sls";
    case Category::P2q: return "p2q";
    case Category::IIPointsIIILines: return "ii_points_iii_lines_plane";
    case Category::IIIPointsIILines: return "iii_points_ii_lines_plane";
    case Category::IIIPointsIIILines: return "iii_points_iii_lines_plane";
  }
  return "?";
}

inline bool is_plane_category(Category c) {
  return c == Category::P2q || c == Category::IIPointsIIILines ||
         c == Category::IIIPointsIILines || c == Category::IIIPointsIIILines;
}

/// One element of orb(S_T).
struct OrbitClass {
  PointId representative = 0;  // smallest member index
  PointSet members;
  Category category = Category::FixedPoint;
  Side side = Side::None;
  ObjType point_type = ObjType::I;
  std::optional<ObjType> line_type;  // planes only, from one secant line
};

inline OrbitClass orbit_under_st(const ProjectivePlane& pg, const Point& P) {
  OrbitClass c;
  c.members = orbit_points(pg, P);
  c.representative = c.members.front();
  c.point_type = classify_type(pg.field(), P);
  c.side = side_of(P);
  return c;
}

/// Expected category counts as closed forms in q:
/// 3, 3, 3(q-2), 1, q^3-q-3, q^3-q-3, q^4-3q^3+q+6.
inline std::array<std::int64_t, kNumCategories> expected_census(std::int64_t q) {
  const std::int64_t q3 = q * q * q;
  return {3, 3, 3 * (q - 2), 1, q3 - q - 3, q3 - q - 3, q3 * q - 3 * q3 + q + 6};
}

struct Census {
  std::array<std::int64_t, kNumCategories> counts{};
  std::int64_t orbits = 0;
  std::int64_t points = 0;  // sum of orbit sizes

  std::int64_t count(Category c) const { return counts[static_cast<std::size_t>(c)]; }
};

struct OrbitPartition {
  std::vector<OrbitClass> classes;  // ordered by representative index
  std::vector<std::uint32_t> class_of;  // PointId -> index into classes
  Census census;

  const OrbitClass& containing(PointId p) const { return classes[class_of[p]]; }
};

/// Thrown when the orbit data contradicts itself (members of one class with
/// different types, or orbit sizes outside {1, q^2+q+1}).
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

inline OrbitPartition partition_and_census(const ProjectivePlane& pg,
                                           const TypeTable& types) {
  const FieldCtx& f = pg.field();
  const std::uint32_t big = f.norm_exponent();
  OrbitPartition part;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  part.class_of.assign(pg.num_points(), kUnset);

  for (PointId seed = 0; seed < pg.num_points(); ++seed) {
    if (part.class_of[seed] != kUnset) continue;
    const Point P = pg.point(seed);
    OrbitClass c;
    c.members = orbit_points(pg, P);
    c.representative = seed;
    c.point_type = types.of(seed);
    c.side = side_of(P);
    if (c.members.size() != 1 && c.members.size() != big)
      throw InconsistencyError("orbit of " + to_string(P) + " has size " +
                               std::to_string(c.members.size()));
    for (PointId m : c.members) {
      if (types.of(m) != c.point_type)
        throw InconsistencyError("orbit of " + to_string(P) + " mixes point types at " +
                                 to_string(pg.point(m)));
      part.class_of[m] = static_cast<std::uint32_t>(part.classes.size());
    }

    if (c.members.size() == 1) {
      c.category = Category::FixedPoint;
    } else if (c.side != Side::None) {
      c.category = c.point_type == ObjType::II ? Category::TypeIISls : Category::TypeIIISls;
    } else {
      const Line secant = pg.join(pg.point(c.members[0]), pg.point(c.members[1]));
      c.line_type = types.of_line(pg.id(secant));
      switch (c.point_type) {
        case ObjType::I: c.category = Category::P2q; break;
        case ObjType::II:
          if (*c.line_type != ObjType::III)
            throw InconsistencyError("Type II plane without Type III lines at " + to_string(P));
          c.category = Category::IIPointsIIILines;
          break;
        case ObjType::III:
          c.category = *c.line_type == ObjType::II ? Category::IIIPointsIILines
                                                   : Category::IIIPointsIIILines;
          break;
      }
    }
    part.census.counts[static_cast<std::size_t>(c.category)] += 1;
    part.census.orbits += 1;
    part.census.points += static_cast<std::int64_t>(c.members.size());
    part.classes.push_back(std::move(c));
  }
  return part;
}

/// Line set of a plane class: the S_T-orbit of one secant line.
inline LineSet plane_class_lines(const ProjectivePlane& pg, const OrbitClass& c) {
  if (!is_plane_category(c.category))
    throw PreconditionError("plane_class_lines needs a plane class");
  return orbit_lines(pg, pg.join(pg.point(c.members[0]), pg.point(c.members[1])));
}

/// Checks N(X) - N(x) det A_P = N(Y) - N(y) det A_P = N(Z) - N(z) det A_P
/// = -det A_l with X = x^{1+q} - y z^q (cyclically) and l = [yz, zx, xy].
inline bool e11_identity_check(const FieldCtx& f, const Point& P) {
  const auto& [x, y, z] = P.c;
  if (x.is_zero() || y.is_zero() || z.is_zero())
    throw PreconditionError("identity check needs xyz != 0");
  auto big = [&](Elem a, Elem b, Elem c) {  // a^{1+q} - b c^q
    return f.sub(f.mul(a, f.frobenius(a, 1)), f.mul(b, f.frobenius(c, 1)));
  };
  const Elem X = big(x, y, z), Y = big(y, z, x), Z = big(z, x, y);
  const Elem dP = det(f, point_matrix(f, P.c));
  const Triple l{f.mul(y, z), f.mul(z, x), f.mul(x, y)};
  const Elem rhs = f.neg(det(f, line_matrix(f, l)));
  auto lhs = [&](Elem B, Elem c) { return f.sub(f.norm(B), f.mul(f.norm(c), dP)); };
  return lhs(X, x) == rhs && lhs(Y, y) == rhs && lhs(Z, z) == rhs;
}

}  // namespace figplane
