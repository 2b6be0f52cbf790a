#pragma once

// PG(2,q^3): canonical homogeneous coordinates, incidence, join/meet and a
// dense index over points and lines.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "figplane/finite_field.hpp"

namespace figplane {

using Triple = std::array<Elem, 3>;

/// Point of PG(2,q^3); the triple is kept in canonical form (leftmost
/// nonzero coordinate equal to 1).
struct Point {
  Triple c;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Line [d,e,f] of PG(2,q^3), canonical in the same sense as Point.
struct Line {
  Triple c;
  friend bool operator==(const Line&, const Line&) = default;
  friend auto operator<=>(const Line&, const Line&) = default;
};

/// Dense indices 0..q^6+q^3 in enumeration order.
using PointId = std::uint32_t;
using LineId = std::uint32_t;
/// Sorted, duplicate-free index sets.
using PointSet = std::vector<PointId>;
using LineSet = std::vector<LineId>;

inline void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline bool contains(const std::vector<std::uint32_t>& sorted, std::uint32_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

/// Scales t so that its leftmost nonzero coordinate is 1.
inline Triple canonical_triple(const FieldCtx& f, Triple t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!t[i].is_zero()) {
      const Elem s = f.inv(t[i]);
      for (std::size_t j = i; j < 3; ++j) t[j] = f.mul(t[j], s);
      return t;
    }
  }
  throw PreconditionError("zero triple has no projective meaning");
}

inline Point make_point(const FieldCtx& f, const Triple& t) {
  return Point{canonical_triple(f, t)};
}
inline Line make_line(const FieldCtx& f, const Triple& t) {
  return Line{canonical_triple(f, t)};
}

inline Elem dot(const FieldCtx& f, const Triple& a, const Triple& b) {
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

inline Triple cross(const FieldCtx& f, const Triple& a, const Triple& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
          f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

inline bool incident(const FieldCtx& f, const Point& P, const Line& l) {
  return dot(f, P.c, l.c).is_zero();
}

inline Line join(const FieldCtx& f, const Point& P, const Point& Q) {
  if (P == Q) throw PreconditionError("join of a point with itself");
  return make_line(f, cross(f, P.c, Q.c));
}

inline Point meet(const FieldCtx& f, const Line& l, const Line& m) {
  if (l == m) throw PreconditionError("meet of a line with itself");
  return make_point(f, cross(f, l.c, m.c));
}

/// The reference triangle: T = (0,0,1), T^phi = (1,0,0), T^phi^2 = (0,1,0),
/// and m_T = [0,0,1] = T^phi T^phi^2.
struct Frame {
  Point T{{kZero, kZero, kOne}};
  Point T_phi{{kOne, kZero, kZero}};
  Point T_phi2{{kZero, kOne, kZero}};
  Line m_T{{kZero, kZero, kOne}};
};
inline constexpr Frame kFrame{};

/// Index arithmetic for the q^6+q^3+1 canonical triples.
///
/// (1,y,z) -> y*n + z, (0,1,z) -> n^2 + z, (0,0,1) -> n^2 + n, where n = q^3
/// and elements are ordered by their internal value (0, tau^0, tau^1, ...).
/// The same numbering serves points and lines.
class TripleIndex {
 public:
  explicit TripleIndex(std::uint32_t n) : n_(n) {}

  std::uint32_t count() const { return n_ * n_ + n_ + 1; }

  std::uint32_t index(const Triple& t) const {
    if (t[0] == kOne) return t[1].v * n_ + t[2].v;
    if (t[1] == kOne) return n_ * n_ + t[2].v;
    return n_ * n_ + n_;
  }

  Triple at(std::uint32_t i) const {
    if (i < n_ * n_) return {kOne, Elem{i / n_}, Elem{i % n_}};
    if (i < n_ * n_ + n_) return {kZero, kOne, Elem{i - n_ * n_}};
    return {kZero, kZero, kOne};
  }

 private:
  std::uint32_t n_;
};

/// Canonical triples orthogonal to t, i.e. the points of line t (or the lines
/// through point t). Always q^3+1 of them, in index order.
inline std::vector<Triple> orthogonal_triples(const FieldCtx& f, const Triple& t) {
  const Triple c = canonical_triple(f, t);
  const auto& [d, e, g] = c;
  std::vector<Triple> out;
  out.reserve(f.size() + 1);
  if (!g.is_zero()) {
    // d x + e y + g z = 0 with z solved.
    const Elem gi = f.inv(g);
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      const Elem ye{y};
      out.push_back({kOne, ye, f.neg(f.mul(f.add(d, f.mul(e, ye)), gi))});
    }
    out.push_back({kZero, kOne, f.neg(f.mul(e, gi))});
  } else if (!e.is_zero()) {
    const Elem yv = f.neg(f.div(d, e));
    for (std::uint32_t z = 0; z < f.size(); ++z) out.push_back({kOne, yv, Elem{z}});
    out.push_back({kZero, kZero, kOne});
  } else {
    for (std::uint32_t z = 0; z < f.size(); ++z) out.push_back({kZero, kOne, Elem{z}});
    out.push_back({kZero, kZero, kOne});
  }
  return out;
}

/// Coordinate text: "x:y:z" for points, "[d:e:f]" for lines. Each coordinate
/// prints its internal value: 0 for zero and e+1 for tau^e.
inline std::string triple_text(const Triple& t) {
  return std::to_string(t[0].v) + ":" + std::to_string(t[1].v) + ":" +
         std::to_string(t[2].v);
}
inline std::string to_string(const Point& P) { return triple_text(P.c); }
inline std::string to_string(const Line& l) { return "[" + triple_text(l.c) + "]"; }

/// Parses "x:y:z" (optionally bracketed) into a triple; values index the
/// field as in triple_text.
inline Triple parse_triple(const FieldCtx& f, std::string_view s) {
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw PreconditionError("unbalanced brackets in triple");
    s = s.substr(1, s.size() - 2);
  }
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto colon = s.find(':');
    if ((i < 2) == (colon == std::string_view::npos))
      throw PreconditionError("triple must have exactly three ':'-separated values");
    const std::string_view part = s.substr(0, colon);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || v >= f.size())
      throw PreconditionError("bad coordinate '" + std::string(part) + "'");
    t[i] = Elem{v};
    s = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  }
  return t;
}

/// PG(2,q^3) over a given field: enumeration and the dense index.
class ProjectivePlane {
 public:
  explicit ProjectivePlane(FieldCtx field)
      : field_(std::move(field)), index_(field_.size()) {}

  const FieldCtx& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  /// q^6 + q^3 + 1.
  std::uint32_t num_points() const { return index_.count(); }
  std::uint32_t num_lines() const { return index_.count(); }
  /// q^3 + 1 points per line.
  std::uint32_t line_size() const { return field_.size() + 1; }

  PointId id(const Point& P) const { return index_.index(P.c); }
  LineId id(const Line& l) const { return index_.index(l.c); }
  Point point(PointId i) const { return Point{index_.at(i)}; }
  Line line(LineId i) const { return Line{index_.at(i)}; }

  std::vector<Point> enumerate_points() const {
    std::vector<Point> out(num_points());
    for (PointId i = 0; i < num_points(); ++i) out[i] = point(i);
    return out;
  }
  std::vector<Line> enumerate_lines() const {
    std::vector<Line> out(num_lines());
    for (LineId i = 0; i < num_lines(); ++i) out[i] = line(i);
    return out;
  }

  PointSet points_on(const Line& l) const {
    PointSet out;
    for (const Triple& t : orthogonal_triples(field_, l.c)) out.push_back(index_.index(t));
    sort_unique(out);
    return out;
  }
  LineSet lines_through(const Point& P) const {
    LineSet out;
    for (const Triple& t : orthogonal_triples(field_, P.c)) out.push_back(index_.index(t));
    sort_unique(out);
    return out;
  }

  bool incident(const Point& P, const Line& l) const {
    return figplane::incident(field_, P, l);
  }
  Line join(const Point& P, const Point& Q) const { return figplane::join(field_, P, Q); }
  Point meet(const Line& l, const Line& m) const { return figplane::meet(field_, l, m); }
  Point make_point(const Triple& t) const { return figplane::make_point(field_, t); }
  Line make_line(const Triple& t) const { return figplane::make_line(field_, t); }

  PointId T() const { return id(kFrame.T); }
  PointId T_phi() const { return id(kFrame.T_phi); }
  PointId T_phi2() const { return id(kFrame.T_phi2); }
  LineId m_T() const { return id(kFrame.m_T); }

  std::vector<Point> points_of(std::span<const PointId> ids) const {
    std::vector<Point> out;
    out.reserve(ids.size());
    for (PointId i : ids) out.push_back(point(i));
    return out;
  }

 private:
  FieldCtx field_;
  TripleIndex index_;
};

}  // namespace figplane
