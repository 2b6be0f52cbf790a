// Randomised properties over several fields. Every generator is seeded, so
// failures reproduce; the failing seed and inputs are printed.

#include <gtest/gtest.h>

#include <random>

#include "figplane/geometry_maps.hpp"

using namespace figplane;

namespace {

struct Gen {
  const FieldCtx& f;
  std::mt19937_64 rng;

  Elem any() { return Elem{std::uniform_int_distribution<std::uint32_t>(0, f.size() - 1)(rng)}; }
  Elem nonzero() {
    return Elem{std::uniform_int_distribution<std::uint32_t>(1, f.size() - 1)(rng)};
  }
  Point point() {
    while (true) {
      const Triple t{any(), any(), any()};
      if (!(t[0].is_zero() && t[1].is_zero() && t[2].is_zero())) return make_point(f, t);
    }
  }
  Line line() { return Line{point().c}; }
};

class FieldProps : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldProps, FieldAxioms) {
  const FieldCtx f(GetParam().first, GetParam().second);
  Gen g{f, std::mt19937_64(101)};
  for (int i = 0; i < 5000; ++i) {
    const Elem a = g.any(), b = g.any(), c = g.any();
    SCOPED_TRACE(::testing::Message() << "a=" << a.v << " b=" << b.v << " c=" << c.v);
    ASSERT_EQ(f.add(a, b), f.add(b, a));
    ASSERT_EQ(f.mul(a, b), f.mul(b, a));
    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    ASSERT_EQ(f.add(a, f.neg(a)), kZero);
    if (!a.is_zero()) ASSERT_EQ(f.mul(a, f.inv(a)), kOne);
    // Frobenius is additive and multiplicative with period 3
    ASSERT_EQ(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
    ASSERT_EQ(f.frobenius(f.mul(a, b), 2), f.mul(f.frobenius(a, 2), f.frobenius(b, 2)));
    ASSERT_EQ(f.frobenius(a, 3), a);
    ASSERT_EQ(f.norm(f.mul(a, b)), f.mul(f.norm(a), f.norm(b)));
  }
}

TEST_P(FieldProps, IncidenceDuality) {
  const ProjectivePlane pg(FieldCtx(GetParam().first, GetParam().second));
  Gen g{pg.field(), std::mt19937_64(202)};
  for (int i = 0; i < 2000; ++i) {
    const Point P = g.point(), Q = g.point();
    if (P == Q) continue;
    const Line l = pg.join(P, Q);
    // dual: the meet of the lines through P and Q dual to l
    const Line lp{P.c}, lq{Q.c};
    const Point X = pg.meet(lp, lq);
    ASSERT_EQ(X.c, l.c);
    const Point R = g.point();
    if (pg.incident(R, l)) continue;
    ASSERT_EQ(pg.meet(l, pg.join(P, R)), P);
  }
}

TEST_P(FieldProps, CollineationsPreserveTypes) {
  const ProjectivePlane pg(FieldCtx(GetParam().first, GetParam().second));
  const auto& f = pg.field();
  Gen g{f, std::mt19937_64(303)};
  for (int i = 0; i < 2000; ++i) {
    const Point P = g.point();
    const Elem t = g.nonzero();
    SCOPED_TRACE(to_string(P));
    const ObjType ty = classify_type(f, P);
    ASSERT_EQ(classify_type(f, apply_phi(f, P)), ty);
    ASSERT_EQ(classify_type(f, apply_psi(f, t, P)), ty);
    ASSERT_EQ(apply_psi(f, t, apply_phi(f, P)), apply_phi(f, apply_psi(f, t, P)));
    const Line l = g.line();
    ASSERT_EQ(pg.incident(P, l), pg.incident(apply_psi(f, t, P), apply_psi(f, t, l)));
    ASSERT_EQ(pg.incident(P, l), pg.incident(apply_phi(f, P), apply_phi(f, l)));
    if (ty == ObjType::III) {
      const Line m = mu_pt(f, P);
      ASSERT_EQ(classify_type(f, m), ObjType::III);
      ASSERT_EQ(mu_line(f, m), P);
      ASSERT_EQ(mu_pt(f, apply_phi(f, P)), apply_phi(f, m));
    }
  }
}

TEST_P(FieldProps, OrbitSizes) {
  const ProjectivePlane pg(FieldCtx(GetParam().first, GetParam().second));
  const auto& f = pg.field();
  Gen g{f, std::mt19937_64(404)};
  for (int i = 0; i < 200; ++i) {
    const Point P = g.point();
    const auto orb = orbit_points(pg, P);
    const bool fixed = P == kFrame.T || P == kFrame.T_phi || P == kFrame.T_phi2;
    ASSERT_EQ(orb.size(), fixed ? 1u : f.norm_exponent()) << to_string(P);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldProps,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u},
                                           std::pair{2u, 2u}, std::pair{5u, 1u}));

}  // namespace
