#include <gtest/gtest.h>

#include "figplane/geometry_maps.hpp"

using namespace figplane;

namespace {

const Workspace& ws3() {
  static const Workspace ws(3, 1);
  return ws;
}
const Workspace& ws4() {
  static const Workspace ws(2, 2);
  return ws;
}

TEST(Mu, FrameExamples) {
  const auto& f = ws3().field();
  EXPECT_EQ(mu_pt(f, kFrame.T), kFrame.m_T);
  const Line l = join(f, kFrame.T, kFrame.T_phi);
  EXPECT_EQ(l, (Line{{kZero, kOne, kZero}}));
  EXPECT_EQ(mu_line(f, l), kFrame.T_phi2);
}

TEST(Mu, RejectsTypeIAndII) {
  const auto& pg = ws3().pg();
  const auto& f = pg.field();
  EXPECT_THROW(mu_pt(f, Point{{kOne, kOne, kOne}}), PreconditionError);
  EXPECT_THROW(mu_line(f, Line{{kOne, kOne, kOne}}), PreconditionError);
  for (PointId p = 0; p < pg.num_points(); ++p)
    if (ws3().types().of(p) == ObjType::II) {
      EXPECT_THROW(mu_pt(f, pg.point(p)), PreconditionError);
      break;
    }
}

TEST(Mu, InvolutionOnTypeIII) {
  const auto& pg = ws3().pg();
  const auto& f = pg.field();
  for (PointId p = 0; p < pg.num_points(); ++p) {
    if (ws3().types().of(p) != ObjType::III) continue;
    ASSERT_EQ(mu_line(f, mu_pt(f, pg.point(p))), pg.point(p));
  }
}

TEST(Mu, TPlaneImages) {
  const auto& ws = ws3();
  const auto& pg = ws.pg();
  const auto& f = pg.field();
  const Elem theta = f.tau();
  ASSERT_NE(f.norm(theta), kOne);
  const auto B = t_plane(pg, theta);
  const auto lines_img = mu_on_plane_lines(ws, B);
  EXPECT_EQ(lines_img.kind, MuImageKind::Sls);
  EXPECT_EQ(lines_img.points, sls_points(pg, f.neg(f.inv(theta))));
  const auto pts_img = mu_on_plane_points(ws, B);
  EXPECT_EQ(pts_img.kind, MuImageKind::Pencil);
  EXPECT_EQ(pts_img.lines, pencil_lines(pg, f.inv(theta)));
  EXPECT_EQ(pts_img.vertex, pg.T());
}

TEST(Mu, GenericPlaneImageIsOrbitPlane) {
  const auto& ws = ws4();
  int seen = 0;
  for (std::uint32_t i = 0; i < ws.partition().classes.size(); ++i) {
    const auto& c = ws.partition().classes[i];
    if (c.category != Category::IIIPointsIIILines) continue;
    const auto B = class_as_plane(ws, i);
    const auto img = mu_on_plane_lines(ws, B);
    if (img.kind == MuImageKind::Sls) continue;  // T-planes and their phi images
    EXPECT_EQ(img.kind, MuImageKind::PlanePoints);
    if (++seen == 5) break;
  }
  EXPECT_EQ(seen, 5);
}

TEST(Mu, PlanePreconditions) {
  const auto& ws = ws3();
  EXPECT_THROW(mu_on_plane_lines(ws, t_plane(ws.pg(), kOne)), PreconditionError);
  EXPECT_THROW(mu_on_plane_points(ws, t_plane(ws.pg(), kOne)), PreconditionError);
}

TEST(Projection, FrameExamples) {
  const auto& f = ws3().field();
  EXPECT_EQ(project_from_T(f, kFrame.T_phi), kFrame.T_phi);
  EXPECT_THROW(project_from_T(f, kFrame.T), PreconditionError);
  EXPECT_THROW(splash_line(f, kFrame.m_T), PreconditionError);
}

TEST(Projection, PrAndSpOfTPlanes) {
  const auto& pg = ws3().pg();
  const auto& f = pg.field();
  for (Elem theta : norm_class_reps(f)) {
    const auto B = t_plane(pg, theta);
    const Elem t2 = f.mul(theta, theta);
    EXPECT_EQ(pr_set(pg, B).points, sls_points(pg, t2));
    EXPECT_EQ(sp_set(pg, B).points, sls_points(pg, f.neg(t2)));
  }
  EXPECT_EQ(pr_set(pg, t_plane(pg, kOne)).points, sls_points(pg, kOne));
}

TEST(Projection, VertexInTPlane) {
  const auto& pg = ws3().pg();
  const auto& f = pg.field();
  const Elem kappa = f.tau();
  const auto B = t_plane(pg, kOne);
  for (PointId v : t_plane(pg, kappa).points) {
    const auto img = project_from_vertex(pg, pg.point(v), B);
    EXPECT_EQ(img.points, sls_points(pg, f.neg(kappa)));
    EXPECT_EQ(img.kind, LinearSetKind::Scattered);
  }
}

TEST(Projection, VertexTMatchesPr) {
  const auto& pg = ws3().pg();
  for (Elem theta : norm_class_reps(pg.field())) {
    const auto B = t_plane(pg, theta);
    EXPECT_EQ(project_from_vertex(pg, kFrame.T, B).points, pr_set(pg, B).points);
  }
}

TEST(Projection, VertexPreconditions) {
  const auto& pg = ws3().pg();
  const auto B = t_plane(pg, kOne);
  EXPECT_THROW(project_from_vertex(pg, kFrame.T_phi, B), PreconditionError);
  EXPECT_THROW(project_from_vertex(pg, pg.point(B.points.front()), B), PreconditionError);
}

// Brute-force scan for a Type II vertex off m_T with a club image.
TEST(Projection, ClubExistsAtThree) {
  const auto& ws = ws3();
  const auto& pg = ws.pg();
  const auto B = t_plane(pg, kOne);
  bool found = false;
  for (PointId v = 0; v < pg.num_points() && !found; ++v) {
    const Point V = pg.point(v);
    if (ws.types().of(v) != ObjType::II || pg.incident(V, kFrame.m_T) || contains(B.points, v))
      continue;
    const auto img = project_from_vertex(pg, V, B);
    if (img.kind == LinearSetKind::Club) {
      found = true;
      EXPECT_EQ(img.points.size(), 10u);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Projection, VerticesOfP2q) {
  {
    const auto& ws = ws4();
    const auto B = t_plane(ws.pg(), kOne);
    EXPECT_EQ(projection_vertices(ws, B, kOne), PointSet{ws.pg().T()});
  }
  const auto& ws = ws3();
  const auto& pg = ws.pg();
  const auto B = t_plane(pg, kOne);
  EXPECT_TRUE(projection_vertices(ws, B, theta_with_norm(pg.field(), pg.field().minus_one())).empty());
  // T and the points of Pi_{-1}: q^2+q+2 = 14 vertices
  PointSet want = t_plane(pg, pg.field().minus_one()).points;
  want.push_back(pg.T());
  sort_unique(want);
  EXPECT_EQ(projection_vertices(ws, B, kOne), want);
  EXPECT_EQ(want.size(), 14u);
}

TEST(Projection, VertexCensusIsJobIndependent) {
  const Workspace a(3, 1, 1), b(3, 1, 3);
  const auto B = t_plane(a.pg(), kOne);
  const auto ca = vertex_census(a, B), cb = vertex_census(b, B);
  EXPECT_EQ(ca.vertices, cb.vertices);
  EXPECT_EQ(ca.clubs, cb.clubs);
}

TEST(FixedPlanes, ClosedFormsMatchScan) {
  for (const Workspace* ws : {&ws3(), &ws4()}) {
    const auto phi = phi_fixed_planes(ws->pg());
    const auto mu = mu_fixed_planes(ws->pg());
    const std::size_t want_phi = ws->q() == 4 ? 3 : 1;
    EXPECT_EQ(phi.size(), want_phi);
    EXPECT_EQ(mu.size(), want_phi - 1);
    EXPECT_EQ(scan_phi_fixed(*ws).size(), want_phi);
    EXPECT_EQ(scan_mu_fixed(*ws).size(), want_phi - 1);
    for (const auto& B : phi) EXPECT_TRUE(is_subplane(ws->pg(), B));
    EXPECT_EQ(phi.front().points, t_plane(ws->pg(), kOne).points);
  }
}

}  // namespace
