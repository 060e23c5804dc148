#include "hsinscribe/ideal_polyhedron.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hs;

namespace {

int count(const std::vector<Color>& cs, Color c) { return static_cast<int>(std::count(cs.begin(), cs.end(), c)); }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Build, SquarePyramid) {
  auto P = generate_two_circle(1, 4, 2.0);
  EXPECT_EQ(P.p, 1);
  EXPECT_EQ(P.q, 4);
  EXPECT_EQ(P.hull.edges.size(), 8u);
  EXPECT_EQ(count(P.colors, Color::Red), 4);
  EXPECT_EQ(count(P.colors, Color::Blue), 4);
  EXPECT_EQ(P.interior.cycles[0].size(), 1u);
  EXPECT_EQ(P.interior.cycles[1].size(), 4u);
}

TEST(Build, LabelsFollowCycles) {
  auto P = generate_two_circle(3, 3, 2.0);
  for (int s = 0; s < 2; ++s)
    for (size_t k = 0; k < P.interior.cycles[s].size(); ++k)
      EXPECT_EQ(P.vertices[P.interior.cycles[s][k]].label, std::to_string(k + 1) + (s == 0 ? "+" : "-"));
}

TEST(Build, OneSheetIsRejected) {
  std::vector<IdealVertex> vs;
  for (int k = 0; k < 5; ++k) vs.push_back({Sheet::Plus, 2 * std::cos(k * 1.2566), 2 * std::sin(k * 1.2566), ""});
  try {
    build(vs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::StronglyIdeal);
  }
}

TEST(Build, HiddenVertexIsRejected) {
  // a minus vertex near the axis sits inside the hull of a wide upper ring and a far lower ring
  auto P = generate_two_circle(4, 4, 3.0);
  auto vs = P.vertices;
  vs.push_back({Sheet::Minus, 0.0, 0.0, ""});
  vs.push_back({Sheet::Plus, 0.0, 0.0, ""});
  EXPECT_THROW(build(vs), Error);
}

TEST(InteriorComplex, TwoCycleShapes) {
  auto a = generate_two_circle(3, 4, 2.0);
  EXPECT_EQ(a.interior.cycles[0].size(), 3u);
  EXPECT_EQ(a.interior.cycles[1].size(), 4u);
  auto b = generate_two_circle(2, 5, 1.5);
  EXPECT_EQ(b.interior.cycles[0].size(), 2u);
  EXPECT_EQ(b.interior.cycles[1].size(), 5u);
  // the cycles are the sheet components
  for (int s = 0; s < 2; ++s)
    for (int v : b.interior.cycles[s]) EXPECT_EQ(b.vertices[v].sheet, s == 0 ? Sheet::Plus : Sheet::Minus);
}

TEST(Angles, PyramidApexSum) {
  for (int q = 3; q <= 8; ++q) {
    auto P = generate_two_circle(1, q, 2.0);
    auto g = dihedral_angles(P);
    EXPECT_NEAR(g.vertex_sum(g.apex()), -2 * kPi, 1e-9) << q;
    for (int v = 0; v < g.n; ++v)
      if (v != g.apex()) EXPECT_NEAR(g.vertex_sum(v), 0, 1e-9);
    auto r = verify_admissible(g);
    EXPECT_TRUE(r.ok());
    EXPECT_NEAR(r.blue_sum, -2 * kPi, 1e-9);
  }
}

TEST(Angles, SignsAndRanges) {
  auto P = generate_random(3, 5, 2.2, 3);
  auto g = dihedral_angles(P);
  for (size_t e = 0; e < g.theta.size(); ++e) {
    if (g.colors[e] == Color::Red) {
      EXPECT_GT(g.theta[e], 0);
      EXPECT_LT(g.theta[e], kPi);
    } else {
      EXPECT_LT(g.theta[e], 0);
      EXPECT_GT(g.theta[e], -kPi);
    }
  }
}

TEST(Angles, BlueSumAboveMinusTwoPiWithoutApex) {
  for (auto [p, q] : {std::pair{2, 2}, {3, 3}, {3, 4}, {2, 5}}) {
    auto g = dihedral_angles(generate_two_circle(p, q, 2.0));
    auto r = verify_admissible(g);
    EXPECT_GT(r.blue_sum, -2 * kPi + 1e-6);
    EXPECT_TRUE(r.ok());
  }
}

TEST(Angles, LorentzInvariant) {
  auto P = generate_random(3, 4, 1.7, 7);
  auto L = lorentz_transform({0.05, -0.03, 0.02, 0.04, 0.01, -0.02});
  auto Q = apply_isometry(P, L);
  ASSERT_EQ(Q.hull, P.hull);
  auto a = dihedral_angles(P), b = dihedral_angles(Q);
  EXPECT_LT(max_abs_diff(a.theta, b.theta), 1e-7);
}

TEST(VertexFigure, PyramidApex) {
  auto P = generate_two_circle(1, 4, 2.0);
  auto g = dihedral_angles(P);
  auto vf = vertex_figure(P, g, g.apex());
  ASSERT_EQ(vf.turns.size(), 4u);
  for (double t : vf.turns) EXPECT_NEAR(t, -kPi / 2, 1e-9);
  EXPECT_NEAR(vf.sum, -2 * kPi, 1e-9);
  EXPECT_LT(vf.closure_defect, 1e-9);
}

TEST(Rank, TwoNMinusSix) {
  for (auto P : {generate_two_circle(1, 4, 2.0), generate_two_circle(3, 3, 2.0), generate_random(2, 4, 1.7, 11)})
    EXPECT_EQ(angle_jacobian_rank(P), 2 * P.n() - 6);
}

TEST(Generate, Preconditions) {
  EXPECT_THROW(generate_two_circle(1, 2, 2.0), Error);
  EXPECT_THROW(generate_two_circle(2, 2, 1.0), Error);
}

TEST(Deform, SlidesDownToHeight) {
  auto P = generate_random(3, 4, 2.5, 7);
  auto Q = deform_toward_planes(P, 2.0);
  for (const auto& v : Q.vertices) EXPECT_LE(std::abs(sheet_height(v.sheet, v.u0, v.u1)), 2.0 + 1e-12);
  EXPECT_TRUE(verify_admissible(dihedral_angles(Q)).ok());
  EXPECT_THROW(deform_toward_planes(P, 1.0), Error);
}

TEST(Flat, AnglesVanishAsRingsFlatten) {
  // as t grows both rings approach the plane at infinity of the chart and the polyhedron flattens
  double prev = 1e9;
  for (double t : {2.0, 8.0, 64.0}) {
    auto g = dihedral_angles(generate_two_circle(3, 3, t));
    double red = 0;
    for (size_t e = 0; e < g.theta.size(); ++e)
      if (g.colors[e] == Color::Red) red = std::max(red, g.theta[e]);
    EXPECT_LT(red, prev);
    prev = red;
  }
}
