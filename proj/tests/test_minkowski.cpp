#include "hsinscribe/minkowski.hpp"
#include "hsinscribe/random.hpp"
#include "hsinscribe/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hs;

namespace {

Vec4 v4(double a, double b, double c, double d) { return Vec4{{a, b, c, d}}; }

}  // namespace

TEST(Inner, BasisValues) {
  EXPECT_EQ(inner(v4(1, 0, 0, 0), v4(1, 0, 0, 0)), 1.0);
  EXPECT_EQ(inner(v4(0, 0, 1, 0), v4(0, 0, 1, 0)), -1.0);
  EXPECT_EQ(inner(v4(0, 0, 1, 1), v4(0, 0, 1, 1)), 0.0);
}

TEST(Inner, SymmetricAndBilinearExactly) {
  using R = Vec4T<Rational>;
  Rng rng(3);
  auto draw = [&] {
    R v;
    for (int i = 0; i < 4; ++i) v[i] = Rational(rng.integer(-50, 50), rng.integer(1, 9));
    return v;
  };
  for (int k = 0; k < 50; ++k) {
    R a = draw(), b = draw(), c = draw();
    Rational s(rng.integer(-7, 7), 3);
    EXPECT_EQ(inner(a, b), inner(b, a));
    EXPECT_EQ(inner(a + s * b, c), inner(a, c) + s * inner(b, c));
  }
}

TEST(Classify, PointsAndPlanes) {
  EXPECT_EQ(classify(v4(0, 0, 1, 0)), SpaceClass::Time);
  EXPECT_EQ(classify(v4(1, 0, 0, 0)), SpaceClass::Space);
  EXPECT_EQ(classify(v4(0, 0, 1, 1)), SpaceClass::Light);
  // the pole of a face plane through quadric points lies outside, so the plane meets H^3
  EXPECT_EQ(classify(ProjPlane{v4(1, 0, 0, 0)}), SpaceClass::Time);
  EXPECT_EQ(classify(ProjPlane{v4(0, 0, 1, 0)}), SpaceClass::Space);
  EXPECT_EQ(classify(ProjPlane{v4(0, 0, 1, 1)}), SpaceClass::Light);
  EXPECT_THROW(classify(v4(0, 0, 0, 0)), Error);
}

TEST(Classify, Lines) {
  EXPECT_EQ(classify_line(v4(0, 0, 1, 1), v4(0, 0, -1, 1)), SpaceClass::Time);
  // tangent to the quadric at (0,0,1,1)
  EXPECT_EQ(classify_line(v4(0, 0, 1, 1), v4(1, 0, 1, 1)), SpaceClass::Light);
  EXPECT_EQ(classify_line(v4(2, 0, 0, 1), v4(0, 2, 0, 1)), SpaceClass::Space);
}

TEST(Polar, Involution) {
  Vec4 x = v4(0.3, -1.2, 0.7, 2.0);
  EXPECT_TRUE(proj_equal(polar(polar(x)), x));
  EXPECT_TRUE(proj_equal(polar(v4(0, 0, 0, 1)).n, v4(0, 0, 0, 1)));
}

TEST(Polar, FacePlaneThroughQuadricPointsHasOutsidePole) {
  // plane through three points of the upper ring at height 2
  double r = std::sqrt(3.0);
  Vec4 a = ideal_point(Sheet::Plus, r, 0), b = ideal_point(Sheet::Plus, -r / 2, 1.5), c = ideal_point(Sheet::Plus, -r / 2, -1.5);
  // the plane x2 = 2 x3 has covector (0,0,1,-2); its pole under the form flips x2
  Vec4 n = v4(0, 0, -1, -2);
  EXPECT_NEAR(inner(n, a), 0, 1e-12);
  EXPECT_NEAR(inner(n, b), 0, 1e-12);
  EXPECT_NEAR(inner(n, c), 0, 1e-12);
  EXPECT_GT(form(polar(ProjPlane{n})), 0);
}

TEST(IdealPoint, OnQuadric) {
  auto p = ideal_point(Sheet::Plus, 0, 0);
  EXPECT_EQ(p[2], 1.0);
  auto m = ideal_point(Sheet::Minus, 3, 4);
  EXPECT_DOUBLE_EQ(m[2], -std::sqrt(26.0));
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    double u0 = rng.uniform(-20, 20), u1 = rng.uniform(-20, 20);
    auto x = ideal_point(k % 2 ? Sheet::Plus : Sheet::Minus, u0, u1);
    EXPECT_LT(std::abs(form(x)), 1e-12 * euclid_norm2(x));
  }
}

TEST(BoundaryToComplex, Values) {
  auto z = boundary_to_complex(v4(0, 0, 1, 1));
  EXPECT_FALSE(z.inf);
  EXPECT_EQ(std::abs(z.z), 0.0);
  EXPECT_TRUE(boundary_to_complex(v4(0, 0, -1, 1)).inf);
  auto w = boundary_to_complex(v4(1, 0, std::sqrt(2.0), 1));
  EXPECT_NEAR(w.z.real(), std::sqrt(2.0) - 1, 1e-15);
  EXPECT_NEAR(w.z.imag(), 0, 1e-15);
  EXPECT_THROW(boundary_to_complex(v4(1, 0, 0, 1)), Error);
}

TEST(BoundaryToComplex, FormulasAgreeAndInjective) {
  Rng rng(9);
  std::vector<ExtComplex> seen;
  for (int k = 0; k < 100; ++k) {
    auto x = ideal_point(k % 2 ? Sheet::Plus : Sheet::Minus, rng.uniform(-3, 3), rng.uniform(-3, 3));
    cplx a = cplx(x[0], x[1]) / (x[2] + x[3]);
    cplx b = (x[2] - x[3]) / cplx(x[0], -x[1]);
    EXPECT_LT(std::abs(a - b), 1e-9 * (1 + std::abs(a)));
    auto z = boundary_to_complex(x);
    for (const auto& s : seen) EXPECT_GT(chordal_distance(s, z), 0.0);
    seen.push_back(z);
  }
}

TEST(Pogorelov, AtChartCenter) {
  Vec3 o{0, 0, 0};
  auto r = pogorelov(o, Vec3{0.2, -0.5, 0.9});
  EXPECT_DOUBLE_EQ(r[0], 0.2);
  EXPECT_DOUBLE_EQ(r[1], -0.5);
  EXPECT_DOUBLE_EQ(r[2], -0.9);
}

TEST(Pogorelov, OrthogonalPartKept) {
  Vec3 x{0.3, 0.1, 0.2};
  Vec3 v{-0.1, 0.3, 0.0};  // chart_form(x, v) = 0
  ASSERT_NEAR(chart_form(x, v), 0, 1e-15);
  auto r = pogorelov(x, v);
  EXPECT_NEAR(r[0], v[0], 1e-15);
  EXPECT_NEAR(r[1], v[1], 1e-15);
  EXPECT_NEAR(r[2], -v[2], 1e-15);
}

TEST(Pogorelov, LinearInV) {
  Vec3 x{0.4, -0.2, 0.1};
  Vec3 a{1, 2, 3}, b{-0.5, 0.25, 4};
  auto pa = pogorelov(x, a), pb = pogorelov(x, b);
  Vec3 ab{a[0] + 2 * b[0], a[1] + 2 * b[1], a[2] + 2 * b[2]};
  auto pab = pogorelov(x, ab);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(pab[i], pa[i] + 2 * pb[i], 1e-12);
}

TEST(Pogorelov, RefusesLightCone) {
  EXPECT_THROW(pogorelov(Vec3{0.5, 0, 0.5}, Vec3{1, 0, 0}), Error);
}

TEST(Pogorelov, KillingFieldsStayKilling) {
  auto basis = killing_basis();
  Rng rng(5);
  int done = 0;
  while (done < 100) {
    Vec3 x{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)};
    double xx = chart_form(x, x);
    if (std::abs(xx) < 0.05 || std::abs(1 + xx) < 0.05) continue;
    for (const auto& A : basis) {
      auto F = [&](const Vec3& y) { return pogorelov(y, killing_field(A, y)); };
      EXPECT_LT(killing_defect(F, x), 1e-6);
    }
    ++done;
  }
}

TEST(Lorentz, PreservesForm) {
  auto L = lorentz_transform({0.3, -0.2, 0.5, 0.1, 0.7, -0.4});
  Mat4 J = Mat4::Identity();
  J(2, 2) = -1;
  EXPECT_LT((L.transpose() * J * L - J).norm(), 1e-12);
}
