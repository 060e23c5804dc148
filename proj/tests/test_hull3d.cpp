#include "hsinscribe/hull3d.hpp"
#include "hsinscribe/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace hs;

namespace {

using P3 = Point3<double>;
using Q3 = Point3<Rational>;

std::vector<P3> cube() {
  std::vector<P3> p;
  for (int i = 0; i < 8; ++i) p.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
  return p;
}

std::set<std::set<int>> face_sets(const HullCombinatorics& h, const std::vector<int>& relabel = {}) {
  std::set<std::set<int>> out;
  for (const auto& f : h.faces) {
    std::set<int> s;
    for (int v : f) s.insert(relabel.empty() ? v : relabel[v]);
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST(ConvexHull, Tetrahedron) {
  std::vector<P3> p{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto h = convex_hull(p);
  EXPECT_EQ(h.faces.size(), 4u);
  EXPECT_EQ(h.edges.size(), 6u);
  EXPECT_EQ(h.vertices, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(h.non_extreme.empty());
}

TEST(ConvexHull, CubeHasSixQuads) {
  auto h = convex_hull(cube());
  ASSERT_EQ(h.faces.size(), 6u);
  for (const auto& f : h.faces) EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(h.edges.size(), 12u);
}

TEST(ConvexHull, ExactCubeMatchesFloating) {
  std::vector<Q3> q;
  for (auto& x : cube()) q.push_back({Rational(x[0]), Rational(x[1]), Rational(x[2])});
  EXPECT_EQ(convex_hull(q), convex_hull(cube()));
}

TEST(ConvexHull, InteriorPointIsFlagged) {
  auto p = cube();
  p.push_back({0.5, 0.5, 0.5});
  auto h = convex_hull(p);
  EXPECT_EQ(h.non_extreme, std::vector<int>{8});
  EXPECT_EQ(h.faces.size(), 6u);
}

TEST(ConvexHull, FacesCounterClockwiseFromOutside) {
  auto p = cube();
  auto h = convex_hull(p);
  P3 c{0.5, 0.5, 0.5};
  for (const auto& f : h.faces) {
    auto N = detail::cross(detail::sub(p[f[1]], p[f[0]]), detail::sub(p[f[2]], p[f[0]]));
    EXPECT_GT(detail::dot(N, detail::sub(p[f[0]], c)), 0);
    EXPECT_EQ(f[0], *std::min_element(f.begin(), f.end()));
  }
}

TEST(ConvexHull, EdgesKnowTheirFaces) {
  auto h = convex_hull(cube());
  for (const auto& e : h.edges) {
    auto has_dart = [&](int f, int a, int b) {
      const auto& F = h.faces[f];
      for (size_t k = 0; k < F.size(); ++k)
        if (F[k] == a && F[(k + 1) % F.size()] == b) return true;
      return false;
    };
    EXPECT_TRUE(has_dart(e.f0, e.u, e.v));
    EXPECT_TRUE(has_dart(e.f1, e.v, e.u));
  }
}

TEST(ConvexHull, EulerOnRandomSpherePoints) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<P3> p;
    for (int i = 0; i < 12; ++i) {
      double z = rng.uniform(-1, 1), a = rng.uniform(0, 6.283185307179586), r = std::sqrt(1 - z * z);
      p.push_back({r * std::cos(a), r * std::sin(a), z});
    }
    auto h = convex_hull(p);
    int V = static_cast<int>(h.vertices.size()), E = static_cast<int>(h.edges.size()), F = static_cast<int>(h.faces.size());
    EXPECT_EQ(V - E + F, 2);
    EXPECT_EQ(V, 12);
  }
}

TEST(ConvexHull, OrderIndependent) {
  Rng rng(4);
  std::vector<P3> p;
  for (int i = 0; i < 10; ++i) p.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
  auto base = face_sets(convex_hull(p));
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = 0; k < 5; ++k) {
    for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i) std::swap(perm[i], perm[rng.integer(0, i)]);
    std::vector<P3> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = p[perm[i]];
    EXPECT_EQ(face_sets(convex_hull(q), perm), base);
  }
}

TEST(ConvexHull, Degenerate) {
  EXPECT_THROW(convex_hull(std::vector<P3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), Error);
  EXPECT_THROW(convex_hull(std::vector<P3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), Error);
  try {
    convex_hull(std::vector<P3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicatePoint);
  }
}

TEST(Extremality, Kinds) {
  auto p = cube();
  EXPECT_EQ(is_vertex_extreme(p, 0), Extremality::Extreme);
  auto q = p;
  q.push_back({0.5, 0.5, 0});  // centre of the bottom face
  EXPECT_EQ(is_vertex_extreme(q, 8), Extremality::InFacetInterior);
  q.back() = {0.5, 0.5, 0.5};
  EXPECT_EQ(is_vertex_extreme(q, 8), Extremality::Interior);
  q.back() = {1, 1, 1};
  EXPECT_EQ(is_vertex_extreme(q, 8), Extremality::InVertex);
}

TEST(Extremality, ExactOnEdgeMidpoint) {
  std::vector<Q3> q{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 0, 0}};
  EXPECT_EQ(is_vertex_extreme(q, 4), Extremality::InFacetInterior);
}
