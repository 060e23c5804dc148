#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

namespace hs {

template <class T>
using Point3 = std::array<T, 3>;

enum class Orientation { Positive, Negative, Coplanar };

enum class Extremality { Extreme, InFacetInterior, InVertex, Interior };

constexpr const char* to_string(Extremality e) {
  switch (e) {
    case Extremality::Extreme: return "Extreme";
    case Extremality::InFacetInterior: return "InFacetInterior";
    case Extremality::InVertex: return "InVertex";
    case Extremality::Interior: return "Interior";
  }
  return "?";
}

struct HullEdge {
  int u, v;    // u < v
  int f0, f1;  // f0 traverses u->v, f1 traverses v->u
  bool operator==(const HullEdge&) const = default;
};

struct HullCombinatorics {
  std::vector<int> vertices;            // sorted hull vertex ids
  std::vector<std::vector<int>> faces;  // counter-clockwise seen from outside, min id first
  std::vector<HullEdge> edges;          // sorted by (u, v)
  std::vector<int> non_extreme;         // input ids that are not hull vertices

  int edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b},
                               [](const HullEdge& e, const std::pair<int, int>& k) {
                                 return std::pair{e.u, e.v} < k;
                               });
    if (it == edges.end() || it->u != a || it->v != b) return -1;
    return static_cast<int>(it - edges.begin());
  }

  bool operator==(const HullCombinatorics&) const = default;
};

namespace detail {

template <class T>
constexpr bool is_exact_v = !std::is_floating_point_v<T>;

template <class T>
Point3<T> sub(const Point3<T>& a, const Point3<T>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class T>
Point3<T> cross(const Point3<T>& a, const Point3<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T>
T dot(const Point3<T>& a, const Point3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
double approx(const T& v) {
  if constexpr (is_exact_v<T>)
    return v.template convert_to<double>();
  else
    return static_cast<double>(v);
}

template <class T>
double norm(const Point3<T>& a) {
  double x = approx(a[0]), y = approx(a[1]), z = approx(a[2]);
  return std::sqrt(x * x + y * y + z * z);
}

// sign of v, treating |v| <= scale as zero for floating types
template <class T>
int sgn(const T& v, double scale) {
  if constexpr (is_exact_v<T>) {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  } else {
    if (v > scale) return 1;
    if (v < -scale) return -1;
    return 0;
  }
}

template <class T>
struct HullContext {
  const std::vector<Point3<T>>& p;
  double len_eps;  // tolerance on distances (zero in exact mode)
  double len;      // bounding-box diagonal

  HullContext(const std::vector<Point3<T>>& pts, double tol) : p(pts) {
    double lo[3] = {1e300, 1e300, 1e300}, hi[3] = {-1e300, -1e300, -1e300};
    for (auto& q : pts)
      for (int i = 0; i < 3; ++i) {
        lo[i] = std::min(lo[i], approx(q[i]));
        hi[i] = std::max(hi[i], approx(q[i]));
      }
    len = std::sqrt((hi[0] - lo[0]) * (hi[0] - lo[0]) + (hi[1] - lo[1]) * (hi[1] - lo[1]) +
                    (hi[2] - lo[2]) * (hi[2] - lo[2]));
    if (len == 0) len = 1;
    len_eps = is_exact_v<T> ? 0.0 : tol * len;
  }

  // side of point m relative to the plane through a with normal N
  int side(const Point3<T>& N, double nN, int a, int m) const {
    return sgn(dot(N, sub(p[m], p[a])), len_eps * nN);
  }

  bool degenerate_normal(const Point3<T>& N, double nN) const {
    if constexpr (is_exact_v<T>)
      return N[0] == 0 && N[1] == 0 && N[2] == 0;
    else
      return nN <= len_eps * len;
  }

  bool same_point(int i, int j) const {
    if constexpr (is_exact_v<T>)
      return p[i] == p[j];
    else
      return norm(sub(p[i], p[j])) <= len_eps;
  }
};

// Convex polygon corners of coplanar points `ids`, counter-clockwise about `N`.
template <class T>
std::vector<int> planar_hull(const HullContext<T>& c, const std::vector<int>& ids, const Point3<T>& N) {
  const auto& p = c.p;
  double nN = norm(N);
  auto turn = [&](int a, int b, int m) {
    // > 0 when m is left of a->b
    return sgn(dot(cross(sub(p[b], p[a]), sub(p[m], p[a])), N), c.len_eps * c.len * nN);
  };
  auto dist2 = [&](int a, int b) {
    auto d = sub(p[b], p[a]);
    return dot(d, d);
  };
  // start from the lexicographically smallest point: always a corner
  int start = ids[0];
  for (int i : ids)
    for (int k = 0; k < 3; ++k) {
      if (p[i][k] < p[start][k]) { start = i; break; }
      if (p[i][k] > p[start][k]) break;
    }
  std::vector<int> out;
  int cur = start;
  for (size_t guard = 0; guard <= ids.size(); ++guard) {
    out.push_back(cur);
    int cand = -1;
    for (int m : ids) {
      if (m == cur) continue;
      if (cand < 0) { cand = m; continue; }
      int t = turn(cur, cand, m);
      // every other point must end up left of cur->cand; among collinear keep the farthest
      if (t < 0 || (t == 0 && dist2(cur, m) > dist2(cur, cand))) cand = m;
    }
    if (cand == start || cand < 0) break;
    cur = cand;
  }
  return out;
}

}  // namespace detail

// Convex hull by enumeration of supporting planes through point triples.
// Exact for rational inputs; floating inputs use tolerance tol scaled by the bounding box.
template <class T>
HullCombinatorics convex_hull(const std::vector<Point3<T>>& pts, double tol = 1e-9) {
  using namespace detail;
  const int n = static_cast<int>(pts.size());
  if (n < 4) fail(Errc::DegenerateInput, "need at least 4 points");
  HullContext<T> c(pts, tol);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c.same_point(i, j))
        fail(Errc::DuplicatePoint, "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  std::map<std::vector<int>, Point3<T>> planes;  // on-plane ids -> outward normal
  bool full_dim = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Point3<T> N = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        double nN = norm(N);
        if (c.degenerate_normal(N, nN)) continue;
        int pos = 0, neg = 0;
        std::vector<int> on;
        for (int m = 0; m < n; ++m) {
          int s = c.side(N, nN, i, m);
          if (s > 0) ++pos;
          else if (s < 0) ++neg;
          else on.push_back(m);
        }
        if (pos + neg > 0) full_dim = true;
        if (pos > 0 && neg > 0) continue;
        if (pos + neg == 0) continue;
        if (!planes.count(on)) {
          if (pos > 0) N = {-N[0], -N[1], -N[2]};
          planes.emplace(on, N);
        }
      }
  if (!full_dim || planes.empty()) fail(Errc::DegenerateInput, "all points are coplanar");

  HullCombinatorics h;
  std::vector<char> is_corner(n, 0);
  for (auto& [on, N] : planes) {
    auto face = planar_hull(c, on, N);
    if (face.size() < 3) continue;
    for (int v : face) is_corner[v] = 1;
    auto mn = std::min_element(face.begin(), face.end());
    std::rotate(face.begin(), mn, face.end());
    h.faces.push_back(std::move(face));
  }
  std::sort(h.faces.begin(), h.faces.end());
  for (int i = 0; i < n; ++i) (is_corner[i] ? h.vertices : h.non_extreme).push_back(i);

  std::map<std::pair<int, int>, std::array<int, 2>> em;
  for (int f = 0; f < static_cast<int>(h.faces.size()); ++f) {
    const auto& F = h.faces[f];
    for (size_t k = 0; k < F.size(); ++k) {
      int a = F[k], b = F[(k + 1) % F.size()];
      auto key = std::minmax(a, b);
      auto it = em.try_emplace({key.first, key.second}, std::array<int, 2>{-1, -1}).first;
      int slot = a < b ? 0 : 1;
      if (it->second[slot] != -1) fail(Errc::DegenerateInput, "edge traversed twice in one direction");
      it->second[slot] = f;
    }
  }
  for (auto& [key, fs] : em) {
    if (fs[0] < 0 || fs[1] < 0) fail(Errc::DegenerateInput, "hull edge with a single face");
    h.edges.push_back({key.first, key.second, fs[0], fs[1]});
  }
  long V = static_cast<long>(h.vertices.size()), E = static_cast<long>(h.edges.size()),
       F = static_cast<long>(h.faces.size());
  if (V - E + F != 2) fail(Errc::DegenerateInput, "Euler characteristic check failed");
  return h;
}

// Degeneration type of point `index` relative to the others.
template <class T>
Extremality is_vertex_extreme(const std::vector<Point3<T>>& pts, int index, double tol = 1e-9) {
  using namespace detail;
  HullContext<T> c(pts, tol);
  for (int j = 0; j < static_cast<int>(pts.size()); ++j)
    if (j != index && c.same_point(index, j)) return Extremality::InVertex;
  std::vector<Point3<T>> others;
  for (int j = 0; j < static_cast<int>(pts.size()); ++j)
    if (j != index) others.push_back(pts[j]);
  HullCombinatorics h;
  try {
    h = convex_hull(others, tol);
  } catch (const Error&) {
    return Extremality::Extreme;  // the others span no solid
  }
  bool on_some = false;
  for (const auto& F : h.faces) {
    auto N = cross(sub(others[F[1]], others[F[0]]), sub(others[F[2]], others[F[0]]));
    double nN = norm(N);
    int s = sgn(dot(N, sub(pts[index], others[F[0]])), c.len_eps * nN);
    if (s > 0) return Extremality::Extreme;
    if (s == 0) on_some = true;
  }
  return on_some ? Extremality::InFacetInterior : Extremality::Interior;
}

inline std::vector<Point3<double>> to_double_points(const std::vector<Point3<Rational>>& pts) {
  std::vector<Point3<double>> out;
  for (auto& p : pts) out.push_back({to_double(p[0]), to_double(p[1]), to_double(p[2])});
  return out;
}

}  // namespace hs
