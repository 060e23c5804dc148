#pragma once

#include "admissible.hpp"
#include "complex_geometry.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "hull3d.hpp"
#include "minkowski.hpp"
#include "random.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace hs {

constexpr double kPi = std::numbers::pi;

struct IdealVertex {
  Sheet sheet = Sheet::Plus;
  double u0 = 0, u1 = 0;
  std::string label;

  Vec4 point() const { return ideal_point(sheet, u0, u1); }
  Point3<double> chart() const { return {u0, u1, sheet_height(sheet, u0, u1)}; }
};

// index 0: sheet +, index 1: sheet -
struct InteriorComplex {
  std::array<std::vector<int>, 2> components;
  std::array<std::vector<int>, 2> cycles;
};

struct IdealPolyhedron {
  std::vector<IdealVertex> vertices;
  HullCombinatorics hull;
  int p = 0, q = 0;
  std::vector<Color> colors;  // per hull edge
  InteriorComplex interior;

  int n() const { return static_cast<int>(vertices.size()); }

  Graph skeleton() const {
    Graph g(n());
    for (const auto& e : hull.edges) g.add_edge(e.u, e.v);
    return g;
  }

  ColoredGraph colored() const {
    ColoredGraph cg{skeleton(), colors, {interior.cycles[0], interior.cycles[1]}};
    cg.validate();
    return cg;
  }

  Point3<double> centroid() const {
    Point3<double> c{0, 0, 0};
    for (const auto& v : vertices) {
      auto x = v.chart();
      for (int i = 0; i < 3; ++i) c[i] += x[i] / n();
    }
    return c;
  }
};

namespace detail {

inline Vec4 homog(const Point3<double>& x) { return Vec4{{x[0], x[1], x[2], 1.0}}; }

// Unit outward normal of the plane through a, b, c (counter-clockwise from outside):
// <n, X> is the Euclidean side test, normalised to <n, n> = 1.
inline Vec4 outward_normal(const Point3<double>& a, const Point3<double>& b, const Point3<double>& c) {
  auto N = cross(sub(b, a), sub(c, a));
  Vec4 n{{N[0], N[1], -N[2], -(N[0] * a[0] + N[1] * a[1] + N[2] * a[2])}};
  double nn = form(n);
  if (!(nn > 0)) fail(Errc::NormalNotSpacelike, "face plane misses H^3");
  return (1.0 / std::sqrt(nn)) * n;
}

// Euclidean vector r with r.x = det[a; b; c; x]
inline Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) {
    Eigen::Matrix4d M;
    for (int j = 0; j < 4; ++j) {
      M(0, j) = a[j];
      M(1, j) = b[j];
      M(2, j) = c[j];
      M(3, j) = j == i ? 1.0 : 0.0;
    }
    r[i] = M.determinant();
  }
  return r;
}

inline double phase(double x, double y) {
  double a = std::atan2(y, x);
  return a < 0 ? a + 2 * kPi : a;
}

}  // namespace detail

inline std::vector<Color> classify_edges(const IdealPolyhedron& P, double tol = 1e-9) {
  std::vector<Color> out;
  for (const auto& e : P.hull.edges) {
    const auto& a = P.vertices[e.u];
    const auto& b = P.vertices[e.v];
    Color by_sheet = a.sheet == b.sheet ? Color::Red : Color::Blue;
    auto xa = a.chart(), xb = b.chart();
    Vec4 mid{{(xa[0] + xb[0]) / 2, (xa[1] + xb[1]) / 2, (xa[2] + xb[2]) / 2, 1.0}};
    double qm = form(mid), scale = tol * euclid_norm2(mid);
    bool in_closure = qm <= scale;
    bool in_ds = qm > -scale;
    if ((by_sheet == Color::Red && !in_closure) || (by_sheet == Color::Blue && !in_ds))
      fail(Errc::ClassificationMismatch,
           "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " midpoint test disagrees with sheets");
    out.push_back(by_sheet);
  }
  return out;
}

inline InteriorComplex interior_complex(const IdealPolyhedron& P) {
  InteriorComplex ic;
  const auto& H = P.hull;
  auto sheet_idx = [&](int v) { return P.vertices[v].sheet == Sheet::Plus ? 0 : 1; };
  for (int v = 0; v < P.n(); ++v) ic.components[sheet_idx(v)].push_back(v);
  std::vector<char> mixed_face(H.faces.size(), 0);
  for (size_t f = 0; f < H.faces.size(); ++f) {
    int s0 = sheet_idx(H.faces[f][0]);
    for (int v : H.faces[f]) mixed_face[f] |= sheet_idx(v) != s0;
  }
  for (int s = 0; s < 2; ++s) {
    const auto& comp = ic.components[s];
    std::vector<std::vector<int>> bnd(P.n());
    std::vector<std::vector<int>> red(P.n());
    for (size_t e = 0; e < H.edges.size(); ++e) {
      const auto& E = H.edges[e];
      if (P.colors[e] != Color::Red || sheet_idx(E.u) != s) continue;
      red[E.u].push_back(E.v);
      red[E.v].push_back(E.u);
      if (mixed_face[E.f0] || mixed_face[E.f1]) {
        bnd[E.u].push_back(E.v);
        bnd[E.v].push_back(E.u);
      }
    }
    // red subgraph of this sheet must be connected
    std::vector<char> seen(P.n(), 0);
    std::vector<int> st{comp[0]};
    seen[comp[0]] = 1;
    size_t reached = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : red[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          st.push_back(w);
        }
    }
    if (reached != comp.size()) fail(Errc::StructureViolation, "red subgraph of a sheet is disconnected");

    std::vector<int> cyc;
    if (comp.size() <= 2) {
      cyc = comp;
    } else {
      for (int v : comp)
        if (bnd[v].size() != 2) fail(Errc::StructureViolation, "interior region boundary is not a cycle");
      int prev = -1, cur = comp[0];
      do {
        cyc.push_back(cur);
        int nxt = bnd[cur][0] == prev ? bnd[cur][1] : bnd[cur][0];
        prev = cur;
        cur = nxt;
      } while (cur != comp[0] && cyc.size() <= comp.size());
      if (cyc.size() != comp.size()) fail(Errc::StructureViolation, "boundary cycle misses vertices");
    }
    // orientation: counter-clockwise in the (u0,u1) plane on sheet +, clockwise on sheet -
    double cx = 0, cy = 0;
    for (int v : cyc) {
      cx += P.vertices[v].u0 / cyc.size();
      cy += P.vertices[v].u1 / cyc.size();
    }
    if (cyc.size() >= 3) {
      double area = 0;
      for (size_t k = 0; k < cyc.size(); ++k) {
        const auto& a = P.vertices[cyc[k]];
        const auto& b = P.vertices[cyc[(k + 1) % cyc.size()]];
        area += a.u0 * b.u1 - b.u0 * a.u1;
      }
      if ((area > 0) != (s == 0)) std::reverse(cyc.begin() + 1, cyc.end());
    }
    size_t start = 0;
    double best = 1e300;
    for (size_t k = 0; k < cyc.size(); ++k) {
      double ph = detail::phase(P.vertices[cyc[k]].u0 - cx, P.vertices[cyc[k]].u1 - cy);
      if (ph < best - 1e-12) {
        best = ph;
        start = k;
      }
    }
    std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
    ic.cycles[s] = cyc;
  }
  return ic;
}

inline IdealPolyhedron build(std::vector<IdealVertex> vertices, double tol = 1e-9) {
  IdealPolyhedron P;
  for (const auto& v : vertices) (v.sheet == Sheet::Plus ? P.p : P.q)++;
  if (P.p == 0 || P.q == 0) fail(Errc::StronglyIdeal, "all vertices on one sheet");
  if (P.p + P.q < 4) fail(Errc::DegenerateInput, "need at least 4 vertices");
  P.vertices = std::move(vertices);
  std::vector<Point3<double>> pts;
  for (const auto& v : P.vertices) pts.push_back(v.chart());
  try {
    P.hull = convex_hull(pts, tol);
  } catch (const Error& e) {
    if (e.code() == Errc::DuplicatePoint) fail(Errc::NonExtremeVertex, std::string("InVertex: ") + e.what());
    if (e.code() == Errc::DegenerateInput) fail(Errc::FlatPolyhedron, e.what());
    throw;
  }
  if (!P.hull.non_extreme.empty()) {
    int id = P.hull.non_extreme[0];
    fail(Errc::NonExtremeVertex,
         std::string(to_string(is_vertex_extreme(pts, id, tol))) + ": vertex " + std::to_string(id));
  }
  P.colors = classify_edges(P, tol);
  for (const auto& F : P.hull.faces) {
    bool all_blue = true;
    for (size_t k = 0; k < F.size(); ++k) {
      int e = P.hull.edge_index(F[k], F[(k + 1) % F.size()]);
      all_blue &= P.colors[e] == Color::Blue;
    }
    if (all_blue) fail(Errc::StructureViolation, "exterior face");
  }
  P.interior = interior_complex(P);
  for (int s = 0; s < 2; ++s)
    for (size_t k = 0; k < P.interior.cycles[s].size(); ++k)
      P.vertices[P.interior.cycles[s][k]].label = std::to_string(k + 1) + (s == 0 ? "+" : "-");
  return P;
}

// ---- angles ----

struct AngleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> theta;  // radians
  std::vector<Color> colors;
  Cover cover;

  double vertex_sum(int v) const {
    double s = 0;
    for (size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == v || edges[e].second == v) s += theta[e];
    return s;
  }
  int apex() const {
    for (const auto& c : cover)
      if (c.size() == 1) return c[0];
    return -1;
  }
  double blue_sum() const {
    double s = 0;
    for (size_t e = 0; e < edges.size(); ++e)
      if (colors[e] == Color::Blue) s += theta[e];
    return s;
  }
};

// unit outward normal of each hull face
inline std::vector<Vec4> face_normals(const IdealPolyhedron& P) {
  std::vector<Vec4> out;
  auto C = detail::homog(P.centroid());
  for (const auto& F : P.hull.faces) {
    // best-conditioned ordered triple
    size_t bi = 1, bj = 2;
    double best = -1;
    for (size_t i = 1; i < F.size(); ++i)
      for (size_t j = i + 1; j < F.size(); ++j) {
        auto a = P.vertices[F[0]].chart(), b = P.vertices[F[i]].chart(), c = P.vertices[F[j]].chart();
        double s = detail::norm(detail::cross(detail::sub(b, a), detail::sub(c, a)));
        if (s > best) {
          best = s;
          bi = i;
          bj = j;
        }
      }
    Vec4 n = detail::outward_normal(P.vertices[F[0]].chart(), P.vertices[F[bi]].chart(), P.vertices[F[bj]].chart());
    if (!(inner(n, C) < 0)) fail(Errc::StructureViolation, "face normal does not point away from the centroid");
    out.push_back(n);
  }
  return out;
}

inline AngleGraph dihedral_angles(const IdealPolyhedron& P, double tol = 1e-9) {
  auto normals = face_normals(P);
  AngleGraph g;
  g.n = P.n();
  g.cover = {P.interior.cycles[0], P.interior.cycles[1]};
  for (size_t e = 0; e < P.hull.edges.size(); ++e) {
    const auto& E = P.hull.edges[e];
    double c = inner(normals[E.f0], normals[E.f1]);
    if (std::abs(c) > 1 + tol) fail(Errc::AngleDomain, "|<n1,n2>| exceeds 1");
    double vartheta = std::acos(std::clamp(c, -1.0, 1.0));
    g.edges.push_back({E.u, E.v});
    g.colors.push_back(P.colors[e]);
    g.theta.push_back(P.colors[e] == Color::Red ? vartheta : -vartheta);
  }
  return g;
}

struct ConditionResult {
  std::string name;
  bool pass = false;
  double residual = 0;
  std::string detail;
};

struct AdmissibleReport {
  std::vector<ConditionResult> conditions;
  double blue_sum = 0;
  std::vector<double> vertex_sums;

  bool ok() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.pass; });
  }
};

// C1 and A1-A3. A3: blue sum >= -2pi, equal exactly when a 1-cycle is present.
inline AdmissibleReport verify_admissible(const AngleGraph& g, double tol = 1e-9) {
  AdmissibleReport r;
  Graph G(g.n, g.edges);
  auto cover = find_two_cycle_cover(G, &g.colors, g.n);
  r.conditions.push_back({"C1", cover.has_value(), 0.0, cover ? "two-cycle cover" : "no two-cycle cover"});
  {
    ConditionResult c{"A1", true, 0.0, ""};
    for (size_t e = 0; e < g.edges.size(); ++e) {
      double t = g.theta[e];
      double margin = g.colors[e] == Color::Red ? std::min(t, kPi - t) : std::min(-t, kPi + t);
      if (!(margin > tol)) {
        c.pass = false;
        c.residual = std::max(c.residual, tol - margin);
        c.detail += "edge " + std::to_string(g.edges[e].first) + "-" + std::to_string(g.edges[e].second) + " ";
      }
    }
    r.conditions.push_back(c);
  }
  int apex = -1;
  if (cover)
    for (const auto& cyc : *cover)
      if (cyc.size() == 1) apex = cyc[0];
  {
    ConditionResult c{"A2", true, 0.0, ""};
    for (int v = 0; v < g.n; ++v) {
      double s = g.vertex_sum(v);
      r.vertex_sums.push_back(s);
      double target = v == apex ? -2 * kPi : 0.0;
      double d = std::abs(s - target);
      c.residual = std::max(c.residual, d);
      if (d > tol) {
        c.pass = false;
        c.detail += "vertex " + std::to_string(v) + " ";
      }
    }
    r.conditions.push_back(c);
  }
  {
    r.blue_sum = g.blue_sum();
    double gap = r.blue_sum + 2 * kPi;
    bool equal = std::abs(gap) <= tol;
    bool pass = apex >= 0 ? equal : gap > tol;
    r.conditions.push_back({"A3", pass, gap,
                            apex >= 0 ? "1-cycle present: blue sum must equal -2pi"
                                      : "no 1-cycle: blue sum must exceed -2pi"});
  }
  return r;
}

// ---- fan triangulation and local shape parameters ----

struct Triangulation {
  std::vector<std::array<int, 3>> tris;        // counter-clockwise from outside
  std::vector<std::pair<int, int>> edges;      // u < v
  std::vector<std::array<int, 2>> apexes;      // third vertex of the triangle with u->v, then v->u
  std::vector<char> hull_edge;                 // edge of the polyhedron (not a diagonal)
  std::vector<std::vector<int>> star;          // edge ids around each vertex, counter-clockwise from outside

  int edge_index(int a, int b) const {
    auto key = std::minmax(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{key.first, key.second});
    return (it != edges.end() && *it == std::pair{key.first, key.second}) ? static_cast<int>(it - edges.begin()) : -1;
  }
};

// Fan from the lowest-id vertex of each face.
inline Triangulation fan_triangulation(const HullCombinatorics& H, int n) {
  Triangulation T;
  for (const auto& F : H.faces)
    for (size_t k = 1; k + 1 < F.size(); ++k) T.tris.push_back({F[0], F[k], F[k + 1]});
  std::map<std::pair<int, int>, std::array<int, 2>> em;
  for (const auto& t : T.tris)
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3], c = t[(k + 2) % 3];
      auto key = std::minmax(a, b);
      auto& slot = em.try_emplace({key.first, key.second}, std::array<int, 2>{-1, -1}).first->second;
      slot[a < b ? 0 : 1] = c;
    }
  for (auto& [key, ap] : em) {
    if (ap[0] < 0 || ap[1] < 0) fail(Errc::StructureViolation, "triangulation edge with one flap");
    T.edges.push_back(key);
    T.apexes.push_back(ap);
    T.hull_edge.push_back(H.edge_index(key.first, key.second) >= 0);
  }
  // counter-clockwise around v: triangle (v, a, b) puts b right after a
  T.star.assign(n, {});
  std::vector<std::map<int, int>> next(n);
  for (const auto& t : T.tris)
    for (int k = 0; k < 3; ++k) next[t[k]][t[(k + 1) % 3]] = t[(k + 2) % 3];
  for (int v = 0; v < n; ++v) {
    if (next[v].empty()) continue;
    int first = next[v].begin()->first, a = first;
    do {
      T.star[v].push_back(T.edge_index(v, a));
      a = next[v].at(a);
    } while (a != first && T.star[v].size() <= next[v].size());
  }
  return T;
}

// Shape parameter on the edge z1 z2 with flaps (z1, z2, z3) and (z2, z1, z4), outward.
// Negated conjugate of the cross ratio: matches the boundary identification above.
inline cplx edge_shape(const ExtComplex& z1, const ExtComplex& z2, const ExtComplex& z3, const ExtComplex& z4) {
  return -std::conj(cross_ratio(z1, z2, z3, z4));
}

struct StarResidual {
  double product = 0;  // |prod tau - 1|
  double closure = 0;  // |sum of partial products| / sum of their moduli
};

// taus ordered clockwise around the vertex as seen from outside
inline StarResidual star_residual(const std::vector<cplx>& taus) {
  cplx prod = 1, sum = 0;
  double mag = 0;
  for (const auto& t : taus) {
    prod *= t;
    sum += prod;
    mag += std::abs(prod);
  }
  return {std::abs(prod - cplx(1.0)), mag > 0 ? std::abs(sum) / mag : 0.0};
}

struct VertexFigure {
  std::vector<int> edges;     // hull edge ids, counter-clockwise from outside
  std::vector<double> turns;  // theta on those edges
  double sum = 0;
  double closure_defect = 0;
};

inline VertexFigure vertex_figure(const IdealPolyhedron& P, const AngleGraph& g, int v) {
  if (v < 0 || v >= P.n()) fail(Errc::MalformedInput, "no such vertex");
  auto T = fan_triangulation(P.hull, P.n());
  VertexFigure vf;
  for (int te : T.star[v]) {
    if (!T.hull_edge[te]) continue;
    auto [a, b] = T.edges[te];
    int he = P.hull.edge_index(a, b);
    vf.edges.push_back(he);
    vf.turns.push_back(g.theta[he]);
    vf.sum += g.theta[he];
  }
  std::vector<ExtComplex> z;
  for (const auto& x : P.vertices) z.push_back(boundary_to_complex(x.point()));
  std::vector<cplx> taus;
  for (auto it = T.star[v].rbegin(); it != T.star[v].rend(); ++it) {
    auto [a, b] = T.edges[*it];
    taus.push_back(edge_shape(z[a], z[b], z[T.apexes[*it][0]], z[T.apexes[*it][1]]));
  }
  vf.closure_defect = star_residual(taus).closure;
  return vf;
}

// ---- generators and deformations ----

inline std::vector<double> even_phases(int k, double offset = 0) {
  std::vector<double> out;
  for (int i = 0; i < k; ++i) out.push_back(offset + 2 * kPi * i / k);
  return out;
}

inline IdealPolyhedron generate_two_circle(int p, int q, double t, const std::vector<double>& ph_plus,
                                           const std::vector<double>& ph_minus) {
  if (p < 1 || q < 1 || p + q < 4) fail(Errc::DegenerateInput, "need p, q >= 1 and p + q >= 4");
  if (!(t > 1)) fail(Errc::DegenerateInput, "height t must exceed 1");
  auto check = [](const std::vector<double>& ph, int k) {
    if (static_cast<int>(ph.size()) != k) fail(Errc::MalformedInput, "phase count mismatch");
    for (int i = 1; i < k; ++i)
      if (!(ph[i] > ph[i - 1])) fail(Errc::MalformedInput, "phases must increase");
    if (k > 1 && !(ph.back() - ph.front() < 2 * kPi)) fail(Errc::MalformedInput, "phases wrap past 2pi");
  };
  double r = std::sqrt(t * t - 1);
  std::vector<IdealVertex> vs;
  auto ring = [&](Sheet s, int k, const std::vector<double>& ph) {
    if (k == 1) {
      vs.push_back({s, 0.0, 0.0, ""});
      return;
    }
    check(ph, k);
    for (double a : ph) vs.push_back({s, r * std::cos(a), r * std::sin(a), ""});
  };
  ring(Sheet::Plus, p, ph_plus);
  ring(Sheet::Minus, q, ph_minus);
  return build(std::move(vs));
}

// evenly spaced phases; the minus ring is rotated by pi/q when both rings are proper
inline IdealPolyhedron generate_two_circle(int p, int q, double t) {
  double off = (p >= 2 && q >= 2) ? kPi / q : 0.0;
  return generate_two_circle(p, q, t, even_phases(p), even_phases(q, off));
}

// random phases, jittered radii; retried until every vertex is extreme
inline IdealPolyhedron generate_random(int p, int q, double t, uint64_t seed, double jitter = 0.3) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<IdealVertex> vs;
    auto ring = [&](Sheet s, int k) {
      if (k == 1) {
        vs.push_back({s, jitter * rng.uniform(-0.3, 0.3), jitter * rng.uniform(-0.3, 0.3), ""});
        return;
      }
      double rot = rng.uniform(0, 2 * kPi);
      for (int i = 0; i < k; ++i) {
        double a = rot + 2 * kPi * (i + 0.7 * rng.uniform(-0.5, 0.5)) / k;
        double h = std::max(1.05, t * (1 + jitter * rng.uniform(-0.5, 0.5)));
        double r = std::sqrt(h * h - 1);
        vs.push_back({s, r * std::cos(a), r * std::sin(a), ""});
      }
    };
    ring(Sheet::Plus, p);
    ring(Sheet::Minus, q);
    try {
      return build(std::move(vs));
    } catch (const Error& e) {
      if (e.code() != Errc::NonExtremeVertex) throw;
    }
  }
  fail(Errc::DegenerateInput, "could not draw a polyhedron with all vertices extreme");
}

// chart point strictly inside the hull
inline bool contains_strictly(const IdealPolyhedron& P, const Point3<double>& x, double tol = 1e-9) {
  auto normals = face_normals(P);
  Vec4 X = detail::homog(x);
  for (const auto& n : normals)
    if (!(inner(n, X) < -tol)) return false;
  return true;
}

// Vertices above height t slide down their sheet along the radial gradient until |x2| = t.
inline IdealPolyhedron deform_toward_planes(const IdealPolyhedron& P, double t) {
  if (!(t > 1)) fail(Errc::InteriorConditionUnmet, "t must exceed 1");
  if (!contains_strictly(P, {0, 0, 1}) || !contains_strictly(P, {0, 0, -1}))
    fail(Errc::InteriorConditionUnmet, "(0,0,+-1) not inside the polyhedron");
  std::vector<IdealVertex> vs = P.vertices;
  double r = std::sqrt(t * t - 1);
  for (auto& v : vs) {
    double rho = std::hypot(v.u0, v.u1);
    if (std::sqrt(rho * rho + 1) > t) {
      v.u0 *= r / rho;
      v.u1 *= r / rho;
    }
  }
  return build(std::move(vs));
}

// Image under a form-preserving linear map, re-read in the chart.
inline IdealPolyhedron apply_isometry(const IdealPolyhedron& P, const Mat4& L) {
  std::vector<IdealVertex> vs;
  for (const auto& v : P.vertices) {
    Vec4 y = apply(L, v.point());
    if (std::abs(y[3]) < 1e-9 * std::sqrt(euclid_norm2(y))) fail(Errc::DegenerateInput, "vertex sent to infinity");
    double x2 = y[2] / y[3];
    vs.push_back({x2 > 0 ? Sheet::Plus : Sheet::Minus, y[0] / y[3], y[1] / y[3], ""});
  }
  return build(std::move(vs));
}

// ---- rigidity rank ----

// Signed exterior angles on the edges of a fixed triangulation, as a smooth function
// of the planar coordinates (u0_0, u1_0, u0_1, ...). Zero on flat diagonals.
inline std::vector<double> triangulated_angles(const Triangulation& T, const std::vector<Sheet>& sheets,
                                               const std::vector<double>& u) {
  const int n = static_cast<int>(sheets.size());
  std::vector<Point3<double>> x(n);
  for (int i = 0; i < n; ++i) x[i] = {u[2 * i], u[2 * i + 1], sheet_height(sheets[i], u[2 * i], u[2 * i + 1])};
  std::vector<double> out;
  for (size_t e = 0; e < T.edges.size(); ++e) {
    auto [a, b] = T.edges[e];
    int c = T.apexes[e][0], d = T.apexes[e][1];
    Vec4 n1 = detail::outward_normal(x[a], x[b], x[c]);
    Vec4 n2 = detail::outward_normal(x[b], x[a], x[d]);
    Vec4 m = flip_time(detail::cross4(n1, detail::homog(x[a]), detail::homog(x[b])));
    double mm = form(m);
    m = (1.0 / std::sqrt(std::abs(mm))) * m;
    if (inner(m, detail::homog(x[c])) > 0) m = -1.0 * m;
    double s = sheets[a] == sheets[b] ? 1.0 : -1.0;
    out.push_back(s * std::atan2(inner(n2, m), inner(n1, n2)));
  }
  return out;
}

inline Eigen::MatrixXd angle_jacobian(const IdealPolyhedron& P, double h = 1e-5) {
  auto T = fan_triangulation(P.hull, P.n());
  std::vector<Sheet> sheets;
  std::vector<double> u;
  for (const auto& v : P.vertices) {
    sheets.push_back(v.sheet);
    u.push_back(v.u0);
    u.push_back(v.u1);
  }
  Eigen::MatrixXd J(T.edges.size(), u.size());
  for (size_t j = 0; j < u.size(); ++j) {
    auto up = u, um = u;
    up[j] += h;
    um[j] -= h;
    auto fp = triangulated_angles(T, sheets, up), fm = triangulated_angles(T, sheets, um);
    for (size_t i = 0; i < fp.size(); ++i) J(i, j) = (fp[i] - fm[i]) / (2 * h);
  }
  return J;
}

// singular values below max * rel count as zero
inline int numerical_rank(const Eigen::MatrixXd& J, double rel = 1e-6) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > s[0] * rel) ++r;
  return r;
}

inline int angle_jacobian_rank(const IdealPolyhedron& P, double h = 1e-5) {
  return numerical_rank(angle_jacobian(P, h));
}

}  // namespace hs
