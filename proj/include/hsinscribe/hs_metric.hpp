#pragma once

#include "complex_geometry.hpp"
#include "ideal_polyhedron.hpp"
#include "random.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace hs {

struct ShapeParams {
  Triangulation tri;
  std::vector<cplx> tau;      // per triangulation edge, oriented from the lower id
  std::vector<double> sigma;  // ln |tau|
  std::vector<double> phi;    // arg tau
};

inline ShapeParams shape_parameters(const IdealPolyhedron& P) {
  ShapeParams sp;
  sp.tri = fan_triangulation(P.hull, P.n());
  std::vector<ExtComplex> z;
  for (const auto& v : P.vertices) z.push_back(boundary_to_complex(v.point()));
  for (size_t e = 0; e < sp.tri.edges.size(); ++e) {
    auto [a, b] = sp.tri.edges[e];
    cplx t = edge_shape(z[a], z[b], z[sp.tri.apexes[e][0]], z[sp.tri.apexes[e][1]]);
    sp.tau.push_back(t);
    sp.sigma.push_back(std::log(std::abs(t)));
    sp.phi.push_back(std::arg(t));
  }
  return sp;
}

struct VertexRelations {
  std::vector<double> product;  // |prod tau - 1| per vertex
  std::vector<double> closure;  // relative |sum of partial products| per vertex
  double max_product = 0, max_closure = 0;
};

inline VertexRelations verify_vertex_relations(const ShapeParams& sp) {
  VertexRelations r;
  for (const auto& star : sp.tri.star) {
    std::vector<cplx> taus;
    for (auto it = star.rbegin(); it != star.rend(); ++it) taus.push_back(sp.tau[*it]);
    auto res = star_residual(taus);
    r.product.push_back(res.product);
    r.closure.push_back(res.closure);
    r.max_product = std::max(r.max_product, res.product);
    r.max_closure = std::max(r.max_closure, res.closure);
  }
  return r;
}

struct Shearings {
  std::vector<double> sigma;
  std::vector<double> vertex_sums;
  double max_abs_sum = 0;
};

inline Shearings shearings(const ShapeParams& sp) {
  Shearings s;
  s.sigma = sp.sigma;
  for (const auto& star : sp.tri.star) {
    double t = 0;
    for (int e : star) t += sp.sigma[e];
    s.vertex_sums.push_back(t);
    s.max_abs_sum = std::max(s.max_abs_sum, std::abs(t));
  }
  return s;
}

// arg tau - theta (mod 2pi) on red edges whose two faces are triangles inside one sheet's region
inline double red_angle_mismatch(const IdealPolyhedron& P, const ShapeParams& sp, const AngleGraph& g) {
  double worst = 0;
  for (size_t e = 0; e < sp.tri.edges.size(); ++e) {
    if (!sp.tri.hull_edge[e]) continue;
    auto [a, b] = sp.tri.edges[e];
    int he = P.hull.edge_index(a, b);
    if (P.colors[he] != Color::Red) continue;
    const auto& E = P.hull.edges[he];
    auto interior_tri = [&](int f) {
      const auto& F = P.hull.faces[f];
      if (F.size() != 3) return false;
      for (int v : F)
        if (P.vertices[v].sheet != P.vertices[a].sheet) return false;
      return true;
    };
    if (!interior_tri(E.f0) || !interior_tri(E.f1)) continue;
    double d = std::remainder(sp.phi[e] - g.theta[he], 2 * kPi);
    worst = std::max(worst, std::abs(d));
  }
  return worst;
}

// ---- horocyclic polygons ----
//
// Disk model bases are angles on the unit circle. Internally everything is done in the
// upper half-plane: the frame of base b sends b to infinity (rotate b to 1, then Cayley).

namespace horo {

// Cayley map disk -> upper half-plane, w -> i (1 + w) / (1 - w); sends 1 to infinity, -1 to 0
inline Mobius cayley() { return {cplx(0, 1), cplx(0, 1), cplx(-1, 0), cplx(1, 0)}; }

inline Mobius rotation(double angle) { return {std::polar(1.0, angle), 0, 0, 1}; }

// disk -> half-plane with e^{i beta} at infinity
inline Mobius frame(double beta) { return cayley() * rotation(-beta); }

// disk -> half-plane with e^{i beta} at 0 (canonical size chart)
inline Mobius size_frame(double beta) { return cayley() * rotation(kPi - beta); }

// A horocycle in a half-plane chart: either tangent at x with Euclidean diameter d,
// or the horizontal line at height d when based at infinity.
struct UhpHorocycle {
  bool at_inf = false;
  double x = 0, d = 0;

  cplx some_point() const { return at_inf ? cplx(0, d) : cplx(x, d); }
  bool contains(cplx z, double tol) const {  // closed horodisk, relative tolerance
    if (at_inf) return z.imag() >= d * (1 - tol);
    double r = d / 2;
    return std::abs(z - cplx(x, r)) <= r * (1 + tol);
  }
};

// image of a horocycle under a real Mobius map of the half-plane
inline UhpHorocycle transport(const UhpHorocycle& h, const Mobius& M) {
  ExtComplex base = h.at_inf ? ExtComplex::infinity() : ExtComplex{cplx(h.x, 0), false};
  ExtComplex nb = M(base);
  cplx y = M(h.some_point());
  if (nb.inf) return {true, 0, y.imag()};
  double a = nb.z.real();
  return {false, a, std::norm(y - cplx(a, 0)) / y.imag()};
}

}  // namespace horo

struct Horocycle {
  double base = 0;  // angle on the unit circle
  double size = 1;  // diameter after sending the base to 0 via the size chart

  // representation in the half-plane frame of the disk map `to_uhp`
  horo::UhpHorocycle in(const Mobius& to_uhp) const {
    Mobius back = horo::size_frame(base).inverse();
    return horo::transport({false, 0.0, size}, to_uhp * back);
  }
};

// Horocycle based at `base` through the disk point w.
inline Horocycle horocycle_through(double base, cplx w) {
  cplx y = horo::size_frame(base)(w);
  return {base, std::norm(y) / y.imag()};
}

struct HorocyclicPolygon {
  std::vector<Horocycle> h;   // clockwise bases
  std::vector<cplx> s;        // s_i in h_i and h_{i+1}, disk model
  int p() const { return static_cast<int>(h.size()); }
};

namespace horo {

inline double wrap2pi(double a) {
  a = std::fmod(a, 2 * kPi);
  return a < 0 ? a + 2 * kPi : a;
}

// x coordinate in a half-plane frame of a boundary point
inline double boundary_x(const Mobius& M, double angle) { return M(std::polar(1.0, angle)).real(); }

}  // namespace horo

constexpr double kHoroTol = 1e-9;

inline HorocyclicPolygon horocyclic_polygon(const std::vector<double>& bases, const std::vector<double>& sizes,
                                            double tol = kHoroTol) {
  const int p = static_cast<int>(bases.size());
  if (p < 2) fail(Errc::MalformedInput, "need at least two horocycles");
  if (static_cast<int>(sizes.size()) != p) fail(Errc::MalformedInput, "bases and sizes differ in length");
  // clockwise: the angles decrease around the circle exactly once
  double turn = 0;
  for (int i = 0; i < p; ++i) {
    if (!(sizes[i] > 0)) fail(Errc::MalformedInput, "horocycle sizes must be positive");
    double step = horo::wrap2pi(bases[i] - bases[(i + 1) % p]);
    if (step < 1e-12) fail(Errc::MalformedInput, "bases must be distinct");
    turn += step;
  }
  if (std::abs(turn - 2 * kPi) > 1e-9) fail(Errc::MalformedInput, "bases are not in clockwise order");

  HorocyclicPolygon poly;
  for (int i = 0; i < p; ++i) poly.h.push_back({bases[i], sizes[i]});
  for (int i = 0; i < p; ++i) {
    int j = (i + 1) % p;
    Mobius F = horo::frame(bases[i]);
    auto hi = poly.h[i].in(F), hj = poly.h[j].in(F);
    double H = hi.d, D = hj.d;
    if (H > D * (1 + tol)) fail(Errc::NoIntersection, "horocycles " + std::to_string(i) + " and " + std::to_string(j) + " are disjoint");
    double off = std::sqrt(std::max(0.0, H * (D - H)));
    cplx si(hj.x - off, H);
    poly.s.push_back(F.inverse()(si));
  }
  // clockwise order on each h_i: s_{i-1} before s_i, i.e. larger x in the frame of b_i
  for (int i = 0; i < p; ++i) {
    Mobius F = horo::frame(bases[i]);
    cplx a = F(poly.s[(i + p - 1) % p]), b = F(poly.s[i]);
    double scale = std::max({1.0, std::abs(a.real()), std::abs(b.real())});
    if (p > 2 && !(a.real() > b.real() + tol * scale))
      fail(Errc::RedundantHorodisk, "horocycle " + std::to_string(i) + " has no boundary arc");
    for (int k = 0; k < p; ++k) {
      if (k == i || k == (i + p - 1) % p) continue;
      Mobius G = horo::frame(bases[k]);
      if (!poly.h[k].in(G).contains(G(poly.s[i]), 1e-7))
        fail(Errc::RedundantHorodisk, "vertex " + std::to_string(i) + " lies outside horocycle " + std::to_string(k));
    }
  }
  return poly;
}

struct CornerData {
  double alpha = 0;        // angle at s_i between the geodesics to b_i and b_{i+1}
  double delta = 0;        // distance from s_i to the geodesic b_i b_{i+1}, arccosh(csc psi)
  double delta_direct = 0; // the same distance via the foot of the perpendicular
  double identity = 0;     // |cosh(delta) sin(alpha/2) - 1|
};

inline CornerData corner(const HorocyclicPolygon& poly, int i) {
  const int p = poly.p();
  int j = (i + 1) % p;
  Mobius F = horo::frame(poly.h[i].base);
  cplx s = F(poly.s[i]);
  double x0 = horo::boundary_x(F, poly.h[j].base);
  CornerData c;
  // tangent at s of the geodesic towards x0: circle centered on the real axis
  double cx = (std::norm(s) - x0 * x0) / (2 * (s.real() - x0));
  cplx radial = s - cplx(cx, 0);
  cplx tangent(-radial.imag(), radial.real());
  if (std::real(std::conj(tangent) * (cplx(x0, 0) - s)) < 0) tangent = -tangent;
  cplx up(0, 1);
  c.alpha = std::acos(std::clamp(std::real(std::conj(up) * tangent) / std::abs(tangent), -1.0, 1.0));
  double sin_psi = s.imag() / std::abs(s - cplx(x0, 0));
  c.delta = std::acosh(1.0 / sin_psi);
  cplx foot(x0, std::abs(s - cplx(x0, 0)));
  c.delta_direct = std::acosh(1.0 + std::norm(s - foot) / (2 * s.imag() * foot.imag()));
  c.identity = std::abs(std::cosh(c.delta) * std::sin(c.alpha / 2) - 1.0);
  return c;
}

inline double cone_angle(const HorocyclicPolygon& poly) {
  double l = 0;
  for (int i = 0; i < poly.p(); ++i) l += corner(poly, i).alpha;
  return l;
}

struct Deformation {
  HorocyclicPolygon poly;
  std::vector<double> common_horocycle;  // per i: relative height gap of s'_{i-1}, s'_i in the frame of b_i
  double max_residual = 0;
};

// Move each s_i along the perpendicular to b_i b_{i+1} so that cosh(delta_i) becomes cosh(delta_i)/k.
inline Deformation deform_polygon(const HorocyclicPolygon& poly, double k, double tol = kHoroTol) {
  if (!(k > 0)) fail(Errc::MalformedInput, "k must be positive");
  const int p = poly.p();
  std::vector<cplx> moved;
  for (int i = 0; i < p; ++i) {
    int j = (i + 1) % p;
    Mobius F = horo::frame(poly.h[i].base);
    cplx s = F(poly.s[i]);
    double x0 = horo::boundary_x(F, poly.h[j].base);
    cplx rel = s - cplx(x0, 0);
    double rho = std::abs(rel), psi = std::arg(rel);
    double sp = k * std::sin(psi);
    if (sp > 1) fail(Errc::VerticesMerge, "vertex " + std::to_string(i) + " would cross its geodesic");
    double psi2 = psi > kPi / 2 ? kPi - std::asin(sp) : std::asin(sp);
    moved.push_back(F.inverse()(cplx(x0, 0) + std::polar(rho, psi2)));
  }
  Deformation out;
  for (int i = 0; i < p; ++i) {
    Mobius F = horo::frame(poly.h[i].base);
    cplx a = F(moved[(i + p - 1) % p]), b = F(moved[i]);
    double gap = std::abs(a.imag() - b.imag()) / std::max(a.imag(), b.imag());
    out.common_horocycle.push_back(gap);
    out.max_residual = std::max(out.max_residual, gap);
    if (p > 2 && !(a.real() > b.real())) fail(Errc::VerticesMerge, "vertices on horocycle " + std::to_string(i) + " merge");
  }
  out.poly.s = moved;
  for (int i = 0; i < p; ++i) out.poly.h.push_back(horocycle_through(poly.h[i].base, moved[i]));
  (void)tol;
  return out;
}

inline std::vector<double> bases_of(const HorocyclicPolygon& poly) {
  std::vector<double> b;
  for (const auto& h : poly.h) b.push_back(h.base);
  return b;
}

inline std::vector<double> sizes_of(const HorocyclicPolygon& poly) {
  std::vector<double> s;
  for (const auto& h : poly.h) s.push_back(h.size);
  return s;
}

// Grown one horocycle at a time: each new one is based between the last base and the first,
// passes through the vertex there and is then shrunk a little so that it cuts that vertex off.
inline HorocyclicPolygon random_horocyclic_polygon(int p, Rng& rng) {
  if (p < 2) fail(Errc::MalformedInput, "need at least two horocycles");
  std::vector<double> bases, sizes;
  HorocyclicPolygon poly;
  for (;;) {
    double gap = rng.uniform(0.5, 2 * kPi - 0.5);
    bases = {0.0, -gap};
    sizes = {std::exp(rng.uniform(-0.5, 2.0)), std::exp(rng.uniform(-0.5, 2.0))};
    try {
      poly = horocyclic_polygon(bases, sizes);
      break;
    } catch (const Error&) {
    }
  }
  while (poly.p() < p) {
    const int m = poly.p();
    // cut a corner, preferably in the widest gap between consecutive bases
    int widest = 0;
    for (int i = 1; i < m; ++i)
      if (horo::wrap2pi(bases[i] - bases[(i + 1) % m]) > horo::wrap2pi(bases[widest] - bases[(widest + 1) % m])) widest = i;
    bool grown = false;
    for (int attempt = 0; attempt < 400 && !grown; ++attempt) {
      int at = attempt < 50 ? widest : rng.integer(0, m - 1);
      double span = horo::wrap2pi(bases[at] - bases[(at + 1) % m]);
      double b = bases[at] - span * rng.uniform(0.05, 0.95);
      double shrink = 1.0 - std::pow(0.5, 1 + attempt % 12) * rng.uniform(0.2, 1.0);
      Horocycle h = horocycle_through(b, poly.s[at]);
      auto nb = bases, ns = sizes;
      nb.insert(nb.begin() + at + 1, b);
      ns.insert(ns.begin() + at + 1, h.size * shrink);
      try {
        poly = horocyclic_polygon(nb, ns);
        bases = nb;
        sizes = ns;
        grown = true;
      } catch (const Error&) {
      }
    }
    if (!grown) fail(Errc::DegenerateInput, "could not grow the polygon");
  }
  return poly;
}

}  // namespace hs
