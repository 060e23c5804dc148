#pragma once

#include "complex_geometry.hpp"
#include "errors.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace hs {

// Ambient 4-space with q(x) = x0^2 + x1^2 - x2^2 + x3^2. x2 is the time axis,
// the affine chart is x3 = 1 and the ideal boundary there is x2 = +-sqrt(u0^2+u1^2+1).

template <class T>
struct Vec4T {
  std::array<T, 4> x{};

  T& operator[](int i) { return x[i]; }
  const T& operator[](int i) const { return x[i]; }

  friend Vec4T operator+(Vec4T a, const Vec4T& b) {
    for (int i = 0; i < 4; ++i) a.x[i] += b.x[i];
    return a;
  }
  friend Vec4T operator-(Vec4T a, const Vec4T& b) {
    for (int i = 0; i < 4; ++i) a.x[i] -= b.x[i];
    return a;
  }
  friend Vec4T operator*(const T& s, Vec4T a) {
    for (auto& c : a.x) c *= s;
    return a;
  }
  bool operator==(const Vec4T&) const = default;
};

using Vec4 = Vec4T<double>;
using Vec3 = std::array<double, 3>;

template <class T>
T inner(const Vec4T<T>& a, const Vec4T<T>& b) {
  return a[0] * b[0] + a[1] * b[1] - a[2] * b[2] + a[3] * b[3];
}

template <class T>
T form(const Vec4T<T>& a) { return inner(a, a); }

inline double euclid_norm2(const Vec4& v) {
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
}

// J = diag(1,1,-1,1)
template <class T>
Vec4T<T> flip_time(Vec4T<T> v) {
  v[2] = -v[2];
  return v;
}

enum class SpaceClass { Space, Time, Light };

constexpr const char* to_string(SpaceClass c) {
  return c == SpaceClass::Space ? "Space" : c == SpaceClass::Time ? "Time" : "Light";
}

// plane { x : <n, x> = 0 }
struct ProjPlane {
  Vec4 n;
};

constexpr double kLightTol = 1e-9;

inline void require_nonzero(const Vec4& v) {
  if (euclid_norm2(v) == 0.0) fail(Errc::ZeroVector, "zero representative");
}

// A vector (point) is time-like iff it lies in H^3 (q < 0).
inline SpaceClass classify(const Vec4& v, double tol = kLightTol) {
  require_nonzero(v);
  double q = form(v), s = tol * euclid_norm2(v);
  if (q < -s) return SpaceClass::Time;
  if (q > s) return SpaceClass::Space;
  return SpaceClass::Light;
}

// A plane is time-like iff it meets H^3, i.e. its pole is outside (q(n) > 0).
inline SpaceClass classify(const ProjPlane& p, double tol = kLightTol) {
  require_nonzero(p.n);
  double q = form(p.n), s = tol * euclid_norm2(p.n);
  if (q < -s) return SpaceClass::Space;
  if (q > s) return SpaceClass::Time;
  return SpaceClass::Light;
}

// Line spanned by a and b: signature of the restricted form.
inline SpaceClass classify_line(const Vec4& a, const Vec4& b, double tol = kLightTol) {
  require_nonzero(a);
  require_nonzero(b);
  double aa = inner(a, a), ab = inner(a, b), bb = inner(b, b);
  double na = euclid_norm2(a), nb = euclid_norm2(b);
  // Gram determinant of a, b under the Euclidean product: zero means a and b are parallel
  double e_ab = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
  if (na * nb - e_ab * e_ab <= 1e-24 * na * nb) fail(Errc::ZeroVector, "line spanned by parallel vectors");
  double det = aa * bb - ab * ab;
  double s = tol * na * nb;
  if (det < -s) return SpaceClass::Time;
  if (det > s) return SpaceClass::Space;
  return SpaceClass::Light;
}

inline Vec4 polar(const ProjPlane& p) {
  require_nonzero(p.n);
  return p.n;
}

inline ProjPlane polar(const Vec4& v) {
  require_nonzero(v);
  return {v};
}

// projective equality up to a nonzero scalar
inline bool proj_equal(const Vec4& a, const Vec4& b, double tol = 1e-12) {
  double na = std::sqrt(euclid_norm2(a)), nb = std::sqrt(euclid_norm2(b));
  if (na == 0 || nb == 0) return false;
  double dot = 0;
  for (int i = 0; i < 4; ++i) dot += a[i] * b[i];
  return std::abs(std::abs(dot) - na * nb) <= tol * na * nb;
}

enum class Sheet { Plus = 1, Minus = -1 };

constexpr int sign(Sheet s) { return static_cast<int>(s); }
constexpr const char* to_string(Sheet s) { return s == Sheet::Plus ? "+" : "-"; }

inline double sheet_height(Sheet s, double u0, double u1) {
  return sign(s) * std::sqrt(u0 * u0 + u1 * u1 + 1.0);
}

inline Vec4 ideal_point(Sheet s, double u0, double u1) {
  return Vec4{{u0, u1, sheet_height(s, u0, u1), 1.0}};
}

inline ExtComplex boundary_to_complex(const Vec4& v, double tol = kLightTol) {
  require_nonzero(v);
  double n2 = euclid_norm2(v), n = std::sqrt(n2);
  if (std::abs(form(v)) > tol * n2) fail(Errc::NotOnQuadric, "point is not on the ideal boundary");
  double d1 = std::abs(v[2] + v[3]);
  double d2 = std::hypot(v[0], v[1]);
  if (d1 > tol * n && d1 >= d2) return {cplx(v[0], v[1]) / (v[2] + v[3]), false};
  if (d2 > tol * n) return {(v[2] - v[3]) / cplx(v[0], -v[1]), false};
  return ExtComplex::infinity();
}

// ---- infinitesimal Pogorelov map ----

// 3-dimensional form of the chart: m(a,b) = a0 b0 + a1 b1 - a2 b2
inline double chart_form(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] - a[2] * b[2];
}

// Sends a tangent vector of the HS chart at x to a Euclidean tangent vector.
// Radial part is scaled by 1/q(x,1), orthogonal part is kept, then x2 is flipped.
inline Vec3 pogorelov(const Vec3& x, const Vec3& v, double tol = kLightTol) {
  double xx = chart_form(x, x);
  double e2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  Vec3 out = v;
  if (e2 > 0) {
    if (std::abs(xx) <= tol * e2) fail(Errc::OnLightCone, "point on the light cone of the chart center");
    double q = 1.0 + xx;
    if (std::abs(q) <= tol * (1.0 + e2)) fail(Errc::OnLightCone, "point on the ideal boundary");
    double c = chart_form(x, v) / xx;
    for (int i = 0; i < 3; ++i) {
      double radial = c * x[i];
      out[i] = radial / q + (v[i] - radial);
    }
  }
  out[2] = -out[2];
  return out;
}

inline Vec3 pogorelov(const Vec4& x, const Vec3& v, double tol = kLightTol) {
  if (x[3] == 0.0) fail(Errc::DegenerateInput, "point at infinity of the chart");
  return pogorelov(Vec3{x[0] / x[3], x[1] / x[3], x[2] / x[3]}, v, tol);
}

// ---- isometries ----

using Mat4 = Eigen::Matrix4d;

// Infinitesimal isometries A = J K, K antisymmetric: A^T J + J A = 0.
inline std::array<Mat4, 6> killing_basis() {
  std::array<Mat4, 6> out;
  Mat4 J = Mat4::Identity();
  J(2, 2) = -1;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Mat4 K = Mat4::Zero();
      K(i, j) = 1;
      K(j, i) = -1;
      out[k++] = J * K;
    }
  return out;
}

// Projective vector field of A in the chart x3 = 1.
inline Vec3 killing_field(const Mat4& A, const Vec3& x) {
  Eigen::Vector4d X(x[0], x[1], x[2], 1.0);
  Eigen::Vector4d Y = A * X;
  return {Y[0] - Y[3] * x[0], Y[1] - Y[3] * x[1], Y[2] - Y[3] * x[2]};
}

inline Mat4 matrix_exp(const Mat4& A) {
  int s = 0;
  double nrm = A.lpNorm<Eigen::Infinity>();
  while (nrm > 0.25) {
    nrm /= 2;
    ++s;
  }
  Mat4 B = A / std::pow(2.0, s);
  Mat4 term = Mat4::Identity(), sum = Mat4::Identity();
  for (int k = 1; k < 20; ++k) {
    term = term * B / k;
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

// exp of a combination of the Killing basis; preserves the form
inline Mat4 lorentz_transform(const std::array<double, 6>& coeffs) {
  auto basis = killing_basis();
  Mat4 A = Mat4::Zero();
  for (int k = 0; k < 6; ++k) A += coeffs[k] * basis[k];
  return matrix_exp(A);
}

inline Vec4 apply(const Mat4& L, const Vec4& v) {
  Eigen::Vector4d y = L * Eigen::Vector4d(v[0], v[1], v[2], v[3]);
  return Vec4{{y[0], y[1], y[2], y[3]}};
}

// Frobenius norm of the symmetrized central-difference gradient of F at x.
// Zero exactly for Euclidean Killing fields.
inline double killing_defect(const std::function<Vec3(const Vec3&)>& F, const Vec3& x,
                             double h = 1e-5) {
  double D[3][3];
  for (int j = 0; j < 3; ++j) {
    Vec3 xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    Vec3 fp = F(xp), fm = F(xm);
    for (int i = 0; i < 3; ++i) D[i][j] = (fp[i] - fm[i]) / (2 * h);
  }
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double e = D[i][j] + D[j][i];
      s += e * e;
    }
  return std::sqrt(s);
}

}  // namespace hs
