#pragma once

#include "errors.hpp"

#include <cmath>
#include <complex>

namespace hs {

using cplx = std::complex<double>;

// point of the Riemann sphere
struct ExtComplex {
  cplx z{};
  bool inf = false;

  static ExtComplex infinity() { return {cplx{}, true}; }
  bool operator==(const ExtComplex&) const = default;
};

inline double chordal_distance(const ExtComplex& a, const ExtComplex& b) {
  if (a.inf && b.inf) return 0.0;
  if (a.inf || b.inf) {
    const cplx& w = a.inf ? b.z : a.z;
    return 2.0 / std::sqrt(1.0 + std::norm(w));
  }
  return 2.0 * std::abs(a.z - b.z) / std::sqrt((1.0 + std::norm(a.z)) * (1.0 + std::norm(b.z)));
}

// [z1,z2;z3,z4] = (z1-z3)(z2-z4) / ((z2-z3)(z1-z4)); factors containing infinity cancel
inline cplx cross_ratio(const ExtComplex& z1, const ExtComplex& z2, const ExtComplex& z3,
                        const ExtComplex& z4, double tol = 1e-12) {
  const ExtComplex* zs[4] = {&z1, &z2, &z3, &z4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (chordal_distance(*zs[i], *zs[j]) <= tol)
        fail(Errc::CoincidentComplexPoints, "cross ratio of coincident points");
  auto diff = [](const ExtComplex& a, const ExtComplex& b) -> cplx {
    return (a.inf || b.inf) ? cplx(1.0) : a.z - b.z;
  };
  return diff(z1, z3) * diff(z2, z4) / (diff(z2, z3) * diff(z1, z4));
}

// z -> (a z + b) / (c z + d)
struct Mobius {
  cplx a{1.0}, b{}, c{}, d{1.0};

  ExtComplex operator()(const ExtComplex& w) const {
    if (w.inf) {
      if (c == cplx{}) return ExtComplex::infinity();
      return {a / c, false};
    }
    cplx num = a * w.z + b, den = c * w.z + d;
    // relative test so that rounding in a composed map still hits infinity
    if (std::abs(den) <= 1e-13 * std::abs(num) || std::abs(den) < 1e-300) return ExtComplex::infinity();
    return {num / den, false};
  }
  cplx operator()(cplx w) const { return (a * w + b) / (c * w + d); }

  Mobius operator*(const Mobius& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mobius inverse() const { return {d, -b, -c, a}; }
};

}  // namespace hs
