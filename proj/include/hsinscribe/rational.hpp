#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace hs {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// exact value of a finite double
inline Rational from_double(double x) { return Rational(x); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace hs
