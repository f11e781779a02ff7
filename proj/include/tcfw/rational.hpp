#pragma once

#include <gmpxx.h>

#include <string>

namespace tcfw {

// Exact rational arithmetic. Every coordinate, time parameter and field
// element in the library is one of these.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline const Rational& rmin(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace tcfw
