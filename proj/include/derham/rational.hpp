#pragma once

#include <gmpxx.h>

#include <string>

namespace derham::la {

// Exact arbitrary-precision scalars.  Rational is kept canonical (lowest
// terms, positive denominator) by GMP itself, so equality is plain equality.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace derham::la
