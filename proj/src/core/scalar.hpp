#pragma once

// Scalar coefficient types: exact rationals (GMP) and variable-precision reals
// (MPFR through Boost.Multiprecision).

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <string>

namespace mtv {

using Rational = mpq_class;
using Real = boost::multiprecision::mpfr_float;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "p/q" or a finite decimal such as "0.5" or "-1.25e-3".
Rational parse_rational(const std::string& text);

inline Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

/// Decimal rendering with `digits` significant digits (scientific when small).
std::string to_string(const Real& x, int digits);

/// 10^(-digits) at the current working precision.
Real ten_to_minus(int digits);

}  // namespace mtv
