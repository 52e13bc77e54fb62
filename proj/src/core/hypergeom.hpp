#pragma once

#include <vector>

#include "core/bigreal.hpp"
#include "core/level.hpp"
#include "core/series.hpp"

namespace mtv {

/// Parameters of  (m+1)F(m)(b_1..b_{m+1}; c_1..c_m; z).
struct PFQParams {
  std::vector<Real> b;
  std::vector<Real> c;
};

/// (m+1)F(m) at z = 1. Terms T_n are summed directly up to a cutoff M and the
/// remainder is taken from the asymptotic expansion
///   T_n ~ K n^-s exp(sum_j e_j n^-j),  s = 1 + sum c - sum b,
/// whose e_j follow from the exact term ratio; K is matched at T_M and the tail
/// sums of n^-(s+j) come from Euler-Maclaurin. err = change between cutoffs M
/// and 2M plus a rounding floor.
/// Throws kDivergent unless sum c - sum b > 0, kInvalidArgument when some c_i
/// is zero or a negative integer.
BigReal pfq_at_1(const PFQParams& params, int precision, const Real& tol);

/// T_0..T_{n_max} of the series at z = 1, from the Pochhammer products.
std::vector<Rational> pfq_terms_exact(const std::vector<Rational>& b, const std::vector<Rational>& c, int n_max);

using RealSeries = Series1<Real>;

struct SeriesValue {
  RealSeries value;
  Real err;  // max over coefficients
};

/// Same evaluation with parameters that are truncated power series in an
/// auxiliary variable; the result is the coefficientwise series of the sum.
/// Powers of log n arising from the non-constant part of s are carried
/// exactly through the tail.
SeriesValue pfq_at_1_series(const std::vector<RealSeries>& b, const std::vector<RealSeries>& c, int precision,
                            const Real& tol);

/// Right side of the height-one reduction as a power series in v up to
/// v^max_order:
///   1/(a^(m-1)(a - v r)) (m+1)F(m)(1, (a + v(1-r))/N, {a/N}^(m-1);
///                                  (a + N - v r)/N, {(a+N)/N}^(m-1); 1).
SeriesValue height_one_rhs(const Level& level, int m, const Rational& r, int max_order, int precision,
                           const Real& tol);

}  // namespace mtv
