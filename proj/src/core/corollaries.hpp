#pragma once

#include <vector>

#include "core/bigreal.hpp"
#include "core/level.hpp"
#include "core/series.hpp"
#include "core/tvalues.hpp"

namespace mtv {

using RealUVW = SeriesUVW<Real>;

struct MaxHeightRhs {
  RealUVW series;  // v-bound is 0
  Real err;
};

/// exp{ sum_{n>=2} t_{N,a}(n)/n (P_n(alpha) - P_n(gamma)) } in u, w, where the
/// power sums come from alpha_1 + alpha_2 = u, alpha_1 alpha_2 = -r w^2 and
/// gamma_1 + gamma_2 = u, gamma_1 gamma_2 = (1-r) w^2. Terms with
/// n > du + dw cannot reach the box and are dropped.
MaxHeightRhs maxheight_rhs(const Level& level, const Rational& r, int du, int dw, int precision);

/// Coefficients of W^1..W^n_max in exp( sum_j (r^j - (r-1)^j) t_{N,a}(2j)/j W^j ).
std::vector<BigReal> twos_rhs(const Level& level, const Rational& r, int n_max, int precision);

/// Finite right side of the weighted sum formula at weight k: a sum over
/// n, m >= 0 and ordered (n_1..n_m), n_i >= 2, with n + sum n_i = k - 2, of
///   2^(n+2m) prod(2^(n_i-1) - 1) / (a^k n! m! prod n_i (2^(n_i) - 1))
///     * t(2) prod t(n_i) log^n 2,
/// with t the level-(2,1) values.
BigReal weighted_rhs(int k, int a, int precision);

/// sum_{n=1}^{k-1} (1-2r)^(k-n-1) 2^(n-1) sum_{I_0(k,n)} t^r_{2a,a}.
BigReal weighted_lhs(int k, int a, const Rational& r, TValueEngine& engine);

struct Identity {
  BigReal lhs;
  BigReal rhs;
};

/// Weight 3 and 4 weighted formulas at level (2,1), strict or star form:
///   k=3: t(3) + 2t(2,1) = -t*(3) + 2t*(2,1) = 2 t(2) log 2
///   k=4: t(4) + 2(t(3,1) + t(2,2)) + 4t(2,1,1)
///        = t*(4) - 2(t*(3,1) + t*(2,2)) + 4t*(2,1,1) = 2/3 t(2)^2 + 2 t(2) log^2 2
/// `log2_shift` is added to log 2 (negative controls).
Identity example_identity(int k, bool star, TValueEngine& engine, const Real& log2_shift = Real(0));

/// Gamma-function closed form for 3F2(a, b, 1; c, 2 + a + b - c; 1) against
/// the direct series.
Identity hypergeom_3f2_spot(const Real& a, const Real& b, const Real& c, int precision, const Real& tol);

}  // namespace mtv
