#pragma once

#include <mpfr.h>

#include <vector>

#include "core/bigreal.hpp"

// Reference values computed without the library's summation code.
namespace oracle {

using mtv::Rational;
using mtv::Real;

// B_0..B_n by the Akiyama-Tanigawa transform (B_1 = +1/2 convention).
inline std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1), out;
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    out.push_back(a[0]);
  }
  return out;
}

// Hurwitz-type sum sum_{j>=0} (a + N j)^-k by direct summation of `direct`
// terms and the Euler-Maclaurin tail. Needs a working precision set by the caller.
inline Real progression_zeta(int k, int N, int a, int direct = 200, int corrections = 30) {
  const auto B = bernoulli(2 * corrections);
  Real sum = 0;
  for (int j = 0; j < direct; ++j) sum += Real(1) / boost::multiprecision::pow(Real(a + N * j), k);
  const Real x = Real(a + N * direct);
  // tail sum_{j>=direct} f(j), f(j) = (a + N j)^-k
  sum += boost::multiprecision::pow(x, 1 - k) / (Real(N) * (k - 1));
  sum += boost::multiprecision::pow(x, -k) / 2;
  Real rising = k;  // k (k+1) ... (k + 2p - 2)
  Real fact = 2;
  Real Np = N;
  for (int p = 1; p <= corrections; ++p) {
    const Real term = mtv::to_real(B[static_cast<std::size_t>(2 * p)]) / fact * rising * Np *
                      boost::multiprecision::pow(x, -k - 2 * p + 1);
    sum += term;
    rising *= Real(k + 2 * p - 1) * (k + 2 * p);
    fact *= Real(2 * p + 1) * (2 * p + 2);
    Np *= Real(N) * N;
  }
  return sum;
}

inline Real mpfr_pi() {
  Real x;
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

inline Real mpfr_log2() {
  Real x;
  mpfr_const_log2(x.backend().data(), MPFR_RNDN);
  return x;
}

}  // namespace oracle
