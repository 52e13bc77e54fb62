#include "core/corollaries.hpp"

#include <functional>

#include "core/error.hpp"
#include "core/hypergeom.hpp"
#include "core/index.hpp"

namespace mtv {

using boost::multiprecision::abs;
using boost::multiprecision::pow;

MaxHeightRhs maxheight_rhs(const Level& level, const Rational& r, int du, int dw, int precision) {
  if (du < 0 || dw < 0) fail(ErrorKind::kInvalidArgument, "maxheight_rhs: negative bounds");
  WorkingPrecision wp(precision + kGuardDigits);
  const UVWBounds bounds{du, 0, dw};
  const RealUVW zero(bounds, Real(0));
  const RealUVW u = RealUVW::monomial(bounds, Real(1), 1, 0, 0);
  const RealUVW w2 = RealUVW::monomial(bounds, Real(1), 0, 0, 2);
  const int n_max = du + dw;
  if (n_max < 2) return {RealUVW::constant(bounds, Real(1)), Real(0)};
  auto alpha = newton_power_sums(RootPair<RealUVW>{u, w2.scaled(to_real(-r))}, n_max);
  auto gamma = newton_power_sums(RootPair<RealUVW>{u, w2.scaled(to_real(1 - r))}, n_max);
  RealUVW exponent = zero;
  Real err = 0;
  for (int n = 2; n <= n_max; ++n) {
    const BigReal t = t_depth1(level, n, precision);
    const RealUVW diff = alpha[static_cast<std::size_t>(n - 1)] - gamma[static_cast<std::size_t>(n - 1)];
    exponent += diff.scaled(t.value / n);
    err += t.err;
  }
  // Coefficients are bounded sums of products of t-values; 10x covers the
  // propagation through exp at these degrees.
  return {exp_series_checked(exponent), err * 10};
}

std::vector<BigReal> twos_rhs(const Level& level, const Rational& r, int n_max, int precision) {
  if (n_max < 1) fail(ErrorKind::kInvalidArgument, "twos_rhs: n_max must be >= 1");
  WorkingPrecision wp(precision + kGuardDigits);
  Series1<Real> exponent(n_max, Real(0));
  Real err = 0;
  Rational rp = 1, sp = 1;
  for (int j = 1; j <= n_max; ++j) {
    rp *= r;
    sp *= r - 1;
    const BigReal t = t_depth1(level, 2 * j, precision);
    exponent[j] = to_real(Rational(rp - sp) / j) * t.value;
    err += abs(to_real(Rational(rp - sp) / j)) * t.err;
  }
  const Series1<Real> e = exp_series_checked(exponent);
  std::vector<BigReal> out;
  for (int n = 1; n <= n_max; ++n) out.push_back({e[n], err * 10});
  return out;
}

BigReal weighted_rhs(int k, int a, int precision) {
  if (k < 2) fail(ErrorKind::kInvalidArgument, "weighted_rhs requires k >= 2");
  if (a < 1) fail(ErrorKind::kInvalidArgument, "weighted_rhs requires a >= 1");
  WorkingPrecision wp(precision + kGuardDigits);
  const Level level(2, 1);
  const Constants c = const_pi_log2(precision);
  std::vector<BigReal> t(static_cast<std::size_t>(k) + 1);
  for (int j = 2; j <= k; ++j) t[static_cast<std::size_t>(j)] = t_depth1(level, j, precision);
  const BigReal t2 = t[2];

  // Ordered tuples of parts >= 2 summing to `rest`, each contributing
  // 4 (2^(n_i-1) - 1) t(n_i) / (n_i (2^(n_i) - 1)); sums[rest][m], 1/m! applied later.
  const int top = k - 2;
  std::vector<std::vector<BigReal>> sums(static_cast<std::size_t>(top) + 1,
                                         std::vector<BigReal>(static_cast<std::size_t>(top) + 1));
  sums[0][0] = BigReal::exact(1);
  for (int rest = 2; rest <= top; ++rest)
    for (int m = 1; m <= rest / 2; ++m) {
      BigReal acc;
      for (int first = 2; first <= rest; ++first) {
        const BigReal& tail = sums[static_cast<std::size_t>(rest - first)][static_cast<std::size_t>(m - 1)];
        if (tail.value == 0) continue;
        mpz_class p1 = (mpz_class(1) << (first - 1)) - 1, p2 = (mpz_class(1) << first) - 1;
        const Rational weight = Rational(4 * p1) / Rational(first * p2);
        acc += (t[static_cast<std::size_t>(first)] * tail).scaled(weight);
      }
      sums[static_cast<std::size_t>(rest)][static_cast<std::size_t>(m)] = acc;
    }

  BigReal total;
  Rational n_fact = 1;
  for (int n = 0; n <= top; ++n) {
    if (n > 0) n_fact *= n;
    const int rest = top - n;
    const BigReal logpow = c.log2.pow(n).scaled(Rational(mpz_class(1) << n) / n_fact);
    Rational m_fact = 1;
    for (int m = 0; m <= rest / 2; ++m) {
      if (m > 0) m_fact *= m;
      const BigReal& s = sums[static_cast<std::size_t>(rest)][static_cast<std::size_t>(m)];
      if (s.value == 0) continue;
      total += (logpow * s).scaled(Rational(1) / m_fact);
    }
  }
  mpz_class ak;
  mpz_ui_pow_ui(ak.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return (total * t2).scaled(Rational(1) / Rational(ak));
}

BigReal weighted_lhs(int k, int a, const Rational& r, TValueEngine& engine) {
  if (k < 2) fail(ErrorKind::kInvalidArgument, "weighted_lhs requires k >= 2");
  const Level level(2 * a, a);
  BigReal total;
  for (int n = 1; n <= k - 1; ++n) {
    BigReal inner;
    for (int s = 1; s <= n; ++s) inner += engine.x0(level, k, n, s, r);
    Rational weight = Rational(mpz_class(1) << (n - 1));
    for (int i = 0; i < k - n - 1; ++i) weight *= 1 - 2 * r;
    total += inner.scaled(weight);
  }
  return total;
}

Identity example_identity(int k, bool star, TValueEngine& engine, const Real& log2_shift) {
  if (k != 3 && k != 4) fail(ErrorKind::kInvalidArgument, "example identities exist for k = 3 and k = 4");
  WorkingPrecision wp(engine.precision() + kGuardDigits);
  const Level level(2, 1);
  auto value = [&](std::vector<int> parts) {
    return star ? engine.t_star(level, Index(std::move(parts))) : engine.t(level, Index(std::move(parts)));
  };
  Constants c = const_pi_log2(engine.precision());
  c.log2.value += log2_shift;
  const BigReal t2 = engine.t(level, Index({2}));
  Identity out;
  if (k == 3) {
    out.lhs = value({3}).scaled(star ? -1 : 1) + value({2, 1}).scaled(2);
    out.rhs = (t2 * c.log2).scaled(2);
  } else {
    out.lhs = value({4}) + (value({3, 1}) + value({2, 2})).scaled(star ? -2 : 2) + value({2, 1, 1}).scaled(4);
    out.rhs = (t2 * t2).scaled(Rational(2, 3)) + (t2 * c.log2 * c.log2).scaled(2);
  }
  return out;
}

Identity hypergeom_3f2_spot(const Real& a, const Real& b, const Real& c, int precision, const Real& tol) {
  WorkingPrecision wp(precision + kGuardDigits);
  const Real one = 1;
  PFQParams params{{a, b, one}, {c, 2 + a + b - c}};
  const BigReal lhs = pfq_at_1(params, precision, tol);
  using boost::multiprecision::tgamma;
  const Real g = tgamma(c) * tgamma(Real(1 + a + b - c)) / (tgamma(a) * tgamma(b));
  const Real rhs = (1 + a + b - c) / ((1 + a - c) * (1 + b - c)) * (1 - c + g);
  // Gamma is evaluated at working precision; 10x the last-digit size as its bound.
  return {lhs, {rhs, ten_to_minus(precision) * 10 * std::max(Real(1), Real(abs(rhs)))}};
}

}  // namespace mtv
