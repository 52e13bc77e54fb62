#include "core/hypergeom.hpp"

#include <boost/multiprecision/gmp.hpp>

#include "core/asymptotic.hpp"
#include "core/error.hpp"
#include "core/tvalues.hpp"

namespace mtv {

using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::pow;

namespace {

Real scalar_part(const Real& x) { return x; }
Real scalar_part(const RealSeries& x) { return x[0]; }
Real embed(const Real& x, const Real&) { return x; }
RealSeries embed(const Real& x, const RealSeries& like) { return RealSeries::constant(like.max_order(), x); }
int log_capacity(const Real&) { return 0; }
int log_capacity(const RealSeries& x) { return x.max_order(); }
Real max_abs_diff(const Real& a, const Real& b) { return abs(a - b); }
Real max_abs_diff(const RealSeries& a, const RealSeries& b) {
  Real m = 0;
  for (int i = 0; i <= a.max_order(); ++i) m = std::max(m, Real(abs(a[i] - b[i])));
  return m;
}
Real max_abs(const Real& a) { return abs(a); }
Real max_abs(const RealSeries& a) {
  Real m = 0;
  for (int i = 0; i <= a.max_order(); ++i) m = std::max(m, Real(abs(a[i])));
  return m;
}

// (-1)^t C(j + t - 1, t) = binomial(-j, t)
Rational binom_negative(int j, int t) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(j + t - 1), static_cast<unsigned long>(t));
  return t % 2 ? Rational(-c) : Rational(c);
}

template <class C>
void validate(const std::vector<C>& b, const std::vector<C>& c) {
  if (b.size() != c.size() + 1 || c.empty()) {
    fail(ErrorKind::kInvalidArgument, "pFq at 1 needs m+1 numerator and m denominator parameters, m >= 1");
  }
  for (const auto& ci : c) {
    Real x = scalar_part(ci);
    if (x <= 0 && x == boost::multiprecision::floor(x)) {
      fail(ErrorKind::kInvalidArgument, "denominator parameter is zero or a negative integer");
    }
  }
}

template <class C>
C unit_sum(const std::vector<C>& b, const std::vector<C>& c, int terms, int max_j, const Real& eps) {
  const C& like = b.front();
  const C one = one_like(like);
  for (const auto& bi : b)
    if (is_zero(bi)) return one;

  C partial = zero_like(like);
  C T = one;
  for (int n = 0; n < terms; ++n) {
    partial += T;
    const C shift = embed(Real(n), like);
    C num = one;
    for (const auto& bi : b) num *= bi + shift;
    C den = embed(Real(n + 1), like);
    for (const auto& ci : c) den *= ci + shift;
    T = T * num * ring_inverse(den);
  }

  C s = one;
  for (const auto& ci : c) s += ci;
  for (const auto& bi : b) s -= bi;
  const Real s0 = scalar_part(s);
  if (s0 <= 1) fail(ErrorKind::kDivergent, "pFq diverges at z = 1 (sum c - sum b must be positive)");
  const C delta = s - embed(s0, like);

  // rho_q = (-1)^(q+1)/q (sum b^q - sum c^q - 1), the x^q coefficient of log T_{n+1}/T_n, x = 1/n.
  std::vector<C> bp(b), cp(c);
  std::vector<C> rho(static_cast<std::size_t>(max_j) + 2, zero_like(like));
  for (int q = 1; q <= max_j + 1; ++q) {
    C acc = embed(Real(-1), like);
    for (const auto& x : bp) acc += x;
    for (const auto& x : cp) acc -= x;
    rho[static_cast<std::size_t>(q)] = scale(acc, Rational(q % 2 ? 1 : -1, q));
    for (std::size_t i = 0; i < bp.size(); ++i) bp[i] *= b[i];
    for (std::size_t i = 0; i < cp.size(); ++i) cp[i] *= c[i];
  }
  // log T_n = log K - s log n + sum_j e_j n^-j
  std::vector<C> e(static_cast<std::size_t>(max_j) + 1, zero_like(like));
  for (int q = 2; q <= max_j + 1; ++q) {
    C acc = rho[static_cast<std::size_t>(q)] + scale(s, Rational(q % 2 ? 1 : -1, q));
    for (int j = 1; j <= q - 2; ++j) acc -= scale(e[static_cast<std::size_t>(j)], binom_negative(j, q - j));
    e[static_cast<std::size_t>(q - 1)] = scale(acc, Rational(-1, q - 1));
  }
  // d = coefficients of exp(sum_j e_j x^j)
  std::vector<C> d(static_cast<std::size_t>(max_j) + 1, zero_like(like));
  d[0] = one;
  for (int q = 1; q <= max_j; ++q) {
    C acc = zero_like(like);
    for (int j = 1; j <= q; ++j) acc += scale(C(e[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(q - j)]), Rational(j));
    d[static_cast<std::size_t>(q)] = scale(acc, Rational(1, q));
  }
  // (-delta)^l / l!
  const int lmax = log_capacity(like);
  std::vector<C> dl;
  dl.push_back(one);
  for (int l = 1; l <= lmax; ++l) dl.push_back(scale(C(dl.back() * (-delta)), Rational(1, l)));

  const Real M(terms);
  const Real logM = log(M);
  C at_cut = zero_like(like);
  C tail = zero_like(like);
  for (int l = 0; l <= lmax; ++l) {
    if (is_zero(dl[static_cast<std::size_t>(l)])) continue;
    for (int j = 0; j <= max_j; ++j) {
      const C coef = dl[static_cast<std::size_t>(l)] * d[static_cast<std::size_t>(j)];
      const Real alpha = s0 + j;
      at_cut += coef * embed(pow(logM, l) * pow(M, -alpha), like);
      tail += coef * embed(progression_tail(l, alpha, M, 1, eps, nullptr), like);
    }
  }
  const C K = T * ring_inverse(at_cut);
  return partial + K * tail;
}

template <class C>
std::pair<C, Real> evaluate(const std::vector<C>& b, const std::vector<C>& c, int precision, const Real& tol) {
  validate(b, c);
  check_tolerance(precision, tol);
  const int max_j = precision + 15;
  const Real eps = ten_to_minus(precision + 5);
  for (int terms = std::max(64, 8 * (precision + kGuardDigits)); terms <= (1 << 16); terms *= 2) {
    C coarse = unit_sum(b, c, terms, max_j, eps);
    C fine = unit_sum(b, c, 2 * terms, max_j, eps);
    Real err = max_abs_diff(coarse, fine) + ten_to_minus(precision + 2) * std::max(Real(1), max_abs(fine));
    if (err <= tol) return {fine, err};
  }
  fail(ErrorKind::kToleranceUnreachable, "pFq at 1: tolerance " + to_string(tol, 3) + " not reached");
}

}  // namespace

BigReal pfq_at_1(const PFQParams& params, int precision, const Real& tol) {
  WorkingPrecision wp(precision + kGuardDigits);
  auto [value, err] = evaluate(params.b, params.c, precision, tol);
  return {value, err};
}

std::vector<Rational> pfq_terms_exact(const std::vector<Rational>& b, const std::vector<Rational>& c, int n_max) {
  validate(std::vector<Real>(b.size(), Real(1)), std::vector<Real>(c.size(), Real(1)));
  for (const auto& ci : c) {
    if (ci <= 0 && ci.get_den() == 1) fail(ErrorKind::kInvalidArgument, "denominator parameter is zero or a negative integer");
  }
  auto pochhammer = [](const Rational& x, int n) {
    Rational p = 1;
    for (int i = 0; i < n; ++i) p *= x + i;
    return p;
  };
  std::vector<Rational> out;
  Rational factorial = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) factorial *= n;
    Rational t = 1;
    for (const auto& bi : b) t *= pochhammer(bi, n);
    for (const auto& ci : c) t /= pochhammer(ci, n);
    t /= factorial;
    out.push_back(t);
  }
  return out;
}

SeriesValue pfq_at_1_series(const std::vector<RealSeries>& b, const std::vector<RealSeries>& c, int precision,
                            const Real& tol) {
  WorkingPrecision wp(precision + kGuardDigits);
  auto [value, err] = evaluate(b, c, precision, tol);
  return {value, err};
}

SeriesValue height_one_rhs(const Level& level, int m, const Rational& r, int max_order, int precision, const Real& tol) {
  if (m < 2) fail(ErrorKind::kInvalidArgument, "height_one_rhs requires m >= 2");
  WorkingPrecision wp(precision + kGuardDigits);
  const Real N(level.N), a(level.a), rv = to_real(r);
  const Real zero = 0;
  auto lin = [&](const Real& c0, const Real& c1) { return RealSeries::linear(max_order, c0, c1); };
  std::vector<RealSeries> b{lin(1, zero), lin(a / N, (1 - rv) / N)};
  std::vector<RealSeries> c{lin((a + N) / N, -rv / N)};
  for (int i = 1; i < m; ++i) {
    b.push_back(lin(a / N, zero));
    c.push_back(lin((a + N) / N, zero));
  }
  auto [value, err] = evaluate(b, c, precision, tol);
  RealSeries prefactor = series_reciprocal(lin(pow(a, m), -pow(a, m - 1) * rv));
  RealSeries out = prefactor * value;
  return {out, err * max_abs(prefactor) * (max_order + 1)};
}

}  // namespace mtv
