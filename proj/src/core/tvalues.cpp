#include "core/tvalues.hpp"

#include <algorithm>

#include "core/asymptotic.hpp"
#include "core/error.hpp"
#include "core/value_cache.hpp"

namespace mtv {

using boost::multiprecision::abs;
using boost::multiprecision::pow;

namespace {

Real power_inverse(const Real& m, int k) { return pow(Real(1) / m, k); }

// One run of the layered evaluator at a fixed cutoff.
Real nested_run(const Level& level, std::span<const int> parts, bool star, int terms, int max_j) {
  const int depth = static_cast<int>(parts.size());
  const auto I = static_cast<std::size_t>(terms);
  std::vector<Real> m(I);
  for (std::size_t i = 0; i < I; ++i) m[i] = Real(level.a) + Real(level.N) * i;
  const Real m_cut = Real(level.a) + Real(level.N) * terms;

  const int k_last = parts.back();
  std::vector<Real> g(I);
  for (std::size_t i = 0; i < I; ++i) g[i] = power_inverse(m[i], k_last);
  LogPowerSeries G(depth, max_j);
  G.at(0, k_last) = 1;

  for (int t = depth - 2; t >= 0; --t) {
    const int kt = parts[static_cast<std::size_t>(t)];
    LogPowerSeries A = prefix_sum_expansion(G, level.N);
    Real S = 0;
    std::vector<Real> next(I);
    for (std::size_t i = 0; i < I; ++i) {
      Real prefix = star ? Real(S + g[i]) : S;
      next[i] = prefix * power_inverse(m[i], kt);
      S += g[i];
    }
    const Real C = S - A.evaluate(m_cut);
    LogPowerSeries inner = A;
    inner.at(0, 0) += C;
    if (star) inner += G;
    G = inner.times_power(kt);
    g = std::move(next);
  }
  LogPowerSeries A = prefix_sum_expansion(G, level.N);
  Real S = 0;
  for (const auto& x : g) S += x;
  return S - A.evaluate(m_cut);
}

BigReal nested_eval(const Level& level, const Index& k, int precision, const Real& tol, bool star,
                    NestedOptions opt) {
  if (k.empty()) fail(ErrorKind::kInvalidArgument, "nested value of the empty index is 1 by convention");
  if (!k.admissible()) fail(ErrorKind::kDivergent, "index (" + k.to_string() + ") is not admissible");
  check_tolerance(precision, tol);
  WorkingPrecision wp(precision + kGuardDigits);
  const int max_j = precision + 15;
  int terms = opt.terms > 0 ? opt.terms : std::max(64, 8 * (precision + kGuardDigits));
  for (;;) {
    if (2 * terms > opt.max_terms) {
      fail(ErrorKind::kToleranceUnreachable, "tolerance " + to_string(tol, 3) + " not reached for (" + k.to_string() +
                                                 ") within " + std::to_string(opt.max_terms) + " terms");
    }
    Real coarse = nested_run(level, k.parts(), star, terms, max_j);
    Real fine = nested_run(level, k.parts(), star, 2 * terms, max_j);
    Real err = abs(fine - coarse) + ten_to_minus(precision + 2) * std::max(Real(1), Real(abs(fine)));
    if (err <= tol) return {fine, err};
    terms *= 2;
  }
}

}  // namespace

void check_tolerance(int precision, const Real& tol) {
  if (precision < 10) fail(ErrorKind::kInvalidArgument, "precision must be at least 10 digits");
  if (!(tol > 0)) fail(ErrorKind::kInvalidArgument, "tolerance must be positive");
  WorkingPrecision wp(precision + kGuardDigits);
  if (tol < ten_to_minus(precision)) {
    fail(ErrorKind::kToleranceUnreachable, "tolerance below achievable error bound");
  }
}

BigReal t_depth1(const Level& level, int k, int precision) {
  if (k < 2) fail(ErrorKind::kDivergent, "t_depth1 requires k >= 2 (the series diverges)");
  if (precision < 10) fail(ErrorKind::kInvalidArgument, "precision must be at least 10 digits");
  WorkingPrecision wp(precision + kGuardDigits);
  const Real eps = ten_to_minus(precision + 5);
  for (int direct = std::max(50, precision);; direct *= 2) {
    Real sum = 0;
    for (int i = 0; i < direct; ++i) sum += power_inverse(Real(level.a) + Real(level.N) * i, k);
    const Real m0 = Real(level.a) + Real(level.N) * direct;
    Real tail_err = 0;
    Real tail = progression_tail(0, Real(k), m0, level.N, eps, &tail_err);
    if (tail_err < eps || direct > (1 << 20)) {
      return {sum + tail, tail_err + eps};
    }
  }
}

BigReal t_nested(const Level& level, const Index& k, int precision, const Real& tol, NestedOptions opt) {
  return nested_eval(level, k, precision, tol, false, opt);
}

BigReal t_star_nested(const Level& level, const Index& k, int precision, const Real& tol, NestedOptions opt) {
  return nested_eval(level, k, precision, tol, true, opt);
}

BigReal t_interp_eval(const Level& level, const Index& k, const Rational& r, int precision, const Real& tol) {
  TValueEngine engine(precision, tol);
  return engine.t_interp(level, k, r);
}

// ---------------------------------------------------------------------------

TValueEngine::TValueEngine(int precision, Real tol, ValueCache* cache)
    : precision_(precision), tol_(std::move(tol)), cache_(cache) {
  check_tolerance(precision_, tol_);
}

BigReal TValueEngine::t(const Level& level, const Index& k) {
  WorkingPrecision wp(precision_ + kGuardDigits);
  if (k.empty()) return BigReal::exact(Rational(1));
  const auto key = std::make_tuple(level.N, level.a, k, false);
  {
    std::lock_guard<std::mutex> guard(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const CacheKey ckey{level.N, level.a, k.to_string(), precision_, to_string(tol_, 6)};
  BigReal value;
  std::optional<CachedValue> hit;
  if (cache_) hit = cache_->lookup(ckey);
  if (hit) {
    value = {Real(hit->value), Real(hit->err)};
  } else {
    value = k.depth() == 1 ? t_depth1(level, k[0], precision_) : t_nested(level, k, precision_, tol_);
    if (cache_) cache_->store(ckey, {value.value_string(precision_ + 5), value.err_string()});
  }
  std::lock_guard<std::mutex> guard(mutex_);
  memo_.emplace(key, value);
  return value;
}

BigReal TValueEngine::t_star(const Level& level, const Index& k) {
  WorkingPrecision wp(precision_ + kGuardDigits);
  if (k.empty()) return BigReal::exact(Rational(1));
  const auto key = std::make_tuple(level.N, level.a, k, true);
  {
    std::lock_guard<std::mutex> guard(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  BigReal value = t_star_nested(level, k, precision_, tol_);
  std::lock_guard<std::mutex> guard(mutex_);
  memo_.emplace(key, value);
  return value;
}

BigReal TValueEngine::t_interp(const Level& level, const Index& k, const Rational& r) {
  if (k.empty()) fail(ErrorKind::kInvalidArgument, "t_interp_eval: empty index");
  if (!k.admissible()) fail(ErrorKind::kDivergent, "index (" + k.to_string() + ") is not admissible");
  WorkingPrecision wp(precision_ + kGuardDigits);
  BigReal acc;
  for (const auto& term : interpolation_expansion(k)) {
    if (term.r_exponent > 0 && sgn(r) == 0) continue;
    Rational weight = 1;
    for (int e = 0; e < term.r_exponent; ++e) weight *= r;
    acc += t(level, term.index).scaled(weight);
  }
  return acc;
}

BigReal TValueEngine::x0(const Level& level, int k, int n, int s, const Rational& r) {
  WorkingPrecision wp(precision_ + kGuardDigits);
  BigReal acc;
  for (const auto& idx : enumerate_indices(k, n, s, true)) acc += t_interp(level, idx, r);
  return acc;
}

}  // namespace mtv
