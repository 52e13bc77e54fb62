#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "core/bigreal.hpp"
#include "core/index.hpp"
#include "core/level.hpp"

namespace mtv {

class ValueCache;

/// sum_{m = a mod N, m > 0} m^-k for k >= 2: direct summation of the first
/// max(50, P) terms, then the Euler-Maclaurin tail with Bernoulli corrections
/// until a correction drops below 10^-(P+5). err = first omitted correction plus
/// a rounding floor.
BigReal t_depth1(const Level& level, int k, int precision);

/// Options for the nested evaluator. `terms == 0` picks 8 (P + 10).
struct NestedOptions {
  int terms = 0;
  int max_terms = 1 << 16;
};

/// t_{N,a}(k) for admissible k. Every layer's prefix sum is summed directly for
/// the first `terms` progression elements and then continued by its
/// Euler-Maclaurin asymptotic expansion in log m and 1/m; the constant of each
/// layer is matched at the cutoff. The error is the change between the cutoff
/// and twice the cutoff plus a rounding floor; the cutoff doubles until the
/// error is below `tol`.
BigReal t_nested(const Level& level, const Index& k, int precision, const Real& tol, NestedOptions opt = {});

/// Weak-inequality (star) value through the same engine with inclusive prefixes.
BigReal t_star_nested(const Level& level, const Index& k, int precision, const Real& tol, NestedOptions opt = {});

/// sum over the comma/plus expansion of r^e t(p).
BigReal t_interp_eval(const Level& level, const Index& k, const Rational& r, int precision, const Real& tol);

/// Throws kToleranceUnreachable when tol < 10^-P.
void check_tolerance(int precision, const Real& tol);

/// Memoising front end over t_nested used by the checks; optionally backed by
/// a persistent ValueCache keyed by (N, a, index, P, tol).
class TValueEngine {
 public:
  TValueEngine(int precision, Real tol, ValueCache* cache = nullptr);

  int precision() const { return precision_; }
  const Real& tol() const { return tol_; }

  BigReal t(const Level& level, const Index& k);
  BigReal t_star(const Level& level, const Index& k);
  BigReal t_interp(const Level& level, const Index& k, const Rational& r);
  /// Sum of t^r over I_0(k, n, s).
  BigReal x0(const Level& level, int k, int n, int s, const Rational& r);

 private:
  int precision_;
  Real tol_;
  ValueCache* cache_;
  std::mutex mutex_;
  std::map<std::tuple<int, int, Index, bool>, BigReal> memo_;
};

}  // namespace mtv
