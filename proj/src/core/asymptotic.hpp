#pragma once

#include <vector>

#include "core/bigreal.hpp"

namespace mtv {

/// Finite sum  sum_{l,j} c[l][j] (log m)^l m^(-j)  with 0 <= l <= max_log and
/// 0 <= j <= max_j. Terms pushed beyond max_j are dropped.
class LogPowerSeries {
 public:
  LogPowerSeries(int max_log, int max_j);

  int max_log() const { return max_log_; }
  int max_j() const { return max_j_; }
  Real& at(int l, int j) { return c_[slot(l, j)]; }
  const Real& at(int l, int j) const { return c_[slot(l, j)]; }
  bool is_zero() const;

  LogPowerSeries& operator+=(const LogPowerSeries& o);
  LogPowerSeries scaled(const Real& f) const;
  /// Multiplication by m^(-k).
  LogPowerSeries times_power(int k) const;
  LogPowerSeries derivative() const;
  /// Antiderivative without constant. Requires no m^0 terms.
  LogPowerSeries antiderivative() const;
  Real evaluate(const Real& m) const;

 private:
  std::size_t slot(int l, int j) const {
    return static_cast<std::size_t>(l) * static_cast<std::size_t>(max_j_ + 1) + static_cast<std::size_t>(j);
  }
  int max_log_;
  int max_j_;
  std::vector<Real> c_;
};

/// Euler-Maclaurin expansion A(m) of the strict prefix sum over the progression
/// m' = m - N, m - 2N, ...:  sum_{m' < m} g(m') = C + A(m), given g's expansion.
LogPowerSeries prefix_sum_expansion(const LogPowerSeries& g, int step);

/// sum_{i >= 0} f(m0 + step*i) for f(x) = (log x)^l x^(-alpha), alpha > 1, by
/// Euler-Maclaurin at m0. `err` receives the magnitude of the first omitted
/// correction term. The series is cut as soon as a term drops below `eps` or
/// the terms stop decreasing.
Real progression_tail(int l, const Real& alpha, const Real& m0, int step, const Real& eps, Real* err);

}  // namespace mtv
