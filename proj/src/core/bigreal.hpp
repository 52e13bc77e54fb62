#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "core/scalar.hpp"

namespace mtv {

/// Decimal guard digits carried on top of a requested precision P.
inline constexpr int kGuardDigits = 10;

/// Sets the MPFR working precision for the current computation. MPFR's default
/// precision is process-global in Boost.Multiprecision, so the scope also holds
/// a process-wide (recursive) lock while it is alive.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(int digits10);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  int digits() const { return digits_; }

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  int digits_;
  unsigned previous_;
};

/// A real value with a nonnegative absolute error bound.
struct BigReal {
  Real value;
  Real err;

  BigReal() : value(0), err(0) {}
  BigReal(Real v, Real e) : value(std::move(v)), err(std::move(e)) {}
  static BigReal exact(const Rational& q) { return {to_real(q), Real(0)}; }

  friend BigReal operator+(const BigReal& a, const BigReal& b) { return {a.value + b.value, a.err + b.err}; }
  friend BigReal operator-(const BigReal& a, const BigReal& b) { return {a.value - b.value, a.err + b.err}; }
  friend BigReal operator-(const BigReal& a) { return {-a.value, a.err}; }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    using boost::multiprecision::abs;
    return {a.value * b.value, abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err};
  }
  BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
  BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
  BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
  BigReal scaled(const Rational& q) const;
  BigReal pow(int n) const;

  std::string value_string(int digits) const { return to_string(value, digits); }
  std::string err_string() const { return to_string(err, 3); }
};

struct Constants {
  BigReal pi;
  BigReal log2;
};

/// pi by Machin's arctangent formula, log 2 as 2 atanh(1/3). Both carry the
/// truncation bound of their series plus a rounding floor of 10^-(P+5).
Constants const_pi_log2(int precision);

/// Exact Bernoulli number B_n (B_1 = -1/2). Cached; thread-safe.
Rational bernoulli(int n);

/// B_{2p} as a Real at the current working precision.
Real bernoulli_2p(int p);

}  // namespace mtv
