#include "core/bigreal.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <sstream>

#include "core/error.hpp"

namespace mtv {
namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

// sum_{k>=0} (-1)^k x^(2k+1) / (2k+1) for x = 1/q, with the first omitted term
// as the truncation bound (alternating, decreasing).
BigReal arctan_inverse(int q, const Real& eps) {
  using boost::multiprecision::abs;
  Real x = Real(1) / q;
  Real x2 = x * x;
  Real power = x;
  Real sum = 0;
  for (int k = 0;; ++k) {
    Real term = power / (2 * k + 1);
    if (term < eps) return {sum, term};
    sum += (k % 2 == 0) ? term : Real(-term);
    power *= x2;
  }
}

// atanh(1/q) = sum_{k>=0} x^(2k+1)/(2k+1); tail bounded by a geometric series.
BigReal atanh_inverse(int q, const Real& eps) {
  Real x = Real(1) / q;
  Real x2 = x * x;
  Real power = x;
  Real sum = 0;
  for (int k = 0;; ++k) {
    Real term = power / (2 * k + 1);
    if (term < eps) return {sum, term / (1 - x2)};
    sum += term;
    power *= x2;
  }
}

}  // namespace

WorkingPrecision::WorkingPrecision(int digits10)
    : lock_(precision_mutex()), digits_(digits10), previous_(Real::default_precision()) {
  if (digits10 < 10) fail(ErrorKind::kInvalidArgument, "working precision must be at least 10 digits");
  Real::default_precision(static_cast<unsigned>(digits10));
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(previous_); }

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) fail(ErrorKind::kParse, "empty rational");
  try {
    if (s.find_first_of(".eE") == std::string::npos) {
      Rational q(s, 10);
      q.canonicalize();
      if (q.get_den() == 0) fail(ErrorKind::kParse, "zero denominator in \"" + text + "\"");
      return q;
    }
    // Finite decimal: mantissa digits over a power of ten.
    std::size_t epos = s.find_first_of("eE");
    long exponent = 0;
    if (epos != std::string::npos) {
      exponent = std::stol(s.substr(epos + 1));
      s = s.substr(0, epos);
    }
    bool negative = !s.empty() && s.front() == '-';
    if (negative || (!s.empty() && s.front() == '+')) s.erase(0, 1);
    std::size_t dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
      exponent -= static_cast<long>(s.size() - dot - 1);
      digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      fail(ErrorKind::kParse, "malformed number \"" + text + "\"");
    }
    mpz_class mant(digits, 10);
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(mant, ten_pow) : Rational(mant * ten_pow);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::kParse, "malformed number \"" + text + "\"");
  } catch (const std::out_of_range&) {
    fail(ErrorKind::kParse, "number out of range \"" + text + "\"");
  }
}

std::string to_string(const Real& x, int digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

Real ten_to_minus(int digits) { return boost::multiprecision::pow(Real(10), -digits); }

BigReal BigReal::scaled(const Rational& q) const {
  using boost::multiprecision::abs;
  Real f = to_real(q);
  return {value * f, err * abs(f)};
}

BigReal BigReal::pow(int n) const {
  BigReal acc = BigReal::exact(Rational(1));
  for (int i = 0; i < n; ++i) acc *= *this;
  return acc;
}

Constants const_pi_log2(int precision) {
  if (precision < 10) fail(ErrorKind::kInvalidArgument, "const_pi_log2: precision must be >= 10");
  WorkingPrecision wp(precision + kGuardDigits);
  const Real eps = ten_to_minus(precision + kGuardDigits);
  const Real floor = ten_to_minus(precision + 5);
  // pi = 16 atan(1/5) - 4 atan(1/239)
  BigReal a5 = arctan_inverse(5, eps);
  BigReal a239 = arctan_inverse(239, eps);
  BigReal pi = a5.scaled(Rational(16)) - a239.scaled(Rational(4));
  pi.err += floor;
  BigReal log2 = atanh_inverse(3, eps).scaled(Rational(2));
  log2.err += floor;
  return {pi, log2};
}

Rational bernoulli(int n) {
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> guard(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    const int m = static_cast<int>(cache.size());
    mpz_class binom = 1;  // C(m+1, 0)
    Rational acc = 0;
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * cache[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    // binom now equals C(m+1, m) = m+1
    Rational b = -acc / Rational(binom);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[static_cast<std::size_t>(n)];
}

Real bernoulli_2p(int p) {
  return to_real(bernoulli(2 * p));
}

}  // namespace mtv
