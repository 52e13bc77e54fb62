#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "core/error.hpp"
#include "core/scalar.hpp"

namespace mtv {

// Coefficient-ring protocol. Composite rings (polynomials, truncated series)
// carry their truncation bounds inside each element, so zero/one are produced
// "like" an existing element.
template <class C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static Rational from_rational(const Rational& q, const Rational&) { return q; }
  static std::optional<Rational> inverse(const Rational& x) {
    if (sgn(x) == 0) return std::nullopt;
    return Rational(1) / x;
  }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct RingTraits<Real> {
  static Real zero_like(const Real&) { return Real(0); }
  static Real one_like(const Real&) { return Real(1); }
  static bool is_zero(const Real& x) { return x == 0; }
  /// Relative agreement to 10^(-(P-5)) where P is the working precision.
  static bool equal(const Real& a, const Real& b) {
    using boost::multiprecision::abs;
    const int digits = static_cast<int>(std::max(a.precision(), b.precision()));
    Real scale = std::max({Real(1), Real(abs(a)), Real(abs(b))});
    return abs(a - b) <= ten_to_minus(digits - 5) * scale;
  }
  static Real from_rational(const Rational& q, const Real&) { return to_real(q); }
  static std::optional<Real> inverse(const Real& x) {
    if (x == 0) return std::nullopt;
    return Real(1) / x;
  }
  static std::string to_string(const Real& x) { return mtv::to_string(x, static_cast<int>(x.precision())); }
};

template <class C>
C zero_like(const C& x) {
  return RingTraits<C>::zero_like(x);
}
template <class C>
C one_like(const C& x) {
  return RingTraits<C>::one_like(x);
}
template <class C>
bool is_zero(const C& x) {
  return RingTraits<C>::is_zero(x);
}
template <class C>
bool ring_equal(const C& a, const C& b) {
  return RingTraits<C>::equal(a, b);
}
template <class C>
C from_rational(const Rational& q, const C& like) {
  return RingTraits<C>::from_rational(q, like);
}
template <class C>
C scale(const C& x, const Rational& q) {
  return x * from_rational(q, x);
}
template <class C>
C ring_inverse(const C& x) {
  auto inv = RingTraits<C>::inverse(x);
  if (!inv) fail(ErrorKind::kNotInvertible, "element is not invertible: " + RingTraits<C>::to_string(x));
  return *inv;
}
template <class C>
std::string ring_to_string(const C& x) {
  return RingTraits<C>::to_string(x);
}

}  // namespace mtv
