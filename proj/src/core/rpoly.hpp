#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/ring.hpp"

namespace mtv {

/// Dense polynomial c_0 + c_1 r + ... + c_d r^d in the interpolation variable r
/// over a scalar ring (Rational or Real). Trailing zeros are always trimmed, so
/// the zero polynomial has no coefficients and degree -1.
template <class C>
class RPoly {
 public:
  RPoly() = default;
  RPoly(C constant) {  // NOLINT(google-explicit-constructor)
    coeffs_.push_back(std::move(constant));
    trim();
  }
  RPoly(int constant) : RPoly(C(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit RPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static RPoly monomial(C c, int degree) {
    std::vector<C> v(static_cast<std::size_t>(degree) + 1, C(0));
    v.back() = std::move(c);
    return RPoly(std::move(v));
  }
  static RPoly r() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const { return coeffs_; }
  C coeff(int i) const {
    return (i >= 0 && i <= degree()) ? coeffs_[static_cast<std::size_t>(i)] : C(0);
  }

  C evaluate(const C& r) const {
    C acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
    return acc;
  }

  RPoly& operator+=(const RPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  RPoly& operator-=(const RPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  friend RPoly operator-(RPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend RPoly operator*(const RPoly& a, const RPoly& b) {
    if (a.is_zero() || b.is_zero()) return RPoly{};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (RingTraits<C>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RPoly(std::move(out));
  }
  RPoly& operator*=(const RPoly& o) { return *this = *this * o; }

  friend bool operator==(const RPoly& a, const RPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!RingTraits<C>::equal(a.coeffs_[i], b.coeffs_[i])) return false;
    }
    return true;
  }

  /// "1/9 + 1/27*r - 2*r^2"; "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (RingTraits<C>::is_zero(coeffs_[i])) continue;
      std::string c = RingTraits<C>::to_string(coeffs_[i]);
      bool negative = !c.empty() && c.front() == '-';
      if (negative) c.erase(0, 1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (i == 0) {
        out += c;
      } else {
        if (c != "1") out += c + "*";
        out += i == 1 ? "r" : "r^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && RingTraits<C>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

template <class C>
struct RingTraits<RPoly<C>> {
  static RPoly<C> zero_like(const RPoly<C>&) { return RPoly<C>{}; }
  static RPoly<C> one_like(const RPoly<C>&) { return RPoly<C>(C(1)); }
  static bool is_zero(const RPoly<C>& x) { return x.is_zero(); }
  static bool equal(const RPoly<C>& a, const RPoly<C>& b) { return a == b; }
  static RPoly<C> from_rational(const Rational& q, const RPoly<C>&) {
    return RPoly<C>(RingTraits<C>::from_rational(q, C(0)));
  }
  static std::optional<RPoly<C>> inverse(const RPoly<C>& x) {
    if (x.degree() != 0) return std::nullopt;
    auto inv = RingTraits<C>::inverse(x.coeff(0));
    if (!inv) return std::nullopt;
    return RPoly<C>(*inv);
  }
  static std::string to_string(const RPoly<C>& x) { return x.to_string(); }
};

using RPolyQ = RPoly<Rational>;

}  // namespace mtv
