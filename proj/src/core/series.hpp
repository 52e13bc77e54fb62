#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/ring.hpp"

namespace mtv {

struct UVWBounds {
  int du = 0;
  int dv = 0;
  int dw = 0;
  bool operator==(const UVWBounds&) const = default;
};

/// Truncated power series in u, v, w over C. A coefficient u^i v^j w^l is kept
/// iff i <= du, j <= dv, l <= dw. `l` is the true exponent of w.
template <class C>
class SeriesUVW {
 public:
  SeriesUVW() = default;
  SeriesUVW(UVWBounds bounds, C zero) : bounds_(bounds), zero_(std::move(zero)) {
    if (bounds.du < 0 || bounds.dv < 0 || bounds.dw < 0) {
      fail(ErrorKind::kInvalidArgument, "truncation bounds must be nonnegative");
    }
    coeffs_.assign(size(), zero_);
  }

  static SeriesUVW constant(UVWBounds bounds, const C& c) {
    SeriesUVW s(bounds, zero_like(c));
    s.at(0, 0, 0) = c;
    return s;
  }
  /// c * u^i v^j w^l; silently zero when outside the bounds.
  static SeriesUVW monomial(UVWBounds bounds, const C& c, int i, int j, int l) {
    SeriesUVW s(bounds, zero_like(c));
    if (s.in_bounds(i, j, l)) s.at(i, j, l) = c;
    return s;
  }

  const UVWBounds& bounds() const { return bounds_; }
  const C& zero() const { return zero_; }
  bool in_bounds(int i, int j, int l) const {
    return i >= 0 && j >= 0 && l >= 0 && i <= bounds_.du && j <= bounds_.dv && l <= bounds_.dw;
  }

  C& at(int i, int j, int l) { return coeffs_[offset(i, j, l)]; }
  const C& at(int i, int j, int l) const { return coeffs_[offset(i, j, l)]; }
  /// Zero outside the bounds.
  C coeff(int i, int j, int l) const { return in_bounds(i, j, l) ? at(i, j, l) : zero_; }

  template <class F>
  void for_each_nonzero(F&& f) const {
    for (int i = 0; i <= bounds_.du; ++i)
      for (int j = 0; j <= bounds_.dv; ++j)
        for (int l = 0; l <= bounds_.dw; ++l) {
          const C& c = at(i, j, l);
          if (!RingTraits<C>::is_zero(c)) f(i, j, l, c);
        }
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!RingTraits<C>::is_zero(c)) return false;
    return true;
  }

  SeriesUVW& operator+=(const SeriesUVW& o) {
    check_bounds(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  SeriesUVW& operator-=(const SeriesUVW& o) {
    check_bounds(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend SeriesUVW operator+(SeriesUVW a, const SeriesUVW& b) { return a += b; }
  friend SeriesUVW operator-(SeriesUVW a, const SeriesUVW& b) { return a -= b; }
  friend SeriesUVW operator-(SeriesUVW a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend SeriesUVW operator*(const SeriesUVW& a, const SeriesUVW& b) {
    a.check_bounds(b);
    SeriesUVW out(a.bounds_, a.zero_);
    const auto bn = b.nonzero_terms();
    a.for_each_nonzero([&](int i, int j, int l, const C& ca) {
      for (const auto& t : bn) {
        const int ii = i + t.i, jj = j + t.j, ll = l + t.l;
        if (ii > a.bounds_.du || jj > a.bounds_.dv || ll > a.bounds_.dw) continue;
        out.at(ii, jj, ll) += ca * *t.c;
      }
    });
    return out;
  }
  SeriesUVW& operator*=(const SeriesUVW& o) { return *this = *this * o; }

  /// Multiplies every coefficient by a ring element.
  SeriesUVW scaled(const C& c) const {
    SeriesUVW out = *this;
    for (auto& x : out.coeffs_) x = x * c;
    return out;
  }

  friend bool operator==(const SeriesUVW& a, const SeriesUVW& b) {
    if (!(a.bounds_ == b.bounds_)) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!RingTraits<C>::equal(a.coeffs_[k], b.coeffs_[k])) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for_each_nonzero([&](int i, int j, int l, const C& c) {
      if (!out.empty()) out += " + ";
      out += "(" + ring_to_string(c) + ")*" + monomial_name(i, j, l);
    });
    return out.empty() ? "0" : out;
  }

  static std::string monomial_name(int i, int j, int l) {
    return "u^" + std::to_string(i) + " v^" + std::to_string(j) + " w^" + std::to_string(l);
  }

 private:
  struct Term {
    int i, j, l;
    const C* c;
  };
  std::vector<Term> nonzero_terms() const {
    std::vector<Term> out;
    for_each_nonzero([&](int i, int j, int l, const C& c) { out.push_back({i, j, l, &c}); });
    return out;
  }
  std::size_t size() const {
    return static_cast<std::size_t>(bounds_.du + 1) * static_cast<std::size_t>(bounds_.dv + 1) *
           static_cast<std::size_t>(bounds_.dw + 1);
  }
  std::size_t offset(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(bounds_.dv + 1) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(bounds_.dw + 1) +
           static_cast<std::size_t>(l);
  }
  void check_bounds(const SeriesUVW& o) const {
    if (!(bounds_ == o.bounds_)) {
      fail(ErrorKind::kBoundMismatch, "series truncation bounds differ; refusing to re-truncate");
    }
  }

  UVWBounds bounds_{};
  C zero_{};
  std::vector<C> coeffs_;
};

template <class C>
struct RingTraits<SeriesUVW<C>> {
  static SeriesUVW<C> zero_like(const SeriesUVW<C>& x) { return SeriesUVW<C>(x.bounds(), x.zero()); }
  static SeriesUVW<C> one_like(const SeriesUVW<C>& x) { return SeriesUVW<C>::constant(x.bounds(), mtv::one_like(x.zero())); }
  static bool is_zero(const SeriesUVW<C>& x) { return x.is_zero(); }
  static bool equal(const SeriesUVW<C>& a, const SeriesUVW<C>& b) { return a == b; }
  static SeriesUVW<C> from_rational(const Rational& q, const SeriesUVW<C>& like) {
    return SeriesUVW<C>::constant(like.bounds(), mtv::from_rational(q, like.zero()));
  }
  static std::optional<SeriesUVW<C>> inverse(const SeriesUVW<C>& x);
  static std::string to_string(const SeriesUVW<C>& x) { return x.to_string(); }
};

/// Truncated univariate series p_0 + p_1 x + ... + p_M x^M over C. Used for the
/// z-expansion of generating functions and for the v-expansion in numerics.
template <class C>
class Series1 {
 public:
  Series1() = default;
  Series1(int max_order, C zero) : zero_(std::move(zero)) {
    if (max_order < 0) fail(ErrorKind::kInvalidArgument, "truncation order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(max_order) + 1, zero_);
  }
  static Series1 constant(int max_order, const C& c) {
    Series1 s(max_order, zero_like(c));
    s[0] = c;
    return s;
  }
  /// c0 + c1 x.
  static Series1 linear(int max_order, const C& c0, const C& c1) {
    Series1 s = constant(max_order, c0);
    if (max_order >= 1) s[1] = c1;
    return s;
  }

  int max_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& zero() const { return zero_; }
  C& operator[](int m) { return coeffs_[static_cast<std::size_t>(m)]; }
  const C& operator[](int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
  C coeff(int m) const { return (m >= 0 && m <= max_order()) ? coeffs_[static_cast<std::size_t>(m)] : zero_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!RingTraits<C>::is_zero(c)) return false;
    return true;
  }

  Series1& operator+=(const Series1& o) {
    check_bounds(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Series1& operator-=(const Series1& o) {
    check_bounds(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
  friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
  friend Series1 operator-(Series1 a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Series1 operator*(const Series1& a, const Series1& b) {
    a.check_bounds(b);
    Series1 out(a.max_order(), a.zero_);
    const int m = a.max_order();
    for (int i = 0; i <= m; ++i) {
      if (RingTraits<C>::is_zero(a[i])) continue;
      for (int j = 0; i + j <= m; ++j) {
        if (RingTraits<C>::is_zero(b[j])) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }
  Series1& operator*=(const Series1& o) { return *this = *this * o; }

  Series1 scaled(const C& c) const {
    Series1 out = *this;
    for (auto& x : out.coeffs_) x = x * c;
    return out;
  }
  /// Multiplication by x^k (coefficients pushed past the bound are dropped).
  Series1 shifted(int k) const {
    Series1 out(max_order(), zero_);
    for (int m = 0; m + k <= max_order(); ++m)
      if (m + k >= 0) out[m + k] = (*this)[m];
    return out;
  }
  /// Formal derivative; the top coefficient becomes zero.
  Series1 derivative() const {
    Series1 out(max_order(), zero_);
    for (int m = 1; m <= max_order(); ++m) out[m - 1] = scale((*this)[m], Rational(m));
    return out;
  }

  friend bool operator==(const Series1& a, const Series1& b) {
    if (a.max_order() != b.max_order()) return false;
    for (int m = 0; m <= a.max_order(); ++m)
      if (!RingTraits<C>::equal(a[m], b[m])) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (int m = 0; m <= max_order(); ++m) {
      if (RingTraits<C>::is_zero((*this)[m])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + ring_to_string((*this)[m]) + ")*x^" + std::to_string(m);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_bounds(const Series1& o) const {
    if (max_order() != o.max_order()) {
      fail(ErrorKind::kBoundMismatch, "series truncation orders differ; refusing to re-truncate");
    }
  }

  C zero_{};
  std::vector<C> coeffs_;
};

template <class C>
struct RingTraits<Series1<C>> {
  static Series1<C> zero_like(const Series1<C>& x) { return Series1<C>(x.max_order(), x.zero()); }
  static Series1<C> one_like(const Series1<C>& x) { return Series1<C>::constant(x.max_order(), mtv::one_like(x.zero())); }
  static bool is_zero(const Series1<C>& x) { return x.is_zero(); }
  static bool equal(const Series1<C>& a, const Series1<C>& b) { return a == b; }
  static Series1<C> from_rational(const Rational& q, const Series1<C>& like) {
    return Series1<C>::constant(like.max_order(), mtv::from_rational(q, like.zero()));
  }
  static std::optional<Series1<C>> inverse(const Series1<C>& x);
  static std::string to_string(const Series1<C>& x) { return x.to_string(); }
};

// ---------------------------------------------------------------------------
// Reciprocal. Solved order by order: q_e = (delta_e0 - sum_{f != 0} a_f q_{e-f}) / a_0.

template <class C>
SeriesUVW<C> series_reciprocal(const SeriesUVW<C>& a) {
  auto inv0 = RingTraits<C>::inverse(a.at(0, 0, 0));
  if (!inv0) fail(ErrorKind::kNotInvertible, "series_reciprocal: constant term is not invertible");
  const auto& b = a.bounds();
  SeriesUVW<C> q(b, a.zero());
  struct Term {
    int i, j, l;
    C c;
  };
  std::vector<Term> rest;
  a.for_each_nonzero([&](int i, int j, int l, const C& c) {
    if (i || j || l) rest.push_back({i, j, l, c});
  });
  // Lexicographic order on (i, j, l) visits every e - f before e.
  for (int i = 0; i <= b.du; ++i)
    for (int j = 0; j <= b.dv; ++j)
      for (int l = 0; l <= b.dw; ++l) {
        C acc = (i == 0 && j == 0 && l == 0) ? one_like(a.zero()) : a.zero();
        for (const auto& t : rest) {
          if (t.i > i || t.j > j || t.l > l) continue;
          const C& prev = q.at(i - t.i, j - t.j, l - t.l);
          if (RingTraits<C>::is_zero(prev)) continue;
          acc -= t.c * prev;
        }
        q.at(i, j, l) = acc * *inv0;
      }
  return q;
}

template <class C>
Series1<C> series_reciprocal(const Series1<C>& a) {
  auto inv0 = RingTraits<C>::inverse(a[0]);
  if (!inv0) fail(ErrorKind::kNotInvertible, "series_reciprocal: constant term is not invertible");
  Series1<C> q(a.max_order(), a.zero());
  for (int m = 0; m <= a.max_order(); ++m) {
    C acc = m == 0 ? one_like(a.zero()) : a.zero();
    for (int f = 1; f <= m; ++f) {
      if (RingTraits<C>::is_zero(a[f])) continue;
      acc -= a[f] * q[m - f];
    }
    q[m] = acc * *inv0;
  }
  return q;
}

template <class C>
std::optional<SeriesUVW<C>> RingTraits<SeriesUVW<C>>::inverse(const SeriesUVW<C>& x) {
  if (!RingTraits<C>::inverse(x.at(0, 0, 0))) return std::nullopt;
  return series_reciprocal(x);
}
template <class C>
std::optional<Series1<C>> RingTraits<Series1<C>>::inverse(const Series1<C>& x) {
  if (!RingTraits<C>::inverse(x[0])) return std::nullopt;
  return series_reciprocal(x);
}

// ---------------------------------------------------------------------------
// exp of a series with vanishing constant term: sum of a^m / m!, which
// terminates because a is nilpotent modulo the truncation.

template <class S>
S exp_series(const S& a) {
  S power = one_like(a);
  S sum = power;
  for (int m = 1;; ++m) {
    power = scale(power * a, Rational(1, m));
    if (is_zero(power)) break;
    sum += power;
  }
  return sum;
}

template <class C>
SeriesUVW<C> exp_series_checked(const SeriesUVW<C>& a) {
  if (!RingTraits<C>::is_zero(a.at(0, 0, 0))) fail(ErrorKind::kInvalidArgument, "exp_series: constant term must be zero");
  return exp_series(a);
}
template <class C>
Series1<C> exp_series_checked(const Series1<C>& a) {
  if (!RingTraits<C>::is_zero(a[0])) fail(ErrorKind::kInvalidArgument, "exp_series: constant term must be zero");
  return exp_series(a);
}

/// Elementary symmetric data of a quadratic's roots: e1 = x_1 + x_2, e2 = x_1 x_2.
template <class S>
struct RootPair {
  S e1;
  S e2;
};

/// P_1..P_{n_max} with P_n = x_1^n + x_2^n; element k of the result is P_{k+1}.
template <class S>
std::vector<S> newton_power_sums(const RootPair<S>& rp, int n_max) {
  if (n_max < 1) fail(ErrorKind::kInvalidArgument, "newton_power_sums: n_max must be >= 1");
  std::vector<S> p;
  p.reserve(static_cast<std::size_t>(n_max));
  p.push_back(rp.e1);
  if (n_max >= 2) p.push_back(rp.e1 * rp.e1 - scale(rp.e2, Rational(2)));
  for (int n = 3; n <= n_max; ++n) {
    const auto k = static_cast<std::size_t>(n);
    p.push_back(rp.e1 * p[k - 2] - rp.e2 * p[k - 3]);
  }
  return p;
}

}  // namespace mtv
