#include "core/asymptotic.hpp"

#include "core/error.hpp"

namespace mtv {

using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::pow;

LogPowerSeries::LogPowerSeries(int max_log, int max_j)
    : max_log_(max_log), max_j_(max_j),
      c_(static_cast<std::size_t>(max_log + 1) * static_cast<std::size_t>(max_j + 1), Real(0)) {}

bool LogPowerSeries::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

LogPowerSeries& LogPowerSeries::operator+=(const LogPowerSeries& o) {
  for (int l = 0; l <= o.max_log_; ++l)
    for (int j = 0; j <= o.max_j_ && j <= max_j_; ++j) {
      if (o.at(l, j) == 0) continue;
      if (l > max_log_) fail(ErrorKind::kInvalidArgument, "log power exceeds expansion capacity");
      at(l, j) += o.at(l, j);
    }
  return *this;
}

LogPowerSeries LogPowerSeries::scaled(const Real& f) const {
  LogPowerSeries out = *this;
  for (auto& x : out.c_) x *= f;
  return out;
}

LogPowerSeries LogPowerSeries::times_power(int k) const {
  LogPowerSeries out(max_log_, max_j_);
  for (int l = 0; l <= max_log_; ++l)
    for (int j = 0; j + k <= max_j_; ++j) out.at(l, j + k) = at(l, j);
  return out;
}

LogPowerSeries LogPowerSeries::derivative() const {
  // d/dm L^l m^-j = l L^(l-1) m^(-j-1) - j L^l m^(-j-1)
  LogPowerSeries out(max_log_, max_j_);
  for (int l = 0; l <= max_log_; ++l)
    for (int j = 0; j + 1 <= max_j_; ++j) {
      const Real& c = at(l, j);
      if (c == 0) continue;
      if (l > 0) out.at(l - 1, j + 1) += c * l;
      if (j > 0) out.at(l, j + 1) -= c * j;
    }
  return out;
}

LogPowerSeries LogPowerSeries::antiderivative() const {
  LogPowerSeries out(max_log_, max_j_);
  for (int l = 0; l <= max_log_; ++l) {
    if (at(l, 0) != 0) fail(ErrorKind::kInvalidArgument, "antiderivative of a non-decaying term");
    if (at(l, 1) != 0) {
      if (l + 1 > max_log_) fail(ErrorKind::kInvalidArgument, "log power exceeds expansion capacity");
      out.at(l + 1, 0) += at(l, 1) / (l + 1);
    }
    for (int j = 2; j <= max_j_; ++j) {
      const Real& c = at(l, j);
      if (c == 0) continue;
      // int L^l m^-j = m^(1-j) sum_i (-1)^(l-i) l!/i! L^i / (1-j)^(l-i+1)
      Real falling = 1;  // l!/i!
      for (int i = l; i >= 0; --i) {
        const int e = l - i + 1;
        Real denom = pow(Real(1 - j), e);
        Real term = c * falling / denom;
        if ((l - i) % 2) term = -term;
        out.at(i, j - 1) += term;
        falling *= i;
      }
    }
  }
  return out;
}

Real LogPowerSeries::evaluate(const Real& m) const {
  const Real L = log(m);
  const Real inv = Real(1) / m;
  Real acc = 0;
  Real lp = 1;
  for (int l = 0; l <= max_log_; ++l) {
    Real mp = 1;
    Real row = 0;
    for (int j = 0; j <= max_j_; ++j) {
      if (at(l, j) != 0) row += at(l, j) * mp;
      mp *= inv;
    }
    acc += row * lp;
    lp *= L;
  }
  return acc;
}

LogPowerSeries prefix_sum_expansion(const LogPowerSeries& g, int step) {
  // sum_{i<I} h(i) = C + H(I) - h(I)/2 + sum_p B_2p/(2p)! h^(2p-1)(I), h(i) = g(a + step i)
  LogPowerSeries out = g.antiderivative().scaled(Real(1) / step);
  out += g.scaled(Real(-1) / 2);
  LogPowerSeries d = g.derivative();
  Real factorial = 2;           // (2p)!
  Real step_power = step;       // step^(2p-1)
  for (int p = 1; !d.is_zero(); ++p) {
    out += d.scaled(bernoulli_2p(p) / factorial * step_power);
    d = d.derivative().derivative();
    factorial *= Real(2 * p + 1) * (2 * p + 2);
    step_power *= Real(step) * step;
  }
  return out;
}

Real progression_tail(int l, const Real& alpha, const Real& m0, int step, const Real& eps, Real* err) {
  if (alpha <= 1) fail(ErrorKind::kDivergent, "progression_tail requires alpha > 1");
  const Real L = log(m0);
  // Integral: (1/step) m0^(1-alpha) sum_i l!/i! L^i / (alpha-1)^(l-i+1)
  Real integral = 0;
  {
    Real falling = 1;
    for (int i = l; i >= 0; --i) {
      integral += falling * pow(L, i) / pow(alpha - 1, l - i + 1);
      falling *= i;
    }
    integral *= pow(m0, 1 - alpha) / step;
  }
  // f and its derivatives as polynomials in L times m0^-beta.
  std::vector<Real> a(static_cast<std::size_t>(l) + 1, Real(0));
  a.back() = 1;
  Real beta = alpha;
  auto value = [&](const std::vector<Real>& coeffs, const Real& b) -> Real {
    Real acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * L + coeffs[i];
    return acc * pow(m0, -b);
  };
  auto differentiate = [&](std::vector<Real>& coeffs, Real& b) {
    std::vector<Real> next(coeffs.size(), Real(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i] -= b * coeffs[i];
      if (i + 1 < coeffs.size()) next[i] += coeffs[i + 1] * Real(i + 1);
    }
    coeffs = std::move(next);
    b += 1;
  };
  Real total = integral + value(a, beta) / 2;
  differentiate(a, beta);
  Real factorial = 2;
  Real step_power = step;
  Real previous = -1;
  for (int p = 1;; ++p) {
    Real term = bernoulli_2p(p) / factorial * step_power * value(a, beta);
    Real mag = abs(term);
    if (mag < eps || (previous >= 0 && mag > previous)) {
      if (err) *err = mag;
      return total;
    }
    total -= term;
    previous = mag;
    differentiate(a, beta);
    differentiate(a, beta);
    factorial *= Real(2 * p + 1) * (2 * p + 2);
    step_power *= Real(step) * step;
  }
}

}  // namespace mtv
