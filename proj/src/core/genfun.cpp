#include "core/genfun.hpp"

namespace mtv {
namespace {

SeriesQ mono(UVWBounds b, const RPolyQ& c, int i, int j, int l) { return SeriesQ::monomial(b, c, i, j, l); }

// Building blocks of the recurrence: Q = uv - w^2.
struct Blocks {
  UVWBounds b;
  RPolyQ r = RPolyQ::r();
  RPolyQ one_minus_r = RPolyQ(1) - RPolyQ::r();
  SeriesQ u, v, q;

  explicit Blocks(UVWBounds bounds) : b(bounds) {
    u = mono(b, RPolyQ(1), 1, 0, 0);
    v = mono(b, RPolyQ(1), 0, 1, 0);
    q = mono(b, RPolyQ(1), 1, 1, 0) - mono(b, RPolyQ(1), 0, 0, 2);
  }

  SeriesQ constant(const Rational& c) const { return SeriesQ::constant(b, RPolyQ(c)); }

  // n'(n' - u - v r) + r Q
  SeriesQ denominator(int np) const {
    return constant(Rational(np) * np) - u.scaled(RPolyQ(np)) - v.scaled(RPolyQ(np) * r) + q.scaled(r);
  }
  // n(n - u + v - v r) - (1 - r) Q
  SeriesQ numerator(int n) const {
    return constant(Rational(n) * n) - u.scaled(RPolyQ(n)) + v.scaled(RPolyQ(n) * one_minus_r) - q.scaled(one_minus_r);
  }
};

}  // namespace

UVWBounds phi0_bounds_for_weight(int max_weight) {
  if (max_weight < 2) fail(ErrorKind::kInvalidArgument, "max weight must be >= 2");
  return {max_weight - 2, max_weight - 2, w_exponent_for_height(max_weight / 2)};
}

RPolyQ Phi0Solution::x0_coefficient(int m, int k, int n, int s) const {
  if (m < 0 || m > max_order) fail(ErrorKind::kInvalidArgument, "z-order outside the solved range");
  return series[m].coeff(k - n - s, n - s, w_exponent_for_height(s));
}

Phi0Solution solve_phi0(const Level& level, int max_order, UVWBounds bounds,
                        const std::optional<RecurrencePerturbation>& perturb) {
  if (max_order < level.a) fail(ErrorKind::kInvalidArgument, "solve_phi0 requires M >= a");
  Blocks blk(bounds);
  SeriesQ zero(bounds, RPolyQ{});
  Phi0Solution sol{level, max_order, bounds, PhiSeries(max_order, zero)};
  sol.series[level.a] = series_reciprocal(blk.denominator(level.a));
  for (int n = level.a; n + level.N <= max_order; n += level.N) {
    SeriesQ num = blk.numerator(n);
    if (perturb && perturb->target_order == n + level.N) num += blk.constant(perturb->delta);
    sol.series[n + level.N] = sol.series[n] * num * series_reciprocal(blk.denominator(n + level.N));
  }
  return sol;
}

PhiSeries ode_residual(const Level& level, const PhiSeries& phi) {
  const SeriesQ& zero = phi.zero();
  const UVWBounds b = zero.bounds();
  Blocks blk(b);
  const int N = level.N;
  const SeriesQ one = blk.constant(1);
  const RPolyQ r = RPolyQ::r();

  auto one_minus_zN = [&](const PhiSeries& x) { return x - x.shifted(N); };
  const PhiSeries d1 = phi.derivative();
  const PhiSeries d2 = d1.derivative();

  // z^2 (1 - z^N) Phi''
  PhiSeries lhs = one_minus_zN(d2.shifted(2));
  // z [(1 - u)(1 - z^N) - v (r + (1 - r) z^N)] Phi'
  const PhiSeries zd1 = d1.shifted(1);
  lhs += one_minus_zN(zd1).scaled(one - blk.u);
  lhs -= zd1.scaled(blk.v.scaled(r)) + zd1.shifted(N).scaled(blk.v.scaled(RPolyQ(1) - r));
  // (r + (1 - r) z^N)(uv - w^2) Phi
  lhs += phi.scaled(blk.q.scaled(r)) + phi.shifted(N).scaled(blk.q.scaled(RPolyQ(1) - r));
  if (level.a <= lhs.max_order()) lhs[level.a] -= one;
  return lhs;
}

PhiSeries ode_residual(const Phi0Solution& sol) { return ode_residual(sol.level, sol.series); }

// ---------------------------------------------------------------------------

ZCoeffOracle::ZCoeffOracle(const Level& level, int max_order) : level_(level), max_order_(max_order) {
  if (max_order < 0) fail(ErrorKind::kInvalidArgument, "oracle order must be nonnegative");
  enumerator_ = [](int k, int n, int s, bool adm) { return enumerate_indices(k, n, s, adm); };
}

void ZCoeffOracle::check_order(int m) const {
  if (m < 0 || m > max_order_) {
    fail(ErrorKind::kInvalidArgument, "z-order " + std::to_string(m) + " outside oracle range [0, " +
                                          std::to_string(max_order_) + "]");
  }
}

const std::vector<Rational>& ZCoeffOracle::table(const Index& k) {
  if (k.empty()) fail(ErrorKind::kInvalidArgument, "z-coefficient oracle needs a nonempty index");
  auto it = tables_.find(k);
  if (it != tables_.end()) return it->second;

  const auto size = static_cast<std::size_t>(max_order_) + 1;
  // After step j, inner[m] is the coefficient for the suffix (k_j, ..., k_n)
  // with leading variable m_j = m.
  std::vector<Rational> inner;
  for (int j = k.depth() - 1; j >= 0; --j) {
    const bool innermost = j == k.depth() - 1;
    const auto kj = static_cast<unsigned long>(k[static_cast<std::size_t>(j)]);
    std::vector<Rational> next(size, Rational(0));
    Rational prefix(0);  // sum over m_{j+1} < m
    for (int m = level_.a; m <= max_order_; m += level_.N) {
      const auto mi = static_cast<std::size_t>(m);
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m), kj);
      if (innermost) {
        next[mi] = Rational(mpz_class(1), pw);
      } else {
        if (sgn(prefix) != 0) next[mi] = prefix / Rational(pw);
        prefix += inner[mi];
      }
    }
    inner = std::move(next);
  }
  return tables_.emplace(k, std::move(inner)).first->second;
}

Rational ZCoeffOracle::zcoeff(const Index& k, int m) {
  check_order(m);
  return table(k)[static_cast<std::size_t>(m)];
}

RPolyQ ZCoeffOracle::interp_zcoeff(const Index& k, int m) {
  check_order(m);
  RPolyQ acc;
  for (const auto& term : interpolation_expansion(k)) {
    Rational c = table(term.index)[static_cast<std::size_t>(m)];
    if (sgn(c) != 0) acc += RPolyQ::monomial(c, term.r_exponent);
  }
  return acc;
}

RPolyQ ZCoeffOracle::x_zcoeff(int k, int n, int s, int m, bool admissible_only) {
  check_order(m);
  if (k == 0 && n == 0 && s == 0 && !admissible_only) return m == 0 ? RPolyQ(1) : RPolyQ{};
  RPolyQ acc;
  for (const auto& idx : enumerator_(k, n, s, admissible_only)) {
    if (idx.empty()) continue;
    acc += interp_zcoeff(idx, m);
  }
  return acc;
}

Rational bruteforce_zcoeff(const Level& level, const Index& k, int m) {
  if (m < 1) fail(ErrorKind::kInvalidArgument, "bruteforce_zcoeff requires m >= 1");
  ZCoeffOracle o(level, m);
  return o.zcoeff(k, m);
}

RPolyQ bruteforce_interp_zcoeff(const Level& level, const Index& k, int m) {
  if (m < 1) fail(ErrorKind::kInvalidArgument, "bruteforce_interp_zcoeff requires m >= 1");
  ZCoeffOracle o(level, m);
  return o.interp_zcoeff(k, m);
}

RPolyQ bruteforce_X_zcoeff(const Level& level, int k, int n, int s, int m, bool admissible_only) {
  ZCoeffOracle o(level, std::max(m, 0));
  return o.x_zcoeff(k, n, s, m, admissible_only);
}

bool in_dx0_region(int k, int n, int s) { return k >= n + s && n >= s && s >= 1; }
bool in_dx_minus_region(int k, int n, int s) { return k >= n + s && n >= s && s >= 0 && n >= 2; }

RecurrenceResidual recurrence_residual(ZCoeffOracle& o, int k, int n, int s, int m, const Rational& perturb) {
  const bool r1 = in_dx0_region(k, n, s);
  const bool r2 = in_dx_minus_region(k, n, s);
  if (!r1 && !r2) {
    fail(ErrorKind::kInvalidArgument, "(k,n,s) = (" + std::to_string(k) + "," + std::to_string(n) + "," +
                                          std::to_string(s) + ") lies outside both derivative-relation regions");
  }
  if (m < 1) fail(ErrorKind::kInvalidArgument, "recurrence_residual requires m >= 1");
  RecurrenceResidual out;
  const RPolyQ mm{Rational(m)};
  const RPolyQ bump(perturb);
  if (r1) {
    RPolyQ lhs = mm * o.x_zcoeff(k, n, s, m, true) + bump;
    RPolyQ rhs = o.x_zcoeff(k - 1, n, s - 1, m, false) + o.x_zcoeff(k - 1, n, s, m, true) -
                 o.x_zcoeff(k - 1, n, s - 1, m, true);
    out.dx0 = lhs - rhs;
  }
  if (r2) {
    RPolyQ lhs = mm * (o.x_zcoeff(k, n, s, m, false) - o.x_zcoeff(k, n, s, m, true)) + bump;
    RPolyQ rhs = RPolyQ::r() * o.x_zcoeff(k - 1, n - 1, s, m, false);
    for (int t = 1; m - t * o.level().N >= 0; ++t) rhs += o.x_zcoeff(k - 1, n - 1, s, m - t * o.level().N, false);
    out.dx_minus = lhs - rhs;
  }
  return out;
}

std::vector<OracleRow> compare_phi0_with_oracle(const Phi0Solution& sol, ZCoeffOracle& oracle, int max_weight) {
  if (oracle.max_order() < sol.max_order) fail(ErrorKind::kInvalidArgument, "oracle range shorter than the solution");
  std::vector<OracleRow> rows;
  for (int k = 2; k <= max_weight; ++k)
    for (int n = 1; n < k; ++n)
      for (int s = 1; s <= n && n + s <= k; ++s) {
        const int i = k - n - s, j = n - s, l = w_exponent_for_height(s);
        if (i > sol.bounds.du || j > sol.bounds.dv || l > sol.bounds.dw) {
          fail(ErrorKind::kInvalidArgument, "solution bounds too small for the requested weight");
        }
        for (int m = 0; m <= sol.max_order; ++m) {
          RPolyQ lhs = sol.x0_coefficient(m, k, n, s);
          RPolyQ rhs = oracle.x_zcoeff(k, n, s, m, true);
          const bool eq = lhs == rhs;
          rows.push_back({sol.level, k, n, s, m, std::move(lhs), std::move(rhs), eq});
        }
      }
  return rows;
}

}  // namespace mtv
