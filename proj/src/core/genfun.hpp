#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "core/index.hpp"
#include "core/level.hpp"
#include "core/rpoly.hpp"
#include "core/series.hpp"

namespace mtv {

using SeriesQ = SeriesUVW<RPolyQ>;   // Q[r][[u, v, w]]
using PhiSeries = Series1<SeriesQ>;  // ... [[z]]

/// Stored w-exponent of the X_0(k, n, s) coefficient (w^(2s-2)).
constexpr int w_exponent_for_height(int s) { return 2 * s - 2; }

/// Smallest box holding every u^(k-n-s) v^(n-s) w^(2s-2) with weight k <= max_weight.
UVWBounds phi0_bounds_for_weight(int max_weight);

/// Test hook for negative controls: adds `delta` to the constant term of the
/// recurrence numerator at the step producing p_{target_order}.
struct RecurrencePerturbation {
  int target_order = 0;
  Rational delta = 1;
};

struct Phi0Solution {
  Level level;
  int max_order = 0;
  UVWBounds bounds;
  PhiSeries series;

  const SeriesQ& p(int m) const { return series[m]; }
  /// Coefficient of z^m u^(k-n-s) v^(n-s) w^(2s-2); zero outside the box.
  RPolyQ x0_coefficient(int m, int k, int n, int s) const;
};

/// Phi_0^r through z^max_order by the exact coefficient recurrence.
Phi0Solution solve_phi0(const Level& level, int max_order, UVWBounds bounds,
                        const std::optional<RecurrencePerturbation>& perturb = std::nullopt);

/// Left side of the second-order ODE for Phi_0^r minus z^a. Only orders up to
/// `ode_residual_window` are meaningful.
PhiSeries ode_residual(const Phi0Solution& sol);
PhiSeries ode_residual(const Level& level, const PhiSeries& phi);
inline int ode_residual_window(const Phi0Solution& sol) { return sol.max_order - sol.level.N; }

/// Exact z-coefficients of L_{N,a}(k; z) and the derived sums, by summing the
/// defining nested series over m = m_1 > m_2 > ... > m_n > 0 (all in the residue
/// class) with running prefix sums. Tables are memoised per index.
class ZCoeffOracle {
 public:
  using Enumerator = std::function<std::vector<Index>(int k, int n, int s, bool admissible_only)>;

  ZCoeffOracle(const Level& level, int max_order);

  const Level& level() const { return level_; }
  int max_order() const { return max_order_; }

  /// Replaces the index-set enumeration (negative controls only).
  void set_enumerator(Enumerator e) { enumerator_ = std::move(e); }

  const std::vector<Rational>& table(const Index& k);
  Rational zcoeff(const Index& k, int m);
  RPolyQ interp_zcoeff(const Index& k, int m);
  RPolyQ x_zcoeff(int k, int n, int s, int m, bool admissible_only);

 private:
  void check_order(int m) const;

  Level level_;
  int max_order_;
  Enumerator enumerator_;
  std::map<Index, std::vector<Rational>> tables_;
};

Rational bruteforce_zcoeff(const Level& level, const Index& k, int m);
RPolyQ bruteforce_interp_zcoeff(const Level& level, const Index& k, int m);
RPolyQ bruteforce_X_zcoeff(const Level& level, int k, int n, int s, int m, bool admissible_only);

struct RecurrenceResidual {
  std::optional<RPolyQ> dx0;      // derivative relation for X_0
  std::optional<RPolyQ> dx_minus; // derivative relation for X - X_0
};

/// Both derivative relations at z-order m (m >= 1), evaluated through the
/// oracle. Throws when (k, n, s) lies in neither parameter region.
/// `perturb` is added to the left side of each relation (negative controls).
RecurrenceResidual recurrence_residual(ZCoeffOracle& oracle, int k, int n, int s, int m,
                                       const Rational& perturb = Rational(0));
bool in_dx0_region(int k, int n, int s);
bool in_dx_minus_region(int k, int n, int s);

struct OracleRow {
  Level level;
  int k, n, s, m;
  RPolyQ lhs;  // from Phi_0^r
  RPolyQ rhs;  // brute force
  bool equal;
};

/// Every (k, n, s) with 2 <= k <= max_weight and every m <= sol.max_order.
std::vector<OracleRow> compare_phi0_with_oracle(const Phi0Solution& sol, ZCoeffOracle& oracle, int max_weight);

}  // namespace mtv
