#include "core/checks.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "core/corollaries.hpp"
#include "core/error.hpp"
#include "core/hypergeom.hpp"
#include "core/index.hpp"
#include "core/tvalues.hpp"
#include "core/value_cache.hpp"

namespace mtv {

using boost::multiprecision::abs;

std::string tool_version() { return MTV_VERSION_STRING; }

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

const char* kind_name(CheckKind k) { return k == CheckKind::kExact ? "exact" : "numeric"; }

namespace {

const Json kAllLevels = Json::array({{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 3}});
const Json kThreeR = Json::array({"0", "1", "1/2"});

// ---------------------------------------------------------------------------
// Parameter access

struct Params {
  const Json& j;

  const Json& at(const char* key) const {
    auto it = j.find(key);
    if (it == j.end()) fail(ErrorKind::kInvalidArgument, std::string("missing parameter '") + key + "'");
    return *it;
  }
  int integer(const char* key) const {
    const Json& v = at(key);
    if (!v.is_number_integer()) fail(ErrorKind::kInvalidArgument, std::string("parameter '") + key + "' must be an integer");
    return v.get<int>();
  }
  static Rational rational_of(const Json& v, const char* key) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number()) return parse_rational(v.dump());
    fail(ErrorKind::kInvalidArgument, std::string("parameter '") + key + "' must be a number or a rational string");
  }
  Rational rational(const char* key) const { return rational_of(at(key), key); }
  std::vector<Rational> rationals(const char* key) const {
    std::vector<Rational> out;
    for (const auto& v : list(key)) out.push_back(rational_of(v, key));
    return out;
  }
  std::vector<int> integers(const char* key) const {
    std::vector<int> out;
    for (const auto& v : list(key)) {
      if (!v.is_number_integer()) fail(ErrorKind::kInvalidArgument, std::string("parameter '") + key + "' must hold integers");
      out.push_back(v.get<int>());
    }
    return out;
  }
  std::vector<Level> levels(const char* key) const {
    std::vector<Level> out;
    for (const auto& v : list(key)) out.push_back(level_of(v, key));
    return out;
  }
  Level level(const char* key) const { return level_of(at(key), key); }

 private:
  const Json& list(const char* key) const {
    const Json& v = at(key);
    if (!v.is_array()) fail(ErrorKind::kInvalidArgument, std::string("parameter '") + key + "' must be a list");
    return v;
  }
  static Level level_of(const Json& v, const char* key) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      fail(ErrorKind::kInvalidArgument, std::string("parameter '") + key + "' must hold [N, a] pairs");
    }
    return Level(v[0].get<int>(), v[1].get<int>());
  }
};

std::string level_string(const Level& l) { return "(" + std::to_string(l.N) + "," + std::to_string(l.a) + ")"; }

// ---------------------------------------------------------------------------
// Run state

struct Run {
  Params p;
  const CheckContext& ctx;
  std::vector<CaseResult> cases;

  void exact(std::string desc, const RPolyQ& lhs, const RPolyQ& rhs) {
    const bool eq = lhs == rhs;
    cases.push_back({std::move(desc), lhs.to_string(), rhs.to_string(), "", (lhs - rhs).to_string(), eq});
  }
  void counted(std::string desc, std::size_t bad, std::size_t total, std::string first_bad = "0") {
    cases.push_back({std::move(desc), std::to_string(total - bad) + " of " + std::to_string(total) + " agree",
                     std::to_string(total) + " of " + std::to_string(total), "", std::move(first_bad), bad == 0});
  }
  // |lhs - rhs| <= tol * scale + lhs.err + rhs.err
  void numeric(std::string desc, const BigReal& lhs, const BigReal& rhs, const Real& tol, bool relative = false,
               int digits = 30) {
    const Real delta = lhs.value - rhs.value;
    const Real scale = relative ? Real(abs(rhs.value)) : Real(1);
    const bool ok = abs(delta) <= tol * scale + lhs.err + rhs.err;
    cases.push_back({std::move(desc), to_string(lhs.value, digits), to_string(rhs.value, digits), to_string(delta, 3), "", ok});
  }
  void detected(std::string desc, std::string observed, std::string expected, bool ok) {
    cases.push_back({std::move(desc), std::move(observed), std::move(expected), ok ? "detected" : "missed", "", ok});
  }

  int precision() const { return p.integer("precision"); }
  Real tol() const { return to_real(p.rational("tol")); }
  // Values entering identities are computed well below the identity tolerance.
  TValueEngine engine() const {
    const int P = precision();
    const Real t = tol();
    check_tolerance(P, t);
    Real inner = std::min(Real(t / 100), ten_to_minus(P - 5));
    inner = std::max(inner, ten_to_minus(P));
    return TValueEngine(P, inner, ctx.cache);
  }
};

// ---------------------------------------------------------------------------
// Exact layer

void thm_main_exact(Run& run) {
  const int M = run.p.integer("max_order");
  const int W = run.p.integer("max_weight");
  if (W < 2) fail(ErrorKind::kInvalidArgument, "max_weight must be at least 2");
  for (const Level& level : run.p.levels("levels")) {
    if (M < level.a) fail(ErrorKind::kInvalidArgument, "max_order must be at least the residue");
    const Phi0Solution sol = solve_phi0(level, M, phi0_bounds_for_weight(W));
    ZCoeffOracle oracle(level, M);
    const auto rows = compare_phi0_with_oracle(sol, oracle, W);
    std::size_t bad = 0;
    for (const auto& row : rows) {
      if (row.equal) continue;
      if (++bad <= 10) {
        run.exact("level " + level_string(level) + " k=" + std::to_string(row.k) + " n=" + std::to_string(row.n) +
                      " s=" + std::to_string(row.s) + " m=" + std::to_string(row.m),
                  row.lhs, row.rhs);
      }
    }
    run.counted("level " + level_string(level) + ": coefficients of z^m u^(k-n-s) v^(n-s) w^(2s-2), m <= " +
                    std::to_string(M) + ", k <= " + std::to_string(W),
                bad, rows.size(), std::to_string(bad) + " mismatched");

    std::size_t off_class = 0, odd_w = 0;
    for (int m = 0; m <= M; ++m) {
      const bool allowed = m >= level.a && level.contains(m);
      sol.p(m).for_each_nonzero([&](int, int, int l, const RPolyQ&) {
        if (!allowed) ++off_class;
        if (l % 2) ++odd_w;
      });
    }
    run.counted("level " + level_string(level) + ": p_m vanishes off the residue class", off_class ? 1 : 0, 1,
                std::to_string(off_class) + " stray coefficients");
    run.counted("level " + level_string(level) + ": only even powers of w", odd_w ? 1 : 0, 1,
                std::to_string(odd_w) + " odd-w coefficients");
  }
}

void ode_residual_check(Run& run) {
  const int M = run.p.integer("max_order");
  const int W = run.p.integer("max_weight");
  for (const Level& level : run.p.levels("levels")) {
    if (M <= level.N) fail(ErrorKind::kInvalidArgument, "max_order must exceed the level");
    const Phi0Solution sol = solve_phi0(level, M, phi0_bounds_for_weight(W));
    const PhiSeries res = ode_residual(sol);
    const int window = ode_residual_window(sol);
    std::size_t bad = 0;
    std::string first = "0";
    for (int m = 0; m <= window; ++m) {
      if (is_zero(res[m])) continue;
      if (bad++ == 0) first = "z^" + std::to_string(m) + ": " + res[m].to_string();
    }
    run.counted("level " + level_string(level) + ": ODE residual through z^" + std::to_string(window), bad,
                static_cast<std::size_t>(window) + 1, first);
  }
}

void recurrence_relations(Run& run) {
  const int W = run.p.integer("max_weight");
  const int M = run.p.integer("max_order");
  for (const Level& level : run.p.levels("levels")) {
    ZCoeffOracle oracle(level, M);
    std::size_t bad0 = 0, total0 = 0, bad1 = 0, total1 = 0;
    std::string first0 = "0", first1 = "0";
    for (int k = 1; k <= W; ++k)
      for (int n = 0; n <= k; ++n)
        for (int s = 0; s <= n; ++s) {
          if (!in_dx0_region(k, n, s) && !in_dx_minus_region(k, n, s)) continue;
          for (int m = 1; m <= M; ++m) {
            const RecurrenceResidual r = recurrence_residual(oracle, k, n, s, m);
            const std::string where = "(k,n,s,m)=(" + std::to_string(k) + "," + std::to_string(n) + "," +
                                      std::to_string(s) + "," + std::to_string(m) + "): ";
            if (r.dx0) {
              ++total0;
              if (!is_zero(*r.dx0) && bad0++ == 0) first0 = where + r.dx0->to_string();
            }
            if (r.dx_minus) {
              ++total1;
              if (!is_zero(*r.dx_minus) && bad1++ == 0) first1 = where + r.dx_minus->to_string();
            }
          }
        }
    run.counted("level " + level_string(level) + ": derivative relation for X_0", bad0, total0, first0);
    run.counted("level " + level_string(level) + ": derivative relation for X - X_0", bad1, total1, first1);
  }
}

// Literal nested sum over m = m_1 (>|>=) m_2 ... > 0 in the residue class.
Rational literal_zcoeff(const Level& level, std::span<const int> parts, int m, bool weak) {
  if (m <= 0 || !level.contains(m)) return 0;
  Rational head = 1;
  for (int e = 0; e < parts[0]; ++e) head /= m;
  if (parts.size() == 1) return head;
  Rational inner = 0;
  for (int m2 = weak ? m : m - 1; m2 > 0; --m2) inner += literal_zcoeff(level, parts.subspan(1), m2, weak);
  return head * inner;
}

void specialization(Run& run) {
  const int count = run.p.integer("count");
  const int max_depth = run.p.integer("max_depth");
  const int M = run.p.integer("max_order");
  std::mt19937 rng(static_cast<unsigned>(run.p.integer("seed")));
  if (count < 1 || max_depth < 1) fail(ErrorKind::kInvalidArgument, "count and max_depth must be positive");
  std::vector<Index> indices;
  while (static_cast<int>(indices.size()) < count) {
    std::uniform_int_distribution<int> depth(1, max_depth), first(2, 4), rest(1, 3);
    std::vector<int> parts{first(rng)};
    for (int d = depth(rng); static_cast<int>(parts.size()) < d;) parts.push_back(rest(rng));
    indices.emplace_back(std::move(parts));
  }
  for (const Level& level : run.p.levels("levels")) {
    ZCoeffOracle oracle(level, M);
    for (const Index& k : indices) {
      std::size_t bad = 0;
      std::string first = "0";
      for (int m = 1; m <= M; ++m) {
        const RPolyQ interp = oracle.interp_zcoeff(k, m);
        const Rational at0 = interp.evaluate(Rational(0)), at1 = interp.evaluate(Rational(1));
        const Rational strict = literal_zcoeff(level, k.parts(), m, false);
        const Rational weak = literal_zcoeff(level, k.parts(), m, true);
        if (at0 != strict || at1 != weak) {
          if (bad++ == 0) {
            first = "m=" + std::to_string(m) + ": r=0 " + to_string(Rational(at0 - strict)) + ", r=1 " +
                    to_string(Rational(at1 - weak));
          }
        }
      }
      run.counted("level " + level_string(level) + " index (" + k.to_string() + "): r=0 strict, r=1 weak", bad,
                  static_cast<std::size_t>(M), first);
    }
  }
}

// ---------------------------------------------------------------------------
// Numeric layer

void example_check(Run& run, int k) {
  TValueEngine engine = run.engine();
  const Real tol = run.tol();
  for (bool star : {false, true}) {
    const Identity id = example_identity(k, star, engine);
    run.numeric(std::string(star ? "star" : "strict") + " weight-" + std::to_string(k) + " identity, level (2,1)",
                id.lhs, id.rhs, tol);
  }
}

std::string r_string(const Rational& r) { return to_string(r); }

void weighted_sum(Run& run) {
  TValueEngine engine = run.engine();
  const Real tol = run.tol();
  for (int k : run.p.integers("weights"))
    for (int a : run.p.integers("residues"))
      for (const Rational& r : run.p.rationals("r")) {
        if (k < 2 || a < 1) fail(ErrorKind::kInvalidArgument, "weights must be >= 2 and residues >= 1");
        const BigReal lhs = weighted_lhs(k, a, r, engine);
        const BigReal rhs = weighted_rhs(k, a, engine.precision());
        run.numeric("k=" + std::to_string(k) + " a=" + std::to_string(a) + " r=" + r_string(r), lhs, rhs, tol, true);
      }
}

void max_height(Run& run) {
  TValueEngine engine = run.engine();
  const Real tol = run.tol();
  const Level level = run.p.level("level");
  const int W = run.p.integer("max_weight");
  if (W < 2) fail(ErrorKind::kInvalidArgument, "max_weight must be at least 2");
  const int du = W - 2, dw = 2 * (W / 2);
  for (const Rational& r : run.p.rationals("r")) {
    const MaxHeightRhs rhs = maxheight_rhs(level, r, du, dw, engine.precision());
    run.numeric("r=" + r_string(r) + " constant term", BigReal::exact(1), {rhs.series.at(0, 0, 0), rhs.err}, tol);
    for (int k = 2; k <= W; ++k)
      for (int n = 1; 2 * n <= k; ++n) {
        const BigReal lhs = engine.x0(level, k, n, n, r);
        run.numeric("r=" + r_string(r) + " u^" + std::to_string(k - 2 * n) + " w^" + std::to_string(2 * n), lhs,
                    {rhs.series.at(k - 2 * n, 0, 2 * n), rhs.err}, tol);
      }
    Real odd = 0;
    for (int i = 0; i <= du; ++i)
      for (int l = 1; l <= dw; l += 2) odd = std::max(odd, Real(abs(rhs.series.at(i, 0, l))));
    run.numeric("r=" + r_string(r) + " odd powers of w", BigReal::exact(0), {odd, Real(0)}, tol);
  }
}

void twos_genfun(Run& run) {
  TValueEngine engine = run.engine();
  const Real tol = run.tol();
  const int n_max = run.p.integer("max_n");
  for (const Level& level : run.p.levels("levels"))
    for (const Rational& r : run.p.rationals("r")) {
      const auto rhs = twos_rhs(level, r, n_max, engine.precision());
      for (int n = 1; n <= n_max; ++n) {
        const BigReal lhs = engine.t_interp(level, Index(std::vector<int>(static_cast<std::size_t>(n), 2)), r);
        run.numeric("level " + level_string(level) + " r=" + r_string(r) + " {2}^" + std::to_string(n), lhs,
                    rhs[static_cast<std::size_t>(n - 1)], tol);
      }
    }
}

void height_one(Run& run) {
  TValueEngine engine = run.engine();
  const Real tol = run.tol();
  const Level level = run.p.level("level");
  const int n_max = run.p.integer("max_n");
  if (n_max < 1) fail(ErrorKind::kInvalidArgument, "max_n must be positive");
  for (int m : run.p.integers("m"))
    for (const Rational& r : run.p.rationals("r")) {
      const SeriesValue rhs = height_one_rhs(level, m, r, n_max - 1, engine.precision(), engine.tol());
      for (int n = 1; n <= n_max; ++n) {
        std::vector<int> parts{m};
        parts.resize(static_cast<std::size_t>(n), 1);
        const BigReal lhs = engine.t_interp(level, Index(parts), r);
        run.numeric("r=" + r_string(r) + " (" + Index(parts).to_string() + ")", lhs, {rhs.value[n - 1], rhs.err}, tol);
      }
    }
}

Real zeta_reference(int k) {
  Real z = 0;
  mpfr_zeta_ui(z.backend().data(), static_cast<unsigned long>(k), MPFR_RNDN);
  return z;
}

void sanity_reductions(Run& run) {
  const int P = run.precision();
  const Real tol = run.tol();
  check_tolerance(P, tol);
  WorkingPrecision wp(P + kGuardDigits);
  const int N = run.p.integer("N");
  if (N < 1) fail(ErrorKind::kInvalidArgument, "N must be positive");
  for (int k : run.p.integers("weights")) {
    if (k < 2) fail(ErrorKind::kInvalidArgument, "weights must be >= 2");
    const Real z = zeta_reference(k);
    const BigReal zeta{z, ten_to_minus(P + 5)};
    const std::string ks = std::to_string(k);
    run.numeric("t_(1,1)(" + ks + ") = zeta(" + ks + ")", t_depth1(Level(1, 1), k, P), zeta, tol);
    run.numeric("t_(2,1)(" + ks + ") = (1-2^-" + ks + ") zeta(" + ks + ")", t_depth1(Level(2, 1), k, P),
                zeta.scaled(1 - Rational(1, mpz_class(1) << k)), tol);
    mpz_class nk;
    mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(k));
    run.numeric("t_(" + std::to_string(N) + "," + std::to_string(N) + ")(" + ks + ") = " + std::to_string(N) + "^-" + ks +
                    " zeta(" + ks + ")",
                t_depth1(Level(N, N), k, P), zeta.scaled(Rational(1) / Rational(nk)), tol);
  }
}

void negative_controls(Run& run) {
  const Level level = run.p.level("level");
  const int M = run.p.integer("max_order");
  const int W = run.p.integer("max_weight");
  const UVWBounds bounds = phi0_bounds_for_weight(W);
  auto mismatches = [&](const Phi0Solution& sol, ZCoeffOracle& oracle) {
    std::size_t bad = 0;
    for (const auto& row : compare_phi0_with_oracle(sol, oracle, W)) bad += row.equal ? 0 : 1;
    return bad;
  };
  {
    const Phi0Solution mutant = solve_phi0(level, M, bounds, RecurrencePerturbation{level.a + level.N, Rational(1)});
    ZCoeffOracle oracle(level, M);
    const std::size_t bad = mismatches(mutant, oracle);
    run.detected("recurrence numerator perturbed at p_" + std::to_string(level.a + level.N),
                 std::to_string(bad) + " mismatched coefficients", "> 0 mismatched coefficients", bad > 0);
  }
  {
    const Phi0Solution sol = solve_phi0(level, M, bounds);
    ZCoeffOracle oracle(level, M);
    bool dropped = false;
    oracle.set_enumerator([&dropped](int k, int n, int s, bool admissible_only) {
      auto v = enumerate_indices(k, n, s, admissible_only);
      if (admissible_only && v.size() >= 2) {
        v.pop_back();
        dropped = true;
      }
      return v;
    });
    const std::size_t bad = mismatches(sol, oracle);
    run.detected("one index dropped from each admissible set", std::to_string(bad) + " mismatched coefficients",
                 "> 0 mismatched coefficients", dropped && bad > 0);
  }
  {
    ZCoeffOracle oracle(level, M);
    const RecurrenceResidual r = recurrence_residual(oracle, 3, 2, 1, level.a, Rational(1));
    const bool hit = (r.dx0 && !is_zero(*r.dx0)) || (r.dx_minus && !is_zero(*r.dx_minus));
    run.detected("derivative relation with one term shifted by 1", hit ? "nonzero residual" : "zero residual",
                 "nonzero residual", hit);
  }
  {
    const PhiSeries zero(M, SeriesQ(bounds, RPolyQ()));
    const PhiSeries res = ode_residual(level, zero);
    run.detected("ODE residual of the zero series", res[level.a].to_string(), "-1 at z^a",
                 !is_zero(res[level.a]));
  }
  {
    TValueEngine engine = run.engine();
    const Real tol = run.tol();
    const Identity id = example_identity(3, false, engine, to_real(run.p.rational("constant_shift")));
    const Real delta = abs(id.lhs.value - id.rhs.value);
    const bool caught = delta > tol + id.lhs.err + id.rhs.err;
    run.detected("log 2 shifted in the weight-3 identity", "delta " + to_string(delta, 3),
                 "delta > " + to_string(tol, 3), caught);
  }
}

void error_bound_soundness(Run& run) {
  const int P = run.precision();
  const Real tol = run.tol();
  check_tolerance(P, tol);
  const int hi = P + 10;
  NestedOptions doubled;
  doubled.terms = 2 * std::max(64, 8 * (hi + kGuardDigits));
  auto record = [&](std::string desc, const BigReal& base, const BigReal& refined) {
    WorkingPrecision wp(hi + kGuardDigits);
    const Real delta = base.value - refined.value;
    run.cases.push_back({std::move(desc), to_string(base.value, P), to_string(refined.value, P), to_string(delta, 3), "",
                         abs(delta) <= base.err});
  };
  {
    const BigReal a = t_depth1(Level(2, 1), 3, P);
    const BigReal b = t_depth1(Level(2, 1), 3, hi);
    record("t_(2,1)(3) against P+10", a, b);
  }
  struct Sample {
    Level level;
    std::vector<int> parts;
    bool star;
  };
  const std::vector<Sample> samples{{Level(2, 1), {2, 1}, false},    {Level(1, 1), {3, 1, 1}, false},
                                    {Level(3, 2), {2, 2}, false},    {Level(2, 1), {2, 1, 1, 1}, false},
                                    {Level(4, 3), {3, 1, 2}, false}, {Level(2, 1), {2, 1, 1}, true}};
  for (const auto& s : samples) {
    const Index k(s.parts);
    auto eval = [&](int prec, NestedOptions opt) {
      return s.star ? t_star_nested(s.level, k, prec, tol, opt) : t_nested(s.level, k, prec, tol, opt);
    };
    const BigReal a = eval(P, {});
    const BigReal b = eval(hi, doubled);
    record(std::string(s.star ? "t*" : "t") + "_" + level_string(s.level) + "(" + k.to_string() +
               ") against P+10 and doubled cutoff",
           a, b);
  }
  {
    WorkingPrecision wp(hi + kGuardDigits);
    PFQParams params{{Real(1), Real(1) / 2, Real(1) / 2}, {Real(3) / 2, Real(3) / 2}};
    const BigReal a = pfq_at_1(params, P, tol);
    const BigReal b = pfq_at_1(params, hi, tol / 1000);
    record("3F2(1,1/2,1/2;3/2,3/2;1) against P+10", a, b);
  }
}

void hypergeom_spot(Run& run) {
  const int P = run.precision();
  const Real tol = run.tol();
  check_tolerance(P, tol);
  WorkingPrecision wp(P + kGuardDigits);
  const Real a = to_real(run.p.rational("a")), b = to_real(run.p.rational("b")), c = to_real(run.p.rational("c"));
  const Identity id = hypergeom_3f2_spot(a, b, c, P, std::max(Real(tol / 100), ten_to_minus(P)));
  run.numeric("3F2(a,b,1;c,2+a+b-c;1) against the Gamma closed form", id.lhs, id.rhs, tol);
}

// ---------------------------------------------------------------------------

struct Entry {
  CheckInfo info;
  std::function<void(Run&)> body;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> v{
        {{"error-bound-soundness", CheckKind::kNumeric, "reported error bounds of numeric values",
          "recompute sampled values at P+10 with doubled cutoffs; the change must stay within the reported err",
          Json{{"precision", 30}, {"tol", "1e-25"}}},
         error_bound_soundness},
        {{"example-k3", CheckKind::kNumeric, "t(3)+2t(2,1) = -t*(3)+2t*(2,1) = 2t(2)log 2",
          "weight-3 weighted formulas for strict and star values at level (2,1)",
          Json{{"precision", 30}, {"tol", "1e-10"}}},
         [](Run& r) { example_check(r, 3); }},
        {{"example-k4", CheckKind::kNumeric,
          "t(4)+2(t(3,1)+t(2,2))+4t(2,1,1) = t*(4)-2(t*(3,1)+t*(2,2))+4t*(2,1,1) = 2/3 t(2)^2 + 2t(2)log^2 2",
          "weight-4 weighted formulas for strict and star values at level (2,1)",
          Json{{"precision", 30}, {"tol", "1e-10"}}},
         [](Run& r) { example_check(r, 4); }},
        {{"height-one", CheckKind::kNumeric,
          "sum_n t^r(m,{1}^(n-1)) v^(n-1) = (m+1)F(m) closed form",
          "v-coefficients of the height-one hypergeometric representation",
          Json{{"level", {2, 1}}, {"m", {2, 3}}, {"r", {"0", "1"}}, {"max_n", 6}, {"precision", 30}, {"tol", "1e-6"}}},
         height_one},
        {{"hypergeom-3f2-spotcheck", CheckKind::kNumeric, "3F2(a,b,1;c,2+a+b-c;1) summation formula",
          "direct 3F2 at 1 against its Gamma closed form",
          Json{{"a", "0.3"}, {"b", "0.4"}, {"c", "1.7"}, {"precision", 30}, {"tol", "1e-15"}}},
         hypergeom_spot},
        {{"max-height", CheckKind::kNumeric, "1 + sum X_0^r(k,n,n) u^(k-2n) w^(2n) = exp{sum t(n)/n (P_n(alpha)-P_n(gamma))}",
          "maximal-height generating function, coefficientwise",
          Json{{"level", {2, 1}}, {"r", kThreeR}, {"max_weight", 8}, {"precision", 30}, {"tol", "1e-8"}}},
         max_height},
        {{"negative-controls", CheckKind::kExact, "mutations of the harness inputs",
          "perturbed recurrence, truncated enumeration, shifted relation and shifted constant must all be detected",
          Json{{"level", {2, 1}},
               {"max_order", 21},
               {"max_weight", 6},
               {"precision", 30},
               {"tol", "1e-10"},
               {"constant_shift", "1e-6"}}},
         negative_controls},
        {{"ode-residual", CheckKind::kExact, "second-order ODE satisfied by Phi_0^r",
          "ODE left side minus z^a vanishes through order M-N",
          Json{{"levels", kAllLevels}, {"max_order", 41}, {"max_weight", 7}}},
         ode_residual_check},
        {{"recurrence-relations", CheckKind::kExact, "derivative relations for X_0^r and X^r - X_0^r",
          "both z-derivative relations at every in-region (k,n,s) and order",
          Json{{"levels", {{1, 1}, {2, 1}}}, {"max_weight", 6}, {"max_order", 20}}},
         recurrence_relations},
        {{"sanity-reductions", CheckKind::kNumeric, "t_(1,1) = zeta, t_(N,N)(k) = N^-k zeta(k), t_(2,1)(k) = (1-2^-k) zeta(k)",
          "depth-one reductions against an independent zeta",
          Json{{"weights", {2, 3, 4}}, {"N", 3}, {"precision", 30}, {"tol", "1e-20"}}},
         sanity_reductions},
        {{"specialization", CheckKind::kExact, "t^0 = t and t^1 = t*",
          "interpolated z-coefficients at r=0 and r=1 against literal strict and weak nested sums",
          Json{{"levels", {{1, 1}, {2, 1}}}, {"count", 50}, {"seed", 2024}, {"max_depth", 4}, {"max_order", 24}}},
         specialization},
        {{"thm-main-exact", CheckKind::kExact, "generating function of X_0^r(k,n,s) via the Phi_0^r recurrence",
          "coefficients of Phi_0^r against brute-force sums over admissible indices, exactly in Q[r]",
          Json{{"levels", kAllLevels}, {"max_order", 60}, {"max_weight", 7}}},
         thm_main_exact},
        {{"twos-genfun", CheckKind::kNumeric, "1 + sum t^r({2}^n) w^n = exp(sum (r^n-(r-1)^n) t(2n)/n w^n)",
          "generating function of t^r({2}^n)",
          Json{{"levels", {{1, 1}, {2, 1}}}, {"r", kThreeR}, {"max_n", 5}, {"precision", 30}, {"tol", "1e-10"}}},
         twos_genfun},
        {{"weighted-sum", CheckKind::kNumeric, "weighted sum formula for t^r_(2a,a) over I_0(k,n)",
          "weighted sums of interpolated values against the finite closed form (relative tolerance)",
          Json{{"weights", {3, 4, 5}}, {"residues", {1, 2}}, {"r", kThreeR}, {"precision", 30}, {"tol", "1e-8"}}},
         weighted_sum},
    };
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.info.id < b.info.id; });
    return v;
  }();
  return list;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  fail(ErrorKind::kUnknownCheck, "unknown check '" + std::string(id) + "'");
}

}  // namespace

const std::vector<CheckInfo>& check_catalogue() {
  static const std::vector<CheckInfo> list = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return list;
}

const CheckInfo& find_check(std::string_view id) {
  for (const auto& c : check_catalogue())
    if (c.id == id) return c;
  fail(ErrorKind::kUnknownCheck, "unknown check '" + std::string(id) + "'");
}

Report run_check(std::string_view id, const Json& overrides, const CheckContext& ctx) {
  const Entry& entry = find_entry(id);
  Report report;
  report.id = entry.info.id;
  report.params = entry.info.defaults;
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&]() -> Report {
    report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return std::move(report);
  };
  if (!overrides.is_null() && !overrides.is_object()) {
    report.reason = "parameters must be a JSON object";
    return finish();
  }
  if (overrides.is_object()) {
    for (auto it = overrides.begin(); it != overrides.end(); ++it) {
      if (!report.params.contains(it.key())) {
        report.reason = "unknown parameter '" + it.key() + "'";
        return finish();
      }
      report.params[it.key()] = it.value();
    }
  }
  Run run{Params{report.params}, ctx, {}};
  try {
    entry.body(run);
    report.cases = std::move(run.cases);
    if (report.cases.empty()) {
      report.reason = "no cases in the requested parameter range";
    } else {
      const bool all = std::all_of(report.cases.begin(), report.cases.end(), [](const CaseResult& c) { return c.ok; });
      report.status = all ? CheckStatus::kPass : CheckStatus::kFail;
    }
  } catch (const Error& e) {
    report.cases = std::move(run.cases);
    switch (e.kind()) {
      case ErrorKind::kInvalidArgument:
      case ErrorKind::kToleranceUnreachable:
      case ErrorKind::kBoundMismatch:
      case ErrorKind::kParse:
        report.status = CheckStatus::kSkipped;
        break;
      default:
        report.status = CheckStatus::kFail;
    }
    report.reason = e.what();
  } catch (const std::exception& e) {
    report.cases = std::move(run.cases);
    report.status = CheckStatus::kFail;
    report.reason = e.what();
  }
  return finish();
}

std::vector<Report> run_checks(const std::vector<std::string>& ids, const std::map<std::string, Json>& overrides,
                               int jobs, const CheckContext& ctx) {
  std::vector<std::string> order;
  for (const auto& id : ids) {
    find_check(id);
    if (std::find(order.begin(), order.end(), id) == order.end()) order.push_back(id);
  }
  std::sort(order.begin(), order.end());
  std::vector<Report> out(order.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      auto it = overrides.find(order[i]);
      out[i] = run_check(order[i], it == overrides.end() ? Json::object() : it->second, ctx);
    }
  };
  const int n = std::clamp(jobs, 1, std::max(1, static_cast<int>(order.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

Json report_json(const std::vector<Report>& reports, bool with_timing) {
  Json checks = Json::array();
  for (const auto& r : reports) {
    Json cases = Json::array();
    for (const auto& c : r.cases) {
      Json jc{{"desc", c.desc}, {"lhs", c.lhs}, {"rhs", c.rhs}};
      if (!c.coeff_diff.empty()) jc["coeff_diff"] = c.coeff_diff;
      else jc["delta"] = c.delta;
      jc["ok"] = c.ok;
      cases.push_back(std::move(jc));
    }
    Json jr{{"id", r.id}, {"kind", kind_name(find_check(r.id).kind)}, {"params", r.params}, {"status", status_name(r.status)}};
    if (!r.reason.empty()) jr["reason"] = r.reason;
    jr["cases"] = std::move(cases);
    if (with_timing) jr["ms"] = static_cast<long long>(r.ms + 0.5);
    checks.push_back(std::move(jr));
  }
  return Json{{"schema", kReportSchema}, {"tool_version", tool_version()}, {"checks", std::move(checks)}};
}

Json series_json(const SeriesQ& s) {
  Json out = Json::array();
  s.for_each_nonzero([&](int i, int j, int l, const RPolyQ& c) {
    out.push_back(Json{{"monomial", SeriesQ::monomial_name(i, j, l)}, {"coeff", c.to_string()}});
  });
  return out;
}

Json oracle_rows_json(const std::vector<OracleRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"level", {r.level.N, r.level.a}},
                       {"k", r.k},
                       {"n", r.n},
                       {"s", r.s},
                       {"m", r.m},
                       {"lhs", r.lhs.to_string()},
                       {"rhs", r.rhs.to_string()},
                       {"equal", r.equal}});
  }
  return out;
}

}  // namespace mtv
