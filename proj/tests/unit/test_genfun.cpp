#include <random>

#include "doctest.h"

#include "core/genfun.hpp"
#include "core/index.hpp"

using namespace mtv;

namespace {

// Literal nested sum: m = m_1 > m_2 > ... > m_n > 0, all in the class.
Rational literal(const Level& L, const std::vector<int>& k, std::size_t pos, int m) {
  if (m <= 0 || (m - L.a) % L.N != 0) return 0;
  Rational head = 1;
  for (int e = 0; e < k[pos]; ++e) head /= m;
  if (pos + 1 == k.size()) return head;
  Rational inner = 0;
  for (int m2 = 1; m2 < m; ++m2) inner += literal(L, k, pos + 1, m2);
  return head * inner;
}

}  // namespace

TEST_SUITE("genfun") {
  TEST_CASE("brute-force z-coefficient examples") {
    const Level L(2, 1);
    CHECK(bruteforce_zcoeff(L, Index({2}), 5) == Rational(1, 25));
    CHECK(bruteforce_zcoeff(L, Index({2, 1}), 5) == Rational(4, 75));
    CHECK(bruteforce_zcoeff(L, Index({2}), 4) == 0);
    CHECK(bruteforce_interp_zcoeff(L, Index({2, 1}), 3).to_string() == "1/9 + 1/27*r");
    CHECK(bruteforce_interp_zcoeff(L, Index({5}), 1) == RPolyQ(1));
    CHECK(bruteforce_interp_zcoeff(L, Index({3, 1, 2}), 6) == RPolyQ());
    CHECK(bruteforce_X_zcoeff(L, 2, 1, 1, 3, true) == RPolyQ(Rational(1, 9)));
    CHECK(bruteforce_X_zcoeff(L, 3, 2, 1, 3, true).to_string() == "1/9 + 1/27*r");
    CHECK(bruteforce_X_zcoeff(L, 0, 0, 0, 0, false) == RPolyQ(1));
    CHECK(bruteforce_X_zcoeff(L, 0, 0, 0, 3, false) == RPolyQ());
    CHECK_THROWS_AS(bruteforce_zcoeff(L, Index(), 3), Error);
  }

  TEST_CASE("oracle tables agree with a literal nested sum") {
    std::mt19937 gen(7);
    for (const Level L : {Level(1, 1), Level(2, 1), Level(3, 2), Level(4, 4)}) {
      ZCoeffOracle oracle(L, 18);
      for (int t = 0; t < 15; ++t) {
        std::vector<int> k{std::uniform_int_distribution<int>(1, 4)(gen)};
        const int depth = std::uniform_int_distribution<int>(1, 3)(gen);
        while (static_cast<int>(k.size()) < depth) k.push_back(std::uniform_int_distribution<int>(1, 3)(gen));
        for (int m = 0; m <= 18; ++m) {
          CAPTURE(m);
          CHECK(oracle.zcoeff(Index(k), m) == literal(L, k, 0, m));
        }
      }
    }
  }

  TEST_CASE("solve_phi0 examples") {
    const Phi0Solution s1 = solve_phi0(Level(1, 1), 4, {2, 2, 2});
    CHECK(s1.p(1).at(0, 0, 0) == RPolyQ(1));
    const Phi0Solution s2 = solve_phi0(Level(2, 1), 9, phi0_bounds_for_weight(5));
    CHECK(s2.p(1).at(0, 0, 0) == RPolyQ(1));
    CHECK(s2.p(3).at(0, 0, 0) == RPolyQ(Rational(1, 9)));
    CHECK(s2.p(5).at(0, 0, 0) == RPolyQ(Rational(1, 25)));
    // u-coefficient of p_3 is X_0(3,1,1) at z^3, i.e. the coefficient of (3)
    CHECK(s2.p(3).at(1, 0, 0) == bruteforce_X_zcoeff(Level(2, 1), 3, 1, 1, 3, true));
    CHECK(s2.p(3).at(1, 0, 0) == RPolyQ(Rational(1, 27)));
  }

  TEST_CASE("Phi_0 coefficients match the brute-force sums at a level outside the acceptance grid") {
    const Level L(3, 1);
    const Phi0Solution sol = solve_phi0(L, 22, phi0_bounds_for_weight(6));
    ZCoeffOracle oracle(L, 22);
    std::size_t bad = 0;
    const auto rows = compare_phi0_with_oracle(sol, oracle, 6);
    for (const auto& r : rows) bad += r.equal ? 0 : 1;
    CHECK(rows.size() > 0);
    CHECK(bad == 0);
  }

  TEST_CASE("structural invariants of Phi_0") {
    for (const Level L : {Level(1, 1), Level(2, 1), Level(3, 3), Level(4, 3)}) {
      const Phi0Solution sol = solve_phi0(L, 20, phi0_bounds_for_weight(7));
      for (int m = 0; m <= 20; ++m) {
        const bool allowed = m >= L.a && (m - L.a) % L.N == 0;
        sol.p(m).for_each_nonzero([&](int, int j, int l, const RPolyQ& c) {
          CAPTURE(m);
          CHECK(allowed);
          CHECK(l % 2 == 0);
          const int s = l / 2 + 1;
          CHECK(c.degree() <= j + s);
        });
      }
    }
  }

  TEST_CASE("ODE residual") {
    const Phi0Solution a = solve_phi0(Level(2, 1), 21, phi0_bounds_for_weight(6));
    const PhiSeries ra = ode_residual(a);
    CHECK(ode_residual_window(a) == 19);
    for (int m = 0; m <= 19; ++m) CHECK(is_zero(ra[m]));
    const Phi0Solution b = solve_phi0(Level(1, 1), 10, phi0_bounds_for_weight(6));
    const PhiSeries rb = ode_residual(b);
    for (int m = 0; m <= 9; ++m) CHECK(is_zero(rb[m]));
    const UVWBounds bounds = phi0_bounds_for_weight(6);
    const PhiSeries zero(10, SeriesQ(bounds, RPolyQ()));
    const PhiSeries rz = ode_residual(Level(2, 1), zero);
    CHECK(rz[1] == SeriesQ::constant(bounds, RPolyQ(-1)));
    // a perturbed solution leaves a residual inside the window
    const Phi0Solution c = solve_phi0(Level(2, 1), 21, bounds, RecurrencePerturbation{5, Rational(1)});
    const PhiSeries rc = ode_residual(c);
    bool any = false;
    for (int m = 0; m <= 19; ++m) any = any || !is_zero(rc[m]);
    CHECK(any);
  }

  TEST_CASE("derivative relations") {
    ZCoeffOracle oracle(Level(2, 1), 15);
    for (int m = 1; m <= 15; ++m) {
      const auto r = recurrence_residual(oracle, 3, 2, 1, m);
      REQUIRE(r.dx0);
      CHECK(is_zero(*r.dx0));
      const auto q = recurrence_residual(oracle, 2, 2, 0, m);
      CHECK_FALSE(q.dx0);
      REQUIRE(q.dx_minus);
      CHECK(is_zero(*q.dx_minus));
    }
    const auto bumped = recurrence_residual(oracle, 3, 2, 1, 3, Rational(1));
    CHECK_FALSE(is_zero(*bumped.dx0));
    CHECK_THROWS_AS(recurrence_residual(oracle, 3, 1, 0, 3), Error);
    CHECK_THROWS_AS(recurrence_residual(oracle, 2, 2, 1, 3), Error);
    CHECK_THROWS_AS(recurrence_residual(oracle, 3, 2, 1, 0), Error);
  }

  TEST_CASE("specialisation at r = 0 and r = 1") {
    const Level L(2, 1);
    // weak-inequality literal sum
    std::function<Rational(const std::vector<int>&, std::size_t, int)> weak = [&](const std::vector<int>& k,
                                                                                std::size_t pos, int m) -> Rational {
      if (m <= 0 || (m - L.a) % L.N != 0) return 0;
      Rational head = 1;
      for (int e = 0; e < k[pos]; ++e) head /= m;
      if (pos + 1 == k.size()) return head;
      Rational inner = 0;
      for (int m2 = 1; m2 <= m; ++m2) inner += weak(k, pos + 1, m2);
      return head * inner;
    };
    for (const std::vector<int>& k : {std::vector<int>{2, 1}, {3, 1, 2}, {2, 2, 1, 1}}) {
      for (int m = 1; m <= 13; ++m) {
        const RPolyQ p = bruteforce_interp_zcoeff(L, Index(k), m);
        CHECK(p.evaluate(Rational(0)) == literal(L, k, 0, m));
        CHECK(p.evaluate(Rational(1)) == weak(k, 0, m));
      }
    }
  }
}
