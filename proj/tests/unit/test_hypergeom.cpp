#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "core/corollaries.hpp"
#include "core/error.hpp"
#include "core/hypergeom.hpp"
#include "core/index.hpp"

using namespace mtv;
using boost::multiprecision::abs;

TEST_SUITE("hypergeom") {
  TEST_CASE("unit argument") {
    WorkingPrecision wp(45);
    const Real tol = ten_to_minus(25);
    const Real pi = oracle::mpfr_pi();
    const PFQParams zero_b{{Real(0), Real(2), Real(3)}, {Real(5), Real(7)}};
    CHECK(pfq_at_1(zero_b, 30, tol).value == 1);
    // the height-one representation at v = 0, N = 2, a = 1, m = 2 is t(2)
    const PFQParams p{{Real(1), Real(1) / 2, Real(1) / 2}, {Real(3) / 2, Real(3) / 2}};
    const BigReal v = pfq_at_1(p, 30, tol);
    CHECK(abs(v.value - pi * pi / 8) < ten_to_minus(25));
    // 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b))
    const Real a("0.25"), b("0.5"), c("2.5");
    using boost::multiprecision::tgamma;
    const Real gauss = tgamma(c) * tgamma(Real(c - a - b)) / (tgamma(Real(c - a)) * tgamma(Real(c - b)));
    CHECK(abs(pfq_at_1({{a, b}, {c}}, 30, tol).value - gauss) < ten_to_minus(25));
  }

  TEST_CASE("parameter validation") {
    WorkingPrecision wp(40);
    const Real tol = ten_to_minus(20);
    CHECK_THROWS_AS(pfq_at_1({{Real(1), Real(1)}, {Real(1)}}, 25, tol), Error);  // sum c - sum b = -1
    CHECK_THROWS_AS(pfq_at_1({{Real(1), Real(2)}, {Real(3)}}, 25, tol), Error);  // = 0
    CHECK_THROWS_AS(pfq_at_1({{Real(1), Real(2)}, {Real(-2)}}, 25, tol), Error);
    CHECK_THROWS_AS(pfq_at_1({{Real(1), Real(2)}, {Real(0)}}, 25, tol), Error);
    CHECK_THROWS_AS(pfq_at_1({{Real(1)}, {Real(3)}}, 25, tol), Error);
    try {
      pfq_at_1({{Real(1), Real(1)}, {Real(1)}}, 25, tol);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kDivergent);
    }
  }

  TEST_CASE("term ratio is exact for rational parameters") {
    std::mt19937 gen(3);
    auto q = [&] {
      Rational x(std::uniform_int_distribution<int>(1, 40)(gen), std::uniform_int_distribution<int>(1, 7)(gen));
      x.canonicalize();
      return x;
    };
    for (int t = 0; t < 10; ++t) {
      const int m = std::uniform_int_distribution<int>(1, 3)(gen);
      std::vector<Rational> b, c;
      for (int i = 0; i <= m; ++i) b.push_back(q());
      for (int i = 0; i < m; ++i) c.push_back(q());
      const auto T = pfq_terms_exact(b, c, 50);
      REQUIRE(T.size() == 51);
      CHECK(T[0] == 1);
      for (int n = 0; n < 50; ++n) {
        Rational ratio = Rational(1) / (n + 1);
        for (const auto& x : b) ratio *= x + n;
        for (const auto& x : c) ratio /= x + n;
        CHECK(T[static_cast<std::size_t>(n + 1)] == T[static_cast<std::size_t>(n)] * ratio);
      }
    }
    CHECK_THROWS_AS(pfq_terms_exact({Rational(1), Rational(1)}, {Rational(-3)}, 5), Error);
  }

  TEST_CASE("3F2 maximal-height summation formula against Gamma values") {
    WorkingPrecision wp(45);
    const Identity id = hypergeom_3f2_spot(Real("0.3"), Real("0.4"), Real("1.7"), 30, ten_to_minus(25));
    CHECK(abs(id.lhs.value - id.rhs.value) < Real("1e-15"));
  }

  TEST_CASE("height-one representation matches interpolated values") {
    WorkingPrecision wp(45);
    const Real tol = ten_to_minus(22);
    for (int r : {0, 1}) {
      const SeriesValue s = height_one_rhs(Level(3, 2), 2, Rational(r), 3, 30, tol);
      for (int n = 1; n <= 4; ++n) {
        std::vector<int> parts{2};
        parts.resize(static_cast<std::size_t>(n), 1);
        const BigReal lhs = t_interp_eval(Level(3, 2), Index(parts), Rational(r), 30, tol);
        CAPTURE(n);
        CHECK(abs(lhs.value - s.value[n - 1]) < ten_to_minus(20));
      }
    }
    CHECK_THROWS_AS(height_one_rhs(Level(2, 1), 1, Rational(0), 3, 30, tol), Error);
  }
}

TEST_SUITE("corollaries") {
  TEST_CASE("weighted right side at small weights") {
    WorkingPrecision wp(45);
    const Real pi = oracle::mpfr_pi(), log2 = oracle::mpfr_log2();
    const Real t2 = pi * pi / 8;
    CHECK(abs(weighted_rhs(2, 1, 30).value - t2) < ten_to_minus(25));
    const BigReal k3 = weighted_rhs(3, 1, 30);
    CHECK(abs(k3.value - 2 * t2 * log2) < ten_to_minus(25));
    CHECK(k3.value_string(12) == "1.71027211596");
    CHECK(abs(weighted_rhs(4, 1, 30).value - (Real(2) / 3 * t2 * t2 + 2 * t2 * log2 * log2)) < ten_to_minus(25));
    CHECK(abs(weighted_rhs(4, 2, 30).value - (Real(2) / 3 * t2 * t2 + 2 * t2 * log2 * log2) / 16) < ten_to_minus(25));
    CHECK_THROWS_AS(weighted_rhs(1, 1, 30), Error);
  }

  TEST_CASE("maximal-height series coefficients") {
    WorkingPrecision wp(45);
    const Real t2 = t_depth1(Level(2, 1), 2, 30).value;
    for (const Rational& r : {Rational(0), Rational(1, 2), Rational(1)}) {
      const MaxHeightRhs s = maxheight_rhs(Level(2, 1), r, 4, 4, 30);
      CHECK(s.series.at(0, 0, 0) == 1);
      CHECK(abs(s.series.at(0, 0, 2) - t2) < ten_to_minus(25));
      CHECK(abs(s.series.at(1, 0, 0)) < ten_to_minus(25));
    }
  }

  TEST_CASE("{2}^n series") {
    WorkingPrecision wp(45);
    const Real t2 = t_depth1(Level(1, 1), 2, 30).value, t4 = t_depth1(Level(1, 1), 4, 30).value;
    const auto s = twos_rhs(Level(1, 1), Rational(0), 2, 30);
    CHECK(abs(s[0].value - t2) < ten_to_minus(25));
    // exp(t2 W - t4/2 W^2 + ...): W^2 coefficient t2^2/2 - t4/2 = zeta(2,2)
    CHECK(abs(s[1].value - (t2 * t2 - t4) / 2) < ten_to_minus(25));
  }
}
