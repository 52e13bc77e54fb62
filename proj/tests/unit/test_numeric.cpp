#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "core/error.hpp"
#include "core/index.hpp"
#include "core/tvalues.hpp"
#include "core/value_cache.hpp"

using namespace mtv;
using boost::multiprecision::abs;

namespace {

bool close(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

// Literal truncated nested sums in long double with running prefix sums;
// prefix[i] sums layers i..end over the progression elements seen so far.
long double literal_ld(const std::vector<int>& k, int N, int a, long terms, bool weak) {
  const std::size_t n = k.size();
  std::vector<long double> prefix(n + 1, 0.0L);
  prefix[n] = 1.0L;
  auto layer = [&](std::size_t i, long double m) { prefix[i] += std::pow(m, -static_cast<long double>(k[i])) * prefix[i + 1]; };
  for (long j = 0; j < terms; ++j) {
    const long double m = a + static_cast<long double>(N) * j;
    // strict: outer layers first, so they see inner sums over smaller m only
    if (weak) {
      for (std::size_t i = n; i-- > 0;) layer(i, m);
    } else {
      for (std::size_t i = 0; i < n; ++i) layer(i, m);
    }
  }
  return prefix[0];
}

}  // namespace

TEST_SUITE("numeric") {
  TEST_CASE("pi and log 2") {
    WorkingPrecision wp(40);
    const Constants c = const_pi_log2(20);
    CHECK(c.pi.value_string(21) == "3.14159265358979323846");
    CHECK(c.log2.value_string(20) == "0.69314718055994530942");
    CHECK(c.pi.err < ten_to_minus(20));
    CHECK(close(c.pi.value, oracle::mpfr_pi(), ten_to_minus(20)));
    CHECK(close(c.log2.value, oracle::mpfr_log2(), ten_to_minus(20)));
    CHECK_THROWS_AS(const_pi_log2(5), Error);
  }

  TEST_CASE("depth-one values") {
    WorkingPrecision wp(45);
    const Real pi = oracle::mpfr_pi();
    const BigReal z2 = t_depth1(Level(1, 1), 2, 30);
    CHECK(close(z2.value, pi * pi / 6, ten_to_minus(28)));
    CHECK(z2.value_string(21) == "1.64493406684822643647");
    const BigReal t2 = t_depth1(Level(2, 1), 2, 30);
    CHECK(close(t2.value, pi * pi / 8, ten_to_minus(28)));
    CHECK(t2.value_string(20) == "1.2337005501361698274");
    const BigReal t3 = t_depth1(Level(2, 1), 3, 30);
    CHECK(close(t3.value, Real(7) / 8 * oracle::progression_zeta(3, 1, 1), ten_to_minus(28)));
    CHECK(t3.value_string(21) == "1.05179979026464499972");
    for (int k = 2; k <= 6; ++k)
      for (const Level L : {Level(1, 1), Level(2, 1), Level(3, 2), Level(5, 3)}) {
        CAPTURE(k);
        CHECK(close(t_depth1(L, k, 30).value, oracle::progression_zeta(k, L.N, L.a), ten_to_minus(28)));
      }
    CHECK_THROWS_AS(t_depth1(Level(1, 1), 1, 30), Error);
  }

  TEST_CASE("nested values") {
    WorkingPrecision wp(45);
    const Real tol = ten_to_minus(25);
    const Constants c = const_pi_log2(30);
    const BigReal t21 = t_nested(Level(2, 1), Index({2, 1}), 30, tol);
    const BigReal t2 = t_depth1(Level(2, 1), 2, 30), t3 = t_depth1(Level(2, 1), 3, 30);
    CHECK(close(t21.value, t2.value * c.log2.value - t3.value / 2, ten_to_minus(25)));
    CHECK(t21.value_string(30) == "0.329236162849817068243549448583");
    CHECK(t21.err < tol);
    const BigReal z21 = t_nested(Level(1, 1), Index({2, 1}), 30, tol);
    CHECK(close(z21.value, oracle::progression_zeta(3, 1, 1), ten_to_minus(25)));
    const BigReal t33 = t_nested(Level(3, 3), Index({2, 1}), 30, tol);
    CHECK(close(t33.value, z21.value / 27, ten_to_minus(25)));
    CHECK_THROWS_AS(t_nested(Level(2, 1), Index({1, 2}), 30, tol), Error);
    CHECK_THROWS_AS(t_nested(Level(2, 1), Index({2, 1}), 20, ten_to_minus(50)), Error);
  }

  TEST_CASE("nested values against literal long double sums") {
    WorkingPrecision wp(40);
    const Real tol = ten_to_minus(20);
    for (const Level L : {Level(1, 1), Level(2, 1), Level(3, 2)})
      for (const std::vector<int>& k : {std::vector<int>{4, 3}, {5, 2, 2}, {4, 4, 3}}) {
        const long terms = 200000;
        CAPTURE(L.N);
        const long double strict = literal_ld(k, L.N, L.a, terms, false);
        const long double weak = literal_ld(k, L.N, L.a, terms, true);
        CHECK(std::fabs(static_cast<double>(t_nested(L, Index(k), 25, tol).value) - static_cast<double>(strict)) < 1e-12);
        CHECK(std::fabs(static_cast<double>(t_star_nested(L, Index(k), 25, tol).value) - static_cast<double>(weak)) <
              1e-12);
      }
  }

  TEST_CASE("interpolated values") {
    WorkingPrecision wp(45);
    const Real tol = ten_to_minus(25);
    const Level L(2, 1);
    const BigReal t21 = t_nested(L, Index({2, 1}), 30, tol);
    const BigReal t3 = t_depth1(L, 3, 30);
    CHECK(t_interp_eval(L, Index({2, 1}), Rational(0), 30, tol).value == t21.value);
    const BigReal star = t_interp_eval(L, Index({2, 1}), Rational(1), 30, tol);
    CHECK(close(star.value, t21.value + t3.value, ten_to_minus(25)));
    CHECK(close(star.value, t_star_nested(L, Index({2, 1}), 30, tol).value, ten_to_minus(25)));
    CHECK(close(t_interp_eval(L, Index({2, 1}), Rational(1, 2), 30, tol).value, t21.value + t3.value / 2,
                ten_to_minus(25)));
    for (const std::vector<int>& k : {std::vector<int>{3, 1, 2}, {2, 1, 1, 1}}) {
      const BigReal a = t_interp_eval(L, Index(k), Rational(1), 30, tol);
      const BigReal b = t_star_nested(L, Index(k), 30, tol);
      CHECK(close(a.value, b.value, a.err + b.err));
    }
  }

  TEST_CASE("reported error bounds cover a refined recomputation") {
    const Real tol = ten_to_minus(20);
    NestedOptions doubled;
    doubled.terms = 2 * 8 * (35 + kGuardDigits);
    for (const std::vector<int>& k : {std::vector<int>{2, 1, 1}, {3, 2, 1}, {2, 2, 2}}) {
      const BigReal a = t_nested(Level(3, 1), Index(k), 25, tol);
      const BigReal b = t_nested(Level(3, 1), Index(k), 35, ten_to_minus(30), doubled);
      WorkingPrecision wp(45);
      CHECK(abs(a.value - b.value) <= a.err);
    }
  }

  TEST_CASE("BigReal error propagation") {
    WorkingPrecision wp(30);
    const BigReal a{Real(2), Real("1e-10")}, b{Real(3), Real("1e-12")};
    CHECK((a + b).err == Real("1e-10") + Real("1e-12"));
    CHECK((a - b).err == Real("1e-10") + Real("1e-12"));
    CHECK((a * b).err >= Real("3e-10"));
    CHECK(a.scaled(Rational(-2)).err == Real("2e-10"));
  }

  TEST_CASE("tolerance guard") {
    CHECK_NOTHROW(check_tolerance(30, ten_to_minus(29)));
    CHECK_THROWS_AS(check_tolerance(20, ten_to_minus(50)), Error);
    try {
      check_tolerance(20, ten_to_minus(50));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kToleranceUnreachable);
      CHECK(std::string(e.what()) == "tolerance below achievable error bound");
    }
  }

  TEST_CASE("engine memoises and fills the cache") {
    const auto dir = std::filesystem::temp_directory_path() / "mtv_engine_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ValueCache cache(dir / "values.cache");
    const Real tol = ten_to_minus(20);
    BigReal first;
    {
      TValueEngine engine(25, tol, &cache);
      first = engine.t(Level(2, 1), Index({2, 1, 1}));
    }
    CHECK(cache.size() >= 1);
    ValueCache reloaded(dir / "values.cache");
    TValueEngine engine(25, tol, &reloaded);
    const BigReal again = engine.t(Level(2, 1), Index({2, 1, 1}));
    WorkingPrecision wp(35);
    CHECK(abs(first.value - again.value) <= first.err);
    std::filesystem::remove_all(dir);
  }
}
