#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"

#include "core/error.hpp"
#include "core/index.hpp"

using namespace mtv;

namespace {

// Every composition of k into n positive parts, filtered afterwards.
std::vector<std::vector<int>> compositions(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int parts) {
    if (parts == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, parts - 1);
      cur.pop_back();
    }
  };
  rec(k, n);
  return out;
}

std::vector<std::vector<int>> brute_set(int k, int n, int s, bool admissible_only) {
  std::vector<std::vector<int>> out;
  for (auto& c : compositions(k, n)) {
    const int h = static_cast<int>(std::count_if(c.begin(), c.end(), [](int x) { return x >= 2; }));
    if (h != s) continue;
    if (admissible_only && (c.empty() || c[0] < 2)) continue;
    out.push_back(c);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::vector<int>> as_vectors(const std::vector<Index>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& i : v) out.emplace_back(i.parts().begin(), i.parts().end());
  return out;
}

}  // namespace

TEST_SUITE("index") {
  TEST_CASE("statistics") {
    auto s = index_stats(std::vector<int>{3, 1});
    CHECK(s.weight == 4);
    CHECK(s.depth == 2);
    CHECK(s.height == 1);
    CHECK(s.admissible);
    s = index_stats(std::vector<int>{2, 2});
    CHECK(s.height == 2);
    CHECK(s.admissible);
    s = index_stats(std::vector<int>{1, 2});
    CHECK(s.weight == 3);
    CHECK(s.depth == 2);
    CHECK(s.height == 1);
    CHECK_FALSE(s.admissible);
    s = index_stats(std::vector<int>{});
    CHECK(s.weight == 0);
    CHECK(s.depth == 0);
    CHECK(s.height == 0);
    CHECK(s.admissible);
    CHECK_THROWS_AS(index_stats(std::vector<int>{2, 0}), Error);
    CHECK_THROWS_AS(Index(std::vector<int>{-1}), Error);
  }

  TEST_CASE("text format") {
    CHECK(Index::parse("3,1,1").to_string() == "3,1,1");
    CHECK(Index::parse("{2}^4").to_string() == "2,2,2,2");
    CHECK(Index::parse("3, {1}^2").to_string() == "3,1,1");
    CHECK(Index::parse("").empty());
    CHECK(Index::parse("()").empty());
    for (const char* bad : {"3,,1", "a", "{2}^", "{2}^x", "2,-1", "0", "{0}^2", "3,1,"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(Index::parse(bad), Error);
    }
  }

  TEST_CASE("enumeration examples") {
    CHECK(as_vectors(enumerate_indices(4, 2, 1, true)) == std::vector<std::vector<int>>{{3, 1}});
    CHECK(as_vectors(enumerate_indices(4, 2, 2, true)) == std::vector<std::vector<int>>{{2, 2}});
    CHECK(enumerate_indices(3, 3, 1, true).empty());
    CHECK(enumerate_indices(0, 0, 0, true).empty());
    CHECK(enumerate_indices(0, 0, 0, false).size() == 1);
  }

  TEST_CASE("enumeration matches filtered compositions, in descending order") {
    for (int k = 0; k <= 9; ++k)
      for (int n = 0; n <= k; ++n)
        for (int s = 0; s <= n; ++s)
          for (bool adm : {true, false}) {
            if (n == 0 && k > 0) continue;
            CAPTURE(k);
            CAPTURE(n);
            CAPTURE(s);
            CAPTURE(adm);
            auto expect = brute_set(k, n, s, adm);
            if (adm && k == 0) expect.clear();
            CHECK(as_vectors(enumerate_indices(k, n, s, adm)) == expect);
          }
  }

  TEST_CASE("admissible sets are nonempty exactly when k >= n+s and n >= s >= 1") {
    for (int k = 0; k <= 12; ++k)
      for (int n = 0; n <= 12; ++n)
        for (int s = 0; s <= 12; ++s) {
          const bool expected = k >= n + s && n >= s && s >= 1;
          CAPTURE(k);
          CAPTURE(n);
          CAPTURE(s);
          CHECK(admissible_set_nonempty(k, n, s) == expected);
          if (k <= 10) CHECK(!enumerate_indices(k, n, s, true).empty() == expected);
        }
  }

  TEST_CASE("interpolation expansion examples") {
    auto e = interpolation_expansion(Index({2, 1}));
    REQUIRE(e.size() == 2);
    CHECK(e[0] == ExpansionTerm{Index({2, 1}), 0});
    CHECK(e[1] == ExpansionTerm{Index({3}), 1});
    e = interpolation_expansion(Index({2, 1, 1}));
    const std::vector<ExpansionTerm> expect{
        {Index({2, 1, 1}), 0}, {Index({2, 2}), 1}, {Index({3, 1}), 1}, {Index({4}), 2}};
    CHECK(e == expect);
    e = interpolation_expansion(Index({5}));
    CHECK(e == std::vector<ExpansionTerm>{{Index({5}), 0}});
    CHECK_THROWS_AS(interpolation_expansion(Index()), Error);
  }

  TEST_CASE("interpolation expansion invariants") {
    auto binom = [](int n, int k) {
      long r = 1;
      for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
      return r;
    };
    for (int k = 1; k <= 9; ++k)
      for (int n = 1; n <= k; ++n)
        for (int s = 0; s <= n; ++s)
          for (const Index& idx : enumerate_indices(k, n, s, false)) {
            CAPTURE(idx.to_string());
            const auto terms = interpolation_expansion(idx);
            CHECK(terms.size() == (std::size_t{1} << (n - 1)));
            std::vector<long> by_depth(static_cast<std::size_t>(n) + 1, 0);
            std::set<std::vector<int>> seen;
            int zero_exp = 0, depth_one = 0;
            for (const auto& t : terms) {
              CHECK(t.index.weight() == k);
              CHECK(t.r_exponent == n - t.index.depth());
              by_depth[static_cast<std::size_t>(t.index.depth())]++;
              if (t.r_exponent == 0) {
                ++zero_exp;
                CHECK(t.index == idx);
              }
              if (t.index.depth() == 1) {
                ++depth_one;
                CHECK(t.r_exponent == n - 1);
              }
              if (idx.admissible()) CHECK(t.index.admissible());
              seen.insert(std::vector<int>(t.index.parts().begin(), t.index.parts().end()));
            }
            CHECK(seen.size() == terms.size());
            CHECK(zero_exp == 1);
            CHECK(depth_one == 1);
            for (int d = 1; d <= n; ++d) CHECK(by_depth[static_cast<std::size_t>(d)] == binom(n - 1, n - d));
          }
  }
}
