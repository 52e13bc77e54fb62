#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mtv {

/// A composition k = (k_1, ..., k_n) of positive integers. The empty index is
/// allowed and counts as admissible.
class Index {
 public:
  Index() = default;
  explicit Index(std::vector<int> parts);

  /// Accepts "3,1,1", "{2}^4" and mixtures such as "3,{1}^2". An empty string
  /// (or "()") yields the empty index.
  static Index parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  int weight() const;
  int depth() const { return static_cast<int>(parts_.size()); }
  int height() const;
  bool admissible() const { return parts_.empty() || parts_.front() > 1; }

  /// Plain comma-separated form; repetition shorthand is expanded.
  std::string to_string() const;

  auto operator<=>(const Index&) const = default;
  bool operator==(const Index&) const = default;

 private:
  std::vector<int> parts_;
};

struct IndexStats {
  int weight = 0;
  int depth = 0;
  int height = 0;
  bool admissible = true;
};

IndexStats index_stats(std::span<const int> parts);

/// I(k,n,s), or I_0(k,n,s) when `admissible_only`. Lexicographically
/// descending. I(0,0,0) = {()} while I_0(0,0,0) is empty.
std::vector<Index> enumerate_indices(int k, int n, int s, bool admissible_only);

/// True when I_0(k,n,s) is nonempty.
bool admissible_set_nonempty(int k, int n, int s);

struct ExpansionTerm {
  Index index;
  int r_exponent = 0;

  bool operator==(const ExpansionTerm&) const = default;
};

/// All 2^(n-1) indices from (k_1 □ k_2 □ ... □ k_n) with each □ a comma or a
/// plus. Terms are ordered by the pattern read as a binary number whose most
/// significant bit is the first placeholder (1 = plus).
std::vector<ExpansionTerm> interpolation_expansion(const Index& k);

}  // namespace mtv
