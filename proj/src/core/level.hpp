#pragma once

#include <string>

#include "core/error.hpp"

namespace mtv {

/// Level N and residue class a, 1 <= a <= N.
struct Level {
  int N = 1;
  int a = 1;

  Level() = default;
  Level(int level, int residue) : N(level), a(residue) {
    if (level < 1) fail(ErrorKind::kInvalidArgument, "level must be a positive integer");
    if (residue < 1 || residue > level) {
      fail(ErrorKind::kInvalidArgument, "residue must satisfy 1 <= a <= N (got a=" + std::to_string(residue) +
                                            ", N=" + std::to_string(level) + ")");
    }
  }

  bool contains(int m) const { return m > 0 && (m - a) % N == 0; }
  std::string to_string() const { return "(" + std::to_string(N) + "," + std::to_string(a) + ")"; }
  bool operator==(const Level&) const = default;
};

}  // namespace mtv
