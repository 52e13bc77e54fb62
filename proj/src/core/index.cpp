#include "core/index.hpp"

#include <charconv>
#include <numeric>

#include "core/error.hpp"

namespace mtv {
namespace {

int parse_positive(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    fail(ErrorKind::kParse, "malformed index \"" + std::string(whole) + "\": bad part \"" + std::string(token) + "\"");
  }
  if (value < 1) {
    fail(ErrorKind::kInvalidArgument,
         "index parts must be positive integers, got " + std::to_string(value));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void enumerate_rec(int weight_left, int parts_left, int height_left, bool first, bool admissible_only,
                   std::vector<int>& prefix, std::vector<Index>& out) {
  if (parts_left == 0) {
    if (weight_left == 0 && height_left == 0) out.emplace_back(prefix);
    return;
  }
  // Remaining parts after this one must still be able to absorb what is left.
  for (int part = weight_left; part >= 1; --part) {
    if (first && admissible_only && part < 2) break;
    const int h = part >= 2 ? 1 : 0;
    if (h > height_left) continue;
    const int w_rest = weight_left - part;
    const int n_rest = parts_left - 1;
    const int s_rest = height_left - h;
    if (s_rest > n_rest || w_rest < n_rest + s_rest) continue;
    if (s_rest == 0 && w_rest != n_rest) continue;
    prefix.push_back(part);
    enumerate_rec(w_rest, n_rest, s_rest, false, admissible_only, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      fail(ErrorKind::kInvalidArgument, "index parts must be positive integers, got " + std::to_string(p));
    }
  }
}

Index Index::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = trim(body.substr(1, body.size() - 2));
  std::vector<int> parts;
  if (body.empty()) return Index{};
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    std::string_view token = trim(body.substr(pos, comma - pos));
    if (token.empty()) fail(ErrorKind::kParse, "malformed index \"" + std::string(text) + "\": empty part");
    if (token.front() == '{') {
      const auto close = token.find('}');
      if (close == std::string_view::npos || close + 1 >= token.size() || token[close + 1] != '^') {
        fail(ErrorKind::kParse, "malformed repetition \"" + std::string(token) + "\", expected {k}^n");
      }
      const int part = parse_positive(trim(token.substr(1, close - 1)), text);
      const int times = parse_positive(trim(token.substr(close + 2)), text);
      parts.insert(parts.end(), static_cast<std::size_t>(times), part);
    } else {
      parts.push_back(parse_positive(token, text));
    }
    pos = comma + 1;
  }
  return Index(std::move(parts));
}

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Index::height() const {
  int h = 0;
  for (int p : parts_) h += p >= 2 ? 1 : 0;
  return h;
}

std::string Index::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

IndexStats index_stats(std::span<const int> parts) {
  Index k(std::vector<int>(parts.begin(), parts.end()));
  return {k.weight(), k.depth(), k.height(), k.admissible()};
}

bool admissible_set_nonempty(int k, int n, int s) { return k >= n + s && n >= s && s >= 1; }

std::vector<Index> enumerate_indices(int k, int n, int s, bool admissible_only) {
  if (k < 0 || n < 0 || s < 0) {
    fail(ErrorKind::kInvalidArgument, "enumerate_indices: k, n, s must be nonnegative");
  }
  std::vector<Index> out;
  if (admissible_only) {
    if (!admissible_set_nonempty(k, n, s)) return out;
  } else {
    if (k < n + s || s > n) return out;
    if (s == 0 && k != n) return out;
  }
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  enumerate_rec(k, n, s, true, admissible_only, prefix, out);
  return out;
}

std::vector<ExpansionTerm> interpolation_expansion(const Index& k) {
  if (k.empty()) fail(ErrorKind::kInvalidArgument, "interpolation_expansion: empty index");
  const int n = k.depth();
  const unsigned placeholders = static_cast<unsigned>(n - 1);
  std::vector<ExpansionTerm> out;
  out.reserve(std::size_t{1} << placeholders);
  for (unsigned pattern = 0; pattern < (1u << placeholders); ++pattern) {
    std::vector<int> parts{k[0]};
    for (unsigned i = 0; i < placeholders; ++i) {
      const bool plus = (pattern >> (placeholders - 1 - i)) & 1u;
      if (plus) {
        parts.back() += k[i + 1];
      } else {
        parts.push_back(k[i + 1]);
      }
    }
    const int dep = static_cast<int>(parts.size());
    out.push_back({Index(std::move(parts)), n - dep});
  }
  return out;
}

}  // namespace mtv
