#include "core/value_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "core/error.hpp"

namespace mtv {
namespace {

std::optional<CacheKey> parse_key(const std::string& text) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  std::string f;
  while (std::getline(ss, f, ':')) fields.push_back(f);
  if (fields.size() != 5) return std::nullopt;
  try {
    std::size_t used = 0;
    CacheKey key;
    key.N = std::stoi(fields[0], &used);
    if (used != fields[0].size()) return std::nullopt;
    key.a = std::stoi(fields[1], &used);
    if (used != fields[1].size()) return std::nullopt;
    key.index = fields[2];
    key.precision = std::stoi(fields[3], &used);
    if (used != fields[3].size()) return std::nullopt;
    key.tol = fields[4];
    if (key.index.empty() || key.tol.empty()) return std::nullopt;
    return key;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  return s.find_first_not_of("0123456789+-.eE") == std::string::npos;
}

}  // namespace

std::string CacheKey::to_string() const {
  return std::to_string(N) + ":" + std::to_string(a) + ":" + index + ":" + std::to_string(precision) + ":" + tol;
}

ValueCache::ValueCache(std::filesystem::path file) : path_(std::move(file)) { load(); }

void ValueCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key_text, value, err, extra;
    ls >> key_text >> value >> err;
    auto key = parse_key(key_text);
    if (!key || !looks_numeric(value) || !looks_numeric(err) || (ls >> extra)) {
      ++skipped_;
      std::cerr << "warning: " << path_.string() << ":" << lineno << ": skipping corrupt cache record\n";
      continue;
    }
    records_[*key] = {value, err};
  }
}

std::optional<CachedValue> ValueCache::lookup(const CacheKey& key) const {
  std::lock_guard<std::mutex> guard(mutex_);
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void ValueCache::store(const CacheKey& key, const CachedValue& value) {
  std::lock_guard<std::mutex> guard(mutex_);
  records_[key] = value;
  if (path_.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) fail(ErrorKind::kIo, "cannot append to cache file " + path_.string());
  // One write per record keeps lines whole.
  out << (key.to_string() + " " + value.value + " " + value.err + "\n") << std::flush;
}

std::size_t ValueCache::size() const {
  std::lock_guard<std::mutex> guard(mutex_);
  return records_.size();
}

std::map<CacheKey, CachedValue> ValueCache::entries() const {
  std::lock_guard<std::mutex> guard(mutex_);
  return records_;
}

void ValueCache::clear() {
  std::lock_guard<std::mutex> guard(mutex_);
  records_.clear();
  skipped_ = 0;
  std::ofstream out(path_, std::ios::trunc);
  if (!out && std::filesystem::exists(path_)) fail(ErrorKind::kIo, "cannot truncate cache file " + path_.string());
}

std::optional<std::filesystem::path> ValueCache::default_path() {
  const char* dir = std::getenv("MTV_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / "values.cache";
}

}  // namespace mtv
