#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace mtv {

/// Cache record key "N:a:index:P:tol".
struct CacheKey {
  int N = 1;
  int a = 1;
  std::string index;
  int precision = 0;
  std::string tol;

  std::string to_string() const;
  auto operator<=>(const CacheKey&) const = default;
};

struct CachedValue {
  std::string value;
  std::string err;
};

/// Append-only text cache, one record per line: "N:a:index:P:tol value err".
/// Corrupt lines are skipped with a warning on stderr; later records win.
class ValueCache {
 public:
  explicit ValueCache(std::filesystem::path file);

  const std::filesystem::path& path() const { return path_; }
  std::optional<CachedValue> lookup(const CacheKey& key) const;
  void store(const CacheKey& key, const CachedValue& value);
  std::size_t size() const;
  std::size_t skipped_lines() const { return skipped_; }
  std::map<CacheKey, CachedValue> entries() const;
  /// Truncates the file and forgets every record.
  void clear();

  /// Cache file named by $MTV_CACHE_DIR (values.cache inside it), if set.
  static std::optional<std::filesystem::path> default_path();

 private:
  void load();

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<CacheKey, CachedValue> records_;
  std::size_t skipped_ = 0;
};

}  // namespace mtv
