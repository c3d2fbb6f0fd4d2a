#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace myc {

/// Tiny file-per-entry result cache keyed by opaque strings (callers build
/// keys from graph digests plus an operation tag). Values are short
/// serialized strings, e.g. rendered homology profiles.
///
/// Entries are JSON files stamped with a version tag; entries written by a
/// different version are treated as misses. Writes go to a temporary file in
/// the same directory followed by an atomic rename, so concurrent readers
/// never observe a partial entry. A hit returns the stored value unchanged,
/// byte for byte.
class ResultCache {
 public:
  /// Disabled cache: get() always misses, put() is a no-op.
  ResultCache() = default;

  /// Cache rooted at `dir` (created on first write if missing). An empty
  /// string yields a disabled cache.
  explicit ResultCache(std::string dir);

  /// Reads MYC_CACHE_DIR; unset or empty means caching is off.
  static ResultCache from_env();

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  /// Returns the stored value for `key`, or nullopt on miss (absent entry,
  /// unreadable file, version mismatch, or key mismatch).
  std::optional<std::string> get(const std::string& key) const;

  /// Stores `value` under `key`. Errors (unwritable directory, full disk)
  /// are swallowed: the cache is an accelerator, never a correctness
  /// dependency.
  void put(const std::string& key, const std::string& value) const;

  long long hits() const { return hits_; }
  long long misses() const { return misses_; }
  long long writes() const { return writes_; }

 private:
  std::string entry_path(const std::string& key) const;

  std::string dir_;
  mutable long long hits_ = 0;
  mutable long long misses_ = 0;
  mutable long long writes_ = 0;
};

/// Version tag stored in every entry; bump when the serialized value format
/// or the keying scheme changes so stale entries invalidate themselves.
extern const char* const kCacheVersion;

/// 64-bit FNV-1a digest, used to derive file names from keys.
std::uint64_t fnv1a64(const std::string& s);

}  // namespace myc
