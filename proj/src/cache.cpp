#include "myc/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace myc {

const char* const kCacheVersion = "myc-0.1.0/1";

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

ResultCache ResultCache::from_env() {
  const char* d = std::getenv("MYC_CACHE_DIR");
  return ResultCache(d ? std::string(d) : std::string());
}

std::string ResultCache::entry_path(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << fnv1a64(key);
  return (fs::path(dir_) / (name.str() + ".json")).string();
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exc=*/false);
  if (j.is_discarded() || !j.is_object() || j.value("version", "") != kCacheVersion ||
      j.value("key", "") != key || !j.contains("value") || !j["value"].is_string()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return j["value"].get<std::string>();
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;

  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["key"] = key;
  j["value"] = value;
  j["written_unix"] = static_cast<long long>(std::time(nullptr));

  static std::atomic<unsigned> counter{0};
  std::ostringstream tmp_name;
  tmp_name << ".tmp-" << ::getpid() << "-" << counter.fetch_add(1);
  fs::path tmp = fs::path(dir_) / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << j.dump(2) << '\n';
    if (!out.flush()) {
      out.close();
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, entry_path(key), ec);
  if (ec) {
    fs::remove(tmp, ec);
    return;
  }
  ++writes_;
}

}  // namespace myc
