#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhg/bigint.hpp"
#include "mhg/class_spec.hpp"
#include "mhg/metric_space.hpp"

namespace mhg {

std::uint64_t fnv1a64(std::string_view data);

/// MHG_CACHE_DIR if set and non-empty, else ./.mhg-cache.
std::filesystem::path default_cache_dir();

struct CacheEntry {
  std::string kind;  // e.g. "oracle-labeled", "classes"
  ClassId cls = ClassId::A1;
  std::size_t n = 0;
  BigInt count;
  std::vector<MetricSpace> spaces;
};

/// One file per (kind, class, n):
///   MHGCACHE v1
///   kind=<kind> class=<a1|a2> n=<n> count=<count> checksum=<fnv1a64 hex>
///   <spaces in the text format>
/// The checksum covers everything after the checksum line. Entries that
/// fail any check load as nullopt so the caller recomputes them.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path file_for(std::string_view kind, ClassId cls, std::size_t n) const;
  std::optional<CacheEntry> load(std::string_view kind, ClassId cls, std::size_t n) const;
  /// Writes atomically (temp file then rename). Throws std::runtime_error
  /// on I/O failure.
  void store(const CacheEntry& e) const;

 private:
  std::filesystem::path dir_;
};

std::string serialize_cache_entry(const CacheEntry& e);
std::optional<CacheEntry> parse_cache_entry(std::string_view text);

}  // namespace mhg
