#include "mhg/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mhg {

namespace {

constexpr std::string_view kMagic = "MHGCACHE v1";

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string payload(const CacheEntry& e) {
  std::ostringstream o;
  for (const auto& s : e.spaces) write_text(o, s);
  return o.str();
}

std::string meta(const CacheEntry& e) {
  return "kind=" + e.kind + " class=" + std::string(class_name(e.cls)) + " n=" + std::to_string(e.n) +
         " count=" + to_decimal(e.count);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::filesystem::path default_cache_dir() {
  const char* env = std::getenv("MHG_CACHE_DIR");
  if (env && *env) return env;
  return ".mhg-cache";
}

std::string serialize_cache_entry(const CacheEntry& e) {
  const std::string m = meta(e), body = payload(e);
  return std::string(kMagic) + "\n" + m + " checksum=" + hex64(fnv1a64(m + "\n" + body)) + "\n" + body;
}

std::optional<CacheEntry> parse_cache_entry(std::string_view text) {
  const auto nl1 = text.find('\n');
  if (nl1 == std::string_view::npos || text.substr(0, nl1) != kMagic) return std::nullopt;
  const auto nl2 = text.find('\n', nl1 + 1);
  if (nl2 == std::string_view::npos) return std::nullopt;
  const std::string_view line = text.substr(nl1 + 1, nl2 - nl1 - 1);
  const auto cs = line.rfind(" checksum=");
  if (cs == std::string_view::npos) return std::nullopt;
  const std::string m(line.substr(0, cs));
  const std::string_view body = text.substr(nl2 + 1);
  if (line.substr(cs + 10) != hex64(fnv1a64(m + "\n" + std::string(body)))) return std::nullopt;

  CacheEntry e;
  std::istringstream fields(m);
  std::string kv;
  int seen = 0;
  try {
    while (fields >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) return std::nullopt;
      const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      if (key == "kind") {
        e.kind = value;
      } else if (key == "class") {
        const auto c = parse_class(value);
        if (!c) return std::nullopt;
        e.cls = *c;
      } else if (key == "n") {
        e.n = std::stoul(value);
      } else if (key == "count") {
        e.count = BigInt(value);
      } else {
        return std::nullopt;
      }
      ++seen;
    }
    if (seen != 4) return std::nullopt;
    std::istringstream in{std::string(body)};
    e.spaces = read_all_text(in);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  for (const auto& s : e.spaces)
    if (s.size() != e.n) return std::nullopt;
  return e;
}

std::filesystem::path Cache::file_for(std::string_view kind, ClassId cls, std::size_t n) const {
  return dir_ / (std::string(kind) + "-" + std::string(class_name(cls)) + "-n" + std::to_string(n) + ".mhgc");
}

std::optional<CacheEntry> Cache::load(std::string_view kind, ClassId cls, std::size_t n) const {
  std::ifstream in(file_for(kind, cls, n), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  auto e = parse_cache_entry(buf.str());
  if (!e || e->kind != kind || e->cls != cls || e->n != n) return std::nullopt;
  return e;
}

void Cache::store(const CacheEntry& e) const {
  std::filesystem::create_directories(dir_);
  const auto target = file_for(e.kind, e.cls, e.n);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << serialize_cache_entry(e);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace mhg
