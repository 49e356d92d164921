#ifndef JFUN_CACHE_HPP
#define JFUN_CACHE_HPP

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

#include "jfun/jrecursion.hpp"

namespace jfun {

// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "JFUN_CACHE_DIR";

// One file per (datum, engine version):
//   line 1   {"datum":{...},"engine":"1.0.0","format":"jfun-jtable"}
//   line k   {"alpha":[...],"sha256":"...","value":<canonical serialization>}
//   last     {"count":N,"end":true}
// The sha256 is taken over the canonical serialization of the value.
std::filesystem::path cache_file(const std::filesystem::path& dir, const CartanDatum& d);

// Flag beats environment; nullopt when neither is set.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

enum class CacheStatus { Missing, VersionMismatch, Loaded };

// Loads every cached entry into `table`. A file written by another engine
// version is ignored. Throws CacheCorruptError naming the offending entry
// for truncated, malformed or tampered files.
CacheStatus load_cache(const std::filesystem::path& dir, JTable& table);

// Writes all entries of the table (atomically, via rename).
void save_cache(const std::filesystem::path& dir, const JTable& table);

nlohmann::json datum_json(const CartanDatum& d);

}  // namespace jfun

#endif  // JFUN_CACHE_HPP
