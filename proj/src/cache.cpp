#include "jfun/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "jfun/errors.hpp"
#include "jfun/serialize.hpp"

namespace jfun {

namespace fs = std::filesystem;

nlohmann::json datum_json(const CartanDatum& d) {
  return {{"label", d.label()},
          {"rank", d.rank()},
          {"matrix", d.matrix()},
          {"symmetrizers", d.symmetrizers()},
          {"affine", d.affine()},
          {"conjectural", d.conjectural()}};
}

namespace {

std::string sanitize(const std::string& label) {
  std::string out;
  for (char c : label) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    out += ok ? c : (c == '~' ? 'a' : '_');
  }
  return out;
}

std::string fingerprint(const CartanDatum& d) {
  nlohmann::json j = {{"matrix", d.matrix()}, {"symmetrizers", d.symmetrizers()}, {"affine", d.affine()}};
  return sha256_hex(j.dump()).substr(0, 16);
}

}  // namespace

fs::path cache_file(const fs::path& dir, const CartanDatum& d) {
  return dir / (sanitize(d.label()) + "-" + fingerprint(d) + "-v" + kEngineVersion + ".jtable");
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return std::nullopt;
}

CacheStatus load_cache(const fs::path& dir, JTable& table) {
  const fs::path file = cache_file(dir, table.datum());
  std::ifstream in(file);
  if (!in) return CacheStatus::Missing;
  auto corrupt = [&](const std::string& where, const std::string& what) {
    return CacheCorruptError("corrupted cache " + file.string() + ": " + where + ": " + what);
  };
  std::string line;
  if (!std::getline(in, line)) throw corrupt("header", "empty file");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw corrupt("header", "unparsable");
  }
  if (!header.is_object() || header.value("format", "") != "jfun-jtable") {
    throw corrupt("header", "not a jfun table");
  }
  if (header.value("engine", "") != kEngineVersion) return CacheStatus::VersionMismatch;
  const auto& d = table.datum();
  if (!header.contains("datum") || header["datum"].value("matrix", IntMatrix{}) != d.matrix() ||
      header["datum"].value("symmetrizers", std::vector<int>{}) != d.symmetrizers()) {
    throw corrupt("header", "datum does not match " + d.label());
  }

  std::size_t count = 0;
  std::size_t lineno = 1;
  std::string last_entry = "header";
  bool ended = false;
  std::vector<std::pair<ConeVector, FactoredRational>> loaded;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno);
    if (ended) throw corrupt(where, "data after end record");
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw corrupt(where + " (after " + last_entry + ")", "unparsable record");
    }
    if (rec.is_object() && rec.contains("end")) {
      if (rec.value("count", std::size_t{0}) != count) {
        throw corrupt("end record", "entry count mismatch");
      }
      ended = true;
      continue;
    }
    std::string entry = where;
    try {
      auto coeffs = rec.at("alpha").get<std::vector<int>>();
      ConeVector alpha(coeffs);
      entry = "entry alpha=(" + format_cone_vector(alpha) + ")";
      d.check(alpha);
      const std::string stored = rec.at("value").dump();
      FactoredRational value = factored_from_json(rec.at("value"));
      const std::string canonical = serialize(value);
      if (canonical != stored) throw corrupt(entry, "value is not in canonical form");
      if (sha256_hex(canonical) != rec.at("sha256").get<std::string>()) {
        throw corrupt(entry, "checksum mismatch");
      }
      if (value.nvars() != d.nvars()) throw corrupt(entry, "wrong number of variables");
      loaded.emplace_back(std::move(alpha), std::move(value));
      last_entry = entry;
      ++count;
    } catch (const CacheCorruptError&) {
      throw;
    } catch (const std::exception& e) {
      throw corrupt(entry, e.what());
    }
  }
  if (!ended) throw corrupt("after " + last_entry, "truncated (missing end record)");
  for (auto& [alpha, value] : loaded) {
    try {
      table.insert(alpha, std::move(value));
    } catch (const InvariantError& e) {
      throw corrupt("entry alpha=(" + format_cone_vector(alpha) + ")", e.what());
    }
  }
  return CacheStatus::Loaded;
}

void save_cache(const fs::path& dir, const JTable& table) {
  fs::create_directories(dir);
  const fs::path file = cache_file(dir, table.datum());
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write cache file " + tmp.string());
    nlohmann::json header = {{"format", "jfun-jtable"},
                             {"engine", kEngineVersion},
                             {"datum", datum_json(table.datum())}};
    out << header.dump() << "\n";
    const auto entries = table.entries();
    for (const auto& [alpha, value] : entries) {
      nlohmann::json rec = {{"alpha", alpha.coeffs},
                            {"value", to_json(value)},
                            {"sha256", sha256_hex(serialize(value))}};
      out << rec.dump() << "\n";
    }
    out << nlohmann::json{{"end", true}, {"count", entries.size()}}.dump() << "\n";
    if (!out) throw ConfigError("failed writing cache file " + tmp.string());
  }
  fs::rename(tmp, file);
}

}  // namespace jfun
