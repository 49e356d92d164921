#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jfun/cache.hpp"
#include "jfun/errors.hpp"
#include "jfun/serialize.hpp"

using namespace jfun;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("jfun_cache_test_" + name);
  fs::remove_all(p);
  return p;
}

std::vector<std::string> lines_of(const fs::path& f) {
  std::ifstream in(f);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

void write_lines(const fs::path& f, const std::vector<std::string>& lines) {
  std::ofstream out(f, std::ios::trunc);
  for (const auto& l : lines) out << l << "\n";
}

}  // namespace

TEST_CASE("round trip is byte identical") {
  auto dir = scratch("rt");
  auto d = parse_cartan_type("B2");
  JTable t(d);
  CHECK(load_cache(dir, t) == CacheStatus::Missing);
  populate(t, ConeVector({2, 2}));
  save_cache(dir, t);
  JTable back(d);
  REQUIRE(load_cache(dir, back) == CacheStatus::Loaded);
  CHECK(back.size() == t.size());
  JTable fresh(d);
  for (const auto& [a, v] : back.entries()) CHECK(serialize(v) == serialize(compute_j(a, fresh)));
  // saving again produces the same bytes
  std::stringstream first;
  first << std::ifstream(cache_file(dir, d)).rdbuf();
  save_cache(dir, back);
  std::stringstream second;
  second << std::ifstream(cache_file(dir, d)).rdbuf();
  CHECK(first.str() == second.str());
  fs::remove_all(dir);
}

TEST_CASE("damaged files are reported with the entry") {
  auto dir = scratch("bad");
  auto d = parse_cartan_type("A2");
  JTable t(d);
  populate(t, ConeVector({1, 1}));
  save_cache(dir, t);
  const auto file = cache_file(dir, d);
  const auto lines = lines_of(file);
  REQUIRE(lines.size() == 6);

  SUBCASE("truncated") {
    write_lines(file, {lines.begin(), lines.begin() + 3});
    JTable x(d);
    try {
      load_cache(dir, x);
      FAIL("expected corruption");
    } catch (const CacheCorruptError& e) {
      CHECK(std::string(e.what()).find("alpha=(0,1)") != std::string::npos);
    }
  }
  SUBCASE("cut mid line") {
    write_lines(file, {lines[0], lines[1], lines[2].substr(0, 20)});
    JTable x(d);
    CHECK_THROWS_AS(load_cache(dir, x), CacheCorruptError);
  }
  SUBCASE("tampered value") {
    auto l = lines;
    auto pos = l[4].find("\"1/1\"");
    REQUIRE(pos != std::string::npos);
    l[4].replace(pos, 5, "\"2/1\"");
    write_lines(file, l);
    JTable x(d);
    try {
      load_cache(dir, x);
      FAIL("expected corruption");
    } catch (const CacheCorruptError& e) {
      CHECK(std::string(e.what()).find("alpha=(1,1)") != std::string::npos);
    }
  }
  SUBCASE("wrong count") {
    auto l = lines;
    l.erase(l.begin() + 2);
    write_lines(file, l);
    JTable x(d);
    CHECK_THROWS_AS(load_cache(dir, x), CacheCorruptError);
  }
  SUBCASE("other engine version is ignored") {
    auto l = lines;
    l[0].replace(l[0].find(kEngineVersion), std::string(kEngineVersion).size(), "0.0.1");
    write_lines(file, l);
    JTable x(d);
    CHECK(load_cache(dir, x) == CacheStatus::VersionMismatch);
    CHECK(x.size() == 1);
  }
  fs::remove_all(dir);
}

TEST_CASE("flag beats environment") {
  ::setenv(kCacheDirEnv, "/tmp/from_env", 1);
  CHECK(resolve_cache_dir(std::nullopt) == fs::path("/tmp/from_env"));
  CHECK(resolve_cache_dir(std::string("/tmp/flag")) == fs::path("/tmp/flag"));
  ::unsetenv(kCacheDirEnv);
  CHECK_FALSE(resolve_cache_dir(std::nullopt));
}

TEST_CASE("distinct data get distinct files") {
  auto b = parse_cartan_type("B2");
  auto c = parse_cartan_type("C2");
  CHECK(cache_file("/x", b) != cache_file("/x", c));
  CHECK(cache_file("/x", parse_cartan_type("A2~")).filename().string().find('~') == std::string::npos);
}
