#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jfun/cli.hpp"

using namespace jfun;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool balanced(const std::string& s) {
  int brace = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && (s[i + 1] == '{' || s[i + 1] == '}')) {
      ++i;
      continue;
    }
    if (s[i] == '{') ++brace;
    if (s[i] == '}' && --brace < 0) return false;
  }
  return brace == 0;
}

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("compute in factored form") {
  auto r = run({"--type", "A1", "--alpha", "1", "--format", "factored"});
  CHECK(r.code == 0);
  CHECK(r.out.find("numerator:   1\n") != std::string::npos);
  CHECK(r.out.find("factors:     (1 - q), (1 - q z1)") != std::string::npos);
}

TEST_CASE("compute as JSON") {
  auto r = run({"--type", "A1", "--alpha", "0", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "jfunction");
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0]["value"]["num"] == nlohmann::json::parse(R"([["1/1",[0,0]]])"));
  CHECK(j["entries"][0]["value"]["den"].empty());

  auto t = run({"--type", "A2", "--up-to", "1,1", "--format", "json"});
  REQUIRE(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["entries"].size() == 4);
}

TEST_CASE("series and latex") {
  auto s = run({"--type", "A1", "--alpha", "1", "--format", "series:3"});
  CHECK(s.code == 0);
  CHECK(s.out.find("q^3: 1 + z1 + z1^2 + z1^3") != std::string::npos);
  auto a = run({"--type", "A1~", "--alpha", "1,0", "--format", "series:2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("joint") != std::string::npos);
  CHECK(run({"--type", "A1~", "--alpha", "1,0", "--format", "series:2", "--grading", "q"}).code == 2);

  auto l = run({"--type", "G2", "--up-to", "1,1", "--format", "latex"});
  REQUIRE(l.code == 0);
  CHECK(l.out.rfind("\\documentclass", 0) == 0);
  CHECK(count(l.out, "\\begin{") == count(l.out, "\\end{"));
  CHECK(l.out.find("\\end{document}") != std::string::npos);
  CHECK(balanced(l.out));
  CHECK(count(l.out, "(") == count(l.out, ")"));
}

TEST_CASE("output bytes are deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"--type", "B2", "--up-to", "2,2", "--format", "json"},
           {"verify", "determinant", "--type", "F4", "--seed", "17"},
           {"verify", "chart", "--N", "3", "--seed", "4"},
           {"stats", "--type", "E6", "--alpha", "1,0,2,0,0,1"}}) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "recursion", "--type", "A2", "--height", "3"}).code == 0);
  CHECK(run({"verify", "positivity", "--type", "A1~", "--height", "2", "--grading", "joint", "--order", "8"})
            .code == 0);
  CHECK(run({"verify", "recursion", "--type", "Z9"}).code == 3);
  CHECK(run({"verify", "recursion", "--type", "B3~"}).code == 3);
  CHECK(run({"verify", "recursion", "--type", "A2^(2)"}).code == 3);
  CHECK(run({"verify", "nonsense", "--type", "A2"}).code == 2);
  CHECK(run({"verify", "subdiagram", "--type", "A3", "--small", "A2", "--embedding", "1,2", "--alpha",
             "2,1,0"})
            .code == 0);
  CHECK(run({"verify", "subdiagram", "--type", "A3", "--small", "A1xA1", "--embedding", "1,3", "--alpha",
             "1,0,1"})
            .code == 0);
  CHECK(run({"verify", "subdiagram", "--type", "A3", "--small", "A2", "--embedding", "1,2", "--alpha",
             "0,0,1"})
            .code == 2);
  auto text = run({"verify", "recursion", "--type", "A1", "--format", "text"});
  CHECK(text.out.find("outcome:    PASS") != std::string::npos);
}

TEST_CASE("argument errors") {
  CHECK(run({"--type", "A2"}).code == 2);
  CHECK(run({"--type", "A2", "--alpha", "1,1", "--up-to", "1,1"}).code == 2);
  CHECK(run({"--type", "A2", "--alpha", "1"}).code == 2);
  CHECK(run({"--type", "A2", "--alpha", "1,1", "--format", "yaml"}).code == 2);
  CHECK(run({"--alpha", "1"}).code == 2);
  CHECK(run({"--bogus"}).code == 2);
  CHECK(run({"--type", "Q2", "--alpha", "1"}).code == 3);
  CHECK(run({"--help"}).code == 0);
  auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out == "1.0.0\n");
}

TEST_CASE("stats record") {
  auto r = run({"stats", "--type", "A2", "--alpha", "1,1"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["height"] == 2);
  CHECK(j["dim"] == 4);
  CHECK(j["eigenchar"] == "q z1 z2");
  CHECK(j["discrepancy"] == 1);
  CHECK(j["orders"] == nlohmann::json::array({1, 1}));

  auto a1 = nlohmann::json::parse(run({"stats", "--type", "A1", "--alpha", "1"}).out);
  CHECK(a1["discrepancy"] == 0);
  auto zero = nlohmann::json::parse(run({"stats", "--type", "A1", "--alpha", "0"}).out);
  CHECK(zero["dim"] == 0);
  CHECK(zero["eigenchar"] == "1");
  auto g2 = nlohmann::json::parse(run({"stats", "--type", "G2", "--alpha", "1,1"}).out);
  CHECK(g2["discrepancy"].is_null());
  CHECK(g2["discrepancy_reason"].is_string());
  auto aff = nlohmann::json::parse(run({"stats", "--type", "A1~", "--alpha", "1,1"}).out);
  CHECK(aff["orders_extrapolated"] == true);
  CHECK(aff["eigenchar"] == "z0 z1");
}

TEST_CASE("custom matrix documents") {
  auto dir = fs::temp_directory_path() / "jfun_cli_matrix";
  fs::create_directories(dir);
  auto good = dir / "g2.json";
  std::ofstream(good) << R"({"matrix": [[2, -1], [-3, 2]], "label": "myG2"})";
  auto a = run({"--matrix", good.string(), "--alpha", "1,1", "--format", "json"});
  REQUIRE(a.code == 0);
  auto b = run({"--type", "G2", "--alpha", "1,1", "--format", "json"});
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  CHECK(ja["datum"]["label"] == "myG2");
  CHECK(ja["entries"] == jb["entries"]);

  auto bad = dir / "bad.json";
  std::ofstream(bad) << R"({"matrix": [[2, -1], [-3, 2]], "symmetrizers": [1, 1]})";
  CHECK(run({"--matrix", bad.string(), "--alpha", "1,1"}).code == 2);
  auto junk = dir / "junk.json";
  std::ofstream(junk) << "{ not json";
  CHECK(run({"--matrix", junk.string(), "--alpha", "1,1"}).code == 2);
  CHECK(run({"--matrix", (dir / "missing.json").string(), "--alpha", "1"}).code == 2);
  CHECK(run({"--matrix", good.string(), "--type", "A2", "--alpha", "1,1"}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("cache command") {
  auto dir = fs::temp_directory_path() / "jfun_cli_cache";
  fs::remove_all(dir);
  auto first = run({"cache", "--type", "A2", "--up-to", "2,1", "--cache-dir", dir.string()});
  REQUIRE(first.code == 0);
  CHECK(nlohmann::json::parse(first.out)["status_before"] == "missing");
  auto second = run({"cache", "--type", "A2", "--up-to", "2,1", "--cache-dir", dir.string()});
  CHECK(nlohmann::json::parse(second.out)["status_before"] == "loaded");

  const fs::path file = nlohmann::json::parse(first.out)["file"].get<std::string>();
  std::vector<std::string> lines;
  {
    std::ifstream in(file);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  {
    std::ofstream out(file, std::ios::trunc);
    for (std::size_t i = 0; i + 2 < lines.size(); ++i) out << lines[i] << "\n";
  }
  auto broken = run({"cache", "--type", "A2", "--up-to", "2,1", "--cache-dir", dir.string()});
  CHECK(broken.code == 5);
  CHECK(broken.err.find("alpha=(") != std::string::npos);
  CHECK(run({"--type", "A2", "--alpha", "1,1", "--cache-dir", dir.string()}).code == 5);

  {
    std::ofstream out(file, std::ios::trunc);
    std::string head = lines[0];
    head.replace(head.find("1.0.0"), 5, "0.1.0");
    out << head << "\n";
  }
  auto mismatch = run({"cache", "--type", "A2", "--up-to", "2,1", "--cache-dir", dir.string()});
  CHECK(mismatch.code == 0);
  CHECK(nlohmann::json::parse(mismatch.out)["status_before"] == "version-mismatch");
  CHECK(run({"cache", "--type", "A2", "--up-to", "1,1"}).code == 2);
  fs::remove_all(dir);
}
