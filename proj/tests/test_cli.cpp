#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mhg/cache.hpp"
#include "mhg/cli.hpp"
#include "mhg/metric_space.hpp"

using namespace mhg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("mhg-test-" + name);
  std::filesystem::remove_all(p);
  return p;
}

Run cli(std::vector<std::string> args, const std::filesystem::path& cache) {
  args.push_back("--cache-dir");
  args.push_back(cache.string());
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Drops the manifest lines that legitimately vary between runs.
std::string body(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("# wall_seconds", 0) != 0 && line.rfind("# cache_hits", 0) != 0) out += line + "\n";
  return out;
}

std::string last_line(const std::string& s) {
  auto t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count examples and exit codes") {
  const auto dir = scratch_dir("count");
  auto r = cli({"count", "--class", "a1", "--n", "5", "--mode", "unlabeled", "--method", "formula"}, dir);
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "5,a1,unlabeled,6,,,,");

  r = cli({"count", "--class", "a2", "--n", "5", "--mode", "unlabeled", "--method", "exact,formula"}, dir);
  CHECK(r.code == 3);
  CHECK(last_line(r.out) == "5,a2,unlabeled,16,19,,false,");

  r = cli({"count", "--class", "a2", "--n", "3", "--mode", "labeled", "--method", "exact,oracle"}, dir);
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "3,a2,labeled,,13,13,,true");

  r = cli({"count", "--class", "a1", "--n", "3..5", "--mode", "labeled"}, dir);
  CHECK(r.code == 3);  // n = 4 double-counts the balanced split
  CHECK(r.out.find("4,a1,labeled,59,38,,false,") != std::string::npos);
}

TEST_CASE("usage errors") {
  const auto dir = scratch_dir("usage");
  CHECK(cli({"count", "--class", "a3", "--n", "5"}, dir).code == 2);
  CHECK(cli({"count", "--class", "a1", "--n", "5..3"}, dir).code == 2);
  CHECK(cli({"count", "--class", "a1", "--n", "x"}, dir).code == 2);
  CHECK(cli({"count", "--class", "a1", "--n", "7", "--method", "oracle"}, dir).code == 2);
  CHECK(cli({"count", "--class", "a1", "--n", "5", "--method", "guess"}, dir).code == 2);
  CHECK(cli({"count", "--n", "5"}, dir).code == 2);
  CHECK(cli({"proportions", "--class", "a1", "--sentence", "a1.nope", "--n", "4"}, dir).code == 2);
  CHECK(cli({"sample", "--class", "a2", "--n", "4"}, dir).code == 2);
  CHECK(cli({"limits", "--limit", "g3710", "--m", "4"}, dir).code == 2);
  CHECK(cli({"frobnicate"}, dir).code == 2);
  CHECK(cli({}, dir).code == 2);
  CHECK(cli({"count", "--class", "a1", "--n", "5", "--format", "xml"}, dir).code == 2);
  const auto help = cli({"--help"}, dir);
  CHECK(help.code == 0);
  CHECK(help.out.find("proportions") != std::string::npos);
}

TEST_CASE("json numbers are strings") {
  const auto dir = scratch_dir("json");
  const auto r = cli({"count", "--class", "a2", "--n", "5", "--mode", "unlabeled", "--method", "exact,formula,oracle",
                      "--format", "json"},
                     dir);
  CHECK(r.code == 3);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["manifest"]["version"].is_string());
  const auto& row = j["counts"][0];
  CHECK(row["n"] == "5");
  CHECK(row["paper"] == "16");
  CHECK(row["exact"] == "19");
  CHECK(row["oracle"] == "19");
  CHECK(row["agrees_paper"] == false);

  const auto a = cli({"sample", "--class", "a2", "--n", "6", "--asymmetry", "--samples", "300", "--seed", "4",
                      "--format", "json"},
                     dir);
  const auto aj = nlohmann::json::parse(a.out);
  for (const char* k : {"n", "class", "mode", "hits", "samples", "estimate"}) CHECK(aj[k].is_string());
  CHECK(aj["samples"] == "300");
}

TEST_CASE("proportions") {
  const auto dir = scratch_dir("prop");
  auto r = cli({"proportions", "--class", "a1", "--sentence", "a1.pairs?p=1", "--ensemble", "unlabeled", "--n", "4..12"},
               dir);
  CHECK(r.code == 0);
  CHECK(r.out.find("n,class,sentence,ensemble,numerator,denominator,value_decimal\n") != std::string::npos);
  CHECK(r.out.find("12,a1,a1.pairs?p=1,unlabeled,21,28,0.750000000000") != std::string::npos);
  CHECK(r.out.find("# first_n_at_least_0.99: none") != std::string::npos);
  r = cli({"proportions", "--class", "a2", "--sentence", "a2.min_threes?p=1", "--n", "3"}, dir);
  CHECK(last_line(r.out) == "3,a2,a2.min_threes?p=1,unlabeled,1,4,0.250000000000");
  r = cli({"proportions", "--class", "a1", "--sentence", "a1.no_two_threes", "--n", "1..6", "--ensemble", "labeled"}, dir);
  CHECK(r.out.find("# first_n_at_least_0.99: 1") != std::string::npos);
}

TEST_CASE("limits, amalgamation and sampling") {
  const auto dir = scratch_dir("limits");
  auto r = cli({"limits", "--limit", "g378", "--m", "4", "--check", "witness"}, dir);
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "witness,true");
  r = cli({"limits", "--limit", "gas", "--t", "2", "--u", "1", "--check", "witness"}, dir);
  CHECK(last_line(r.out) == "witness,false");
  r = cli({"limits", "--limit", "g3710", "--m", "3", "--seed", "9"}, dir);
  std::istringstream in(r.out);
  const auto spaces = read_all_text(in);
  REQUIRE(spaces.size() == 1);
  CHECK(spaces[0].size() == 6);

  r = cli({"amalgamation", "--class", "a2", "--base-max", "3"}, dir);
  CHECK(r.code == 0);
  CHECK(last_line(r.out).substr(last_line(r.out).rfind(',') + 1) == "0");

  const auto s1 = cli({"sample", "--class", "a2", "--n", "7", "--count", "3", "--seed", "11"}, dir);
  const auto s2 = cli({"sample", "--class", "a2", "--n", "7", "--count", "3", "--seed", "11"}, dir);
  CHECK(body(s1.out) == body(s2.out));
  std::istringstream sin(s1.out);
  CHECK(read_all_text(sin).size() == 3);
}

TEST_CASE("enumerate output re-parses") {
  const auto dir = scratch_dir("enum");
  for (const char* mode : {"labeled", "unlabeled"}) {
    const auto r = cli({"enumerate", "--class", "a2", "--n", "4", "--mode", mode}, dir);
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    const auto spaces = read_all_text(in);
    CHECK(spaces.size() == (std::string(mode) == "labeled" ? 81u : 11u));
    for (const auto& s : spaces) CHECK(parse_text(to_text(s)) == s);
  }
}

TEST_CASE("report determinism and caching") {
  const auto dir = scratch_dir("cache");
  const auto a = cli({"report", "--class", "a2", "--n", "1..5"}, dir);
  const auto b = cli({"report", "--class", "a2", "--n", "1..5"}, dir);
  CHECK(a.code == 3);
  CHECK(body(a.out) == body(b.out));
  CHECK(a.out.find("# cache_hits: 0") != std::string::npos);
  CHECK(b.out.find("# cache_hits: 10") != std::string::npos);

  // a tampered entry is ignored and rewritten
  const Cache cache(dir);
  const auto file = cache.file_for("oracle-unlabeled", ClassId::A2, 5);
  REQUIRE(std::filesystem::exists(file));
  {
    std::ofstream out(file, std::ios::trunc);
    out << "MHGCACHE v1\nkind=oracle-unlabeled class=a2 n=5 count=16 checksum=0000000000000000\n";
  }
  CHECK_FALSE(cache.load("oracle-unlabeled", ClassId::A2, 5).has_value());
  const auto c = cli({"report", "--class", "a2", "--n", "1..5"}, dir);
  CHECK(body(c.out) == body(a.out));
  CHECK(c.out.find("# cache_hits: 9") != std::string::npos);
  CHECK(cache.load("oracle-unlabeled", ClassId::A2, 5)->count == 19);
}

TEST_CASE("cache entries") {
  CacheEntry e{"classes", ClassId::A1, 2, 2, {MetricSpace(2, 1), MetricSpace(2, 3)}};
  const std::string text = serialize_cache_entry(e);
  CHECK(text.rfind("MHGCACHE v1\nkind=classes class=a1 n=2 count=2 checksum=", 0) == 0);
  const auto back = parse_cache_entry(text);
  REQUIRE(back);
  CHECK(back->spaces == e.spaces);
  CHECK(back->count == 2);
  std::string flipped = text;
  flipped[flipped.size() - 2] = '1';
  CHECK_FALSE(parse_cache_entry(flipped).has_value());
  CHECK_FALSE(parse_cache_entry("MHGCACHE v2\n").has_value());
  CHECK_FALSE(parse_cache_entry("").has_value());
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

}  // TEST_SUITE
