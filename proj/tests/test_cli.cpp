#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../tools/cli.hpp"
#include "kreweras/bijection.hpp"
#include "kreweras/map_io.hpp"
#include "kreweras/walk.hpp"

using namespace kreweras;
using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Writes content to a fresh file under the system temp directory and removes
// it when the test scope closes.
class TempFile {
public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("kreweras_cli_test_" + std::to_string(counter++) + ".json"))
                .string();
    std::ofstream(path_, std::ios::binary) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace

TEST_CASE("classify reports every field") {
  const CliResult res = run({"classify", "cab"});
  REQUIRE(res.code == 0);
  CHECK(res.err.empty());
  const json j = json::parse(res.out);
  CHECK(j.at("walk") == "cab");
  CHECK(j.at("length") == 3);
  CHECK(j.at("endpoint") == json::array({0, 0}));
  CHECK(j.at("is_meander") == true);
  CHECK(j.at("is_excursion") == true);
  CHECK(j.at("kreweras_prefix_ok") == true);
  CHECK(j.at("is_kreweras_to_origin") == true);
  CHECK(j.at("kreweras_target") == 0);
  CHECK(j.at("size") == 1);

  const json off = json::parse(run({"classify", "caa"}).out);
  CHECK(off.at("is_excursion") == true);
  CHECK(off.at("kreweras_prefix_ok") == false);
  CHECK(off.at("kreweras_target").is_null());

  CHECK(run({"classify", "xyz"}).code == 1);
}

TEST_CASE("count prints exact numbers") {
  CHECK(run({"count", "kreweras_origin", "5"}).out == "46592\n");
  CHECK(run({"count", "excursion", "3"}).out == "768\n");
  CHECK(run({"count", "kreweras_to", "2", "--target", "1"}).out == "96\n");
  CHECK(run({"count", "near_cubic_to", "2", "--target", "1"}).out == "24\n");

  const CliResult unknown = run({"count", "nonsense", "3"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.rfind("error:", 0) == 0);

  const CliResult missing = run({"count", "excursion"});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("usage error:", 0) == 0);

  // --target on a family that does not take one
  CHECK(run({"count", "excursion", "2", "--target", "1"}).code == 1);
}

TEST_CASE("enumerate lists one word per line") {
  const CliResult res = run({"enumerate", "excursion", "1"});
  REQUIRE(res.code == 0);
  CHECK(lines_of(res.out) == std::vector<std::string>{"caa", "cab", "cba", "cbb"});
  CHECK(run({"enumerate", "kreweras_to", "0", "--target", "2"}).out == "cbcb\nccbb\n");
  CHECK(run({"enumerate", "unknown_family", "1"}).code == 1);
}

TEST_CASE("to-map and to-walk invert each other through a file") {
  const CliResult forward = run({"to-map", "cab"});
  REQUIRE(forward.code == 0);
  const TempFile file(forward.out);
  const CliResult back = run({"to-walk", file.path()});
  REQUIRE(back.code == 0);
  CHECK(back.out == "cab\n");

  const CliResult forward_target = run({"to-map", "cb", "--target", "1"});
  REQUIRE(forward_target.code == 0);
  const TempFile file_target(forward_target.out);
  CHECK(run({"to-walk", file_target.path()}).out == "cb\n");

  const CliResult dot = run({"to-map", "cab", "--format", "dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("graph rooted_map", 0) == 0);

  CHECK(run({"to-map", "cab", "--format", "svg"}).code == 1);
  CHECK(run({"to-map", "ab"}).code == 1);
  CHECK(run({"to-walk", "/nonexistent/path.json"}).code == 1);
}

TEST_CASE("to-walk requires the decorations") {
  const MarkedDepthMap m = walk_to_map(Walk::parse("cab"));
  const TempFile bare(map_to_json(m.map));
  const CliResult res = run({"to-walk", bare.path()});
  CHECK(res.code == 1);
  CHECK(res.err.find("tree and marked") != std::string::npos);
}

TEST_CASE("sample draws valid reproducible objects") {
  SUBCASE("excursions as plain words") {
    const CliResult res =
        run({"sample", "--target", "excursion", "--size", "2", "--seed", "11", "--count",
             "5", "--format", "walk"});
    REQUIRE(res.code == 0);
    const std::vector<std::string> words = lines_of(res.out);
    REQUIRE(words.size() == 5);
    for (const std::string& word : words) {
      const WalkClassification cls = classify(Walk::parse(word));
      CHECK(cls.is_excursion);
      CHECK(cls.size == 2);
    }
    const CliResult again =
        run({"sample", "--target", "excursion", "--size", "2", "--seed", "11", "--count",
             "5", "--format", "walk"});
    CHECK(again.out == res.out);
  }
  SUBCASE("projected walks as JSON") {
    const CliResult res =
        run({"sample", "--target", "projected", "--size", "3", "--seed", "9"});
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("kind") == "projected");
    CHECK(j.at("size") == 3);
    CHECK(j.at("letters").get<std::string>().size() == 9);
  }
  SUBCASE("decorated maps as JSON") {
    const CliResult res =
        run({"sample", "--target", "marked_depth", "--size", "3", "--seed", "4"});
    REQUIRE(res.code == 0);
    const ParsedMap pm = map_from_json(res.out);
    REQUIRE(pm.tree.has_value());
    REQUIRE(pm.marked.has_value());
    validate_marked_depth_map(MarkedDepthMap{pm.map, *pm.tree, *pm.marked, 0});
  }
  SUBCASE("maps as dot") {
    const CliResult res = run({"sample", "--target", "cubic", "--size", "2", "--seed",
                               "3", "--format", "dot"});
    REQUIRE(res.code == 0);
    CHECK(res.out.rfind("graph rooted_map", 0) == 0);
  }
  SUBCASE("format and target must agree") {
    CHECK(run({"sample", "--target", "excursion", "--size", "2", "--seed", "1",
               "--format", "dot"}).code == 1);
    CHECK(run({"sample", "--target", "cubic", "--size", "2", "--seed", "1", "--format",
               "walk"}).code == 1);
    CHECK(run({"sample", "--target", "cubic", "--size", "2", "--seed", "1", "--format",
               "dot", "--count", "2"}).code == 1);
    CHECK(run({"sample", "--target", "martian", "--size", "2", "--seed", "1"}).code == 1);
    CHECK(run({"sample", "--target", "cubic", "--size", "2"}).code == 2);
  }
}

TEST_CASE("verify reports shape and optionally replays the walk") {
  const CliResult forward = run({"to-map", "cab"});
  const TempFile file(forward.out);

  const json j = json::parse(run({"verify", file.path()}).out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("vertices") == 3);
  CHECK(j.at("edges") == 4);
  CHECK(j.at("faces") == 3);
  CHECK(j.at("legs") == 0);
  CHECK(j.at("near_cubic") == json::array({1, 2}));
  CHECK(j.at("validated") == "marked_depth_map");
  CHECK_FALSE(j.contains("roundtrip_walk_length"));

  const json jr = json::parse(run({"verify", file.path(), "--roundtrip"}).out);
  CHECK(jr.at("roundtrip_walk_length") == 3);

  const MarkedDepthMap m = walk_to_map(Walk::parse("cab"));
  const TempFile bare(map_to_json(m.map));
  const json jb = json::parse(run({"verify", bare.path()}).out);
  CHECK(jb.at("validated") == "map");
  CHECK(run({"verify", bare.path(), "--roundtrip"}).code == 1);
}

TEST_CASE("depth-trees lists the trees of a map") {
  const MarkedDepthMap m = walk_to_map(Walk::parse("caa"));
  const TempFile file(map_to_json(m.map));
  const CliResult res = run({"depth-trees", file.path()});
  REQUIRE(res.code == 0);
  CHECK(lines_of(res.out) == std::vector<std::string>{"[1,3]", "[1,4]"});
}

TEST_CASE("export re-emits maps in either format") {
  const CliResult forward = run({"to-map", "cab"});
  const TempFile file(forward.out);

  const CliResult dot = run({"export", file.path()});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("graph rooted_map", 0) == 0);
  CHECK(dot.out.find("penwidth") != std::string::npos);  // the tree rides along

  const CliResult as_json = run({"export", file.path(), "--format", "json"});
  REQUIRE(as_json.code == 0);
  CHECK(json::parse(as_json.out) == json::parse(forward.out));

  CHECK(run({"export", file.path(), "--format", "png"}).code == 1);
}

TEST_CASE("top-level flags and usage errors") {
  const CliResult version = run({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find("1.0.0") != std::string::npos);

  const CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK_FALSE(help.out.empty());

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
