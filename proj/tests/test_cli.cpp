#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "rca/grid.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rca::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rca_test_" + name);
}

std::size_t count_char(const std::string& s, char c) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), c));
}

}  // namespace

TEST_CASE("simulate prints counts") {
  auto r = run({"simulate", "--rule", "R1", "--steps", "7", "--format", "txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "n=7 R1=64 R2=21 R3=0 R=85\n");

  r = run({"simulate", "--rule", "R1", "--steps", "0"});
  CHECK(r.out == "n=0 R1=1 R2=0 R3=0 R=1\n");

  r = run({"simulate", "--rule", "R3'", "--steps", "7", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["R"] == 85);
  CHECK(j["n"] == 7);
}

TEST_CASE("simulate round-trips through a saved state") {
  const auto path = temp_path("back.state").string();
  auto r = run({"simulate", "--rule", "R2", "--steps", "-3", "--save-state", path});
  REQUIRE(r.code == 0);
  r = run({"simulate", "--rule", "R2", "--steps", "3", "--from", path, "--format", "state"});
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  CHECK(rca::read_state(is) == rca::single_seed());
  std::filesystem::remove(path);
}

TEST_CASE("sequence output") {
  auto r = run({"sequence", "--which", "R", "--max", "15", "--method", "recursive", "--format",
                "csv"});
  CHECK(r.code == 0);
  CHECK(count_char(r.out, '\n') == 17);
  CHECK(r.out.rfind("n,R,R1,R2\n", 0) == 0);
  CHECK(r.out.find("15,341,256,85\n") != std::string::npos);

  r = run({"sequence", "--which", "R2", "--max", "1", "--format", "txt"});
  CHECK(r.out == "n=0 R2=0\nn=1 R2=1\n");

  for (const char* method : {"sim", "alt", "poly"}) {
    const auto m = run({"sequence", "--max", "20", "--method", method});
    CHECK(m.out == run({"sequence", "--max", "20"}).out);
  }

  r = run({"sequence", "--which", "R", "--max", "200", "--check"});
  CHECK(r.code == 0);

  r = run({"sequence", "--max", "5", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out).size() == 6);
}

TEST_CASE("verify exit codes") {
  auto r = run({"verify", "--suite", "counts", "--max", "64"});
  CHECK(r.code == 0);
  CHECK(r.out == "[PASS] counts n=0..64\n");

  r = run({"verify", "--suite", "diamond", "--max", "0"});
  CHECK(r.code == 0);

  r = run({"verify", "--suite", "coloring", "--max", "16", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)[0]["passed"] == true);

  r = run({"verify", "--suite", "bogus"});
  CHECK(r.code == 2);
}

TEST_CASE("render") {
  auto r = run({"render", "--rule", "R1", "--steps", "1", "--format", "txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "1.1\n.2.\n1.1\n");

  r = run({"render", "--rule", "R1", "--steps", "7", "--format", "ppm"});
  REQUIRE(r.out.rfind("P3\n15 15\n255\n", 0) == 0);
  std::istringstream ppm(r.out.substr(std::string("P3\n15 15\n255\n").size()));
  int rgb[3], black = 0, gray = 0, red = 0, pixels = 0;
  while (ppm >> rgb[0] >> rgb[1] >> rgb[2]) {
    ++pixels;
    if (rgb[0] == 0 && rgb[1] == 0 && rgb[2] == 0) ++black;
    if (rgb[0] == 128 && rgb[1] == 128 && rgb[2] == 128) ++gray;
    if (rgb[0] == 255 && rgb[1] == 0) ++red;
  }
  CHECK(pixels == 225);
  CHECK(black == 64);
  CHECK(gray == 21);
  CHECK(red == 0);

  r = run({"render", "--rule", "R2", "--steps", "12", "--format", "pbm"});
  REQUIRE(r.out.rfind("P1\n25 25\n", 0) == 0);
  CHECK(count_char(r.out.substr(9), '1') == 121);
}

TEST_CASE("export") {
  auto r = run({"export", "--what", "table", "--max", "2"});
  CHECK(r.out == "n,R,R1,R2\n0,1,1,0\n1,5,4,1\n2,9,5,4\n");

  r = run({"export", "--what", "poly", "--rule", "R2", "--steps", "1", "--component", "current"});
  CHECK(r.out.rfind("#lpoly v1 terms=4\n", 0) == 0);

  r = run({"export", "--what", "grid", "--rule", "R1", "--steps", "1", "--component", "previous"});
  CHECK(r.out == "#bgrid v1 count=1\n0 0\n");

  r = run({"export", "--what", "poly", "--rule", "R3", "--steps", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("usage and I/O errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"simulate", "--rule", "R9"}).code == 2);
  CHECK(run({"simulate", "--bogus"}).code == 2);
  CHECK(run({"render", "--format", "gif"}).code == 2);
  CHECK(run({"sequence", "--max", "-1"}).code == 2);
  CHECK(run({"simulate", "--from", "/nonexistent/state"}).code == 1);
  CHECK(run({"simulate", "--out", "/nonexistent/dir/out.txt"}).code == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--suite", "all", "--max", "12"};
  CHECK(run(args).out == run(args).out);
}
