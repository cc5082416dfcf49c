#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "relfact/json_io.hpp"

using namespace relfact;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(RELFACT_FIXTURE_DIR) + "/" + name; }

std::string scratch(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "relfact_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("reliability subcommand") {
  auto series = run({"reliability", "--input", fixture("series_pair.json")});
  CHECK(series.code == 0);
  CHECK(series.json()["reliability"] == "1/4");
  CHECK(series.json()["route"] == "factoring");
  CHECK_FALSE(series.json().contains("timing_ms"));

  auto bridge = run({"reliability", "--input", fixture("bridge.json"), "--route", "bruteforce"});
  CHECK(bridge.json()["reliability"] == "1/2");

  for (const char* route : {"factorized", "joint", "n2", "bruteforce", "factoring"}) {
    auto r = run({"reliability", "--input", fixture("bridge_split.json"), "--route", route});
    INFO(route);
    CHECK(r.code == 0);
    CHECK(r.json()["reliability"] == "7/16");
    CHECK(r.json()["n"] == 2);
  }
  auto split = run({"reliability", "--input", fixture("bridge_split.json")});
  CHECK(split.json()["side_reliabilities"]["g1"]["1|2"] == "1/2");

  auto stranded = run({"reliability", "--input", fixture("unreachable_terminal.json")});
  CHECK(stranded.code == 0);
  CHECK(stranded.json()["reliability"] == "0/1");
  CHECK(stranded.json()["warnings"].size() == 1);
  CHECK(stranded.err.find("Hypothesis 2") != std::string::npos);

  auto timed = run({"reliability", "--input", fixture("series_pair.json"), "--timing"});
  CHECK(timed.json().contains("timing_ms"));

  auto text = run({"reliability", "--input", fixture("series_pair.json"), "--output", "text"});
  CHECK(text.out.find("reliability: 1/4") != std::string::npos);
}

TEST_CASE("other subcommands") {
  auto con = run({"conmatrix", "--n", "4"});
  CHECK(con.code == 0);
  CHECK(con.json()["det"] == "384");
  CHECK(con.json()["order"].size() == 15);

  auto poly = run({"polynomial", "--input", fixture("series_pair.json")});
  CHECK(poly.json()["coefficients"] == Json::parse(R"(["0","0","1"])"));

  auto dist = run({"distribution", "--input", fixture("bridge_split.json")});
  CHECK(dist.json()["joint_reliability"] == "7/16");
  auto single = run({"distribution", "--input", fixture("bridge.json"), "--boundary", "a,b"});
  CHECK(single.code == 0);
  CHECK(single.json()["n"] == 2);

  auto rcm = run({"rcm", "--input", fixture("bridge_split.json")});
  CHECK(rcm.json()["dZdq_at_0"] == "7/16");
  CHECK(rcm.json()["factorized_dZdq_at_0"] == "7/16");

  auto factor = run({"factor", "--input", fixture("glued_gamma4.json"), "--verify"});
  CHECK(factor.code == 0);
  CHECK(factor.json()["verified"] == true);
  CHECK(factor.json()["b"].size() == 5);

  auto verify = run({"verify", "--input", RELFACT_FIXTURE_DIR});
  CHECK(verify.code == 0);
  CHECK(verify.json()["failed"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kMalformedInput);
  CHECK(run({"bogus"}).code == cli::kMalformedInput);
  CHECK(run({"reliability"}).code == cli::kMalformedInput);
  CHECK(run({"reliability", "--input", fixture("nope.json")}).code == cli::kMalformedInput);
  CHECK(run({"reliability", "--input", scratch("bad.json", "{not json")}).code == cli::kMalformedInput);
  CHECK(run({"reliability", "--input", fixture("bridge.json"), "--route", "magic"}).code == cli::kMalformedInput);
  CHECK(run({"reliability", "--input", fixture("bridge.json"), "--jobs", "zero"}).code == cli::kMalformedInput);
  CHECK(run({"conmatrix", "--n", "9"}).code == cli::kMalformedInput);
  CHECK(run({"conmatrix", "--n", "0"}).code == cli::kMalformedInput);

  const auto bad_p = scratch("bad_p.json", R"({"nodes":["a","b"],"edges":[{"id":1,"u":"a","v":"b","p":"3/2"}],"terminals":["a","b"]})");
  CHECK(run({"reliability", "--input", bad_p}).code == cli::kInvalidInput);
  const auto shared = scratch("shared.json", R"({"g1":{"nodes":["a","b"],"edges":[{"id":1,"u":"a","v":"b","p":"1/2"}],"terminals":["a","b"]},
     "g2":{"nodes":["a","b"],"edges":[{"id":1,"u":"a","v":"b","p":"1/2"}],"terminals":["a","b"]},"boundary":["a","b"]})");
  CHECK(run({"reliability", "--input", shared}).code == cli::kInvalidInput);
  CHECK(run({"reliability", "--input", fixture("bridge.json"), "--route", "bruteforce", "--bound", "3"}).code ==
        cli::kInvalidInput);
  CHECK(run({"reliability", "--input", fixture("bridge.json"), "--route", "factorized"}).code ==
        cli::kMalformedInput);

  // verify accepts any directory of documents
  const auto dir = std::filesystem::temp_directory_path() / "relfact_cli_verify";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "ok.json") << std::ifstream(fixture("bridge.json")).rdbuf();
  CHECK(run({"verify", "--input", dir.string()}).code == 0);
}

TEST_CASE("output does not depend on the worker count") {
  for (const char* name : {"bridge_split.json", "glued_gamma4.json", "articulation.json"}) {
    const auto one = run({"factor", "--input", fixture(name), "--jobs", "1"});
    const auto four = run({"factor", "--input", fixture(name), "--jobs", "4"});
    const auto automatic = run({"factor", "--input", fixture(name), "--jobs", "auto"});
    CHECK(one.out == four.out);
    CHECK(one.out == automatic.out);
  }
}
