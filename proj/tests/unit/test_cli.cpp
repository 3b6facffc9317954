#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "superfock/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = superfock::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  const Result r = run(args);
  REQUIRE(r.code == expected_code);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  return j;
}

}  // namespace

TEST_CASE("delta") {
  const Result r = run({"delta", "--k", "2", "--terms", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "a = [-1/2, 1/4]\n");

  const auto j = run_json({"delta", "--k", "3", "--terms", "2"});
  CHECK(j["k"] == 3);
  CHECK(j["a"] == nlohmann::json::array({"-1/1", "2/3"}));
  CHECK(j["residual"].is_null());

  const auto v = run_json({"delta", "--k", "2", "--terms", "10", "--verify-order", "10"});
  CHECK(v["residual"]["variable"] == "x");
  CHECK(v["residual"]["terms"].empty());

  CHECK(run({"delta", "--k", "0", "--terms", "2"}).code == 2);
  CHECK(run({"delta", "--k", "2", "--terms", "2", "--verify-order", "9"}).code == 2);
  CHECK(run({"delta", "--k", "2"}).code == 2);
}

TEST_CASE("verify algebra") {
  const Result r = run({"verify", "algebra", "--name", "virasoro", "--window", "0"});
  CHECK(r.code == 0);
  const auto j = run_json({"verify", "algebra", "--name", "n2-mirror-twisted", "--window", "2"});
  CHECK(j["algebra"] == "n2-mirror-twisted");
  CHECK(j["violations"].empty());
  const auto bad = run_json({"verify", "algebra", "--name", "virasoro-corrupted", "--window", "3"}, 1);
  CHECK_FALSE(bad["violations"].empty());
  CHECK(run({"verify", "algebra", "--name", "bogus", "--window", "1"}).code == 2);
  CHECK(run({"verify", "algebra", "--name", "virasoro", "--window", "-1"}).code == 2);
}

TEST_CASE("configuration errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"character", "--space", "moonshine", "--trunc", "1"}).code == 2);
  CHECK(run({"character", "--space", "vosa", "--trunc", "x/y"}).code == 2);
  CHECK(run({"character", "--space", "vosa", "--trunc", "-1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("character") {
  const auto j = run_json({"character", "--space", "ramond", "--trunc", "4"});
  const auto& terms = j["series"]["terms"];
  REQUIRE(terms.size() == 4);
  const char* coeffs[] = {"2/1", "4/1", "8/1", "16/1"};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(terms[i]["exp"] == std::to_string(i) + "/1");
    CHECK(terms[i]["coeff"]["a"] == coeffs[i]);
  }
  const auto t = run_json({"character", "--space", "twisted", "--trunc", "1", "--basis"});
  CHECK(t["series"]["terms"][1]["exp"] == "1/2");
  CHECK(t["basis"].size() == 6);
  CHECK(t["basis"][0] == "|w->");
  const auto e = run_json({"character", "--space", "ns-fermion", "--trunc", "0"});
  REQUIRE(e["series"]["terms"].size() == 1);
  CHECK(e["series"]["terms"][0]["exp"] == "-1/48");
  const Result text = run({"character", "--space", "vosa", "--trunc", "1", "--basis"});
  CHECK(text.out.find("a(-1)|0>\n") != std::string::npos);
}

TEST_CASE("calibrate and corollary2") {
  const auto c = run_json({"calibrate", "n2", "--window", "1"});
  CHECK(c["pass"] == true);
  CHECK(c["scalars"]["solutions"] == 4);
  const auto k = run_json({"corollary2", "--trunc", "3"});
  CHECK(k["pass"] == true);
  CHECK(k["mirror_ground"] == "1/8");
  CHECK(k["sigma_character"]["terms"].size() == 4);
}

TEST_CASE("all: small configuration, skips and determinism") {
  const std::vector<std::string> small{"all",          "--max-weight", "1/2", "--window",          "1",
                                       "--algebra-window", "2",        "--vosa-weight", "2", "--vosa-window",
                                       "1",            "--corollary-trunc", "1", "--samples", "2"};
  const Result a = run(small);
  CHECK(a.code == 0);
  CHECK(a.out.find("summary: checks") != std::string::npos);

  auto with_json = small;
  with_json.push_back("--json");
  const Result first = run(with_json);
  const Result second = run(with_json);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const auto j = nlohmann::json::parse(first.out);
  CHECK(j["suites"].size() == 8);
  CHECK(j["summary"]["skipped"] == 0);

  auto skipping = small;
  skipping[4] = "0";
  CHECK(run(skipping).code == 1);
  skipping.push_back("--allow-skip");
  const Result allowed = run(skipping);
  CHECK(allowed.code == 0);
  CHECK(allowed.out.find("SKIPPED") != std::string::npos);
}
