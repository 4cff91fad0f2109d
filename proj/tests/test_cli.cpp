#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bifree::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("bifree_test_" + name + ".json");
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("nc subcommand") {
  const Result four = run({"nc", "enumerate", "4"});
  CHECK(four.code == 0);
  CHECK(count_lines(four.out) == 14);
  CHECK(run({"nc", "enumerate", "4", "--count"}).out == "14\n");
  CHECK(count_lines(run({"nc", "enumerate-prime", "4"}).out) == 5);
  CHECK(run({"nc", "kreweras", "{1,6|2,3,4|5|7}"}).out == "{1,4,5|2|3|6,7}\n");
  CHECK(run({"nc", "bnc", "LLR", "--count"}).out == "5\n");
  const Result diagram = run({"nc", "bnc", "LR", "--diagram"});
  CHECK(diagram.out.find("1ℓ") != std::string::npos);
  CHECK(run({"nc", "enumerate", "x"}).code == 2);
  CHECK(run({"nc", "kreweras", "{1,3|2,4}"}).code == 2);
  CHECK(run({"nc", "frobnicate", "3"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("transform subcommand") {
  const std::string trivial = write_temp("trivial", R"({"trunc": 4, "kappa": [{"n": 1, "m": 0, "value": 1}, {"n": 0, "m": 1, "value": 1}]})");
  const std::string c = write_temp("c", R"({"trunc": 4, "kappa": [{"n": 1, "m": 0, "value": 1}, {"n": 0, "m": 1, "value": 1}, {"n": 1, "m": 1, "value": "3/2"}]})");
  const std::string scaled = write_temp("scaled", R"({"trunc": 4, "kappa": [{"n": 1, "m": 0, "value": 1}, {"n": 0, "m": 1, "value": 2}, {"n": 1, "m": 1, "value": 3}]})");
  const std::string broken = write_temp("broken", R"({"trunc": "x"})");

  CHECK(run({"transform", "t", trivial}).out == "1\n");
  CHECK(run({"transform", "t", c}).out == "1 + 3/2*z\n");
  CHECK(run({"transform", "t", c, "--method", "analytic"}).out == "1 + 3/2*z\n");
  CHECK(run({"transform", "s", trivial}).out == "1\n");
  CHECK(run({"transform", "r", c}).out == "z + w + 3/2*z*w\n");

  const Result unnormalized = run({"transform", "t", scaled});
  CHECK(unnormalized.code == 2);
  CHECK(unnormalized.err.find("--normalize") != std::string::npos);
  const Result normalized = run({"transform", "t", scaled, "--normalize"});
  CHECK(normalized.code == 0);
  CHECK(normalized.out == "1 + 3/2*z\n");

  CHECK(run({"transform", "t", c, "--order", "9"}).code == 2);
  CHECK(run({"transform", "t", c, "--order", "1"}).out == "1 + 3/2*z\n");
  const Result j = run({"transform", "t", c, "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["series"] == "1 + 3/2*z");
  CHECK(run({"transform", "t", broken}).code == 2);
  CHECK(run({"transform", "t", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("verify subcommand") {
  const Result t = run({"verify", "t-mult", "--order", "4", "--tables", "3", "--seed", "7"});
  CHECK(t.code == 0);
  CHECK(t.out.find("PASS 3/3") != std::string::npos);
  CHECK(run({"verify", "t-mult", "--order", "4", "--tables", "3", "--seed", "7"}).out == t.out);
  CHECK(run({"verify", "t-mult", "--order", "4", "--tables", "3", "--seed", "7", "--parallel"}).out == t.out);

  const Result swapped = run({"verify", "s-mult", "--order", "3", "--tables", "2", "--right-order", "b2b1"});
  CHECK(swapped.code == 1);
  CHECK(swapped.out.find("FAIL") != std::string::npos);

  const Result json_out = run({"verify", "s-mult", "--order", "3", "--tables", "2", "--format", "json"});
  CHECK(json_out.code == 0);
  CHECK(nlohmann::json::parse(json_out.out)["status"] == "ok");

  CHECK(run({"verify", "identities", "--order", "5", "--tables", "3"}).code == 0);
  CHECK(run({"verify", "lemmas", "--order", "6", "--tables", "1"}).code == 0);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "t-mult", "--order", "0"}).code == 2);
}
