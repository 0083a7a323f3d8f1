#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = combdyn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("charpoly") {
  const Result r = run({"charpoly", "(135246)"});
  CHECK(r.code == 0);
  CHECK(r.out == "l^5 - l^4 - l^3 - l^2 + l + 1\n");
  const Result j = run({"charpoly", "(1324)", "--format", "json"});
  CHECK(j.out.find(R"("coeffs":["1","-1","-1","1"])") != std::string::npos);
}

TEST_CASE("digraph formats") {
  CHECK(run({"digraph", "(123)", "--format", "dot"}).out == slurp(COMBDYN_GOLDEN_DIR "/digraph_123.dot"));
  CHECK(run({"digraph", "(1324)", "--format", "json"}).out == slurp(COMBDYN_GOLDEN_DIR "/digraph_1324.json"));
  CHECK(run({"digraph", "(1324)"}).code == 0);
}

TEST_CASE("successors and double") {
  const Result s = run({"successors", "(1324)", "--unimodal-only"});
  CHECK(s.code == 0);
  CHECK(s.out.find("(15472638)") != std::string::npos);
  CHECK(s.out.find("(16482537)") == std::string::npos);
  const Result d = run({"double", "(123)", "--swaps", "3", "--format", "dot"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("digraph G {", 0) == 0);
  const Result even = run({"double", "(123)", "--swaps", "1,2"});
  CHECK(even.code == 1);
  CHECK(even.err.find("EvenSwapCount") != std::string::npos);
}

TEST_CASE("cascade --verify") {
  const Result r = run({"cascade", "(1)", "--levels", "3", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(15472638)") != std::string::npos);
  CHECK(run({"cascade", "(1)", "--levels", "7"}).code == 1);
  CHECK(run({"cascade", "(1)", "--levels", "7", "--max-period", "128", "--format", "json"}).code == 0);
}

TEST_CASE("forces and forced-types") {
  const Result r = run({"forces", "(123)", "(12)"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\nwitness loop [1,2] orbit {5/3, 8/3} type (12)\n");
  CHECK(run({"forces", "(12)", "(123)"}).out.rfind("false", 0) == 0);
  const Result t = run({"forced-types", "(1324)", "--max-period", "4"});
  CHECK(t.code == 0);
  CHECK(t.out.find("(1324)") != std::string::npos);
}

TEST_CASE("logistic commands") {
  const Result r = run({"logistic", "--a", "3.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1324)") != std::string::npos);
  CHECK(run({"logistic", "--a", "3.9"}).code == 1);
  const Result scan = run({"logistic-scan", "--from", "2.9", "--to", "3.1", "--step", "0.05", "--burn-in", "20000", "--format", "csv"});
  CHECK(scan.code == 0);
  CHECK(scan.out.rfind("a,period\n", 0) == 0);
  CHECK(run({"certify-cascade", "--a-list", "3.2,3.5,3.55"}).code == 0);
  CHECK(run({"certify-cascade", "--a-list", "3.835"}).code == 1);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"charpoly"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Result bad = run({"charpoly", "(1225)"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("error: ", 0) == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"successors", "(12345)", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}
