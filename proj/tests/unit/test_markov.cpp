#include "doctest.h"

#include <fstream>
#include <sstream>

#include "combdyn/error.hpp"
#include "combdyn/markov.hpp"
#include "oracles.hpp"

using namespace combdyn;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(COMBDYN_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidParameter;
}

// Odd swap set turning theta into eta, found by enumeration.
SwapSet solve_swaps(const Cycle& theta, const Cycle& eta) {
  for (std::uint64_t mask = 0; mask < (1u << theta.size()); ++mask) {
    const SwapSet s = SwapSet::from_mask(mask);
    if (s.is_odd() && successor_candidate(theta, s) == eta.permutation()) return s;
  }
  FAIL("no swap set found");
  return {};
}

}  // namespace

TEST_CASE("connect_the_dots pieces") {
  const auto two = connect_the_dots(parse_cycle("(12)"));
  REQUIRE(two.pieces().size() == 1);
  CHECK(two.piece(1) == AffinePiece{1, -1, 3});

  const auto three = connect_the_dots(parse_cycle("(123)"));
  REQUIRE(three.pieces().size() == 2);
  CHECK(three.piece(1) == AffinePiece{1, 1, 1});
  CHECK(three.piece(2) == AffinePiece{2, -2, 7});

  CHECK(connect_the_dots(Cycle::trivial()).pieces().empty());
}

TEST_CASE("connect_the_dots is continuous, interpolates theta and stays in [1, n]") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const Cycle c = oracle::random_cycle(2 + rep % 15, rng);
    const auto map = connect_the_dots(c);
    for (const auto& piece : map.pieces()) {
      CHECK(piece.at(piece.index) == c(piece.index));
      CHECK(piece.at(piece.index + 1) == c(piece.index + 1));
      CHECK(piece.slope != 0);
      CHECK(std::min(piece.at(piece.index), piece.at(piece.index + 1)) >= 1);
      CHECK(std::max(piece.at(piece.index), piece.at(piece.index + 1)) <= c.size());
    }
  }
}

TEST_CASE("build_digraph on the worked examples") {
  const SignedDigraph g12 = build_digraph(parse_cycle("(12)"));
  CHECK(g12.signs() == std::vector{-1});
  CHECK(g12.adjacency() == IntMatrix{{1}});

  const SignedDigraph g123 = build_digraph(parse_cycle("(123)"));
  CHECK(g123.signs() == std::vector{1, -1});
  CHECK(g123.adjacency() == IntMatrix{{0, 1}, {1, 1}});

  const SignedDigraph g1324 = build_digraph(parse_cycle("(1324)"));
  CHECK(g1324.signs() == std::vector{1, -1, -1});
  CHECK(g1324.adjacency() == IntMatrix{{0, 0, 1}, {0, 1, 1}, {1, 0, 0}});

  CHECK(build_digraph(Cycle::trivial()).vertex_count() == 0);
}

TEST_CASE("rows are contiguous blocks of width |theta(i+1) - theta(i)|") {
  for (int n = 2; n <= 7; ++n) {
    for (const Cycle& c : all_cycles(n)) {
      const SignedDigraph g = build_digraph(c);
      for (int i = 1; i < n; ++i) {
        const auto& row = g.adjacency()[static_cast<std::size_t>(i - 1)];
        const auto first = std::find(row.begin(), row.end(), 1);
        const auto width = std::count(row.begin(), row.end(), 1);
        CHECK(width == std::abs(c(i + 1) - c(i)));
        CHECK(std::all_of(first, first + width, [](int e) { return e == 1; }));
        CHECK(g.sign(i) == (c(i) < c(i + 1) ? 1 : -1));
      }
    }
  }
}

TEST_CASE("recover_cycle inverts build_digraph") {
  CHECK(recover_cycle(SignedDigraph({-1}, {{1}})) == parse_cycle("(12)"));
  CHECK(recover_cycle(SignedDigraph({1, -1}, {{0, 1}, {1, 1}})) == parse_cycle("(123)"));
  CHECK(recover_cycle(SignedDigraph{}) == Cycle::trivial());
  for (int n = 1; n <= 7; ++n) {
    for (const Cycle& c : all_cycles(n)) CHECK(recover_cycle(build_digraph(c)) == c);
  }
}

TEST_CASE("recover_cycle rejects graphs that no cycle produces") {
  CHECK(code_of([] { recover_cycle(SignedDigraph({1, 1}, {{0, 1}, {1, 1}})); }) == ErrorCode::Inconsistent);
  CHECK(code_of([] { recover_cycle(SignedDigraph({1, -1}, {{0, 0}, {1, 1}})); }) == ErrorCode::Inconsistent);
  CHECK(code_of([] { recover_cycle(SignedDigraph({1, 1, -1}, {{1, 0, 1}, {0, 1, 0}, {1, 0, 0}})); }) ==
        ErrorCode::Inconsistent);
  // The identity on two points: one + vertex with a loop.
  CHECK(code_of([] { recover_cycle(SignedDigraph({1}, {{1}})); }) == ErrorCode::NotACycle);
  // [3,4,1,2] = star of (12): consistent graph, but not a single cycle.
  CHECK(code_of([] { recover_cycle(SignedDigraph({1, -1, 1}, {{0, 0, 1}, {1, 1, 1}, {1, 0, 0}})); }) ==
        ErrorCode::NotACycle);
  CHECK(code_of([] { SignedDigraph({1}, {{2}}); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { SignedDigraph({0}, {{1}}); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("exhaustive: the signed 2-vertex graphs that recover are exactly G(C_3)") {
  int recovered = 0;
  for (int mask = 0; mask < 16; ++mask) {
    for (int signs = 0; signs < 4; ++signs) {
      IntMatrix adj{{mask & 1, (mask >> 1) & 1}, {(mask >> 2) & 1, (mask >> 3) & 1}};
      SignedDigraph g({signs & 1 ? 1 : -1, signs & 2 ? 1 : -1}, adj);
      try {
        const Cycle c = recover_cycle(g);
        CHECK(build_digraph(c) == g);
        ++recovered;
      } catch (const Error&) {
      }
    }
  }
  CHECK(recovered == 2);
}

TEST_CASE("double_graph") {
  const SignedDigraph g12 = build_digraph(parse_cycle("(12)"));
  CHECK(double_graph(g12, SwapSet({2})) == build_digraph(parse_cycle("(1324)")));

  const Cycle c123 = parse_cycle("(123)");
  const SwapSet to_six = solve_swaps(c123, parse_cycle("(135246)"));
  CHECK(to_six == SwapSet({3}));
  const SignedDigraph six = double_graph(build_digraph(c123), to_six);
  CHECK(six.vertex_count() == 5);
  CHECK(six == build_digraph(parse_cycle("(135246)")));

  const Cycle c1324 = parse_cycle("(1324)");
  const SwapSet to_eight = solve_swaps(c1324, parse_cycle("(15472638)"));
  CHECK(to_eight == SwapSet({2, 3, 4}));
  CHECK(double_graph(build_digraph(c1324), to_eight) == build_digraph(parse_cycle("(15472638)")));

  CHECK(code_of([&] { double_graph(g12, SwapSet({1, 2})); }) == ErrorCode::EvenSwapCount);
  CHECK(code_of([&] { double_graph(SignedDigraph({1, 1}, {{0, 1}, {1, 1}}), SwapSet({1})); }) ==
        ErrorCode::Inconsistent);
}

TEST_CASE("drawn graph of theta_3 matches G((15472638))") {
  // Signs and edges read off the period-8 figure.
  const SignedDigraph g = build_digraph(parse_cycle("(15472638)"));
  CHECK(g.signs() == std::vector{1, 1, -1, -1, -1, -1, -1});
  const IntMatrix expected{
      {0, 0, 0, 0, 1, 0, 0},  // v1 -> v5
      {0, 0, 0, 0, 0, 1, 1},  // v2 -> v6, v7
      {0, 0, 0, 0, 0, 0, 1},  // v3 -> v7
      {0, 0, 0, 1, 1, 1, 0},  // v4 -> v4, v5, v6
      {0, 0, 1, 0, 0, 0, 0},  // v5 -> v3
      {0, 1, 0, 0, 0, 0, 0},  // v6 -> v2
      {1, 0, 0, 0, 0, 0, 0},  // v7 -> v1
  };
  CHECK(g.adjacency() == expected);
}

TEST_CASE("block structure of doubled graphs (n <= 5, all odd swap sets)") {
  for (int n = 1; n <= 5; ++n) {
    for (const Cycle& theta : all_cycles(n)) {
      const SignedDigraph a = build_digraph(theta);
      for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
        const SwapSet swaps = SwapSet::from_mask(mask);
        if (!swaps.is_odd()) continue;
        const SignedDigraph b = build_digraph(Cycle(successor_candidate(theta, swaps)));
        for (int i = 1; i <= n - 1; ++i) {
          CHECK(b.sign(2 * i) == a.sign(i));
          for (int j = 1; j <= n - 1; ++j) CHECK(b.has_edge(2 * i, 2 * j) == a.has_edge(i, j));
        }
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n - 1; ++j) CHECK_FALSE(b.has_edge(2 * i - 1, 2 * j));
          for (int j = 1; j <= n; ++j) CHECK(b.has_edge(2 * i - 1, 2 * j - 1) == (j == theta(i)));
        }
      }
    }
  }
}

TEST_CASE("DOT export matches golden files") {
  CHECK(to_dot(build_digraph(parse_cycle("(123)"))) == slurp("digraph_123.dot"));
  CHECK(to_dot(build_digraph(parse_cycle("(12)"))) == slurp("digraph_12.dot"));
  CHECK(to_dot(SignedDigraph{}) == slurp("digraph_empty.dot"));

  std::istringstream lines(to_dot(build_digraph(parse_cycle("(12)"))));
  int loops = 0;
  for (std::string line; std::getline(lines, line);) {
    line.erase(0, line.find_first_not_of(' '));
    loops += line == "v1 -> v1";
  }
  CHECK(loops == 1);
}

TEST_CASE("JSON export") {
  CHECK(to_json(build_digraph(parse_cycle("(1324)"))) + "\n" == slurp("digraph_1324.json"));
  CHECK(to_json(SignedDigraph{}) == R"({"n":0,"signs":[],"edges":[]})");
}
