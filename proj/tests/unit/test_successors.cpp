#include "doctest.h"

#include <set>

#include "combdyn/error.hpp"
#include "combdyn/markov.hpp"
#include "combdyn/successors.hpp"
#include "oracles.hpp"

using namespace combdyn;

namespace {

std::string str(const Cycle& c) { return to_cycle_notation(c); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidParameter;
}

// Brute force: every odd swap set, keep cyclic candidates with modality (+,1).
std::vector<Cycle> unimodal_by_filter(const Cycle& theta) {
  std::vector<Cycle> out;
  const int n = theta.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const SwapSet s = SwapSet::from_mask(mask);
    const Permutation eta = successor_candidate(theta, s);
    if (!is_cycle(eta)) continue;
    if (n == 1) {
      out.emplace_back(eta);
      continue;
    }
    const Modality m = modality(Cycle(eta));
    if (m.extrema_count == 1 && m.leading_sign == 1) out.emplace_back(eta);
  }
  return out;
}

}  // namespace

TEST_CASE("successor counts split evenly by parity") {
  for (int n = 1; n <= 6; ++n) {
    for (const Cycle& theta : all_cycles(n)) {
      const SuccessorSet s = enumerate_successors(theta);
      CHECK(s.cyclic.size() == (std::size_t{1} << (n - 1)));
      CHECK(s.non_cyclic.size() == (std::size_t{1} << (n - 1)));
      for (const auto& [swaps, eta] : s.cyclic) CHECK(swaps.is_odd());
      for (const auto& [swaps, eta] : s.non_cyclic) CHECK_FALSE(swaps.is_odd());
    }
  }
}

TEST_CASE("successors of small cycles") {
  const SuccessorSet one = enumerate_successors(Cycle::trivial());
  REQUIRE(one.cyclic.size() == 1);
  CHECK(str(one.cyclic[0].second) == "(12)");

  const SuccessorSet two = enumerate_successors(parse_cycle("(12)"));
  std::set<std::string> got;
  for (const auto& [s, c] : two.cyclic) got.insert(str(c));
  CHECK(got == std::set<std::string>{"(1324)", "(1423)"});

  const SuccessorSet three = enumerate_successors(parse_cycle("(123)"));
  REQUIRE(three.cyclic.size() == 4);
  CHECK(to_string(three.cyclic[0].first) == "{1}");
  CHECK(str(three.cyclic[0].second) == "(146235)");
  CHECK(to_string(three.cyclic[1].first) == "{2}");
  CHECK(str(three.cyclic[1].second) == "(136245)");
  CHECK(to_string(three.cyclic[2].first) == "{3}");
  CHECK(str(three.cyclic[2].second) == "(135246)");
  CHECK(to_string(three.cyclic[3].first) == "{1,2,3}");
  CHECK(str(three.cyclic[3].second) == "(145236)");
}

TEST_CASE("the eight cyclic successors of (1324)") {
  const SuccessorSet s = enumerate_successors(parse_cycle("(1324)"));
  std::map<std::string, std::pair<std::string, std::string>> got;
  for (const auto& [swaps, eta] : s.cyclic) got[to_string(swaps)] = {str(eta), to_string(modality(eta))};
  CHECK(got.at("{1}") == std::pair<std::string, std::string>{"(16482537)", "-5"});
  CHECK(got.at("{2}") == std::pair<std::string, std::string>{"(15382647)", "+4"});
  CHECK(got.at("{3}") == std::pair<std::string, std::string>{"(15482637)", "+2"});
  CHECK(got.at("{4}") == std::pair<std::string, std::string>{"(15372648)", "+3"});
  CHECK(got.at("{1,2,3}") == std::pair<std::string, std::string>{"(16382547)", "-3"});
  CHECK(got.at("{1,2,4}") == std::pair<std::string, std::string>{"(16472538)", "-4"});
  CHECK(got.at("{1,3,4}") == std::pair<std::string, std::string>{"(16372548)", "-2"});
  CHECK(got.at("{2,3,4}") == std::pair<std::string, std::string>{"(15472638)", "+1"});
}

TEST_CASE("enumerate_successors cap") {
  CHECK(code_of([] { enumerate_successors(parse_cycle("(1234)"), 3); }) == ErrorCode::CapExceeded);
}

TEST_CASE("unimodal_double examples") {
  CHECK(str(unimodal_double(Cycle::trivial())) == "(12)");
  CHECK(str(unimodal_double(parse_cycle("(12)"))) == "(1324)");
  CHECK(str(unimodal_double(parse_cycle("(1324)"))) == "(15472638)");
  CHECK(str(unimodal_double(parse_cycle("(123)"))) == "(135246)");
  CHECK(code_of([] { unimodal_double(parse_cycle("(1423)")); }) == ErrorCode::NotUnimodal);
}

TEST_CASE("unimodal_double agrees with enumerate-and-filter for every unimodal cycle (n <= 8)") {
  int checked = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const Cycle& theta : all_cycles(n)) {
      if (!modality(theta).is_unimodal()) continue;
      const std::vector<Cycle> brute = unimodal_by_filter(theta);
      if (brute.size() == 1) {
        CHECK(unimodal_double(theta) == brute.front());
      } else {
        try {
          unimodal_double(theta);
          FAIL("expected a uniqueness error");
        } catch (const UnimodalSuccessorError& e) {
          CHECK(e.candidates().size() == brute.size());
          CHECK(e.code() == (brute.empty() ? ErrorCode::NoUnimodalSuccessor : ErrorCode::MultipleUnimodalSuccessors));
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("the unimodal successor is unique along cascades up to period 32") {
  for (const char* seed : {"(1)", "(123)", "(12345)"}) {
    Cycle theta = parse_cycle(seed);
    while (theta.size() * 2 <= 32) {
      const std::vector<Cycle> brute = theta.size() * 2 <= 16 ? unimodal_by_filter(theta) : std::vector<Cycle>{};
      const Cycle next = unimodal_double(theta);
      if (!brute.empty()) {
        REQUIRE(brute.size() == 1);
        CHECK(brute.front() == next);
      }
      if (next.size() >= 3) CHECK(modality(next).is_unimodal());
      theta = next;
    }
  }
}

TEST_CASE("cascade from (1)") {
  const Cascade c = cascade(Cycle::trivial(), 3);
  REQUIRE(c.levels.size() == 3);
  CHECK(str(c.at(1)) == "(12)");
  CHECK(str(c.at(2)) == "(1324)");
  CHECK(str(c.at(3)) == "(15472638)");
  REQUIRE(c.polynomials.size() == 4);
  CHECK(c.polynomials[0] == IntPolynomial{1});
  CHECK(c.polynomials[1] == IntPolynomial{-1, 1});
  CHECK(c.polynomials[3] == IntPolynomial{-1, 1, 1, -1, 1, -1, -1, 1});
  CHECK(c.all_verified());
}

TEST_CASE("cascade degrees and product formula") {
  for (const char* seed : {"(1)", "(123)", "(12345)"}) {
    const Cycle s = parse_cycle(seed);
    const int k = s.size();
    const int levels = k == 1 ? 5 : 3;
    const Cascade c = cascade(s, levels);
    for (int i = 0; i <= levels; ++i) {
      CHECK(c.at(i).size() == k << i);
      CHECK(c.polynomials[static_cast<std::size_t>(i)].degree() == (k << i) - 1);
      CHECK(c.polynomials[static_cast<std::size_t>(i)] == cascade_product(c.polynomials[0], k, i));
      CHECK(c.polynomials[static_cast<std::size_t>(i)] == charpoly(build_digraph(c.at(i))));
    }
    CHECK(c.all_verified());
  }
}

TEST_CASE("cascade errors") {
  CHECK(code_of([] { cascade(Cycle::trivial(), 7); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { cascade(Cycle::trivial(), -1); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { cascade(parse_cycle("(1423)"), 1); }) == ErrorCode::NotUnimodal);
  CHECK(cascade(Cycle::trivial(), 0).levels.empty());
  CascadeOptions big;
  big.max_period = 128;
  CHECK(cascade(Cycle::trivial(), 7, big).all_verified());
}

TEST_CASE("verify_factorization holds for every odd doubling, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Cycle& theta : all_cycles(n))
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const SwapSet s = SwapSet::from_mask(mask);
        if (s.is_odd()) CHECK(verify_factorization(theta, s));
      }
  CHECK(code_of([] { verify_factorization(parse_cycle("(123)"), SwapSet({1, 2})); }) == ErrorCode::EvenSwapCount);
}

TEST_CASE("all cyclic successors of a random cycle share one polynomial") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const Cycle theta = oracle::random_cycle(3 + rep % 5, rng);
    const SuccessorSet s = enumerate_successors(theta);
    std::set<std::string> polys;
    for (const auto& [swaps, eta] : s.cyclic) polys.insert(to_string(charpoly(build_digraph(eta))));
    CHECK(polys.size() == 1);
  }
}

TEST_CASE("cascade JSON") {
  const std::string j = to_json(cascade(Cycle::trivial(), 1));
  CHECK(j.find("\"seed\":{\"cycle\":\"(1)\"") != std::string::npos);
  CHECK(j.find("\"all_verified\":true") != std::string::npos);
}
