#include "combdyn/successors.hpp"

#include <algorithm>

#include "combdyn/markov.hpp"
#include "json.hpp"

namespace combdyn {

SuccessorSet enumerate_successors(const Cycle& theta, int max_length) {
  const int n = theta.size();
  if (n > max_length || n > 62) {
    throw Error(ErrorCode::CapExceeded, "enumerating 2^" + std::to_string(n) + " swap sets exceeds the cap of n <= " +
                                            std::to_string(max_length));
  }
  SuccessorSet out{theta, {}, {}};
  const std::uint64_t total = std::uint64_t{1} << n;
  out.cyclic.reserve(total / 2);
  out.non_cyclic.reserve(total / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SwapSet swaps = SwapSet::from_mask(mask);
    Permutation eta = successor_candidate(theta, swaps);
    if (is_cycle(eta)) {
      out.cyclic.emplace_back(std::move(swaps), Cycle(std::move(eta)));
    } else {
      out.non_cyclic.emplace_back(std::move(swaps), std::move(eta));
    }
  }
  return out;
}

namespace {

enum class Shape { Start, Rising, Falling };

struct UnimodalSearch {
  const Cycle& theta;
  std::vector<int> chosen;
  std::vector<Cycle> found;

  // Appends value to a rise-then-fall prefix ending in `last`; false if the
  // prefix would stop being unimodal.
  static bool extend(Shape& shape, int last, int value) {
    if (value > last) {
      if (shape == Shape::Falling) return false;
      shape = Shape::Rising;
    } else {
      if (shape == Shape::Start) return false;
      shape = Shape::Falling;
    }
    return true;
  }

  void walk(int k, Shape shape, int last) {
    const int n = theta.size();
    if (k > n) {
      if (chosen.size() % 2 == 0) return;
      Permutation eta = successor_candidate(theta, SwapSet(chosen));
      if (!is_cycle(eta)) return;
      Cycle candidate(std::move(eta));
      if (modality(candidate).is_unimodal()) found.push_back(std::move(candidate));
      return;
    }
    const int lo = 2 * theta(k) - 1;
    const int hi = 2 * theta(k);
    for (bool swapped : {false, true}) {
      const int first = swapped ? hi : lo;
      const int second = swapped ? lo : hi;
      Shape next = shape;
      if (k > 1 && !extend(next, last, first)) continue;
      if (!extend(next, first, second)) continue;
      if (swapped) chosen.push_back(k);
      walk(k + 1, next, second);
      if (swapped) chosen.pop_back();
    }
  }
};

}  // namespace

Cycle unimodal_double(const Cycle& theta) {
  const int n = theta.size();
  if (n == 1) return Cycle(std::vector<int>{2, 1});
  if (n >= 3 && !modality(theta).is_unimodal()) {
    throw Error(ErrorCode::NotUnimodal, to_cycle_notation(theta) + " has modality " + to_string(modality(theta)));
  }
  UnimodalSearch search{theta, {}, {}};
  search.walk(1, Shape::Start, 0);
  if (search.found.empty()) {
    throw UnimodalSuccessorError(ErrorCode::NoUnimodalSuccessor,
                                 "no cyclic doubling of " + to_cycle_notation(theta) + " is unimodal", {});
  }
  if (search.found.size() > 1) {
    std::string list;
    for (const auto& c : search.found) list += " " + to_cycle_notation(c);
    throw UnimodalSuccessorError(ErrorCode::MultipleUnimodalSuccessors,
                                 to_cycle_notation(theta) + " has several unimodal doublings:" + list,
                                 std::move(search.found));
  }
  return std::move(search.found.front());
}

bool verify_factorization(const Cycle& theta, const SwapSet& swaps) {
  if (!swaps.is_odd()) {
    throw Error(ErrorCode::EvenSwapCount, "swap set " + to_string(swaps) + " has even cardinality");
  }
  const Cycle eta(successor_candidate(theta, swaps));
  return charpoly(build_digraph(eta)) == charpoly(build_digraph(theta)) * cyclotomic_like(theta.size());
}

bool Cascade::all_verified() const noexcept {
  return std::all_of(verified.begin(), verified.end(), [](bool v) { return v; });
}

IntPolynomial cascade_product(const IntPolynomial& seed_polynomial, int seed_period, int levels) {
  IntPolynomial out = seed_polynomial;
  int period = seed_period;
  for (int i = 1; i <= levels; ++i, period *= 2) out *= cyclotomic_like(period);
  return out;
}

Cascade cascade(const Cycle& seed, int levels, const CascadeOptions& options) {
  if (levels < 0) throw Error(ErrorCode::InvalidParameter, "levels must be nonnegative");
  const int k = seed.size();
  if (k >= 3 && !modality(seed).is_unimodal()) {
    throw Error(ErrorCode::NotUnimodal, "cascade seed " + to_cycle_notation(seed) + " is not unimodal");
  }
  long long top = k;
  for (int i = 0; i < levels; ++i) {
    top *= 2;
    if (top > options.max_period) {
      throw Error(ErrorCode::CapExceeded, "period " + std::to_string(k) + "*2^" + std::to_string(levels) +
                                              " exceeds the cap " + std::to_string(options.max_period));
    }
  }
  if (top > options.max_period) {
    throw Error(ErrorCode::CapExceeded, "seed period exceeds the cap " + std::to_string(options.max_period));
  }

  Cascade out{seed, {}, {charpoly(build_digraph(seed))}, {}};
  IntPolynomial expected = out.polynomials.front();
  for (int i = 1; i <= levels; ++i) {
    const Cycle& previous = out.at(i - 1);
    Cycle next = unimodal_double(previous);
    IntPolynomial poly = charpoly(build_digraph(next));
    expected *= cyclotomic_like(previous.size());
    const bool ok = poly == expected && poly == out.polynomials.back() * cyclotomic_like(previous.size());
    if (!ok && options.throw_on_violation) {
      throw Error(ErrorCode::FormulaViolation, "level " + std::to_string(i) + " polynomial " + to_string(poly) +
                                                   " differs from the product " + to_string(expected));
    }
    out.levels.push_back(std::move(next));
    out.polynomials.push_back(std::move(poly));
    out.verified.push_back(ok);
  }
  return out;
}

namespace {

nlohmann::ordered_json cycle_json(const Cycle& c) {
  return {{"cycle", to_cycle_notation(c)}, {"images", std::vector<int>(c.images().begin(), c.images().end())}};
}

}  // namespace

std::string to_json(const Cascade& c) {
  nlohmann::ordered_json j;
  j["seed"] = cycle_json(c.seed);
  j["seed_period"] = c.seed_period();
  auto& levels = j["levels"] = nlohmann::ordered_json::array();
  for (int i = 0; i <= static_cast<int>(c.levels.size()); ++i) {
    auto entry = cycle_json(c.at(i));
    entry["level"] = i;
    entry["polynomial"] = nlohmann::ordered_json::parse(to_json(c.polynomials.at(static_cast<std::size_t>(i))));
    entry["verified"] = i == 0 ? true : static_cast<bool>(c.verified.at(static_cast<std::size_t>(i - 1)));
    levels.push_back(std::move(entry));
  }
  j["all_verified"] = c.all_verified();
  return j.dump();
}

std::string to_json(const SuccessorSet& s, bool cyclic_only) {
  nlohmann::ordered_json j;
  j["base"] = cycle_json(s.base);
  auto& cyclic = j["cyclic"] = nlohmann::ordered_json::array();
  for (const auto& [swaps, eta] : s.cyclic) {
    auto entry = cycle_json(eta);
    entry["swaps"] = std::vector<int>(swaps.indices().begin(), swaps.indices().end());
    entry["modality"] = eta.size() >= 3 ? to_string(modality(eta)) : "";
    cyclic.push_back(std::move(entry));
  }
  if (!cyclic_only) {
    auto& rest = j["non_cyclic"] = nlohmann::ordered_json::array();
    for (const auto& [swaps, eta] : s.non_cyclic) {
      rest.push_back({{"swaps", std::vector<int>(swaps.indices().begin(), swaps.indices().end())},
                      {"images", std::vector<int>(eta.images().begin(), eta.images().end())}});
    }
  }
  return j.dump();
}

}  // namespace combdyn
