#include "combdyn/forcing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "combdyn/error.hpp"
#include "json.hpp"

namespace combdyn {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Loop canonical_loop(std::vector<int> vertices) {
  std::vector<int> best = vertices;
  for (std::size_t shift = 1; shift < vertices.size(); ++shift) {
    std::rotate(vertices.begin(), vertices.begin() + 1, vertices.end());
    if (vertices < best) best = vertices;
  }
  return Loop{std::move(best)};
}

Rational evaluate(const PiecewiseLinearMap& map, const Rational& x) {
  if (map.size() == 1) return x;
  if (x < 1 || x > map.size()) {
    throw Error(ErrorCode::OutOfRange, "point " + to_string(x) + " lies outside [1, " + std::to_string(map.size()) + "]");
  }
  // floor(x), clamped so that x == n uses the last piece.
  BigInt whole = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  int index = std::min(static_cast<int>(whole), map.size() - 1);
  const AffinePiece& piece = map.piece(index);
  return Rational(piece.slope) * x + Rational(piece.intercept);
}

Cycle orbit_type_of(const std::vector<Rational>& orbit) {
  const std::size_t p = orbit.size();
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return orbit[a] < orbit[b]; });
  // rank[t] = position of orbit[t] in increasing order (1-based).
  std::vector<int> rank(p);
  for (std::size_t r = 0; r < p; ++r) rank[order[r]] = static_cast<int>(r) + 1;
  std::vector<int> images(p);
  for (std::size_t r = 0; r < p; ++r) images[r] = rank[(order[r] + 1) % p];
  return Cycle(std::move(images));
}

namespace {

struct LoopWalker {
  const SignedDigraph& g;
  int q;
  std::size_t max_loops;
  std::vector<int> walk;
  std::vector<Loop> out;

  void extend() {
    const int start = walk.front();
    const int last = walk.back();
    if (static_cast<int>(walk.size()) == q) {
      if (!g.has_edge(last, start)) return;
      Loop loop = canonical_loop(walk);
      if (loop.vertices != walk) return;
      if (out.size() >= max_loops) {
        throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(max_loops) + " loops of length " +
                                                std::to_string(q));
      }
      out.push_back(std::move(loop));
      return;
    }
    // A canonical rotation starts at its smallest vertex.
    for (int next = start; next <= g.vertex_count(); ++next) {
      if (!g.has_edge(last, next)) continue;
      walk.push_back(next);
      extend();
      walk.pop_back();
    }
  }
};

// boost 1.74's rational rejects negative denominators outright.
Rational make_rational(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

struct Interval {
  Rational lo;
  Rational hi;
  bool empty() const { return lo > hi; }
};

}  // namespace

std::vector<Loop> loops_of_length(const SignedDigraph& g, int q, const ForcingLimits& limits) {
  if (q < 1) throw Error(ErrorCode::InvalidParameter, "loop length must be positive");
  if (q > limits.max_loop_length) {
    throw Error(ErrorCode::CapExceeded, "loop length " + std::to_string(q) + " exceeds the cap " +
                                            std::to_string(limits.max_loop_length));
  }
  LoopWalker walker{g, q, limits.max_loops, {}, {}};
  for (int start = 1; start <= g.vertex_count(); ++start) {
    walker.walk.assign(1, start);
    walker.extend();
  }
  return std::move(walker.out);
}

std::optional<OrbitReport> orbit_from_loop(const Cycle& beta, const Loop& loop) {
  const SignedDigraph g = build_digraph(beta);
  const int q = loop.length();
  if (q == 0) throw Error(ErrorCode::NotALoop, "empty loop");
  for (int t = 0; t < q; ++t) {
    const int from = loop.vertices[static_cast<std::size_t>(t)];
    const int to = loop.vertices[static_cast<std::size_t>((t + 1) % q)];
    if (from < 1 || from > g.vertex_count() || to < 1 || to > g.vertex_count() || !g.has_edge(from, to)) {
      throw Error(ErrorCode::NotALoop, "no edge v" + std::to_string(from) + " -> v" + std::to_string(to));
    }
  }

  const PiecewiseLinearMap map = connect_the_dots(beta);
  // Track the affine map x -> slope*x + shift that carries the start point to
  // its t-th iterate, and the set of starts whose iterates follow the loop.
  BigInt slope = 1;
  BigInt shift = 0;
  const int first = loop.vertices.front();
  Interval admissible{Rational(first), Rational(first + 1)};
  for (int t = 1; t <= q; ++t) {
    const AffinePiece& piece = map.piece(loop.vertices[static_cast<std::size_t>(t - 1)]);
    shift = BigInt(piece.slope) * shift + piece.intercept;
    slope *= piece.slope;
    const int target = loop.vertices[static_cast<std::size_t>(t % q)];
    Rational a = make_rational(BigInt(target) - shift, slope);
    Rational b = make_rational(BigInt(target + 1) - shift, slope);
    if (a > b) std::swap(a, b);
    admissible.lo = std::max(admissible.lo, a);
    admissible.hi = std::min(admissible.hi, b);
    if (admissible.empty()) return std::nullopt;
  }

  Rational x;
  if (slope == 1) {
    if (shift != 0) return std::nullopt;
    x = (admissible.lo + admissible.hi) / 2;
  } else {
    x = make_rational(shift, BigInt(1) - slope);
    if (x < admissible.lo || x > admissible.hi) return std::nullopt;
  }

  OrbitReport report;
  report.points.push_back(x);
  Rational y = evaluate(map, x);
  while (y != x) {
    if (static_cast<int>(report.points.size()) == q) {
      throw std::logic_error("loop fixed point did not return after one traversal");
    }
    report.points.push_back(y);
    y = evaluate(map, y);
  }
  report.least_period = static_cast<int>(report.points.size());
  report.orbit_type = orbit_type_of(report.points);
  return report;
}

ForcingResult forcing_witness(const Cycle& beta, const Cycle& alpha, const ForcingLimits& limits) {
  if (alpha == beta) return {true, std::nullopt, std::nullopt};
  const int q = alpha.size();
  const SignedDigraph g = build_digraph(beta);
  if (g.vertex_count() == 0) return {};
  for (const Loop& loop : loops_of_length(g, q, limits)) {
    auto orbit = orbit_from_loop(beta, loop);
    if (orbit && orbit->least_period == q && orbit->orbit_type == alpha) {
      return {true, loop, std::move(orbit)};
    }
  }
  return {};
}

std::vector<Cycle> forced_types(const Cycle& beta, int max_period, const ForcingLimits& limits) {
  if (max_period < 1) throw Error(ErrorCode::InvalidParameter, "max_period must be positive");
  if (max_period > limits.max_loop_length) {
    throw Error(ErrorCode::CapExceeded, "max_period " + std::to_string(max_period) + " exceeds the loop cap " +
                                            std::to_string(limits.max_loop_length));
  }
  std::set<Cycle> types{beta};
  const SignedDigraph g = build_digraph(beta);
  if (g.vertex_count() > 0) {
    for (int q = 1; q <= max_period; ++q) {
      for (const Loop& loop : loops_of_length(g, q, limits)) {
        if (auto orbit = orbit_from_loop(beta, loop)) types.insert(orbit->orbit_type);
      }
    }
  }
  return {types.begin(), types.end()};
}

std::string to_json(const Cycle& beta, const Cycle& alpha, const ForcingResult& result) {
  nlohmann::ordered_json j;
  j["beta"] = to_cycle_notation(beta);
  j["alpha"] = to_cycle_notation(alpha);
  j["forces"] = result.forces;
  if (result.witness && result.witness_loop) {
    nlohmann::ordered_json w;
    w["loop"] = result.witness_loop->vertices;
    auto& points = w["points"] = nlohmann::ordered_json::array();
    for (const auto& p : result.witness->points) points.push_back(to_string(p));
    w["orbit_type"] = to_cycle_notation(result.witness->orbit_type);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

}  // namespace combdyn
