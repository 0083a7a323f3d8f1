#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "combdyn/markov.hpp"
#include "combdyn/permutation.hpp"

namespace combdyn {

using Rational = boost::multiprecision::cpp_rational;

/// "num/den", always with an explicit denominator.
std::string to_string(const Rational& r);

/// A closed walk j_0 -> j_1 -> ... -> j_{q-1} -> j_0 in a digraph, stored
/// in its lexicographically least rotation.
struct Loop {
  std::vector<int> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop&, const Loop&) = default;
};

/// Rotates a vertex sequence into canonical (lexicographically least) form.
Loop canonical_loop(std::vector<int> vertices);

/// A periodic orbit of a connect-the-dots map, listed in orbit order.
struct OrbitReport {
  std::vector<Rational> points;
  int least_period = 0;
  Cycle orbit_type = Cycle::trivial();
};

struct ForcingLimits {
  int max_loop_length = 12;
  std::size_t max_loops = 2'000'000;
};

/// Evaluates the connect-the-dots map at x in [1, n].
Rational evaluate(const PiecewiseLinearMap& map, const Rational& x);

/// Orbit type of a finite orbit given in orbit order (x_{t+1} = f(x_t)).
Cycle orbit_type_of(const std::vector<Rational>& orbit);

/// All closed walks of length q up to rotation, sorted. Throws
/// Error(CapExceeded) past limits.max_loop_length or limits.max_loops.
std::vector<Loop> loops_of_length(const SignedDigraph& g, int q, const ForcingLimits& limits = {});

/// The periodic orbit of L_beta whose itinerary follows the loop, if any.
/// When the loop map is the identity every admissible point is periodic and
/// the midpoint of the admissible interval is reported. least_period may
/// properly divide the loop length. Throws Error(NotALoop).
std::optional<OrbitReport> orbit_from_loop(const Cycle& beta, const Loop& loop);

struct ForcingResult {
  bool forces = false;
  std::optional<Loop> witness_loop;
  std::optional<OrbitReport> witness;
};

/// Decides whether beta forces alpha by searching L_beta for an orbit of
/// type alpha. alpha == beta is reported true without a witness.
ForcingResult forcing_witness(const Cycle& beta, const Cycle& alpha, const ForcingLimits& limits = {});

inline bool forces(const Cycle& beta, const Cycle& alpha, const ForcingLimits& limits = {}) {
  return forcing_witness(beta, alpha, limits).forces;
}

/// Orbit types of length <= max_period realized by loops of G(beta), plus
/// beta itself; sorted by length then images.
std::vector<Cycle> forced_types(const Cycle& beta, int max_period, const ForcingLimits& limits = {});

/// {"beta", "alpha", "forces", "witness": {"loop", "points", "orbit_type"} | null}
std::string to_json(const Cycle& beta, const Cycle& alpha, const ForcingResult& result);

}  // namespace combdyn
