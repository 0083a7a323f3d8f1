#pragma once

#include <string>
#include <vector>

#include "combdyn/permutation.hpp"
#include "combdyn/polynomial.hpp"

namespace combdyn {

/// Affine map x -> slope*x + intercept on the unit interval [index, index+1].
struct AffinePiece {
  int index = 0;
  long long slope = 0;
  long long intercept = 0;

  long long at(long long x) const noexcept { return slope * x + intercept; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// The connect-the-dots map of a permutation: agrees with it on 1..n and is
/// affine on every [i, i+1]. pieces()[i-1] covers [i, i+1].
class PiecewiseLinearMap {
 public:
  explicit PiecewiseLinearMap(const Permutation& p);

  int size() const noexcept { return n_; }
  const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }
  const AffinePiece& piece(int i) const { return pieces_.at(static_cast<std::size_t>(i - 1)); }

 private:
  int n_;
  std::vector<AffinePiece> pieces_;
};

PiecewiseLinearMap connect_the_dots(const Cycle& theta);

/// The signed Markov digraph of a cycle: vertex i stands for [i, i+1], is
/// positive when the map increases there, and has an edge to j whenever the
/// image of [i, i+1] covers [j, j+1].
class SignedDigraph {
 public:
  SignedDigraph() = default;
  /// signs[i-1] is +1 or -1; adjacency is square with 0/1 entries.
  SignedDigraph(std::vector<int> signs, IntMatrix adjacency);

  int vertex_count() const noexcept { return static_cast<int>(signs_.size()); }
  int sign(int v) const { return signs_.at(static_cast<std::size_t>(v - 1)); }
  bool has_edge(int from, int to) const {
    return adjacency_.at(static_cast<std::size_t>(from - 1)).at(static_cast<std::size_t>(to - 1)) != 0;
  }
  const std::vector<int>& signs() const noexcept { return signs_; }
  const IntMatrix& adjacency() const noexcept { return adjacency_; }

  friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

 private:
  std::vector<int> signs_;
  IntMatrix adjacency_;
};

/// G(theta). The one-point cycle gives the empty graph.
SignedDigraph build_digraph(const Cycle& theta);

/// Inverse of build_digraph. Throws Error(Inconsistent) when no permutation
/// produces g, Error(NotACycle) when the permutation is not one cycle.
Cycle recover_cycle(const SignedDigraph& g);

/// Graph of the doubled cycle successor_candidate(recover_cycle(g), swaps).
/// Throws Error(EvenSwapCount) unless swaps has odd cardinality.
SignedDigraph double_graph(const SignedDigraph& g, const SwapSet& swaps);

/// Characteristic polynomial of the adjacency matrix (1 for the empty graph).
inline IntPolynomial charpoly(const SignedDigraph& g) { return charpoly(g.adjacency()); }

std::string to_dot(const SignedDigraph& g);
/// {"n": vertices, "signs": ["+","-",...], "edges": [[i,j],...]}, 1-based.
std::string to_json(const SignedDigraph& g);
/// Sign row followed by the adjacency matrix, one row per line.
std::string to_text(const SignedDigraph& g);

}  // namespace combdyn
