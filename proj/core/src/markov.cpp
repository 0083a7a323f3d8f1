#include "combdyn/markov.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "combdyn/error.hpp"
#include "json.hpp"

namespace combdyn {

PiecewiseLinearMap::PiecewiseLinearMap(const Permutation& p) : n_(p.size()) {
  pieces_.reserve(static_cast<std::size_t>(std::max(0, n_ - 1)));
  for (int i = 1; i < n_; ++i) {
    const long long slope = p(i + 1) - p(i);
    pieces_.push_back({i, slope, p(i) - slope * i});
  }
}

PiecewiseLinearMap connect_the_dots(const Cycle& theta) { return PiecewiseLinearMap(theta.permutation()); }

SignedDigraph::SignedDigraph(std::vector<int> signs, IntMatrix adjacency)
    : signs_(std::move(signs)), adjacency_(std::move(adjacency)) {
  const auto n = signs_.size();
  if (adjacency_.size() != n) throw Error(ErrorCode::InvalidParameter, "adjacency rows must match vertex count");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidParameter, "vertex signs must be +1 or -1");
  }
  for (const auto& row : adjacency_) {
    if (row.size() != n) throw Error(ErrorCode::InvalidParameter, "adjacency must be square");
    for (int e : row) {
      if (e != 0 && e != 1) throw Error(ErrorCode::InvalidParameter, "adjacency entries must be 0 or 1");
    }
  }
}

SignedDigraph build_digraph(const Cycle& theta) {
  const int n = theta.size();
  const int vertices = std::max(0, n - 1);
  std::vector<int> signs(static_cast<std::size_t>(vertices));
  IntMatrix adjacency(static_cast<std::size_t>(vertices), std::vector<int>(static_cast<std::size_t>(vertices), 0));
  for (int i = 1; i <= vertices; ++i) {
    const int lo = std::min(theta(i), theta(i + 1));
    const int hi = std::max(theta(i), theta(i + 1));
    signs[static_cast<std::size_t>(i - 1)] = theta(i) < theta(i + 1) ? +1 : -1;
    for (int j = lo; j + 1 <= hi; ++j) adjacency[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
  }
  return SignedDigraph(std::move(signs), std::move(adjacency));
}

Cycle recover_cycle(const SignedDigraph& g) {
  const int vertices = g.vertex_count();
  const int n = vertices + 1;
  // images[0] stays unused; 0 marks "not yet determined".
  std::vector<int> images(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= vertices; ++i) {
    const auto& row = g.adjacency()[static_cast<std::size_t>(i - 1)];
    const auto first = std::find(row.begin(), row.end(), 1);
    if (first == row.end()) {
      throw Error(ErrorCode::Inconsistent, "vertex " + std::to_string(i) + " has no outgoing edge");
    }
    const auto past = std::find(first, row.end(), 0);
    if (std::find(past, row.end(), 1) != row.end()) {
      throw Error(ErrorCode::Inconsistent, "edges of vertex " + std::to_string(i) + " are not contiguous");
    }
    const int lo = static_cast<int>(first - row.begin()) + 1;
    const int hi = static_cast<int>(past - row.begin()) + 1;  // right end of the image interval
    const int left = g.sign(i) > 0 ? lo : hi;
    const int right = g.sign(i) > 0 ? hi : lo;
    for (auto [point, value] : {std::pair{i, left}, std::pair{i + 1, right}}) {
      auto& slot = images[static_cast<std::size_t>(point)];
      if (slot != 0 && slot != value) {
        throw Error(ErrorCode::Inconsistent, "vertices " + std::to_string(point - 1) + " and " +
                                                 std::to_string(point) + " disagree on the image of " +
                                                 std::to_string(point));
      }
      slot = value;
    }
  }
  if (vertices == 0) images[1] = 1;
  images.erase(images.begin());

  std::optional<Permutation> p;
  try {
    p.emplace(std::move(images));
  } catch (const Error& e) {
    throw Error(ErrorCode::Inconsistent, e.what());
  }
  if (!is_cycle(*p)) {
    throw Error(ErrorCode::NotACycle, "graph belongs to the non-cyclic permutation " + to_image_list(*p));
  }
  return Cycle(std::move(*p));
}

SignedDigraph double_graph(const SignedDigraph& g, const SwapSet& swaps) {
  if (!swaps.is_odd()) {
    throw Error(ErrorCode::EvenSwapCount, "doubling needs an odd number of swaps, got " + std::to_string(swaps.size()));
  }
  return build_digraph(Cycle(successor_candidate(recover_cycle(g), swaps)));
}

namespace {

char sign_char(int s) { return s > 0 ? '+' : '-'; }

}  // namespace

std::string to_dot(const SignedDigraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (int i = 1; i <= g.vertex_count(); ++i) {
    os << "  v" << i << " [label=\"v" << i << sign_char(g.sign(i)) << "\"]\n";
  }
  for (int i = 1; i <= g.vertex_count(); ++i) {
    for (int j = 1; j <= g.vertex_count(); ++j) {
      if (g.has_edge(i, j)) os << "  v" << i << " -> v" << j << "\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const SignedDigraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  auto& signs = j["signs"] = nlohmann::ordered_json::array();
  for (int s : g.signs()) signs.push_back(std::string(1, sign_char(s)));
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (int i = 1; i <= g.vertex_count(); ++i) {
    for (int k = 1; k <= g.vertex_count(); ++k) {
      if (g.has_edge(i, k)) edges.push_back({i, k});
    }
  }
  return j.dump();
}

std::string to_text(const SignedDigraph& g) {
  std::ostringstream os;
  os << "signs:";
  for (int s : g.signs()) os << ' ' << sign_char(s);
  os << '\n';
  for (const auto& row : g.adjacency()) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << '\n';
  }
  return os.str();
}

}  // namespace combdyn
