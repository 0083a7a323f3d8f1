#include "combdyn/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "combdyn/error.hpp"

namespace combdyn {

namespace {

bool is_bijection(std::span<const int> images) {
  const auto n = images.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view token, std::string_view context) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw Error(ErrorCode::SyntaxError,
                "bad integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

// Splits on commas and/or whitespace; empty fields between two commas are errors.
std::vector<int> parse_int_list(std::string_view body, std::string_view context) {
  std::vector<int> out;
  std::string token;
  bool pending_comma = false;
  auto flush = [&] {
    if (!token.empty()) {
      out.push_back(parse_positive(token, context));
      token.clear();
      pending_comma = false;
    }
  };
  for (char ch : body) {
    if (ch == ',') {
      if (token.empty() && (pending_comma || out.empty())) {
        throw Error(ErrorCode::SyntaxError, "empty entry in '" + std::string(context) + "'");
      }
      flush();
      pending_comma = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  if (token.empty() && pending_comma) {
    throw Error(ErrorCode::SyntaxError, "trailing comma in '" + std::string(context) + "'");
  }
  flush();
  return out;
}

}  // namespace

// Permutation ------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) {
    throw Error(ErrorCode::NotABijection, "images " + to_image_list(images_) +
                                              " are not a bijection of {1.." +
                                              std::to_string(images_.size()) + "}");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                b.images_.begin(), b.images_.end());
}

// Cycle ------------------------------------------------------------------

Cycle::Cycle(Permutation p) : perm_(std::move(p)) {
  if (!is_cycle(perm_)) {
    throw Error(ErrorCode::NotASingleCycle,
                "permutation " + to_image_list(perm_) + " is not a single cycle");
  }
}

// SwapSet ----------------------------------------------------------------

SwapSet::SwapSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (!indices_.empty() && indices_.front() < 1) {
    throw Error(ErrorCode::InvalidSwapSet, "swap indices start at 1");
  }
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(ErrorCode::InvalidSwapSet, "duplicate swap index");
  }
}

SwapSet SwapSet::from_mask(std::uint64_t mask) {
  std::vector<int> indices;
  for (int k = 0; k < 64; ++k) {
    if (mask & (std::uint64_t{1} << k)) indices.push_back(k + 1);
  }
  return SwapSet(std::move(indices));
}

bool SwapSet::contains(int s) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), s);
}

// Operations ------------------------------------------------------------

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorCode::LengthMismatch, "cannot compose permutations of lengths " +
                                               std::to_string(f.size()) + " and " +
                                               std::to_string(g.size()));
  }
  std::vector<int> images(static_cast<std::size_t>(f.size()));
  for (int i = 1; i <= f.size(); ++i) images[static_cast<std::size_t>(i - 1)] = f(g(i));
  return Permutation(std::move(images));
}

int sign(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  int cycles = 0;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    for (int x = start; !visited[static_cast<std::size_t>(x)]; x = p(x)) {
      visited[static_cast<std::size_t>(x)] = true;
    }
  }
  return (n - cycles) % 2 == 0 ? +1 : -1;
}

bool is_cycle(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return false;
  int x = 1;
  for (int k = 1; k < n; ++k) {
    x = p(x);
    if (x == 1) return false;
  }
  return p(x) == 1;
}

Modality modality(const Cycle& theta) {
  const int n = theta.size();
  if (n < 3) {
    throw Error(ErrorCode::TooShort, "modality needs at least 3 points, got " + std::to_string(n));
  }
  Modality m;
  m.leading_sign = theta(1) < theta(2) ? +1 : -1;
  for (int i = 2; i <= n - 1; ++i) {
    const int left = theta(i - 1) - theta(i);
    const int right = theta(i) - theta(i + 1);
    if ((left > 0) != (right > 0)) ++m.extrema_count;
  }
  return m;
}

Permutation star(const Cycle& theta) {
  const int n = theta.size();
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    images[static_cast<std::size_t>(2 * k - 1)] = 2 * theta(k);
    images[static_cast<std::size_t>(2 * k - 2)] = 2 * theta(k) - 1;
  }
  return Permutation(std::move(images));
}

Permutation rho(int s, int length) {
  if (length % 2 != 0 || s < 1 || 2 * s > length) {
    throw Error(ErrorCode::OutOfRange, "rho(" + std::to_string(s) + ") is undefined on " +
                                           std::to_string(length) + " points");
  }
  std::vector<int> images(static_cast<std::size_t>(length));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[static_cast<std::size_t>(2 * s - 2)], images[static_cast<std::size_t>(2 * s - 1)]);
  return Permutation(std::move(images));
}

Permutation successor_candidate(const Cycle& theta, const SwapSet& swaps) {
  const int n = theta.size();
  if (!swaps.empty() && swaps.indices().back() > n) {
    throw Error(ErrorCode::OutOfRange, "swap index " + std::to_string(swaps.indices().back()) +
                                           " exceeds cycle length " + std::to_string(n));
  }
  // Right-composing with rho(s) exchanges the images of 2s-1 and 2s, and the
  // transpositions act on disjoint pairs, so order does not matter.
  const Permutation doubled = star(theta);
  std::vector<int> images(doubled.images().begin(), doubled.images().end());
  for (int s : swaps.indices()) {
    std::swap(images[static_cast<std::size_t>(2 * s - 2)], images[static_cast<std::size_t>(2 * s - 1)]);
  }
  return Permutation(std::move(images));
}

// Text forms ------------------------------------------------------------

Cycle parse_cycle(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::SyntaxError, "empty cycle text");

  if (s.front() != '(') {
    if (s.back() == ')') throw Error(ErrorCode::SyntaxError, "unbalanced ')' in '" + std::string(s) + "'");
    return Cycle(parse_int_list(s, s));
  }
  if (s.back() != ')') throw Error(ErrorCode::SyntaxError, "missing ')' in '" + std::string(s) + "'");

  const std::string_view body = trim(s.substr(1, s.size() - 2));
  std::vector<int> points;
  const bool separated = body.find_first_of(", \t") != std::string_view::npos;
  if (separated) {
    points = parse_int_list(body, s);
  } else {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::SyntaxError, "unexpected '" + std::string(1, ch) + "' in '" + std::string(s) + "'");
      }
      points.push_back(ch - '0');
    }
  }
  if (points.empty()) throw Error(ErrorCode::SyntaxError, "empty cycle '" + std::string(s) + "'");
  if (points.front() != 1) {
    throw Error(ErrorCode::SyntaxError, "cycle notation must start at 1: '" + std::string(s) + "'");
  }

  const int n = *std::max_element(points.begin(), points.end());
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int from = points[i];
    if (from < 1) throw Error(ErrorCode::SyntaxError, "point 0 in '" + std::string(s) + "'");
    auto& slot = images[static_cast<std::size_t>(from - 1)];
    if (slot != 0) {
      throw Error(ErrorCode::NotABijection, "point " + std::to_string(from) + " repeated in '" + std::string(s) + "'");
    }
    slot = points[(i + 1) % points.size()];
  }
  // Points missing from the cycle are fixed, so the result is not one n-cycle.
  for (int i = 1; i <= n; ++i) {
    if (images[static_cast<std::size_t>(i - 1)] == 0) images[static_cast<std::size_t>(i - 1)] = i;
  }
  return Cycle(std::move(images));
}

SwapSet parse_swap_set(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) return SwapSet{};
  return SwapSet(parse_int_list(s, s));
}

std::string to_image_list(std::span<const int> images) {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(images[i]);
  }
  return out;
}

std::string to_cycle_notation(const Cycle& theta) {
  const bool compact = theta.size() <= 9;
  std::string out = "(";
  int x = 1;
  for (int k = 0; k < theta.size(); ++k) {
    if (k && !compact) out.push_back(' ');
    out += std::to_string(x);
    x = theta(x);
  }
  out.push_back(')');
  return out;
}

std::string to_string(const Modality& m) {
  return std::string(m.leading_sign > 0 ? "+" : "-") + std::to_string(m.extrema_count);
}

std::string to_string(const SwapSet& s) {
  std::string out = "{";
  out += to_image_list(s.indices());
  out.push_back('}');
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << '[' << to_image_list(p) << ']'; }

std::ostream& operator<<(std::ostream& os, const Cycle& c) { return os << to_cycle_notation(c); }

std::vector<Cycle> all_cycles(int n) {
  std::vector<Cycle> out;
  if (n < 1) return out;
  std::vector<int> tail(static_cast<std::size_t>(n - 1));
  std::iota(tail.begin(), tail.end(), 2);
  do {
    std::vector<int> images(static_cast<std::size_t>(n));
    int from = 1;
    for (int to : tail) {
      images[static_cast<std::size_t>(from - 1)] = to;
      from = to;
    }
    images[static_cast<std::size_t>(from - 1)] = 1;
    out.emplace_back(std::move(images));
  } while (std::next_permutation(tail.begin(), tail.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace combdyn
