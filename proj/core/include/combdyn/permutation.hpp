#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace combdyn {

/// A bijection of {1..n}, stored as its image table. Entry i-1 of images()
/// holds p(i); every index and value is 1-based.
class Permutation {
 public:
  /// Throws Error(NotABijection) unless images is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Orders by length first, then lexicographically by images.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> images_;
};

/// A permutation of {1..n} consisting of a single n-cycle.
class Cycle {
 public:
  /// Throws Error(NotASingleCycle) if p splits into more than one cycle.
  explicit Cycle(Permutation p);
  explicit Cycle(std::vector<int> images) : Cycle(Permutation(std::move(images))) {}

  static Cycle trivial() { return Cycle(std::vector<int>{1}); }

  const Permutation& permutation() const noexcept { return perm_; }
  int size() const noexcept { return perm_.size(); }
  int operator()(int i) const { return perm_(i); }
  std::span<const int> images() const noexcept { return perm_.images(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend std::strong_ordering operator<=>(const Cycle& a, const Cycle& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  Permutation perm_;
};

/// Number of local extrema of the connect-the-dots map and whether it
/// starts out increasing. (+,1) is the unimodal case.
struct Modality {
  int extrema_count = 0;
  int leading_sign = +1;

  bool is_unimodal() const noexcept { return extrema_count == 1 && leading_sign > 0; }
  friend bool operator==(const Modality&, const Modality&) = default;
};

/// Strictly increasing set of pair indices s, each naming the transposition
/// (2s-1, 2s) used when building a doubled permutation.
class SwapSet {
 public:
  SwapSet() = default;
  /// Sorts the indices. Throws Error(InvalidSwapSet) on duplicates or
  /// indices below 1.
  explicit SwapSet(std::vector<int> indices);
  /// Bit k of mask selects index k+1.
  static SwapSet from_mask(std::uint64_t mask);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool is_odd() const noexcept { return indices_.size() % 2 == 1; }
  bool contains(int s) const noexcept;
  std::span<const int> indices() const noexcept { return indices_; }

  friend bool operator==(const SwapSet&, const SwapSet&) = default;

 private:
  std::vector<int> indices_;
};

/// (f o g)(x) = f(g(x)). Throws Error(LengthMismatch).
Permutation compose(const Permutation& f, const Permutation& g);

/// +1 for even permutations, -1 for odd ones.
int sign(const Permutation& p);

bool is_cycle(const Permutation& p);

/// Throws Error(TooShort) when the cycle has fewer than three points.
Modality modality(const Cycle& theta);

/// The doubled permutation on 2n points: 2k -> 2theta(k), 2k-1 -> 2theta(k)-1.
Permutation star(const Cycle& theta);

/// The transposition (2s-1, 2s) in S_length. Throws Error(OutOfRange) unless
/// length is even and 1 <= s <= length/2.
Permutation rho(int s, int length);

/// star(theta) composed on the right with rho(s) for every s in swaps. The
/// result is cyclic exactly when swaps has odd cardinality.
/// Throws Error(OutOfRange) if an index exceeds theta.size().
Permutation successor_candidate(const Cycle& theta, const SwapSet& swaps);

// Text forms ------------------------------------------------------------

/// Accepts "2,3,1" (image list), "(123)" (juxtaposed digits), or
/// "(1 3 2 4)" / "(1,3,2,4)". Cycle notation must start at 1.
Cycle parse_cycle(std::string_view text);

/// Parses "1,3" or "1 3" into a SwapSet. An empty string gives the empty set.
SwapSet parse_swap_set(std::string_view text);

/// "2,3,1"
std::string to_image_list(std::span<const int> images);
inline std::string to_image_list(const Permutation& p) { return to_image_list(p.images()); }
inline std::string to_image_list(const Cycle& c) { return to_image_list(c.images()); }

/// "(132)" for n <= 9, "(1 3 2 ...)" for longer cycles.
std::string to_cycle_notation(const Cycle& theta);

std::string to_string(const Modality& m);
std::string to_string(const SwapSet& s);

std::ostream& operator<<(std::ostream& os, const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Cycle& c);

/// All cycles of length n in lexicographic order of their image tables.
std::vector<Cycle> all_cycles(int n);

}  // namespace combdyn
