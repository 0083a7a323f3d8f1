#pragma once

#include <string>
#include <utility>
#include <vector>

#include "combdyn/error.hpp"
#include "combdyn/permutation.hpp"
#include "combdyn/polynomial.hpp"

namespace combdyn {

inline constexpr int kDefaultSuccessorCap = 20;
inline constexpr int kDefaultCascadePeriodCap = 64;

/// Every doubling of a base cycle, split by whether the result is cyclic.
/// Both lists follow the swap sets read as binary counters (bit k-1 <-> k).
struct SuccessorSet {
  Cycle base;
  std::vector<std::pair<SwapSet, Cycle>> cyclic;
  std::vector<std::pair<SwapSet, Permutation>> non_cyclic;
};

/// Classifies all 2^n swap sets. Throws Error(CapExceeded) above max_length.
SuccessorSet enumerate_successors(const Cycle& theta, int max_length = kDefaultSuccessorCap);

/// Raised when the unimodal doubling is missing or not unique. Carries every
/// candidate that passed the (+,1) filter.
class UnimodalSuccessorError : public Error {
 public:
  UnimodalSuccessorError(ErrorCode code, const std::string& message, std::vector<Cycle> candidates)
      : Error(code, message), candidates_(std::move(candidates)) {}
  const std::vector<Cycle>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<Cycle> candidates_;
};

/// The unique cyclic doubling of theta with modality (+,1); (1) doubles to
/// (12). theta must be (1), (12), or unimodal, else Error(NotUnimodal).
///
/// Candidates are produced by walking the swap sets index by index and
/// dropping a branch as soon as the image prefix stops being rise-then-fall,
/// so only swap sets that can still be unimodal are completed. Each survivor
/// is checked for cyclicity and modality before it is accepted.
Cycle unimodal_double(const Cycle& theta);

/// True iff charpoly(G(eta)) == charpoly(G(theta)) * (l^n - 1) for
/// eta = successor_candidate(theta, swaps). Throws Error(EvenSwapCount).
bool verify_factorization(const Cycle& theta, const SwapSet& swaps);

struct CascadeOptions {
  int max_period = kDefaultCascadePeriodCap;
  /// Raise Error(FormulaViolation) on the first level whose polynomial
  /// differs from the product formula. Otherwise only flag it.
  bool throw_on_violation = true;
};

/// A period-doubling cascade seeded at a period-k cycle.
struct Cascade {
  Cycle seed;
  std::vector<Cycle> levels;               // theta_1 .. theta_L
  std::vector<IntPolynomial> polynomials;  // P(theta_0) .. P(theta_L)
  std::vector<bool> verified;              // level 1 .. L against the product formula

  int seed_period() const noexcept { return seed.size(); }
  bool all_verified() const noexcept;
  /// theta_0 for i == 0, otherwise levels[i-1].
  const Cycle& at(int i) const { return i == 0 ? seed : levels.at(static_cast<std::size_t>(i - 1)); }
};

/// P(theta_0) * prod_{i=1..levels} (l^(k*2^(i-1)) - 1).
IntPolynomial cascade_product(const IntPolynomial& seed_polynomial, int seed_period, int levels);

/// Doubles the seed `levels` times through unimodal_double. Throws
/// Error(CapExceeded) when k*2^levels exceeds options.max_period.
Cascade cascade(const Cycle& seed, int levels, const CascadeOptions& options = {});

std::string to_json(const Cascade& c);
std::string to_json(const SuccessorSet& s, bool cyclic_only = false);

}  // namespace combdyn
