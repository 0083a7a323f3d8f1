#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "combdyn/permutation.hpp"

namespace combdyn {

/// Parameters for locating the attractor of f_a(x) = a x (1 - x).
struct LogisticParams {
  double a = 3.2;
  long long burn_in = 100'000;
  int max_period = 64;
  double tol = 1e-9;   // cycle-closure tolerance
  double x0 = 0.5;     // the critical point

  /// Throws Error(InvalidParameter).
  void validate() const;
};

inline double logistic(double a, double x) noexcept { return a * x * (1.0 - x); }

struct AttractorReport {
  double a = 0.0;
  int period = 0;
  std::vector<double> points;  // ascending
  std::vector<double> orbit;   // orbit order, orbit[t+1] ~ f(orbit[t])
  Cycle orbit_type = Cycle::trivial();
};

/// Iterates past the transient and reads off the attracting cycle.
/// Throws Error(NoAttractorDetected) when no period <= max_period closes to
/// within tol for a full period of consecutive offsets, and
/// Error(DegenerateOrbit) when two orbit points are closer than tol.
AttractorReport iterate(const LogisticParams& params);

struct ScanSample {
  double a = 0.0;
  std::optional<int> period;  // empty when no attractor was detected
};

/// A change of detected period between two parameter samples. from_period is
/// empty for the first detection after a run of undetected samples.
struct Transition {
  std::optional<int> from_period;
  int to_period = 0;
  double a_low = 0.0;
  double a_high = 0.0;

  double estimate() const noexcept { return 0.5 * (a_low + a_high); }
  bool is_doubling() const noexcept { return from_period && to_period == 2 * *from_period; }
};

struct ScanResult {
  std::vector<ScanSample> samples;
  std::vector<Transition> transitions;
};

/// Samples a = from, from + step, ... up to `to`. Period changes are tracked
/// across detected samples, skipping undetected ones in between.
ScanResult scan_bifurcations(double from, double to, double step, const LogisticParams& base);

/// Bisects the bracket of a transition on detected period, at most max_steps
/// times; stops early when the midpoint matches neither side.
Transition refine_transition(const Transition& t, const LogisticParams& base, int max_steps = 40);

/// "a,period" header, one row per sample; undetected periods print "none".
std::string to_csv(const ScanResult& scan);
std::string to_json(const ScanResult& scan);

struct CertifyEntry {
  double a = 0.0;
  std::optional<int> period;
  std::optional<Cycle> detected;
  std::optional<Cycle> expected;
  int level = -1;
  bool unimodal = false;  // detected type has modality (+,1); vacuous below 3 points
  bool match = false;
  std::string error;
};

struct CertifyReport {
  Cycle seed = Cycle::trivial();
  std::vector<CertifyEntry> entries;

  bool all_match() const noexcept;
};

/// Compares the numerically detected orbit type at each a with the level of
/// cascade(seed, .) that has the same period.
CertifyReport certify_cascade(std::span<const double> a_values, const Cycle& seed, const LogisticParams& base = {});

std::string to_json(const CertifyReport& report);
std::string to_json(const AttractorReport& report);

}  // namespace combdyn
