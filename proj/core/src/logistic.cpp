#include "combdyn/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "combdyn/error.hpp"
#include "combdyn/successors.hpp"
#include "json.hpp"

namespace combdyn {

void LogisticParams::validate() const {
  if (!(a >= 0.0 && a <= 4.0)) throw Error(ErrorCode::InvalidParameter, "a must lie in [0, 4]");
  if (burn_in < 0) throw Error(ErrorCode::InvalidParameter, "burn_in must be nonnegative");
  if (max_period < 1) throw Error(ErrorCode::InvalidParameter, "max_period must be positive");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidParameter, "tol must be positive");
  if (!(x0 > 0.0 && x0 < 1.0)) throw Error(ErrorCode::InvalidParameter, "x0 must lie in (0, 1)");
}

namespace {

std::string format_a(double a) {
  std::ostringstream os;
  os << std::setprecision(10) << a;
  return os.str();
}

}  // namespace

AttractorReport iterate(const LogisticParams& params) {
  params.validate();
  const double a = params.a;
  double x = params.x0;
  for (long long i = 0; i < params.burn_in; ++i) x = logistic(a, x);

  const auto horizon = static_cast<std::size_t>(2 * params.max_period);
  std::vector<double> window(horizon + 1);
  window[0] = x;
  for (std::size_t t = 0; t < horizon; ++t) window[t + 1] = logistic(a, window[t]);

  int period = 0;
  for (int p = 1; p <= params.max_period && period == 0; ++p) {
    bool closed = true;
    for (int t = 0; t < p && closed; ++t) {
      closed = std::abs(window[static_cast<std::size_t>(t + p)] - window[static_cast<std::size_t>(t)]) < params.tol;
    }
    if (closed) period = p;
  }
  if (period == 0) {
    throw Error(ErrorCode::NoAttractorDetected,
                "no cycle of period <= " + std::to_string(params.max_period) + " at a = " + format_a(a));
  }

  AttractorReport report;
  report.a = a;
  report.period = period;
  report.orbit.assign(window.begin(), window.begin() + period);
  report.points = report.orbit;
  std::sort(report.points.begin(), report.points.end());
  for (std::size_t i = 1; i < report.points.size(); ++i) {
    if (report.points[i] - report.points[i - 1] < params.tol) {
      throw Error(ErrorCode::DegenerateOrbit, "orbit points closer than tol at a = " + format_a(a));
    }
  }

  std::vector<int> images(static_cast<std::size_t>(period));
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const double image = logistic(a, report.points[i]);
    auto it = std::lower_bound(report.points.begin(), report.points.end(), image);
    if (it == report.points.end() || (it != report.points.begin() && image - *std::prev(it) < *it - image)) --it;
    if (std::abs(*it - image) > params.tol) {
      throw Error(ErrorCode::NoAttractorDetected, "orbit does not close under f at a = " + format_a(a));
    }
    images[i] = static_cast<int>(it - report.points.begin()) + 1;
  }
  try {
    report.orbit_type = Cycle(std::move(images));
  } catch (const Error& e) {
    throw Error(ErrorCode::DegenerateOrbit, std::string("orbit points could not be matched: ") + e.what());
  }
  return report;
}

namespace {

std::optional<int> detected_period(double a, const LogisticParams& base) {
  LogisticParams params = base;
  params.a = a;
  try {
    return iterate(params).period;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidParameter) throw;
    return std::nullopt;
  }
}

}  // namespace

ScanResult scan_bifurcations(double from, double to, double step, const LogisticParams& base) {
  if (!(from < to)) throw Error(ErrorCode::InvalidParameter, "scan needs from < to");
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidParameter, "scan step must be positive");
  const auto count = static_cast<long long>(std::floor((to - from) / step + 1e-9)) + 1;

  ScanResult out;
  out.samples.resize(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    const double a = from + static_cast<double>(i) * step;
    out.samples[static_cast<std::size_t>(i)] = {a, detected_period(a, base)};
  }

  const ScanSample* last_detected = nullptr;
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    const ScanSample& s = out.samples[i];
    if (!s.period) continue;
    if (i > 0 && !out.samples[i - 1].period) {
      out.transitions.push_back({std::nullopt, *s.period, out.samples[i - 1].a, s.a});
    }
    if (last_detected && *last_detected->period != *s.period) {
      out.transitions.push_back({last_detected->period, *s.period, last_detected->a, s.a});
    }
    last_detected = &s;
  }
  return out;
}

Transition refine_transition(const Transition& t, const LogisticParams& base, int max_steps) {
  Transition out = t;
  for (int step = 0; step < max_steps; ++step) {
    const double mid = out.estimate();
    const auto p = detected_period(mid, base);
    if (p == out.from_period) {
      out.a_low = mid;
    } else if (p && *p == out.to_period) {
      out.a_high = mid;
    } else {
      break;
    }
  }
  return out;
}

std::string to_csv(const ScanResult& scan) {
  std::ostringstream os;
  os << "a,period\n";
  for (const auto& s : scan.samples) {
    os << format_a(s.a) << ',';
    if (s.period) {
      os << *s.period;
    } else {
      os << "none";
    }
    os << '\n';
  }
  return os.str();
}

namespace {

nlohmann::ordered_json optional_int(const std::optional<int>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string to_json(const ScanResult& scan) {
  nlohmann::ordered_json j;
  auto& samples = j["samples"] = nlohmann::ordered_json::array();
  for (const auto& s : scan.samples) samples.push_back({{"a", s.a}, {"period", optional_int(s.period)}});
  auto& transitions = j["transitions"] = nlohmann::ordered_json::array();
  for (const auto& t : scan.transitions) {
    transitions.push_back({{"from", optional_int(t.from_period)},
                           {"to", t.to_period},
                           {"a_low", t.a_low},
                           {"a_high", t.a_high},
                           {"a", t.estimate()}});
  }
  return j.dump();
}

bool CertifyReport::all_match() const noexcept {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const CertifyEntry& e) { return e.match; });
}

namespace {

// Level l with k * 2^l == period, if any.
std::optional<int> cascade_level(int period, int k) {
  if (period % k != 0) return std::nullopt;
  int ratio = period / k;
  int level = 0;
  while (ratio % 2 == 0) {
    ratio /= 2;
    ++level;
  }
  if (ratio != 1) return std::nullopt;
  return level;
}

}  // namespace

CertifyReport certify_cascade(std::span<const double> a_values, const Cycle& seed, const LogisticParams& base) {
  CertifyReport report;
  report.seed = seed;
  const int k = seed.size();
  std::optional<Cascade> symbolic;

  for (double a : a_values) {
    CertifyEntry entry;
    entry.a = a;
    LogisticParams params = base;
    params.a = a;
    try {
      const AttractorReport attractor = iterate(params);
      entry.period = attractor.period;
      entry.detected = attractor.orbit_type;
      entry.unimodal = attractor.period < 3 || modality(attractor.orbit_type).is_unimodal();
      const auto level = cascade_level(attractor.period, k);
      if (!level) {
        entry.error = "period " + std::to_string(attractor.period) + " is not " + std::to_string(k) + "*2^l";
      } else {
        if (!symbolic || static_cast<int>(symbolic->levels.size()) < *level) {
          CascadeOptions options;
          options.max_period = std::max(kDefaultCascadePeriodCap, attractor.period);
          symbolic = cascade(seed, *level, options);
        }
        entry.level = *level;
        entry.expected = symbolic->at(*level);
        entry.match = entry.detected == entry.expected;
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidParameter) throw;
      entry.error = e.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string to_json(const CertifyReport& report) {
  nlohmann::ordered_json j;
  j["seed"] = to_cycle_notation(report.seed);
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json item;
    item["a"] = e.a;
    item["period"] = optional_int(e.period);
    item["detected"] = e.detected ? nlohmann::ordered_json(to_cycle_notation(*e.detected)) : nullptr;
    item["expected"] = e.expected ? nlohmann::ordered_json(to_cycle_notation(*e.expected)) : nullptr;
    item["level"] = e.level;
    item["unimodal"] = e.unimodal;
    item["match"] = e.match;
    if (!e.error.empty()) item["error"] = e.error;
    entries.push_back(std::move(item));
  }
  j["all_match"] = report.all_match();
  return j.dump();
}

std::string to_json(const AttractorReport& report) {
  nlohmann::ordered_json j;
  j["a"] = report.a;
  j["period"] = report.period;
  j["points"] = report.points;
  j["orbit"] = report.orbit;
  j["orbit_type"] = to_cycle_notation(report.orbit_type);
  j["images"] = std::vector<int>(report.orbit_type.images().begin(), report.orbit_type.images().end());
  return j.dump();
}

}  // namespace combdyn
