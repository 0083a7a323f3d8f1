#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "combdyn/error.hpp"
#include "combdyn/forcing.hpp"
#include "combdyn/logistic.hpp"
#include "combdyn/markov.hpp"
#include "combdyn/polynomial.hpp"
#include "combdyn/successors.hpp"
#include "json.hpp"

namespace combdyn::cli {

namespace {

using Action = std::function<int(std::ostream&, std::ostream&)>;

CLI::Option* add_format(CLI::App* cmd, std::string& format, std::vector<std::string> allowed) {
  format = allowed.front();
  return cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)))->capture_default_str();
}

void add_logistic_options(CLI::App* cmd, LogisticParams& params) {
  cmd->add_option("--burn-in", params.burn_in, "Transient iterations discarded")->capture_default_str();
  cmd->add_option("--max-period", params.max_period, "Largest period searched")->capture_default_str();
  cmd->add_option("--tol", params.tol, "Cycle-closure tolerance")->capture_default_str();
  cmd->add_option("--x0", params.x0, "Initial point")->capture_default_str();
}

std::string join_points(const std::vector<Rational>& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) out += (i ? ", " : "") + to_string(points[i]);
  return out + "}";
}

std::string modality_label(const Cycle& c) { return c.size() >= 3 ? to_string(modality(c)) : "n/a"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial dynamics of interval maps: Markov digraphs, doublings, forcing, logistic cascades",
               "combdyn"};
  app.require_subcommand(1);
  Action action;

  // digraph ---------------------------------------------------------------
  std::string cycle_text;
  std::string format;
  auto* digraph = app.add_subcommand("digraph", "Signed Markov digraph of a cycle");
  digraph->add_option("cycle", cycle_text, "Cycle, e.g. \"(123)\" or 2,3,1")->required();
  add_format(digraph, format, {"text", "json", "dot"});
  digraph->callback([&] {
    action = [&](std::ostream& o, std::ostream&) {
      const SignedDigraph g = build_digraph(parse_cycle(cycle_text));
      if (format == "dot") {
        o << to_dot(g);
      } else if (format == "json") {
        o << to_json(g) << '\n';
      } else {
        o << to_text(g);
      }
      return kExitOk;
    };
  });

  // charpoly --------------------------------------------------------------
  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial of the digraph's adjacency matrix");
  charpoly_cmd->add_option("cycle", cycle_text, "Cycle")->required();
  add_format(charpoly_cmd, format, {"text", "json"});
  charpoly_cmd->callback([&] {
    action = [&](std::ostream& o, std::ostream&) {
      const IntPolynomial p = charpoly(build_digraph(parse_cycle(cycle_text)));
      o << (format == "json" ? to_json(p) : to_string(p)) << '\n';
      return kExitOk;
    };
  });

  // successors ------------------------------------------------------------
  bool cyclic_only = false;
  bool unimodal_only = false;
  int successor_cap = kDefaultSuccessorCap;
  auto* successors_cmd = app.add_subcommand("successors", "All doublings of a cycle");
  successors_cmd->add_option("cycle", cycle_text, "Cycle")->required();
  successors_cmd->add_flag("--cyclic-only", cyclic_only, "Only list cyclic doublings");
  successors_cmd->add_flag("--unimodal-only", unimodal_only, "Only list cyclic doublings with modality +1");
  successors_cmd->add_option("--max-n", successor_cap, "Largest cycle length enumerated")->capture_default_str();
  add_format(successors_cmd, format, {"text", "json"});
  successors_cmd->callback([&] {
    action = [&](std::ostream& o, std::ostream&) {
      SuccessorSet set = enumerate_successors(parse_cycle(cycle_text), successor_cap);
      if (unimodal_only) {
        std::erase_if(set.cyclic, [](const auto& entry) {
          return entry.second.size() < 3 || !modality(entry.second).is_unimodal();
        });
      }
      const bool hide_rest = cyclic_only || unimodal_only;
      if (format == "json") {
        o << to_json(set, hide_rest) << '\n';
        return kExitOk;
      }
      for (const auto& [swaps, eta] : set.cyclic) {
        o << to_string(swaps) << ' ' << to_cycle_notation(eta) << " modality " << modality_label(eta) << '\n';
      }
      if (!hide_rest) {
        for (const auto& [swaps, eta] : set.non_cyclic) o << to_string(swaps) << " [" << to_image_list(eta) << "] non-cyclic\n";
      }
      return kExitOk;
    };
  });

  // double ----------------------------------------------------------------
  std::string swaps_text;
  auto* double_cmd = app.add_subcommand("double", "Graph of the doubling selected by a swap set");
  double_cmd->add_option("cycle", cycle_text, "Cycle whose graph is doubled")->required();
  double_cmd->add_option("--swaps", swaps_text, "Odd swap set, e.g. 1,2,3")->required();
  add_format(double_cmd, format, {"text", "json", "dot"});
  double_cmd->callback([&] {
    action = [&](std::ostream& o, std::ostream&) {
      const Cycle theta = parse_cycle(cycle_text);
      const SwapSet swaps = parse_swap_set(swaps_text);
      const SignedDigraph doubled = double_graph(build_digraph(theta), swaps);
      const Cycle eta = recover_cycle(doubled);
      if (format == "dot") {
        o << to_dot(doubled);
      } else if (format == "json") {
        nlohmann::ordered_json j;
        j["theta"] = to_cycle_notation(theta);
        j["swaps"] = std::vector<int>(swaps.indices().begin(), swaps.indices().end());
        j["eta"] = to_cycle_notation(eta);
        j["graph"] = nlohmann::ordered_json::parse(to_json(doubled));
        o << j.dump() << '\n';
      } else {
        o << "eta " << to_cycle_notation(eta) << '\n' << to_text(doubled);
      }
      return kExitOk;
    };
  });

  // cascade ---------------------------------------------------------------
  int levels = 0;
  bool verify = false;
  int period_cap = kDefaultCascadePeriodCap;
  auto* cascade_cmd = app.add_subcommand("cascade", "Period-doubling cascade of unimodal doublings");
  cascade_cmd->add_option("seed", cycle_text, "Seed cycle: (1) or a unimodal cycle")->required();
  cascade_cmd->add_option("--levels", levels, "Number of doublings")->required()->check(CLI::NonNegativeNumber);
  cascade_cmd->add_flag("--verify", verify, "Exit 1 if any level breaks the product formula");
  cascade_cmd->add_option("--max-period", period_cap, "Largest period allowed")->capture_default_str();
  add_format(cascade_cmd, format, {"text", "json"});
  cascade_cmd->callback([&] {
    action = [&](std::ostream& o, std::ostream& e) {
      CascadeOptions options;
      options.max_period = period_cap;
      options.throw_on_violation = false;
      const Cascade c = cascade(parse_cycle(cycle_text), levels, options);
      if (format == "json") {
        o << to_json(c) << '\n';
      } else {
        for (int i = 0; i <= static_cast<int>(c.levels.size()); ++i) {
          o << i << ' ' << to_cycle_notation(c.at(i)) << " P = " << to_string(c.polynomials[static_cast<std::size_t>(i)]);
          if (i > 0) o << (c.verified[static_cast<std::size_t>(i - 1)] ? " [ok]" : " [FAILED]");
          o << '\n';
        }
      }
      if (verify && !c.all_verified()) {
        e << "error: " << to_string(ErrorCode::FormulaViolation) << ": cascade polynomial differs from the product formula\n";
        return kExitDomainError;
      }
      return kExitOk;
    };
  });

  // forces ----------------------------------------------------------------
  std::string alpha_text;
  ForcingLimits limits;
  auto* forces_cmd = app.add_subcommand("forces", "Decide whether BETA forces ALPHA");
  forces_cmd->add_option("beta", cycle_text, "Forcing cycle")->required();
  forces_cmd->add_option("alpha", alpha_text, "Candidate forced cycle")->required();
  forces_cmd->add_option("--max-loop-length", limits.max_loop_length, "Longest loop searched")->capture_default_str();
  forces_cmd->add_option("--max-loops", limits.max_loops, "Loop count cap")->capture_default_str();
  add_format(forces_cmd, format, {"text", "json"});
  forces_cmd->callback([&] {
    action = [&](std::ostream& o, std::ostream&) {
      const Cycle beta = parse_cycle(cycle_text);
      const Cycle alpha = parse_cycle(alpha_text);
      const ForcingResult result = forcing_witness(beta, alpha, limits);
      if (format == "json") {
        o << to_json(beta, alpha, result) << '\n';
        return kExitOk;
      }
      o << (result.forces ? "true" : "false") << '\n';
      if (result.witness && result.witness_loop) {
        o << "witness loop [" << to_image_list(result.witness_loop->vertices) << "] orbit "
          << join_points(result.witness->points) << " type " << to_cycle_notation(result.witness->orbit_type) << '\n';
      }
      return kExitOk;
    };
  });

  // forced-types ----------------------------------------------------------
  int max_period = 4;
  auto* forced_cmd = app.add_subcommand("forced-types", "Orbit types of L_beta up to a period");
  forced_cmd->add_option("beta", cycle_text, "Forcing cycle")->required();
  forced_cmd->add_option("--max-period", max_period, "Largest period listed")->capture_default_str();
  forced_cmd->add_option("--max-loop-length", limits.max_loop_length, "Longest loop searched")->capture_default_str();
  forced_cmd->add_option("--max-loops", limits.max_loops, "Loop count cap")->capture_default_str();
  add_format(forced_cmd, format, {"text", "json"});
  forced_cmd->callback([&] {
    action = [&](std::ostream& o, std::ostream&) {
      const auto types = forced_types(parse_cycle(cycle_text), max_period, limits);
      if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& t : types) j.push_back(to_cycle_notation(t));
        o << j.dump() << '\n';
      } else {
        for (const auto& t : types) o << to_cycle_notation(t) << '\n';
      }
      return kExitOk;
    };
  });

  // logistic --------------------------------------------------------------
  LogisticParams params;
  auto* logistic_cmd = app.add_subcommand("logistic", "Attractor of the logistic map at one parameter");
  logistic_cmd->add_option("--a", params.a, "Parameter a in [0, 4]")->required();
  add_logistic_options(logistic_cmd, params);
  add_format(logistic_cmd, format, {"text", "json"});
  logistic_cmd->callback([&] {
    action = [&](std::ostream& o, std::ostream&) {
      const AttractorReport r = iterate(params);
      if (format == "json") {
        o << to_json(r) << '\n';
        return kExitOk;
      }
      std::ostringstream points;
      points.precision(12);
      for (std::size_t i = 0; i < r.points.size(); ++i) points << (i ? ", " : "") << r.points[i];
      o << "period " << r.period << '\n'
        << "type " << to_cycle_notation(r.orbit_type) << '\n'
        << "points " << points.str() << '\n';
      return kExitOk;
    };
  });

  // logistic-scan ---------------------------------------------------------
  double scan_from = 0.0;
  double scan_to = 0.0;
  double scan_step = 5e-4;
  bool refine = false;
  auto* scan_cmd = app.add_subcommand("logistic-scan", "Detected period across a parameter range");
  scan_cmd->add_option("--from", scan_from, "First parameter")->required();
  scan_cmd->add_option("--to", scan_to, "Last parameter")->required();
  scan_cmd->add_option("--step", scan_step, "Parameter step")->capture_default_str();
  scan_cmd->add_flag("--refine", refine, "Bisect each transition bracket");
  add_logistic_options(scan_cmd, params);
  add_format(scan_cmd, format, {"csv", "json", "text"});
  scan_cmd->callback([&] {
    action = [&](std::ostream& o, std::ostream&) {
      ScanResult scan = scan_bifurcations(scan_from, scan_to, scan_step, params);
      if (refine) {
        for (auto& t : scan.transitions) {
          if (t.from_period) t = refine_transition(t, params);
        }
      }
      if (format == "csv") {
        o << to_csv(scan);
      } else if (format == "json") {
        o << to_json(scan) << '\n';
      } else {
        std::ostringstream line;
        line.precision(8);
        for (const auto& t : scan.transitions) {
          line << (t.from_period ? std::to_string(*t.from_period) : std::string("none")) << " -> " << t.to_period
               << " at a = " << t.estimate() << " (bracket " << t.a_low << ", " << t.a_high << ")\n";
        }
        o << line.str();
      }
      return kExitOk;
    };
  });

  // certify-cascade -------------------------------------------------------
  std::vector<double> a_list;
  std::string seed_text = "(1)";
  auto* certify_cmd = app.add_subcommand("certify-cascade", "Match logistic orbit types against a symbolic cascade");
  certify_cmd->add_option("--seed", seed_text, "Seed cycle")->capture_default_str();
  certify_cmd->add_option("--a-list", a_list, "Comma-separated parameters")->required()->delimiter(',');
  add_logistic_options(certify_cmd, params);
  add_format(certify_cmd, format, {"text", "json"});
  certify_cmd->callback([&] {
    action = [&](std::ostream& o, std::ostream&) {
      const CertifyReport report = certify_cascade(a_list, parse_cycle(seed_text), params);
      if (format == "json") {
        o << to_json(report) << '\n';
      } else {
        for (const auto& e : report.entries) {
          o << "a=" << e.a << ' ';
          if (!e.error.empty() && !e.detected) {
            o << "error " << e.error << '\n';
            continue;
          }
          o << "period " << *e.period << " detected " << to_cycle_notation(*e.detected);
          if (e.expected) o << " expected " << to_cycle_notation(*e.expected);
          o << (e.match ? " match" : " MISMATCH") << '\n';
        }
      }
      return report.all_match() ? kExitOk : kExitDomainError;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action(out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace combdyn::cli
