#ifndef MULTIQUILT_CLI_HPP
#define MULTIQUILT_CLI_HPP

// Command-line front end. JSON reports go to `out`, a one-line summary and
// the wall time go to `err`, so reports are byte-identical across runs.
//
// Exit codes: 0 all checks pass, 1 a check failed or the input was rejected,
// 2 usage error, unreadable file or malformed JSON.

#include "multiquilt/charts.hpp"
#include "multiquilt/configurations.hpp"
#include "multiquilt/metric.hpp"
#include "multiquilt/polytope.hpp"
#include "multiquilt/trees.hpp"
#include "multiquilt/verify.hpp"
#include "multiquilt/weighted.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multiquilt::cli {

/// Unreadable or unparsable input: exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Lengths lengths_from_json(const nlohmann::json& j) {
  Lengths l;
  for (const auto& [k, v] : j.items()) l[std::stoi(k)] = rational_from_json(v);
  return l;
}

/// Tree files hold either a bare tree or {"tree": ..., "lambda": {...}}.
inline ColoredTree tree_from_file(const nlohmann::json& j) {
  return ColoredTree::from_json(j.is_object() && j.contains("tree") ? j.at("tree") : j);
}

struct Outcome {
  nlohmann::json report;
  bool passed = true;
  std::string summary;
};

inline Outcome checks_outcome(nlohmann::json report, const std::vector<CheckResult>& checks) {
  int failed = 0;
  for (const auto& c : checks) failed += !c.passed;
  report["checks"] = checks_to_json(checks);
  report["passed"] = failed == 0;
  return {std::move(report), failed == 0,
          std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed"};
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of multiplihedra and quilted disks", "multiquilt"};
  app.require_subcommand(1);
  std::string command = "multiquilt";
  for (const auto& a : args) command += " " + a;

  int n = 0, samples = 100, criterion = 0;
  std::uint64_t seed = 1;
  unsigned precision = 15;
  bool maximal = false, colored = false;
  std::string off_path, file, rule_name = "equality-split";
  std::function<Outcome()> action;

  auto n_option = [&](CLI::App* sub, int lo, int hi) {
    sub->add_option("--n", n, "Number of leaves (markings for weighted cells)")->required()->check(CLI::Range(lo, hi));
  };

  // trees
  auto* trees = app.add_subcommand("trees", "Tree enumeration")->require_subcommand(1);
  auto* enumerate = trees->add_subcommand("enumerate", "List stable ribbon trees");
  n_option(enumerate, 1, 8);
  enumerate->add_flag("--maximal", maximal, "Only maximal (binary) trees");
  enumerate->add_flag("--colored", colored, "Colored trees instead of plain ribbon trees");
  enumerate->callback([&] {
    action = [&] {
      nlohmann::json list = nlohmann::json::array();
      if (colored) {
        for (const auto& t : enumerate_colored_trees(n, maximal)) list.push_back(t.to_json());
      } else {
        for (const auto& t : enumerate_ribbon_trees(n, maximal)) list.push_back(t.to_json());
      }
      const auto count = list.size();
      return Outcome{{{"n", n}, {"colored", colored}, {"maximal", maximal}, {"count", count}, {"trees", list}},
                     true,
                     std::to_string(count) + " trees"};
    };
  });

  // polytope
  auto* polytope = app.add_subcommand("polytope", "Weight-vector polytopes")->require_subcommand(1);
  auto* build = polytope->add_subcommand("build", "Convex hull of the weight vectors");
  n_option(build, 2, 6);
  build->add_option("--off", off_path, "Write an OFF mesh (3-dimensional hulls only)");
  build->callback([&] {
    action = [&] {
      const auto maximal_trees = enumerate_colored_trees(n, true);
      const auto mu = weight_vectors(maximal_trees);
      const Polytope P = hull(mu);
      nlohmann::json tj = nlohmann::json::array();
      for (std::size_t k = 0; k < maximal_trees.size(); ++k) {
        tj.push_back({{"tree", maximal_trees[k].to_json()}, {"weight", intvec_to_json(mu[k])}});
      }
      nlohmann::json report = P.to_json();
      report["n"] = n;
      report["f_vector"] = face_lattice(P).f_vector(P.dim);
      report["weights"] = tj;
      if (!off_path.empty()) {
        if (P.dim != 3) throw DomainError("--off needs a 3-dimensional hull, this one has dimension " + std::to_string(P.dim));
        std::ofstream os(off_path);
        if (!os) throw InputError("cannot write " + off_path);
        write_off(os, P);
        report["off"] = off_path;
      }
      return Outcome{report, true,
                     "dimension " + std::to_string(P.dim) + ", " + std::to_string(P.vertices.size()) + " vertices, " +
                         std::to_string(P.facets.size()) + " facets"};
    };
  });
  auto* verify_cw = polytope->add_subcommand("verify-cw", "Compare the face lattice with the tree poset");
  n_option(verify_cw, 2, 6);
  verify_cw->callback([&] {
    action = [&] {
      const auto rep = check_cw_iso(n);
      return checks_outcome(rep.to_json(), rep.checks);
    };
  });

  // charts
  auto* charts = app.add_subcommand("charts", "Simple-ratio and cross-ratio charts")->require_subcommand(1);
  auto* charts_verify = charts->add_subcommand("verify", "Round trips through charts and the canonical embedding");
  n_option(charts_verify, 2, 5);
  charts_verify->add_option("--samples", samples, "Samples per stratum")->check(CLI::Range(1, 100000));
  charts_verify->add_option("--seed", seed, "Random seed");
  charts_verify->callback([&] {
    action = [&] {
      auto checks = chart_suite(n, samples, seed);
      const auto dec = decode_suite(n, samples, seed);
      checks.insert(checks.end(), dec.begin(), dec.end());
      return checks_outcome({{"n", n}, {"samples", samples}, {"seed", seed}}, checks);
    };
  });

  auto* embed_cmd = app.add_subcommand("embed", "Cross-ratio coordinates of a configuration");
  embed_cmd->add_option("--config", file, "Configuration JSON ({\"x\",\"y\"} or nodal {\"tree\",\"components\"})")
      ->required();
  embed_cmd->callback([&] {
    action = [&] {
      const auto j = read_json(file);
      const NodalConfiguration s =
          j.contains("x") ? to_nodal(Configuration::from_json(j)) : NodalConfiguration::from_json(j);
      return Outcome{{{"point", s.to_json()}, {"cross_ratios", embed(s).to_json()}}, true,
                     "embedded a point of type " + s.type.code()};
    };
  });

  auto* decode_cmd = app.add_subcommand("decode", "Recover a configuration from cross-ratios");
  decode_cmd->add_option("--cross-ratios", file, "Cross-ratio JSON (as written by embed)")->required();
  decode_cmd->callback([&] {
    action = [&] {
      const auto j = read_json(file);
      const auto v = CrossRatioVector::from_json(j.contains("cross_ratios") ? j.at("cross_ratios") : j);
      const auto s = decode(v);
      return Outcome{{{"point", s.to_json()}, {"type", s.type.to_json()}}, true, "decoded type " + s.type.code()};
    };
  });

  // metric
  auto* metric = app.add_subcommand("metric", "Colored metric trees")->require_subcommand(1);
  auto* cone = metric->add_subcommand("cone", "Cone of admissible edge lengths");
  cone->add_option("--tree", file, "Tree JSON, optionally {\"tree\": ..., \"lambda\": {...}}")->required();
  cone->callback([&] {
    action = [&] {
      const auto j = read_json(file);
      const auto t = tree_from_file(j);
      const auto c = cone_basis(t);
      nlohmann::json report{{"tree", t.to_json()}, {"cone", c.to_json()}, {"stratum_dimension", stratum_dimension(t)}};
      std::vector<CheckResult> checks;
      if (j.is_object() && j.contains("lambda")) {
        const auto m = validate_metric(t, lengths_from_json(j.at("lambda")));
        checks.push_back({"lengths are admissible", m.ok, m.message});
      }
      auto o = checks_outcome(report, checks);
      o.summary = "cone dimension " + std::to_string(c.dimension) + (checks.empty() ? "" : ", " + o.summary);
      return o;
    };
  });
  auto* theta_cmd = metric->add_subcommand("theta", "Balanced labelling exp(-lambda)");
  theta_cmd->add_option("--tree", file, "{\"tree\": ..., \"lambda\": {...}}")->required();
  theta_cmd->add_option("--precision", precision, "Decimal digits")->check(CLI::Range(2u, 1000u));
  theta_cmd->callback([&] {
    action = [&] {
      const auto j = read_json(file);
      if (!j.is_object() || !j.contains("lambda")) throw DomainError("metric theta: the tree file has no \"lambda\"");
      const auto t = tree_from_file(j);
      const auto th = theta(t, lengths_from_json(j.at("lambda")), precision);
      nlohmann::json labels = nlohmann::json::object();
      for (const auto& [e, x] : th.labels) labels[std::to_string(e)] = x.str(static_cast<std::streamsize>(precision));
      const Real error = theta_balance_error(th);
      const std::vector<CheckResult> checks{
          {"balanced to 1e-12", error <= Real("1e-12"), "relative error " + error.str(3)}};
      return checks_outcome({{"tree", t.to_json()}, {"precision", precision}, {"labels", labels}}, checks);
    };
  });

  // weighted
  auto* weighted = app.add_subcommand("weighted", "Weighted stable disks")->require_subcommand(1);
  auto* cells = weighted->add_subcommand("cells", "Cell counts of the weighted moduli space");
  n_option(cells, 3, 8);
  cells->add_option("--rule", rule_name, "equality-split (default) or product-face")
      ->check(CLI::IsMember({"equality-split", "product-face"}));
  cells->callback([&] {
    action = [&] {
      const auto r = weighted_report(n, parse_cell_rule(rule_name));
      const int b2 = r.boundary_cells.count(2) ? r.boundary_cells.at(2) : 0;
      return Outcome{r.to_json(), true, std::to_string(b2) + " boundary 2-cells under " + rule_name};
    };
  });

  // acceptance criteria
  auto* verify = app.add_subcommand("verify", "Run acceptance criteria");
  verify->add_option("--criterion", criterion, "Criterion number (0 = all)")
      ->check(CLI::Range(0, criterion_count));
  verify->add_option("--seed", seed, "Random seed");
  verify->callback([&] {
    action = [&] {
      nlohmann::json list = nlohmann::json::array();
      int failed = 0, total = 0;
      for (int k = 1; k <= criterion_count; ++k) {
        if (criterion != 0 && k != criterion) continue;
        const auto c = run_criterion(k, seed);
        ++total;
        failed += !c.passed();
        list.push_back(c.to_json());
      }
      return Outcome{{{"seed", seed}, {"criteria", list}, {"passed", failed == 0}}, failed == 0,
                     std::to_string(total - failed) + "/" + std::to_string(total) + " criteria passed"};
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  auto wall = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  try {
    Outcome o = action();
    o.report["command"] = command;
    out << o.report.dump(2) << "\n";
    err << o.summary << " (" << wall() << " s)\n";
    return o.passed ? 0 : 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << nlohmann::json{{"command", command}, {"error", e.what()}, {"passed", false}}.dump(2) << "\n";
    err << "error: " << e.what() << " (" << wall() << " s)\n";
    return 1;
  }
}

}  // namespace multiquilt::cli

#endif  // MULTIQUILT_CLI_HPP
