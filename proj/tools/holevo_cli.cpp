/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// holevo: generalized Holevo quantities from the command line.
//
// Exit codes:
//   0  success
//   1  usage error or unexpected failure
//   2  ensemble file could not be parsed (message carries line/column)
//   3  ensemble violates a state/probability invariant
//   4  unsupported dimension (e.g. gai on a non-qubit ensemble)
//   5  fuzz or verify-properties found violations

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holevo/ensemble_io.hpp"
#include "holevo/experiments.hpp"
#include "holevo/measurement.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kInvariant = 3, kUnsupported = 4, kViolations = 5 };

struct Options {
  std::string file;
  std::string notion = "kolmogorov";
  std::vector<std::string> notions;
  std::uint64_t seed = 42;
  int trials = 1000;
  int dim = 2;
  int axes = 5;
  int which = 1;
  double p_hat = 0.5;
  int theta_steps = 181;
  int grid = 128;
  double tol = 1e-10;
  std::string out;
  bool timing = false;
};

holevo::Notion notion_or_throw(const std::string& name) {
  if (auto n = holevo::parse_notion(name)) return *n;
  throw CLI::ValidationError("--notion", "unknown notion '" + name + "'");
}

holevo::OptimizerConfig optimizer(const Options& o) {
  holevo::OptimizerConfig cfg;
  cfg.azimuth_steps = o.grid;
  cfg.polar_steps = std::max(2, o.grid / 2);
  cfg.objective_tol = o.tol;
  cfg.seed = o.seed;
  return cfg;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + o.out + "'");
  f << text;
}

int cmd_dbhq(const Options& o) {
  const holevo::Ensemble e = holevo::read_ensemble_file(o.file);
  std::cout << holevo::format_fixed(holevo::dbhq(e, notion_or_throw(o.notion)), 12) << '\n';
  return kOk;
}

int cmd_gai(const Options& o) {
  const holevo::Ensemble e = holevo::read_ensemble_file(o.file);
  const holevo::GaiResult r = holevo::gai(e, notion_or_throw(o.notion), optimizer(o));
  std::cout << "value " << holevo::format_fixed(r.value, 12) << '\n'
            << "axis " << holevo::format_fixed(r.axis.x(), 12) << ' ' << holevo::format_fixed(r.axis.y(), 12) << ' '
            << holevo::format_fixed(r.axis.z(), 12) << '\n'
            << "direction " << holevo::to_string(r.direction) << '\n'
            << "iterations " << r.iterations << '\n';
  return kOk;
}

int cmd_fuzz(const Options& o) {
  holevo::FuzzConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.dim = o.dim;
  cfg.axes_per_trial = o.axes;
  if (!o.notions.empty()) {
    cfg.notions.clear();
    for (const auto& n : o.notions) cfg.notions.push_back(notion_or_throw(n));
  }
  holevo::RunReport report = holevo::run_fuzz(cfg);
  if (!o.timing) report.summary.wall_time_seconds.reset();
  emit(o, holevo::to_json(report));
  return report.summary.violations == 0 ? kOk : kViolations;
}

int cmd_figure(const Options& o) {
  if (o.which != 1 && o.which != 2) throw CLI::ValidationError("--which", "must be 1 or 2");
  holevo::FigureConfig cfg;
  cfg.p_hat = o.p_hat;
  cfg.theta_steps = o.theta_steps;
  cfg.optimizer = optimizer(o);
  std::ostringstream csv;
  if (o.which == 1) {
    holevo::write_csv(csv, holevo::figure1(cfg));
  } else {
    holevo::write_csv(csv, holevo::figure2(cfg));
  }
  emit(o, csv.str());
  return kOk;
}

int cmd_verify(const Options& o) {
  holevo::AxiomConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  const holevo::AxiomReport report = holevo::run_axiom_suite(cfg);
  emit(o, holevo::to_json(report));
  return report.total_violations() == 0 ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Holevo quantities and accessible information for quantum ensembles"};
  app.require_subcommand(1);
  Options o;

  const std::string notion_help = "kolmogorov | prob-error | bhattacharyya | relative-entropy | qjsd";
  auto add_optimizer_flags = [&](CLI::App* sub) {
    sub->add_option("--grid", o.grid, "azimuth grid points (polar uses half)")->check(CLI::Range(4, 100000));
    sub->add_option("--tol", o.tol, "refinement objective tolerance");
    sub->add_option("--seed", o.seed, "seed for simplex orientation");
  };

  auto* dbhq = app.add_subcommand("dbhq", "distance-based Holevo quantity X_d");
  dbhq->add_option("--file", o.file, "ensemble JSON")->required();
  dbhq->add_option("--notion", o.notion, notion_help);

  auto* gai = app.add_subcommand("gai", "generalized accessible information over qubit von Neumann measurements");
  gai->add_option("--file", o.file, "ensemble JSON")->required();
  gai->add_option("--notion", o.notion, notion_help);
  add_optimizer_flags(gai);

  auto* fuzz = app.add_subcommand("fuzz", "seeded fuzzing of the generalized Holevo inequalities");
  fuzz->add_option("--trials", o.trials)->check(CLI::NonNegativeNumber);
  fuzz->add_option("--seed", o.seed);
  fuzz->add_option("--notion", o.notions, notion_help + " (repeatable; default all)");
  fuzz->add_option("--dim", o.dim);
  fuzz->add_option("--axes", o.axes, "random measurement axes per ensemble")->check(CLI::PositiveNumber);
  fuzz->add_option("--out", o.out, "write the JSON report here instead of stdout");
  fuzz->add_flag("--timing", o.timing, "include wall time in the summary");

  auto* figure = app.add_subcommand("figure", "CSV data for the two-pure-state example");
  figure->add_option("--which", o.which, "1: relative entropy, 2: Bhattacharyya")->required();
  figure->add_option("--p-hat", o.p_hat)->check(CLI::Range(0.0, 1.0));
  figure->add_option("--theta-steps", o.theta_steps)->check(CLI::Range(2, 1000000));
  figure->add_option("--out", o.out);
  add_optimizer_flags(figure);

  auto* verify = app.add_subcommand("verify-properties", "fuzz the distance-measure axioms");
  verify->add_option("--trials", o.trials)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed);
  verify->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*dbhq) return cmd_dbhq(o);
    if (*gai) return cmd_gai(o);
    if (*fuzz) return cmd_fuzz(o);
    if (*figure) return cmd_figure(o);
    if (*verify) return cmd_verify(o);
  } catch (const holevo::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const holevo::UnsupportedDimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const holevo::InvariantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (const holevo::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
