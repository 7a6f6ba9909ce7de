/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Reproducible experiment drivers: inequality fuzzing, figure data and the
// distance-axiom suite. Shared by the command-line tool and the acceptance tests.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "holevo/measurement.hpp"
#include "holevo/notion.hpp"

namespace holevo {

struct FuzzConfig {
  int trials = 1000;
  std::uint64_t seed = 42;
  std::vector<Notion> notions = {kAllNotions.begin(), kAllNotions.end()};
  int dim = 2;
  int axes_per_trial = 5;
  int min_states = 2;
  int max_states = 4;
  /// Also check B(P || p x q) >= Tr(rho^2) on every sampled axis.
  bool purity_bound = true;
  double tol = 1e-9;
};

struct TrialRecord {
  int trial = 0;
  int axis = 0;
  std::string digest;
  /// Notion name, or "purity-bound".
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = true;
  int iterations = 0;
};

struct RunSummary {
  int violations = 0;
  /// Largest excess of the side that must not exceed the other (<= 0 when every record holds).
  double max_gap = -std::numeric_limits<double>::infinity();
  std::optional<double> wall_time_seconds;
};

struct RunReport {
  std::string command;
  std::vector<TrialRecord> records;
  RunSummary summary;
};

/// Seeded ensembles (Dirichlet weights, Bloch vectors uniform in the ball) and
/// uniform random axes. Only dim 2 is supported.
RunReport run_fuzz(const FuzzConfig& config);

std::string to_json(const RunReport& report);

/// 16 hex digits of FNV-1a over the canonical JSON of the ensemble.
std::string ensemble_digest(const Ensemble& e);

struct Figure1Row {
  double theta;
  double i_sr;
  double x_sr;
  double n_c;
  double gap;  // x_sr - i_sr
};

struct Figure2Row {
  double theta;
  double i_b;
  double x_b;
  double gamma;
  double n_c;
  double gap;     // i_b - x_b
  double scaled;  // (1 - gamma) n_c
};

struct FigureConfig {
  double p_hat = 0.5;
  /// Number of theta samples over [0, pi/2], endpoints included.
  int theta_steps = 181;
  OptimizerConfig optimizer;
};

std::vector<double> theta_grid(int theta_steps);
std::vector<Figure1Row> figure1(const FigureConfig& config);
std::vector<Figure2Row> figure2(const FigureConfig& config);

/// Header row, '.' decimal separator, shortest round-trip numbers, LF endings.
void write_csv(std::ostream& os, const std::vector<Figure1Row>& rows);
void write_csv(std::ostream& os, const std::vector<Figure2Row>& rows);

struct AxiomConfig {
  int trials = 1000;
  std::uint64_t seed = 7;
  int min_dim = 2;
  int max_dim = 4;
};

struct AxiomCheck {
  std::string property;
  std::string distance;
  int trials = 0;
  int violations = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  int total_violations() const;
};

/// Non-negativity, identity of indiscernibles, symmetry, data processing under
/// random CPTP maps, restricted additivity, the block-diagonal identity for
/// classical-quantum states and the fidelity bound B^2 >= Tr(rho sigma).
AxiomReport run_axiom_suite(const AxiomConfig& config);

std::string to_json(const AxiomReport& report);

/// Locale-independent shortest round-trip formatting.
std::string format_double(double x);
/// Fixed-point with `decimals` digits after the point; -0 prints as 0.
std::string format_fixed(double x, int decimals);

}  // namespace holevo
