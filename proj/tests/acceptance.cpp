/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "holevo/experiments.hpp"
#include "holevo/measurement.hpp"
#include "holevo/qubit.hpp"
#include "holevo/random.hpp"
#include "test_support.hpp"

using namespace holevo;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / n;
    my += y[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// f(x) written out independently of the library.
double f_oracle(double x) { return (1 + x) * std::log2(1 + x) + (1 - x) * std::log2(1 - x); }

Outcome inequality_fuzz() {
  const auto start = Clock::now();
  FuzzConfig cfg;
  cfg.trials = 1000;
  cfg.axes_per_trial = 5;
  cfg.seed = 42;
  cfg.tol = 1e-9;
  const RunReport r = run_fuzz(cfg);
  const double t = seconds_since(start);
  const std::size_t expected = 1000u * 5u * (kAllNotions.size() + 1);
  const bool ok = r.summary.violations == 0 && r.records.size() == expected && t < 60.0;
  return {ok, std::to_string(r.records.size()) + " checks, " + std::to_string(r.summary.violations) +
                  " violations, max gap " + fmt("%.3e", r.summary.max_gap) + ", " + fmt("%.1f s", t)};
}

Outcome two_state_kolmogorov() {
  const auto start = Clock::now();
  Rng rng(2024);
  double worst_value = 0, worst_axis = 0;
  for (int t = 0; t < 200; ++t) {
    const Ensemble e = random_qubit_ensemble(2, rng);
    const GaiResult g = gai(e, Notion::Kolmogorov);
    worst_value = std::max(worst_value, std::abs(g.value - dbhq(e, Notion::Kolmogorov)));
    const auto bs = bloch_vectors(e);
    const Eigen::Vector3d beta = (bs[0] - bs[1]).normalized();
    worst_axis = std::max(worst_axis, std::min((g.axis - beta).norm(), (g.axis + beta).norm()));
  }
  const double t = seconds_since(start);
  const bool ok = worst_value <= 1e-6 && worst_axis <= 1e-4 && t < 120.0;
  return {ok, "max |gai-dbhq| " + fmt("%.3e", worst_value) + ", max axis error " + fmt("%.3e", worst_axis) + ", " +
                  fmt("%.1f s", t)};
}

Outcome commuting_equality() {
  Rng rng(77);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const Ensemble e = random_diagonal_ensemble(rng.uniform_int(2, 4), rng);
    for (Notion n : kAllNotions) worst = std::max(worst, std::abs(gai(e, n).value - dbhq(e, n)));
  }
  return {worst <= 1e-6, "max |gai-dbhq| " + fmt("%.3e", worst) + " over 100 ensembles x 5 notions"};
}

Outcome closed_forms() {
  Rng rng(31);
  double oracle_err = 0, worst = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = rng.uniform_int(2, 4);
    const RVectord d = dirichlet_uniform(n, rng);
    std::vector<double> w(d.data(), d.data() + n);
    std::vector<Eigen::Vector3d> bs;
    for (int i = 0; i < n; ++i) bs.push_back(t % 5 == 0 ? random_unit_vector(rng) : random_bloch_in_ball(rng));
    const Ensemble e = holevo::testing::bloch_ensemble(w, bs);
    const Eigen::Vector3d z = random_unit_vector(rng);

    // Classical brute force: sum_i p_i sum_j sqrt(q_{j|i} q_j).
    double c = 0;
    for (int i = 0; i < n; ++i) c += w[i] * bs[i].dot(z);
    double brute = 0;
    for (int i = 0; i < n; ++i) {
      const double a = bs[i].dot(z);
      brute += w[i] * (std::sqrt(0.5 * (1 + a) * 0.5 * (1 + c)) + std::sqrt(0.5 * (1 - a) * 0.5 * (1 - c)));
    }
    oracle_err = std::max(oracle_err, std::abs(b_joint_closed(e, z) - brute));

    const double diffs[] = {
        xk_closed(e) - dbhq(e, Notion::Kolmogorov),
        k_joint_closed(e, z) - joint_divergence_at(e, Notion::Kolmogorov, z),
        xb_closed(e) - dbhq(e, Notion::Bhattacharyya),
        b_joint_closed(e, z) - joint_divergence_at(e, Notion::Bhattacharyya, z),
        xsr_closed(e) - dbhq(e, Notion::RelativeEntropy),
        hr_joint_closed(e, z) - joint_divergence_at(e, Notion::RelativeEntropy, z),
        nc_closed(e) - non_commutativity(e),
        purity_closed(e) - purity(e.average()),
    };
    for (double x : diffs) worst = std::max(worst, std::abs(x));
  }
  return {oracle_err <= 1e-9 && worst <= 1e-9,
          "B-joint vs brute force " + fmt("%.3e", oracle_err) + ", closed vs generic " + fmt("%.3e", worst)};
}

Outcome point_values() {
  const Ensemble q = example_ensemble({std::numbers::pi / 4, 0.5});
  const Ensemble h = example_ensemble({std::numbers::pi / 2, 0.5});
  const double errs[] = {
      std::abs(non_commutativity(q) - 1 / (4 * std::numbers::sqrt2)) / 1e-12,
      std::abs(purity(q.average()) - 0.75) / 1e-12,
      std::abs(dbhq(q, Notion::RelativeEntropy) - (1 - 0.5 * f_oracle(1 / std::numbers::sqrt2))) / 1e-9,
      std::abs(dbhq(h, Notion::RelativeEntropy) - 1) / 1e-6,
      std::abs(gai(h, Notion::RelativeEntropy).value - 1) / 1e-6,
      std::abs(dbhq(h, Notion::Kolmogorov) - 0.5) / 1e-12,
  };
  const double worst = *std::max_element(std::begin(errs), std::end(errs));
  return {worst <= 1.0, "worst error / tolerance " + fmt("%.3f", worst)};
}

Outcome figure_one() {
  FigureConfig cfg;
  const auto rows = figure1(cfg);
  const double step = std::numbers::pi / 2 / (cfg.theta_steps - 1);
  double min_gap = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) min_gap = std::min(min_gap, r.gap);
  const auto best = std::max_element(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.gap < b.gap; });
  const double endpoints = std::max(std::abs(rows.front().gap), std::abs(rows.back().gap));
  const bool ok = min_gap >= -1e-9 && endpoints <= 1e-6 && std::abs(best->theta - std::numbers::pi / 4) <= step + 1e-12;
  return {ok, "min gap " + fmt("%.3e", min_gap) + ", endpoint gap " + fmt("%.3e", endpoints) + ", argmax " +
                  fmt("%.6f", best->theta) + " (pi/4 = 0.785398, step " + fmt("%.6f", step) + ")"};
}

Outcome figure_two() {
  FigureConfig cfg;
  const auto rows = figure2(cfg);
  double min_gap = std::numeric_limits<double>::infinity();
  std::vector<double> gap, scaled, nc;
  for (const auto& r : rows) {
    min_gap = std::min(min_gap, r.gap);
    gap.push_back(r.gap);
    scaled.push_back(r.scaled);
    nc.push_back(r.n_c);
  }
  const double endpoints = std::max(std::abs(rows.front().gap), std::abs(rows.back().gap));

  Rng rng(5);
  double purity_slack = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    const Ensemble e = example_ensemble({r.theta, cfg.p_hat});
    const double gamma = purity(e.average());
    for (int k = 0; k < 20; ++k) {
      purity_slack = std::min(purity_slack, joint_divergence_at(e, Notion::Bhattacharyya, random_unit_vector(rng)) - gamma);
    }
  }
  const double corr_scaled = pearson(gap, scaled);
  const double corr_nc = pearson(gap, nc);
  const bool ok = min_gap >= -1e-9 && endpoints <= 1e-6 && purity_slack >= -1e-9 && corr_scaled > corr_nc;
  return {ok, "min gap " + fmt("%.3e", min_gap) + ", endpoint gap " + fmt("%.3e", endpoints) +
                  ", min B-joint - gamma " + fmt("%.3e", purity_slack) + ", corr((1-gamma)N_c) " +
                  fmt("%.6f", corr_scaled) + " vs corr(N_c) " + fmt("%.6f", corr_nc)};
}

Outcome axiom_suite() {
  AxiomConfig cfg;
  cfg.trials = 1000;
  const AxiomReport r = run_axiom_suite(cfg);
  std::string failing;
  for (const auto& c : r.checks) {
    if (c.violations > 0) failing += " " + c.property + "/" + c.distance;
  }
  return {r.total_violations() == 0,
          std::to_string(r.checks.size()) + " checks, " + std::to_string(r.total_violations()) + " violations" +
              (failing.empty() ? "" : " in" + failing)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"inequality fuzz (1000 ensembles x 5 axes, all notions + purity bound)", inequality_fuzz},
      {"two-state Kolmogorov optimum (200 ensembles)", two_state_kolmogorov},
      {"commuting ensembles attain the bound (100 ensembles)", commuting_equality},
      {"closed forms match generic evaluators (500 inputs)", closed_forms},
      {"example point values", point_values},
      {"relative-entropy figure properties", figure_one},
      {"Bhattacharyya figure properties", figure_two},
      {"distance axiom suite (1000 trials)", axiom_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
