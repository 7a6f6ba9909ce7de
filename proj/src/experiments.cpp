/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>

#include "json.hpp"
#include "holevo/distance.hpp"
#include "holevo/ensemble_io.hpp"
#include "holevo/qubit.hpp"
#include "holevo/random.hpp"

namespace holevo {
namespace {

using nlohmann::json;

json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

// Signed excess of the side that must not be larger.
double excess(Notion notion, double lhs, double rhs) {
  return orientation(notion) == Orientation::Distance ? lhs - rhs : rhs - lhs;
}

std::vector<QuantumDistance<double>> axiom_distances() {
  return {quantum_distance(Notion::Kolmogorov), bures_distance(),
          hellinger_distance(),                 quantum_distance(Notion::RelativeEntropy),
          quantum_distance(Notion::Qjsd),       quantum_distance(Notion::Bhattacharyya),
          quantum_distance(Notion::ProbError)};
}

bool symmetric(const QuantumDistance<double>& d) { return d.name != "relative-entropy"; }

double identity_value(const QuantumDistance<double>& d) {
  if (d.name == "bhattacharyya") return 1.0;
  if (d.name == "prob-error") return 0.5;
  return 0.0;
}

// |a - b| treating equal infinities as zero error.
double abs_error(ExtendedReal a, ExtendedReal b) {
  if (a.is_infinite() || b.is_infinite()) return a == b ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(a.value() - b.value());
}

class CheckTable {
 public:
  AxiomCheck& at(const std::string& property, const std::string& distance, double tol) {
    for (auto& c : checks_) {
      if (c.property == property && c.distance == distance) return c;
    }
    checks_.push_back({property, distance, 0, 0, 0.0, tol});
    return checks_.back();
  }

  void record(const std::string& property, const std::string& distance, double tol, double error) {
    AxiomCheck& c = at(property, distance, tol);
    ++c.trials;
    c.max_error = std::max(c.max_error, error);
    if (!(error <= tol)) ++c.violations;
  }

  std::vector<AxiomCheck> take() { return std::move(checks_); }

 private:
  std::vector<AxiomCheck> checks_;
};

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

std::string format_fixed(double x, int decimals) {
  if (!std::isfinite(x)) return format_double(x);
  char buf[128];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, decimals);
  std::string s(buf, res.ptr);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string ensemble_digest(const Ensemble& e) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : ensemble_to_json(e)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) out[static_cast<std::size_t>(k)] = kHex[h & 0xf];
  return out;
}

RunReport run_fuzz(const FuzzConfig& cfg) {
  if (cfg.dim != 2) throw UnsupportedDimensionError("fuzz: measurement-sampled trials require dim 2");
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "fuzz --trials " + std::to_string(cfg.trials) + " --seed " + std::to_string(cfg.seed) +
                   " --dim " + std::to_string(cfg.dim);
  for (Notion n : cfg.notions) report.command += " --notion " + std::string(to_string(n));

  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const Ensemble e = random_qubit_ensemble(rng.uniform_int(cfg.min_states, cfg.max_states), rng);
    const std::string digest = ensemble_digest(e);
    std::vector<double> bounds;
    for (Notion n : cfg.notions) bounds.push_back(dbhq(e, n));
    const double gamma = purity(e.average());

    for (int a = 0; a < cfg.axes_per_trial; ++a) {
      const JointDistribution joint = joint_distribution(e, effects_from_axis(random_unit_vector(rng)));
      for (std::size_t k = 0; k < cfg.notions.size(); ++k) {
        const Notion n = cfg.notions[k];
        TrialRecord r{t, a, digest, std::string(to_string(n)), d_of_joint(n, joint), bounds[k], true, 0};
        r.ok = inequality_holds(n, r.lhs, r.rhs, cfg.tol);
        report.summary.max_gap = std::max(report.summary.max_gap, excess(n, r.lhs, r.rhs));
        report.records.push_back(std::move(r));
      }
      if (cfg.purity_bound) {
        TrialRecord r{t, a, digest, "purity-bound", d_of_joint(Notion::Bhattacharyya, joint), gamma, true, 0};
        r.ok = r.lhs >= r.rhs - cfg.tol;
        report.summary.max_gap = std::max(report.summary.max_gap, r.rhs - r.lhs);
        report.records.push_back(std::move(r));
      }
    }
  }
  report.summary.violations =
      static_cast<int>(std::count_if(report.records.begin(), report.records.end(), [](const auto& r) { return !r.ok; }));
  report.summary.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_json(const RunReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"trial", r.trial},
                       {"axis", r.axis},
                       {"digest", r.digest},
                       {"check", r.check},
                       {"lhs", number_or_string(r.lhs)},
                       {"rhs", number_or_string(r.rhs)},
                       {"ok", r.ok},
                       {"iterations", r.iterations}});
  }
  json summary = {{"violations", report.summary.violations},
                  {"max_gap", report.records.empty() ? json(nullptr) : number_or_string(report.summary.max_gap)}};
  if (report.summary.wall_time_seconds) summary["wall_time_seconds"] = *report.summary.wall_time_seconds;
  json doc = {{"command", report.command}, {"records", records}, {"summary", summary}};
  return doc.dump(1) + "\n";
}

std::vector<double> theta_grid(int theta_steps) {
  if (theta_steps < 2) throw InvariantError("theta_steps must be at least 2");
  std::vector<double> grid(static_cast<std::size_t>(theta_steps));
  for (int k = 0; k < theta_steps; ++k) {
    grid[static_cast<std::size_t>(k)] = (std::numbers::pi / 2) * k / (theta_steps - 1);
  }
  grid.back() = std::numbers::pi / 2;
  return grid;
}

std::vector<Figure1Row> figure1(const FigureConfig& cfg) {
  std::vector<Figure1Row> rows;
  for (double theta : theta_grid(cfg.theta_steps)) {
    const Ensemble e = example_ensemble({theta, cfg.p_hat});
    Figure1Row r{};
    r.theta = theta;
    r.i_sr = gai(e, Notion::RelativeEntropy, cfg.optimizer).value;
    r.x_sr = dbhq(e, Notion::RelativeEntropy);
    r.n_c = non_commutativity(e);
    r.gap = r.x_sr - r.i_sr;
    rows.push_back(r);
  }
  return rows;
}

std::vector<Figure2Row> figure2(const FigureConfig& cfg) {
  std::vector<Figure2Row> rows;
  for (double theta : theta_grid(cfg.theta_steps)) {
    const Ensemble e = example_ensemble({theta, cfg.p_hat});
    Figure2Row r{};
    r.theta = theta;
    r.i_b = gai(e, Notion::Bhattacharyya, cfg.optimizer).value;
    r.x_b = dbhq(e, Notion::Bhattacharyya);
    r.gamma = purity(e.average());
    r.n_c = non_commutativity(e);
    r.gap = r.i_b - r.x_b;
    r.scaled = (1.0 - r.gamma) * r.n_c;
    rows.push_back(r);
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<Figure1Row>& rows) {
  os << "theta,I_Sr,X_Sr,N_c,gap\n";
  for (const auto& r : rows) {
    os << format_double(r.theta) << ',' << format_double(r.i_sr) << ',' << format_double(r.x_sr) << ','
       << format_double(r.n_c) << ',' << format_double(r.gap) << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<Figure2Row>& rows) {
  os << "theta,I_B,X_B,gamma,N_c,gap,scaled\n";
  for (const auto& r : rows) {
    os << format_double(r.theta) << ',' << format_double(r.i_b) << ',' << format_double(r.x_b) << ','
       << format_double(r.gamma) << ',' << format_double(r.n_c) << ',' << format_double(r.gap) << ','
       << format_double(r.scaled) << '\n';
  }
}

int AxiomReport::total_violations() const {
  int v = 0;
  for (const auto& c : checks) v += c.violations;
  return v;
}

AxiomReport run_axiom_suite(const AxiomConfig& cfg) {
  constexpr double kTol = 1e-9;
  constexpr double kBlockTol = 1e-8;
  const auto distances = axiom_distances();
  CheckTable table;
  Rng rng(cfg.seed);

  for (int t = 0; t < cfg.trials; ++t) {
    const Eigen::Index dim = rng.uniform_int(cfg.min_dim, cfg.max_dim);
    const DensityMatrixd rho = random_density(dim, rng);
    const DensityMatrixd sigma = random_density(dim, rng);
    const KrausChanneld channel = random_channel(dim, rng.uniform_int(2, 4), rng);
    const DensityMatrixd ancilla = random_density(2, rng);
    const DensityMatrixd rho_ext(kron(rho.matrix(), ancilla.matrix()));
    const DensityMatrixd sigma_ext(kron(sigma.matrix(), ancilla.matrix()));

    const int n_states = rng.uniform_int(2, 3);
    const Eigen::Index block_dim = rng.uniform_int(2, 3);
    std::vector<DensityMatrixd> states;
    for (int i = 0; i < n_states; ++i) states.push_back(random_density(block_dim, rng));
    const Ensemble ens(ProbVector(dirichlet_uniform(n_states, rng)), std::move(states));

    for (const auto& d : distances) {
      const bool similarity = d.orientation == Orientation::Similarity;
      const ExtendedReal v = d(rho, sigma);
      const double vv = v.to_ieee();

      // a) non-negativity (similarities: bounded by their identity value).
      table.record("non-negativity", d.name, kTol, similarity ? std::max(0.0, vv - identity_value(d)) : std::max(0.0, -vv));

      // b) identity of indiscernibles: d(rho, rho) at its identity value, distinct pairs away from it.
      table.record("identity", d.name, kTol, abs_error(d(rho, rho), ExtendedReal(identity_value(d))));
      table.record("discernibility", d.name, kTol,
                   std::abs(vv - identity_value(d)) > kTol ? 0.0 : std::numeric_limits<double>::infinity());

      // c) symmetry.
      if (symmetric(d)) table.record("symmetry", d.name, kTol, abs_error(v, d(sigma, rho)));

      // d) data processing.
      {
        const ExtendedReal after = d(channel(rho), channel(sigma));
        const double err = similarity ? v.to_ieee() - after.to_ieee() : after.to_ieee() - v.to_ieee();
        table.record("data-processing", d.name, kTol, check_dpi(d, channel, rho, sigma) ? std::max(0.0, err) : err);
      }

      // e) restricted additivity.
      table.record("restricted-additivity", d.name, kTol, abs_error(d(rho_ext, sigma_ext), v));

      // f) block-diagonal identity for classical-quantum states.
      const PropertyFCheck f = verify_property_f(ens, d);
      table.record("property-f", d.name, kBlockTol, abs_error(f.lhs, f.rhs));
    }

    const double b = bhattacharyya_q(rho, sigma);
    const double overlap = (rho.matrix() * sigma.matrix()).trace().real();
    table.record("fidelity-bound", "bhattacharyya", kTol, std::max(0.0, overlap - b * b));
  }
  return {table.take()};
}

std::string to_json(const AxiomReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"property", c.property},
                      {"distance", c.distance},
                      {"trials", c.trials},
                      {"violations", c.violations},
                      {"max_error", number_or_string(c.max_error)},
                      {"tolerance", c.tolerance}});
  }
  json doc = {{"checks", checks}, {"total_violations", report.total_violations()}};
  return doc.dump(1) + "\n";
}

}  // namespace holevo
