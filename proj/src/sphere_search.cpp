/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/sphere_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "holevo/errors.hpp"
#include "holevo/random.hpp"

namespace holevo {
namespace {

constexpr double kTieTol = 1e-15;

bool lexicographically_less(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
}

bool better(double fa, const Eigen::Vector3d& a, double fb, const Eigen::Vector3d& b) {
  if (fa < fb - kTieTol) return true;
  if (fb < fa - kTieTol) return false;
  return lexicographically_less(a, b);
}

// Tangent-plane chart around a base point: (u, v) -> normalize(base + u e1 + v e2).
class Chart {
 public:
  explicit Chart(const Eigen::Vector3d& base) : base_(base.normalized()) {
    const Eigen::Vector3d helper =
        std::abs(base_.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    e1_ = base_.cross(helper).normalized();
    e2_ = base_.cross(e1_);
  }

  Eigen::Vector3d operator()(const Eigen::Vector2d& uv) const {
    return (base_ + uv.x() * e1_ + uv.y() * e2_).normalized();
  }

 private:
  Eigen::Vector3d base_;
  Eigen::Vector3d e1_;
  Eigen::Vector3d e2_;
};

struct Vertex {
  Eigen::Vector2d uv;
  double f;
};

SphereSearchResult nelder_mead(const SphereObjective& f, const Eigen::Vector3d& start, double step,
                               double orientation, const SphereSearchConfig& cfg) {
  const Chart chart(start);
  SphereSearchResult out;
  auto eval = [&](const Eigen::Vector2d& uv) {
    ++out.evaluations;
    return f(chart(uv));
  };

  const Eigen::Vector2d d1(std::cos(orientation), std::sin(orientation));
  const Eigen::Vector2d d2(-d1.y(), d1.x());
  std::array<Vertex, 3> s = {Vertex{Eigen::Vector2d::Zero(), 0.0}, Vertex{step * d1, 0.0}, Vertex{step * d2, 0.0}};
  for (auto& v : s) v.f = eval(v.uv);

  for (; out.iterations < cfg.max_refine_steps; ++out.iterations) {
    std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    const double spread = s[2].f - s[0].f;
    const double diameter = std::max((s[1].uv - s[0].uv).norm(), (s[2].uv - s[0].uv).norm());
    if (spread <= cfg.objective_tol && diameter <= cfg.axis_tol) break;

    const Eigen::Vector2d centroid = 0.5 * (s[0].uv + s[1].uv);
    const Vertex reflected{centroid + (centroid - s[2].uv), 0.0};
    const double fr = eval(reflected.uv);
    if (fr < s[0].f) {
      const Eigen::Vector2d expanded = centroid + 2.0 * (centroid - s[2].uv);
      const double fe = eval(expanded);
      s[2] = fe < fr ? Vertex{expanded, fe} : Vertex{reflected.uv, fr};
    } else if (fr < s[1].f) {
      s[2] = {reflected.uv, fr};
    } else {
      const bool outside = fr < s[2].f;
      const Eigen::Vector2d contracted =
          outside ? centroid + 0.5 * (reflected.uv - centroid) : centroid + 0.5 * (s[2].uv - centroid);
      const double fc = eval(contracted);
      if (fc < std::min(fr, s[2].f)) {
        s[2] = {contracted, fc};
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k].uv = s[0].uv + 0.5 * (s[k].uv - s[0].uv);
          s[k].f = eval(s[k].uv);
        }
      }
    }
  }
  const auto best = std::min_element(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  out.axis = chart(best->uv);
  out.value = best->f;
  return out;
}

}  // namespace

std::vector<Eigen::Vector3d> sphere_grid(int azimuth_steps, int polar_steps) {
  if (azimuth_steps < 1 || polar_steps < 2) throw InvariantError("sphere_grid: need azimuth >= 1 and polar >= 2");
  std::vector<Eigen::Vector3d> grid;
  grid.reserve(static_cast<std::size_t>(azimuth_steps) * static_cast<std::size_t>(polar_steps));
  for (int k = 0; k < polar_steps; ++k) {
    const double polar = std::numbers::pi * k / (polar_steps - 1);
    const bool pole = (k == 0 || k == polar_steps - 1);
    const int n_az = pole ? 1 : azimuth_steps;
    for (int l = 0; l < n_az; ++l) {
      const double az = 2.0 * std::numbers::pi * l / azimuth_steps;
      if (pole) {
        grid.emplace_back(0.0, 0.0, k == 0 ? 1.0 : -1.0);
      } else {
        grid.emplace_back(std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az), std::cos(polar));
      }
    }
  }
  return grid;
}

SphereSearchResult minimize_on_sphere(const SphereObjective& f, const SphereSearchConfig& cfg) {
  const std::vector<Eigen::Vector3d> grid = sphere_grid(cfg.azimuth_steps, cfg.polar_steps);
  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) values[k] = f(grid[k]);

  std::vector<std::size_t> order(grid.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return better(values[a], grid[a], values[b], grid[b]);
  });

  const double spacing = std::numbers::pi / (cfg.polar_steps - 1);
  std::vector<std::size_t> starts;
  for (std::size_t idx : order) {
    if (static_cast<int>(starts.size()) >= std::max(1, cfg.starts)) break;
    const bool separated = std::all_of(starts.begin(), starts.end(), [&](std::size_t s) {
      return std::acos(std::clamp(grid[s].dot(grid[idx]), -1.0, 1.0)) > 2.0 * spacing;
    });
    if (separated) starts.push_back(idx);
  }

  Rng rng(cfg.seed);
  const double orientation = 2.0 * std::numbers::pi * rng.uniform();

  SphereSearchResult best;
  best.axis = grid[order.front()];
  best.value = values[order.front()];
  best.evaluations = static_cast<int>(grid.size());
  for (std::size_t s : starts) {
    const SphereSearchResult local = nelder_mead(f, grid[s], 0.5 * spacing, orientation, cfg);
    best.iterations += local.iterations;
    best.evaluations += local.evaluations;
    if (better(local.value, local.axis, best.value, best.axis)) {
      best.axis = local.axis;
      best.value = local.value;
    }
  }
  return best;
}

}  // namespace holevo
