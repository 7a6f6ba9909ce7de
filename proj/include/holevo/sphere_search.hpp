/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Derivative-free minimization of a scalar function over the unit sphere S^2.
//
// Stage one evaluates a polar/azimuth grid (poles included). Stage two runs
// Nelder-Mead from the best well-separated grid points in a tangent-plane
// chart, so the poles need no special treatment.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace holevo {

struct SphereSearchConfig {
  int azimuth_steps = 128;
  int polar_steps = 64;
  /// Stop when the simplex spread in objective value is below this...
  double objective_tol = 1e-10;
  /// ...and its diameter (radians) is below this.
  double axis_tol = 1e-6;
  /// Nelder-Mead iterations per start.
  int max_refine_steps = 200;
  /// Number of grid points refined.
  int starts = 3;
  /// Only used to orient the initial simplex.
  std::uint64_t seed = 0;
};

struct SphereSearchResult {
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

using SphereObjective = std::function<double(const Eigen::Vector3d&)>;

/// Global minimum estimate. Ties (within 1e-15) go to the lexicographically smallest axis.
SphereSearchResult minimize_on_sphere(const SphereObjective& f, const SphereSearchConfig& config = {});

/// Axes of the coarse grid in evaluation order.
std::vector<Eigen::Vector3d> sphere_grid(int azimuth_steps, int polar_steps);

}  // namespace holevo
