/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Seeded random generation of states, ensembles, channels and axes.
//
// All sampling is built on the raw 64-bit output of std::mt19937_64, whose
// sequence is fixed by the C++ standard; uniforms use the top 53 bits and
// normals use Box-Muller. Results are therefore identical across platforms.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

#include "holevo/distance.hpp"
#include "holevo/linalg.hpp"

namespace holevo {

class Ensemble;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (0, 1].
  double uniform_open_zero() { return 1.0 - uniform(); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  double normal();
  std::complex<double> complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Eigen::Vector3d random_unit_vector(Rng& rng);
/// Uniform in the closed unit ball.
Eigen::Vector3d random_bloch_in_ball(Rng& rng);
/// Dirichlet(1, ..., 1): uniform on the probability simplex.
RVectord dirichlet_uniform(int n, Rng& rng);
/// Ginibre matrix with i.i.d. standard complex normal entries.
CMatrixd ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);
/// Full-rank mixed state G G^dagger / Tr from a square Ginibre matrix.
DensityMatrixd random_density(Eigen::Index dim, Rng& rng);
DensityMatrixd random_pure_state(Eigen::Index dim, Rng& rng);
/// Haar unitary via QR of a Ginibre matrix with phase correction.
CMatrixd random_unitary(Eigen::Index dim, Rng& rng);
/// Random CPTP map with n_kraus operators obtained by orthonormalizing a stacked
/// Ginibre isometry V -> V (V^dagger V)^{-1/2}.
KrausChanneld random_channel(Eigen::Index dim, int n_kraus, Rng& rng);
/// Qubit ensemble with Dirichlet weights and Bloch vectors uniform in the ball.
Ensemble random_qubit_ensemble(int n_states, Rng& rng);
/// Qubit ensemble of states diagonal in the computational basis.
Ensemble random_diagonal_ensemble(int n_states, Rng& rng);

}  // namespace holevo
