/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Closed-form qubit expressions in Bloch-vector language.
//
// For rho_i = (I + b_i.sigma)/2 with mean b_m = sum p_i b_i and a measurement
// axis z, the outcome statistics are P_ij = p_i (1 + (-1)^j b_i.z)/2 and
// p_i q_j = p_i (1 + (-1)^j b_m.z)/2, so every quantity below reduces to dot
// products, norms and cross products.

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "holevo/ensemble.hpp"
#include "holevo/linalg.hpp"

namespace holevo {

/// Real 3-vector with |v| <= 1; lengths up to 1 + 1e-10 are rescaled onto the sphere.
class BlochVector {
 public:
  explicit BlochVector(const Eigen::Vector3d& v);

  const Eigen::Vector3d& vector() const noexcept { return v_; }
  double norm() const { return v_.norm(); }

 private:
  Eigen::Vector3d v_;
};

DensityMatrixd bloch_to_density(const BlochVector& b);
/// Requires a qubit state.
BlochVector density_to_bloch(const DensityMatrixd& rho);

/// Bloch vectors of every state of a qubit ensemble.
std::vector<Eigen::Vector3d> bloch_vectors(const Ensemble& e);
/// b_m = sum_i p_i b_i.
Eigen::Vector3d mean_bloch(const Ensemble& e);

/// f(x) = (1+x) log2(1+x) + (1-x) log2(1-x), with 0 log 0 = 0; S(rho) = 1 - f(|b|)/2.
double entropy_deficit(double x);

/// X_K = 1/2 sum_i p_i |b_i - b_m|.
double xk_closed(const Ensemble& e);
/// K(P || p x q) = 1/2 sum_i p_i |(b_i - b_m).z|.
double k_joint_closed(const Ensemble& e, const Eigen::Vector3d& z);

/// X_B = sum_i p_i sqrt(1 + b_i.b_m + sqrt((1-|b_i|^2)(1-|b_m|^2))) / sqrt 2.
double xb_closed(const Ensemble& e);
/// B(P || p x q) = sum_i p_i sqrt(1 + a_i c + sqrt((1-a_i^2)(1-c^2))) / sqrt 2, a_i = b_i.z, c = b_m.z.
double b_joint_closed(const Ensemble& e, const Eigen::Vector3d& z);
/// Variant with (1 - a_i^2) in place of (1 - c^2) under the inner root. It does not
/// reproduce the classical coefficient; tests use it as a negative control.
double b_joint_repeated_factor(const Ensemble& e, const Eigen::Vector3d& z);

/// X_Sr = 1/2 sum_i p_i f(|b_i|) - 1/2 f(|b_m|).
double xsr_closed(const Ensemble& e);
/// H_r(P || p x q) = 1/2 sum_i p_i f(|b_i.z|) - 1/2 f(|b_m.z|).
double hr_joint_closed(const Ensemble& e, const Eigen::Vector3d& z);

/// N_c = sum_{k,l} p_k p_l |b_k x b_l| / (2 sqrt 2).
double nc_closed(const Ensemble& e);
/// Tr(rho^2) = (1 + |b_m|^2) / 2.
double purity_closed(const Ensemble& e);

struct Theorem2Optimum {
  Eigen::Vector3d axis;
  double value;
};

/// For two states, z = (b_0 - b_1)/|b_0 - b_1| attains K(P || p x q) = p(1-p)|b_0 - b_1| = X_K.
Theorem2Optimum theorem2_axis(const Ensemble& e);

/// Two-pure-state example: rho_0 = |0><0|, rho_1 = |psi><psi| with
/// psi = (cos theta, sin theta), weights (p_hat, 1 - p_hat).
struct ExampleParams {
  double theta = 0.0;
  double p_hat = 0.5;
};

Ensemble example_ensemble(const ExampleParams& params);

}  // namespace holevo
