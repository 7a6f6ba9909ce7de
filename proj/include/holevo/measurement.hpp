/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Measurements, outcome statistics and the generalized accessible information.

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "holevo/classical.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/notion.hpp"
#include "holevo/sphere_search.hpp"

namespace holevo {

/// Effects {M_j}: PSD (eigenvalues >= -1e-10) and summing to I within 1e-10.
class Povm {
 public:
  explicit Povm(std::vector<CMatrixd> effects);

  const std::vector<CMatrixd>& effects() const noexcept { return effects_; }
  Eigen::Index dim() const noexcept { return effects_.front().rows(); }
  Eigen::Index outcomes() const noexcept { return static_cast<Eigen::Index>(effects_.size()); }

 private:
  std::vector<CMatrixd> effects_;
};

/// Qubit projective measurement along a unit Bloch axis.
class QubitVonNeumann {
 public:
  /// |axis| must be 1 within 1e-12.
  explicit QubitVonNeumann(const Eigen::Vector3d& axis);
  /// Axis generated by a unit 4-vector s through the SU(2) element s.(I, i sigma).
  static QubitVonNeumann from_generator(const Eigen::Vector4d& s);

  const Eigen::Vector3d& axis() const noexcept { return axis_; }
  Povm povm() const;

 private:
  Eigen::Vector3d axis_;
};

/// z(s) = (2(-s0 s2 + s1 s3), 2(s0 s1 + s2 s3), s0^2 + s3^2 - s1^2 - s2^2); |s| = 1 within 1e-10.
Eigen::Vector3d axis_from_s(const Eigen::Vector4d& s);

/// E_j = (I + (-1)^j z.sigma) / 2.
Povm effects_from_axis(const Eigen::Vector3d& z);

/// P_ij = p_i Tr(M_j rho_i).
JointDistribution joint_distribution(const Ensemble& e, const Povm& m);

/// P_ij = p_i Tr(sqrt(M_j) rho_i sqrt(M_j)), the post-measurement form.
JointDistribution joint_distribution_sqrt_form(const Ensemble& e, const Povm& m);

using OptimizerConfig = SphereSearchConfig;

struct GaiResult {
  double value = 0.0;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  Direction direction = Direction::Maximize;
  int iterations = 0;
  int evaluations = 0;
};

/// Extremum of D(P || p x q) over qubit von Neumann measurements: maximum for
/// distances, minimum for similarities (PE, B). Qubit ensembles only.
GaiResult gai(const Ensemble& e, Notion notion, const OptimizerConfig& config = {});

/// D(P || p x q) for the qubit measurement along `axis`.
double joint_divergence_at(const Ensemble& e, Notion notion, const Eigen::Vector3d& axis);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

/// lhs <= rhs + tol for distance notions, lhs >= rhs - tol for similarities.
bool inequality_holds(Notion notion, double lhs, double rhs, double tol = 1e-9);

/// lhs = D(P || p x q), rhs = X_d. ok iff lhs <= rhs + tol for distances and
/// lhs >= rhs - tol for similarities.
InequalityCheck check_theorem1(const Ensemble& e, const Povm& m, Notion notion, double tol = 1e-9);

/// lhs = B(P || p x q), rhs = Tr(rho^2); ok iff lhs >= rhs - tol.
InequalityCheck check_purity_bound(const Ensemble& e, const Povm& m, double tol = 1e-9);

/// The distances along the chain rho_c -> rho_0 -> rho_M -> rho_cc, each
/// against its uncorrelated counterpart, built as explicit matrices.
struct Theorem1Chain {
  ExtendedReal ensemble;     // d(rho_c || rho_c^P (x) rho_c^Q)
  ExtendedReal padded;       // d(rho_0 || ...), rho_0 = rho_c (x) |0><0|
  ExtendedReal measured;     // d(rho_M || ...), after the measurement channel
  ExtendedReal classical;    // d(rho_cc || ...), after tracing out the system
  double mean_distance = 0;  // sum_i p_i d(rho_i || rho)
  double joint = 0;          // classical D(P || p x q)
};

/// Largest (n+1) * dim * (m+1) accepted by theorem1_chain.
inline constexpr Eigen::Index kMaxChainDim = 64;

Theorem1Chain theorem1_chain(const Ensemble& e, const Povm& m, Notion notion);

/// True when the chain satisfies additivity, both monotonicity steps, property (f)
/// and the classical identity, each within tol (direction reversed for similarities).
bool chain_consistent(const Theorem1Chain& c, Notion notion, double tol = 1e-8);

}  // namespace holevo
