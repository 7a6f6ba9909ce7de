/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Quantum ensembles {p_i, rho_i} and the distance-based Holevo quantity.

#pragma once

#include <vector>

#include "holevo/classical.hpp"
#include "holevo/distance.hpp"
#include "holevo/linalg.hpp"
#include "holevo/notion.hpp"

namespace holevo {

class Ensemble {
 public:
  /// Requires one weight per state, at least one state and a common dimension.
  Ensemble(ProbVector weights, std::vector<DensityMatrixd> states);

  const ProbVector& weights() const noexcept { return weights_; }
  const std::vector<DensityMatrixd>& states() const noexcept { return states_; }
  /// rho = sum_i p_i rho_i.
  const DensityMatrixd& average() const noexcept { return average_; }

  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(states_.size()); }
  Eigen::Index dim() const noexcept { return average_.dim(); }

 private:
  ProbVector weights_;
  std::vector<DensityMatrixd> states_;
  DensityMatrixd average_;
};

/// X_d = sum_i p_i d(rho_i || rho). Zero-weight states contribute nothing.
double dbhq(const Ensemble& e, Notion notion);

/// Holevo quantity S(rho) - sum_i p_i S(rho_i), in bits.
double holevo_chi(const Ensemble& e);

/// N_c = 1/2 sum_{k,l} || [p_k rho_k, p_l rho_l] ||_2 over all ordered pairs.
double non_commutativity(const Ensemble& e);

/// Both sides of d(rho_c || rho_c^P (x) rho_c^Q) = sum_i p_i d(rho_i || rho), built with
/// explicit block-diagonal matrices.
struct PropertyFCheck {
  ExtendedReal lhs;
  ExtendedReal rhs;
};

/// Largest dim * (n+1) accepted by verify_property_f.
inline constexpr Eigen::Index kMaxBlockDim = 32;

/// rho_c = sum_i p_i |i><i| (x) rho_i, the classical-quantum state of the ensemble.
DensityMatrixd classical_quantum_state(const Ensemble& e);
/// sum_i p_i |i><i| (x) rho, its uncorrelated counterpart.
DensityMatrixd uncorrelated_state(const Ensemble& e);

PropertyFCheck verify_property_f(const Ensemble& e, Notion notion);
PropertyFCheck verify_property_f(const Ensemble& e, const QuantumDistance<double>& d);

}  // namespace holevo
