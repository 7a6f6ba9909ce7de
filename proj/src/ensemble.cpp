/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/ensemble.hpp"

#include <sstream>
#include <string>

namespace holevo {
namespace {

DensityMatrixd weighted_average(const ProbVector& weights, const std::vector<DensityMatrixd>& states) {
  if (states.empty()) throw DimensionError("Ensemble: at least one state is required");
  if (weights.size() != static_cast<Eigen::Index>(states.size())) {
    std::ostringstream msg;
    msg << "Ensemble: " << weights.size() << " weights for " << states.size() << " states";
    throw DimensionError(msg.str());
  }
  const Eigen::Index dim = states.front().dim();
  CMatrixd avg = CMatrixd::Zero(dim, dim);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != dim) throw DimensionError("Ensemble: states have different dimensions");
    avg += weights[static_cast<Eigen::Index>(i)] * states[i].matrix();
  }
  return DensityMatrixd(hermitian_part(avg));
}

CMatrixd basis_projector(Eigen::Index n, Eigen::Index i) {
  CMatrixd p = CMatrixd::Zero(n, n);
  p(i, i) = 1;
  return p;
}

void require_block_cap(const Ensemble& e) {
  if (e.dim() * e.size() > kMaxBlockDim) {
    throw DimensionError("verify_property_f: block dimension " + std::to_string(e.dim() * e.size()) +
                         " exceeds cap " + std::to_string(kMaxBlockDim));
  }
}

}  // namespace

Ensemble::Ensemble(ProbVector weights, std::vector<DensityMatrixd> states)
    : weights_(std::move(weights)), states_(std::move(states)), average_(weighted_average(weights_, states_)) {}

double dbhq(const Ensemble& e, Notion notion) {
  const QuantumDistance<double> d = quantum_distance(notion);
  ExtendedReal total(0.0);
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    const double p = e.weights()[i];
    if (p == 0.0) continue;
    total += d(e.states()[static_cast<std::size_t>(i)], e.average()).weighted(p);
  }
  // p_i rho_i <= rho, so every weighted term lies inside supp(rho).
  return total.value();
}

double holevo_chi(const Ensemble& e) {
  double chi = von_neumann_entropy(e.average());
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    chi -= e.weights()[i] * von_neumann_entropy(e.states()[static_cast<std::size_t>(i)]);
  }
  return std::max(0.0, chi);
}

double non_commutativity(const Ensemble& e) {
  double nc = 0.0;
  for (Eigen::Index k = 0; k < e.size(); ++k) {
    const CMatrixd a = e.weights()[k] * e.states()[static_cast<std::size_t>(k)].matrix();
    for (Eigen::Index l = 0; l < e.size(); ++l) {
      const CMatrixd b = e.weights()[l] * e.states()[static_cast<std::size_t>(l)].matrix();
      nc += 0.5 * hs_norm(a * b - b * a);
    }
  }
  return nc;
}

DensityMatrixd classical_quantum_state(const Ensemble& e) {
  require_block_cap(e);
  const Eigen::Index n = e.size();
  CMatrixd rho_c = CMatrixd::Zero(n * e.dim(), n * e.dim());
  for (Eigen::Index i = 0; i < n; ++i) {
    rho_c += e.weights()[i] * kron(basis_projector(n, i), e.states()[static_cast<std::size_t>(i)].matrix());
  }
  return DensityMatrixd(rho_c);
}

DensityMatrixd uncorrelated_state(const Ensemble& e) {
  require_block_cap(e);
  const Eigen::Index n = e.size();
  CMatrixd marginal = CMatrixd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) marginal(i, i) = e.weights()[i];
  return DensityMatrixd(kron(marginal, e.average().matrix()));
}

PropertyFCheck verify_property_f(const Ensemble& e, const QuantumDistance<double>& d) {
  const ExtendedReal lhs = d(classical_quantum_state(e), uncorrelated_state(e));
  ExtendedReal rhs(0.0);
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    rhs += d(e.states()[static_cast<std::size_t>(i)], e.average()).weighted(e.weights()[i]);
  }
  return {lhs, rhs};
}

PropertyFCheck verify_property_f(const Ensemble& e, Notion notion) {
  return verify_property_f(e, quantum_distance(notion));
}

}  // namespace holevo
