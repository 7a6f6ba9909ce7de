/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/random.hpp"

#include <cmath>
#include <numbers>

#include "holevo/ensemble.hpp"
#include "holevo/qubit.hpp"

namespace holevo {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(std::floor(uniform() * static_cast<double>(span)));
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_open_zero()));
  const double phi = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

Eigen::Vector3d random_unit_vector(Rng& rng) {
  Eigen::Vector3d v;
  do {
    v = {rng.normal(), rng.normal(), rng.normal()};
  } while (v.norm() < 1e-12);
  return v.normalized();
}

Eigen::Vector3d random_bloch_in_ball(Rng& rng) {
  return random_unit_vector(rng) * std::cbrt(rng.uniform());
}

RVectord dirichlet_uniform(int n, Rng& rng) {
  RVectord w(n);
  for (int i = 0; i < n; ++i) w(i) = -std::log(rng.uniform_open_zero());
  return w / w.sum();
}

CMatrixd ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  CMatrixd g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

DensityMatrixd random_density(Eigen::Index dim, Rng& rng) {
  const CMatrixd g = ginibre(dim, dim, rng);
  CMatrixd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrixd(hermitian_part(rho));
}

DensityMatrixd random_pure_state(Eigen::Index dim, Rng& rng) {
  return DensityMatrixd::pure(ginibre(dim, 1, rng));
}

CMatrixd random_unitary(Eigen::Index dim, Rng& rng) {
  const Eigen::HouseholderQR<CMatrixd> qr(ginibre(dim, dim, rng));
  CMatrixd q = qr.householderQ();
  const CMatrixd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const std::complex<double> d = r(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

KrausChanneld random_channel(Eigen::Index dim, int n_kraus, Rng& rng) {
  const CMatrixd v = ginibre(dim * n_kraus, dim, rng);
  const CMatrixd gram = hermitian_part(v.adjoint() * v);
  const Spectrum<double> s = eig(gram);
  const CMatrixd inv_sqrt = s.apply([](double x) { return 1.0 / std::sqrt(x); });
  const CMatrixd iso = v * inv_sqrt;
  std::vector<CMatrixd> ks;
  for (int k = 0; k < n_kraus; ++k) ks.push_back(iso.block(k * dim, 0, dim, dim));
  return KrausChanneld(std::move(ks));
}

Ensemble random_qubit_ensemble(int n_states, Rng& rng) {
  const RVectord w = dirichlet_uniform(n_states, rng);
  std::vector<DensityMatrixd> states;
  for (int i = 0; i < n_states; ++i) states.push_back(bloch_to_density(BlochVector(random_bloch_in_ball(rng))));
  return Ensemble(ProbVector(w), std::move(states));
}

Ensemble random_diagonal_ensemble(int n_states, Rng& rng) {
  const RVectord w = dirichlet_uniform(n_states, rng);
  std::vector<DensityMatrixd> states;
  for (int i = 0; i < n_states; ++i) {
    const double a = rng.uniform();
    CMatrixd m = CMatrixd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = 1.0 - a;
    states.emplace_back(m);
  }
  return Ensemble(ProbVector(w), std::move(states));
}

}  // namespace holevo
