/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace holevo {
namespace {

constexpr double kBlochTol = 1e-10;

void require_qubit(const Ensemble& e, const char* op) {
  if (e.dim() != 2) {
    throw UnsupportedDimensionError(std::string(op) + ": qubit ensemble required, got dim " +
                                    std::to_string(e.dim()));
  }
}

// Roundoff can push |b.z| a hair above 1.
double unit_clamp(double x) { return std::clamp(x, -1.0, 1.0); }

// 1 - x^2 for a Bloch length or projection; roundoff residue of pure states
// is snapped to 0 so its square root does not leak ~1e-8 into the result.
double purity_gap(double x2) {
  const double g = 1.0 - x2;
  return g > 8.0 * std::numeric_limits<double>::epsilon() ? g : 0.0;
}

}  // namespace

BlochVector::BlochVector(const Eigen::Vector3d& v) : v_(v) {
  if (!v_.allFinite()) throw InvariantError("BlochVector: non-finite components");
  const double n = v_.norm();
  if (n > 1.0 + kBlochTol) throw InvariantError("BlochVector: length " + std::to_string(n) + " exceeds 1");
  if (n > 1.0) v_ /= n;
}

DensityMatrixd bloch_to_density(const BlochVector& b) {
  const Eigen::Vector3d& v = b.vector();
  const CMatrixd m = 0.5 * (CMatrixd(CMatrixd::Identity(2, 2)) + v.x() * pauli::x() + v.y() * pauli::y() +
                            v.z() * pauli::z());
  return DensityMatrixd(m);
}

BlochVector density_to_bloch(const DensityMatrixd& rho) {
  if (rho.dim() != 2) throw UnsupportedDimensionError("density_to_bloch: qubit state required");
  const CMatrixd& m = rho.matrix();
  return BlochVector(Eigen::Vector3d(2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()));
}

std::vector<Eigen::Vector3d> bloch_vectors(const Ensemble& e) {
  require_qubit(e, "bloch_vectors");
  std::vector<Eigen::Vector3d> out;
  out.reserve(e.states().size());
  for (const auto& s : e.states()) out.push_back(density_to_bloch(s).vector());
  return out;
}

Eigen::Vector3d mean_bloch(const Ensemble& e) {
  const auto bs = bloch_vectors(e);
  Eigen::Vector3d m = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < bs.size(); ++i) m += e.weights()[static_cast<Eigen::Index>(i)] * bs[i];
  return m;
}

double entropy_deficit(double x) {
  auto xlogx = [](double t) { return t > 0.0 ? t * std::log2(t) : 0.0; };
  x = std::clamp(x, 0.0, 1.0);
  return xlogx(1.0 + x) + xlogx(1.0 - x);
}

double xk_closed(const Ensemble& e) {
  const auto bs = bloch_vectors(e);
  const Eigen::Vector3d bm = mean_bloch(e);
  double x = 0.0;
  for (std::size_t i = 0; i < bs.size(); ++i) x += e.weights()[static_cast<Eigen::Index>(i)] * (bs[i] - bm).norm();
  return 0.5 * x;
}

double k_joint_closed(const Ensemble& e, const Eigen::Vector3d& z) {
  const auto bs = bloch_vectors(e);
  const Eigen::Vector3d bm = mean_bloch(e);
  double k = 0.0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    k += e.weights()[static_cast<Eigen::Index>(i)] * std::abs((bs[i] - bm).dot(z));
  }
  return 0.5 * k;
}

double xb_closed(const Ensemble& e) {
  const auto bs = bloch_vectors(e);
  const Eigen::Vector3d bm = mean_bloch(e);
  double x = 0.0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const double mixed = std::sqrt(purity_gap(bs[i].squaredNorm()) * purity_gap(bm.squaredNorm()));
    x += e.weights()[static_cast<Eigen::Index>(i)] * std::sqrt(std::max(0.0, 1.0 + bs[i].dot(bm) + mixed));
  }
  return std::min(1.0, x / std::numbers::sqrt2);
}

double b_joint_closed(const Ensemble& e, const Eigen::Vector3d& z) {
  const auto bs = bloch_vectors(e);
  const double c = unit_clamp(mean_bloch(e).dot(z));
  double b = 0.0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const double a = unit_clamp(bs[i].dot(z));
    const double mixed = std::sqrt(purity_gap(a * a) * purity_gap(c * c));
    b += e.weights()[static_cast<Eigen::Index>(i)] * std::sqrt(std::max(0.0, 1.0 + a * c + mixed));
  }
  return std::min(1.0, b / std::numbers::sqrt2);
}

double b_joint_repeated_factor(const Ensemble& e, const Eigen::Vector3d& z) {
  const auto bs = bloch_vectors(e);
  const double c = unit_clamp(mean_bloch(e).dot(z));
  double b = 0.0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const double a = unit_clamp(bs[i].dot(z));
    const double repeated = std::sqrt(std::max(0.0, (1.0 - a * a) * (1.0 - a * a)));
    b += e.weights()[static_cast<Eigen::Index>(i)] * std::sqrt(std::max(0.0, 1.0 + a * c + repeated));
  }
  return b / std::numbers::sqrt2;
}

double xsr_closed(const Ensemble& e) {
  const auto bs = bloch_vectors(e);
  double x = 0.0;
  for (std::size_t i = 0; i < bs.size(); ++i) x += e.weights()[static_cast<Eigen::Index>(i)] * entropy_deficit(bs[i].norm());
  return std::max(0.0, 0.5 * x - 0.5 * entropy_deficit(mean_bloch(e).norm()));
}

double hr_joint_closed(const Ensemble& e, const Eigen::Vector3d& z) {
  const auto bs = bloch_vectors(e);
  double h = 0.0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    h += e.weights()[static_cast<Eigen::Index>(i)] * entropy_deficit(std::abs(bs[i].dot(z)));
  }
  return std::max(0.0, 0.5 * h - 0.5 * entropy_deficit(std::abs(mean_bloch(e).dot(z))));
}

double nc_closed(const Ensemble& e) {
  const auto bs = bloch_vectors(e);
  double nc = 0.0;
  for (std::size_t k = 0; k < bs.size(); ++k) {
    for (std::size_t l = 0; l < bs.size(); ++l) {
      nc += e.weights()[static_cast<Eigen::Index>(k)] * e.weights()[static_cast<Eigen::Index>(l)] *
            bs[k].cross(bs[l]).norm();
    }
  }
  return nc / (2.0 * std::numbers::sqrt2);
}

double purity_closed(const Ensemble& e) { return 0.5 * (1.0 + mean_bloch(e).squaredNorm()); }

Theorem2Optimum theorem2_axis(const Ensemble& e) {
  if (e.size() != 2) throw DegenerateEnsembleError("theorem2_axis: exactly two states required");
  const auto bs = bloch_vectors(e);
  const Eigen::Vector3d beta = bs[0] - bs[1];
  if (beta.norm() < 1e-12) throw DegenerateEnsembleError("theorem2_axis: the two states coincide");
  const double p = e.weights()[0];
  return {beta.normalized(), p * (1.0 - p) * beta.norm()};
}

Ensemble example_ensemble(const ExampleParams& params) {
  if (!(params.theta >= 0.0 && params.theta <= std::numbers::pi / 2 + 1e-12)) {
    throw InvariantError("example_ensemble: theta must lie in [0, pi/2]");
  }
  if (!(params.p_hat >= 0.0 && params.p_hat <= 1.0)) throw InvariantError("example_ensemble: p_hat must lie in [0, 1]");
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  CMatrixd rho0 = CMatrixd::Zero(2, 2);
  rho0(0, 0) = 1;
  CMatrixd rho1(2, 2);
  rho1 << c * c, c * s, c * s, s * s;
  RVectord w(2);
  w << params.p_hat, 1.0 - params.p_hat;
  return Ensemble(ProbVector(w), {DensityMatrixd(rho0), DensityMatrixd(rho1)});
}

}  // namespace holevo
