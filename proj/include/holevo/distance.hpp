/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Quantum distance measures between density matrices and Kraus channels.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "holevo/extended.hpp"
#include "holevo/linalg.hpp"
#include "holevo/notion.hpp"

namespace holevo {

namespace detail {

template <typename Real>
void require_same_dim(const DensityMatrix<Real>& a, const DensityMatrix<Real>& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": density matrices of different dimension (" +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace detail

/// K(rho||sigma) = 1/2 Tr|rho - sigma|.
template <typename Real>
Real trace_distance(const DensityMatrix<Real>& rho, const DensityMatrix<Real>& sigma) {
  detail::require_same_dim(rho, sigma, "trace_distance");
  return Real(0.5) * trace_norm(rho.matrix() - sigma.matrix());
}

/// Tr sqrt(sqrt(sigma) rho sqrt(sigma)), the square root of the fidelity.
template <typename Real>
Real bhattacharyya_q(const DensityMatrix<Real>& rho, const DensityMatrix<Real>& sigma) {
  detail::require_same_dim(rho, sigma, "bhattacharyya_q");
  const CMatrix<Real> root_sigma = mat_sqrt(sigma.matrix());
  const CMatrix<Real> inner = hermitian_part(root_sigma * rho.matrix() * root_sigma);
  const Real b = mat_sqrt(inner).trace().real();
  return std::clamp(b, Real(0), Real(1));
}

/// Squared Bures distance 2(1 - B).
template <typename Real>
Real bures_sq(const DensityMatrix<Real>& rho, const DensityMatrix<Real>& sigma) {
  return Real(2) * (Real(1) - bhattacharyya_q(rho, sigma));
}

/// Squared Hellinger distance 2(1 - Tr sqrt(rho) sqrt(sigma)).
template <typename Real>
Real hellinger_sq(const DensityMatrix<Real>& rho, const DensityMatrix<Real>& sigma) {
  detail::require_same_dim(rho, sigma, "hellinger_sq");
  const Real affinity = (mat_sqrt(rho.matrix()) * mat_sqrt(sigma.matrix())).trace().real();
  return std::max(Real(0), Real(2) * (Real(1) - affinity));
}

/// supp(rho) within supp(sigma): the part of rho outside the eigenvectors of
/// sigma with eigenvalue > 1e-12 has Hilbert-Schmidt norm <= 1e-10.
template <typename Real>
bool support_contained(const DensityMatrix<Real>& rho, const Spectrum<Real>& sigma_spec) {
  const Eigen::Index n = sigma_spec.values.size();
  CMatrix<Real> outside = CMatrix<Real>::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (sigma_spec.values(k) > LinalgTolerance<Real>::support) {
      outside -= sigma_spec.vectors.col(k) * sigma_spec.vectors.col(k).adjoint();
    }
  }
  return hs_norm(outside * rho.matrix() * outside) <= Real(1e-10);
}

/// Umegaki relative entropy Tr[rho(log2 rho - log2 sigma)] in bits; +infinity
/// when the support of rho is not inside the support of sigma.
template <typename Real>
Extended<Real> relative_entropy_q(const DensityMatrix<Real>& rho, const DensityMatrix<Real>& sigma) {
  detail::require_same_dim(rho, sigma, "relative_entropy_q");
  const Spectrum<Real> ss = eig(sigma.matrix());
  if (!support_contained(rho, ss)) return Extended<Real>::infinity();
  Real cross = 0;  // Tr[rho log2 sigma] restricted to supp(sigma)
  for (Eigen::Index k = 0; k < ss.values.size(); ++k) {
    const Real lambda = ss.values(k);
    if (lambda <= LinalgTolerance<Real>::support) continue;
    const Real weight = (ss.vectors.col(k).adjoint() * rho.matrix() * ss.vectors.col(k))(0, 0).real();
    cross += weight * std::log2(lambda);
  }
  const Real value = -von_neumann_entropy(rho) - cross;
  return Extended<Real>(std::max(Real(0), value));
}

/// Quantum Jensen-Shannon divergence S((rho+sigma)/2) - S(rho)/2 - S(sigma)/2.
template <typename Real>
Real qjsd(const DensityMatrix<Real>& rho, const DensityMatrix<Real>& sigma) {
  detail::require_same_dim(rho, sigma, "qjsd");
  const DensityMatrix<Real> mid(CMatrix<Real>((rho.matrix() + sigma.matrix()) * Real(0.5)));
  const Real v = von_neumann_entropy(mid) - Real(0.5) * von_neumann_entropy(rho) -
                 Real(0.5) * von_neumann_entropy(sigma);
  return std::clamp(v, Real(0), Real(1));
}

/// Probability-of-error similarity 1/2 - K/2.
template <typename Real>
Real prob_error_q(const DensityMatrix<Real>& rho, const DensityMatrix<Real>& sigma) {
  return Real(0.5) - Real(0.5) * trace_distance(rho, sigma);
}

/// A named evaluator d(rho||sigma) together with whether smaller or larger means closer.
template <typename Real>
struct QuantumDistance {
  using Evaluator = std::function<Extended<Real>(const DensityMatrix<Real>&, const DensityMatrix<Real>&)>;

  std::string name;
  Orientation orientation = Orientation::Distance;
  Evaluator evaluate;

  Extended<Real> operator()(const DensityMatrix<Real>& rho, const DensityMatrix<Real>& sigma) const {
    return evaluate(rho, sigma);
  }
};

template <typename Real = double>
QuantumDistance<Real> quantum_distance(Notion notion) {
  using DM = DensityMatrix<Real>;
  QuantumDistance<Real> d{std::string(to_string(notion)), orientation(notion), {}};
  switch (notion) {
    case Notion::Kolmogorov:
      d.evaluate = [](const DM& a, const DM& b) { return Extended<Real>(trace_distance(a, b)); };
      break;
    case Notion::ProbError:
      d.evaluate = [](const DM& a, const DM& b) { return Extended<Real>(prob_error_q(a, b)); };
      break;
    case Notion::Bhattacharyya:
      d.evaluate = [](const DM& a, const DM& b) { return Extended<Real>(bhattacharyya_q(a, b)); };
      break;
    case Notion::RelativeEntropy:
      d.evaluate = [](const DM& a, const DM& b) { return relative_entropy_q(a, b); };
      break;
    case Notion::Qjsd:
      d.evaluate = [](const DM& a, const DM& b) { return Extended<Real>(qjsd(a, b)); };
      break;
  }
  return d;
}

template <typename Real = double>
QuantumDistance<Real> bures_distance() {
  using DM = DensityMatrix<Real>;
  return {"bures-sq", Orientation::Distance, [](const DM& a, const DM& b) { return Extended<Real>(bures_sq(a, b)); }};
}

template <typename Real = double>
QuantumDistance<Real> hellinger_distance() {
  using DM = DensityMatrix<Real>;
  return {"hellinger-sq", Orientation::Distance,
          [](const DM& a, const DM& b) { return Extended<Real>(hellinger_sq(a, b)); }};
}

/// CPTP map rho -> sum_k K_k rho K_k^dagger.
template <typename Real>
class KrausChannel {
 public:
  /// Requires common shapes and sum K^dagger K = I within 1e-10.
  explicit KrausChannel(std::vector<CMatrix<Real>> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw InvariantError("KrausChannel: no Kraus operators");
    const Eigen::Index out = kraus_.front().rows();
    const Eigen::Index in = kraus_.front().cols();
    CMatrix<Real> sum = CMatrix<Real>::Zero(in, in);
    for (const auto& k : kraus_) {
      if (k.rows() != out || k.cols() != in) throw DimensionError("KrausChannel: Kraus operators differ in shape");
      sum += k.adjoint() * k;
    }
    if ((sum - CMatrix<Real>::Identity(in, in)).cwiseAbs().maxCoeff() > Real(1e-10)) {
      throw InvariantError("KrausChannel: sum of K^dagger K differs from identity by more than 1e-10");
    }
  }

  Eigen::Index input_dim() const noexcept { return kraus_.front().cols(); }
  Eigen::Index output_dim() const noexcept { return kraus_.front().rows(); }
  const std::vector<CMatrix<Real>>& kraus() const noexcept { return kraus_; }

  DensityMatrix<Real> operator()(const DensityMatrix<Real>& rho) const {
    if (rho.dim() != input_dim()) {
      throw DimensionError("KrausChannel: state dimension " + std::to_string(rho.dim()) +
                           " does not match channel input " + std::to_string(input_dim()));
    }
    CMatrix<Real> out = CMatrix<Real>::Zero(output_dim(), output_dim());
    for (const auto& k : kraus_) out += k * rho.matrix() * k.adjoint();
    return DensityMatrix<Real>(hermitian_part(out));
  }

  static KrausChannel identity(Eigen::Index dim) { return KrausChannel({CMatrix<Real>::Identity(dim, dim)}); }

  /// Full dephasing in the computational basis: K_k = |k><k|.
  static KrausChannel dephasing(Eigen::Index dim) {
    std::vector<CMatrix<Real>> ks;
    for (Eigen::Index k = 0; k < dim; ++k) {
      CMatrix<Real> p = CMatrix<Real>::Zero(dim, dim);
      p(k, k) = 1;
      ks.push_back(std::move(p));
    }
    return KrausChannel(std::move(ks));
  }

  /// Partial trace over the second factor of C^dim_a (x) C^dim_b: K_k = I (x) <k|.
  static KrausChannel partial_trace_second(Eigen::Index dim_a, Eigen::Index dim_b) {
    std::vector<CMatrix<Real>> ks;
    for (Eigen::Index k = 0; k < dim_b; ++k) {
      CMatrix<Real> bra = CMatrix<Real>::Zero(1, dim_b);
      bra(0, k) = 1;
      ks.push_back(kron(CMatrix<Real>(CMatrix<Real>::Identity(dim_a, dim_a)), bra));
    }
    return KrausChannel(std::move(ks));
  }

 private:
  std::vector<CMatrix<Real>> kraus_;
};

using KrausChanneld = KrausChannel<double>;

template <typename Real>
DensityMatrix<Real> apply_channel(const KrausChannel<Real>& ch, const DensityMatrix<Real>& rho) {
  return ch(rho);
}

/// Data-processing check. Distances must not increase under the channel,
/// similarities must not decrease; both up to 1e-9.
template <typename Real>
bool check_dpi(const QuantumDistance<Real>& d, const KrausChannel<Real>& ch, const DensityMatrix<Real>& rho,
               const DensityMatrix<Real>& sigma, Real tol = Real(1e-9)) {
  const Extended<Real> before = d(rho, sigma);
  const Extended<Real> after = d(ch(rho), ch(sigma));
  if (d.orientation == Orientation::Distance) return after <= before + Extended<Real>(tol);
  return after + Extended<Real>(tol) >= before;
}

}  // namespace holevo
