/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/classical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace holevo {
namespace {

constexpr double kSumTol = 1e-10;
constexpr double kNegativeTol = 1e-12;

void require_same_length(const ProbVector& p, const ProbVector& q, const char* op) {
  if (p.size() != q.size()) {
    std::ostringstream msg;
    msg << op << ": length mismatch (" << p.size() << " vs " << q.size() << ")";
    throw DimensionError(msg.str());
  }
}

RVectord checked_row_sums(const Eigen::MatrixXd& m) { return m.rowwise().sum(); }
RVectord checked_col_sums(const Eigen::MatrixXd& m) { return m.colwise().sum().transpose(); }

Eigen::MatrixXd clamp_joint(Eigen::MatrixXd m) {
  if (m.size() == 0) throw DimensionError("JointDistribution: empty matrix");
  if (!m.allFinite()) throw InvariantError("JointDistribution: non-finite entries");
  if (m.minCoeff() < -kNegativeTol) throw InvariantError("JointDistribution: negative entry below -1e-12");
  m = m.cwiseMax(0.0);
  if (std::abs(m.sum() - 1.0) > kSumTol) {
    std::ostringstream msg;
    msg << "JointDistribution: entries sum to " << m.sum() << ", not 1 within 1e-10";
    throw InvariantError(msg.str());
  }
  return m;
}

}  // namespace

ProbVector::ProbVector(RVectord probs) : probs_(std::move(probs)) {
  if (probs_.size() == 0) throw DimensionError("ProbVector: empty");
  if (!probs_.allFinite()) throw InvariantError("ProbVector: non-finite entries");
  if (probs_.minCoeff() < -kNegativeTol) {
    std::ostringstream msg;
    msg << "ProbVector: entry " << probs_.minCoeff() << " below -1e-12";
    throw InvariantError(msg.str());
  }
  probs_ = probs_.cwiseMax(0.0);
  if (std::abs(probs_.sum() - 1.0) > kSumTol) {
    std::ostringstream msg;
    msg << "ProbVector: entries sum to " << probs_.sum() << ", not 1 within 1e-10";
    throw InvariantError(msg.str());
  }
  if (probs_.maxCoeff() > 1.0 + kSumTol) throw InvariantError("ProbVector: entry above 1");
  probs_ = probs_.cwiseMin(1.0);
}

JointDistribution::JointDistribution(Eigen::MatrixXd joint)
    : joint_(clamp_joint(std::move(joint))),
      rows_(checked_row_sums(joint_)),
      cols_(checked_col_sums(joint_)) {}

ProbVector JointDistribution::flattened() const {
  RVectord v(joint_.size());
  const Eigen::Index m = joint_.cols();
  for (Eigen::Index i = 0; i < joint_.rows(); ++i) {
    for (Eigen::Index j = 0; j < m; ++j) v(i * m + j) = joint_(i, j);
  }
  return ProbVector(std::move(v));
}

ProbVector JointDistribution::product_of_marginals() const {
  const Eigen::Index n = joint_.rows();
  const Eigen::Index m = joint_.cols();
  RVectord v(n * m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) v(i * m + j) = rows_[i] * cols_[j];
  }
  return ProbVector(std::move(v));
}

double shannon_entropy(const ProbVector& p) { return entropy_bits(p.values()); }

double kolmogorov_c(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q, "kolmogorov_c");
  return 0.5 * (p.values() - q.values()).cwiseAbs().sum();
}

double prob_error_c(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q, "prob_error_c");
  return 0.5 * p.values().cwiseMin(q.values()).sum();
}

double bhattacharyya_c(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q, "bhattacharyya_c");
  return std::min(1.0, p.values().cwiseProduct(q.values()).cwiseSqrt().sum());
}

ExtendedReal relative_entropy_c(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q, "relative_entropy_c");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return ExtendedReal::infinity();
    sum += p[i] * std::log2(p[i] / q[i]);
  }
  return ExtendedReal(std::max(0.0, sum));
}

double jensen_shannon_c(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q, "jensen_shannon_c");
  const RVectord mid = 0.5 * (p.values() + q.values());
  const double v = entropy_bits(mid) - 0.5 * shannon_entropy(p) - 0.5 * shannon_entropy(q);
  return std::clamp(v, 0.0, 1.0);
}

double mutual_information(const JointDistribution& j) {
  const double v = shannon_entropy(j.row_marginal()) + shannon_entropy(j.col_marginal()) -
                   shannon_entropy(j.flattened());
  return std::max(0.0, v);
}

double d_of_joint(Notion notion, const JointDistribution& j) {
  const ProbVector joint = j.flattened();
  const ProbVector product = j.product_of_marginals();
  switch (notion) {
    case Notion::Kolmogorov: return kolmogorov_c(joint, product);
    case Notion::ProbError: return prob_error_c(joint, product);
    case Notion::Bhattacharyya: return bhattacharyya_c(joint, product);
    // P_ij > 0 implies p_i q_j >= P_ij^2 > 0, so this is always finite.
    case Notion::RelativeEntropy: return relative_entropy_c(joint, product).value();
    case Notion::Qjsd: return jensen_shannon_c(joint, product);
  }
  throw InvariantError("d_of_joint: unknown notion");
}

}  // namespace holevo
