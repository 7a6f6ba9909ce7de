/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Classical divergences between probability vectors and joint distributions.

#pragma once

#include <Eigen/Dense>

#include "holevo/extended.hpp"
#include "holevo/linalg.hpp"
#include "holevo/notion.hpp"

namespace holevo {

/// Probability vector: entries in [0, 1] summing to 1 within 1e-10.
/// Entries in [-1e-12, 0) are clamped to zero; lower ones are rejected.
class ProbVector {
 public:
  explicit ProbVector(RVectord probs);

  Eigen::Index size() const noexcept { return probs_.size(); }
  double operator[](Eigen::Index i) const { return probs_(i); }
  const RVectord& values() const noexcept { return probs_; }

 private:
  RVectord probs_;
};

/// Joint distribution P over (n+1) x (m+1) outcomes with its marginals
/// p (row sums) and q (column sums).
class JointDistribution {
 public:
  explicit JointDistribution(Eigen::MatrixXd joint);

  const Eigen::MatrixXd& matrix() const noexcept { return joint_; }
  const ProbVector& row_marginal() const noexcept { return rows_; }
  const ProbVector& col_marginal() const noexcept { return cols_; }

  /// P flattened row-major (index i*(m+1) + j).
  ProbVector flattened() const;
  /// p x q flattened with the same index order as flattened().
  ProbVector product_of_marginals() const;

 private:
  Eigen::MatrixXd joint_;
  ProbVector rows_;
  ProbVector cols_;
};

double shannon_entropy(const ProbVector& p);

/// 1/2 sum |p_i - q_i|.
double kolmogorov_c(const ProbVector& p, const ProbVector& q);
/// 1/2 sum min{p_i, q_i} (= 1/2 - K/2).
double prob_error_c(const ProbVector& p, const ProbVector& q);
/// sum sqrt(p_i q_i).
double bhattacharyya_c(const ProbVector& p, const ProbVector& q);
/// sum p_i log2(p_i / q_i); +infinity when p_i > 0 = q_i.
ExtendedReal relative_entropy_c(const ProbVector& p, const ProbVector& q);
/// H((p+q)/2) - H(p)/2 - H(q)/2.
double jensen_shannon_c(const ProbVector& p, const ProbVector& q);

/// H(p) + H(q) - H(P), in bits.
double mutual_information(const JointDistribution& j);

/// D(P || p x q) for the given notion, evaluated on the flattened vectors.
double d_of_joint(Notion notion, const JointDistribution& j);

}  // namespace holevo
