/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/distance.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "holevo/qubit.hpp"
#include "holevo/random.hpp"
#include "test_support.hpp"

using namespace holevo;
using holevo::testing::diag2;
using holevo::testing::dm;
using holevo::testing::id2;

namespace {

DensityMatrixd from_bloch(const Eigen::Vector3d& v) { return bloch_to_density(BlochVector(v)); }

}  // namespace

TEST(TraceDistance, Examples) {
  Rng rng(1);
  const DensityMatrixd rho = random_density(3, rng);
  EXPECT_NEAR(trace_distance(rho, rho), 0.0, 1e-15);
  EXPECT_NEAR(trace_distance(dm(diag2(1, 0)), dm(diag2(0, 1))), 1.0, 1e-15);
}

TEST(TraceDistance, QubitIsHalfBlochDistance) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Vector3d u = random_bloch_in_ball(rng);
    const Eigen::Vector3d v = random_bloch_in_ball(rng);
    EXPECT_NEAR(trace_distance(from_bloch(u), from_bloch(v)), 0.5 * (u - v).norm(), 1e-12);
  }
}

TEST(TraceDistance, DimensionMismatch) {
  EXPECT_THROW(trace_distance(DensityMatrixd::maximally_mixed(2), DensityMatrixd::maximally_mixed(3)),
               DimensionError);
}

TEST(Bhattacharyya, Examples) {
  Rng rng(3);
  const DensityMatrixd rho = random_density(2, rng);
  EXPECT_NEAR(bhattacharyya_q(rho, rho), 1.0, 1e-9);
  EXPECT_NEAR(bhattacharyya_q(dm(diag2(1, 0)), dm(diag2(0, 1))), 0.0, 1e-12);
}

TEST(Bhattacharyya, MatchesBlochFormulaAndIsSymmetric) {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Vector3d u = random_bloch_in_ball(rng);
    const Eigen::Vector3d v = random_bloch_in_ball(rng);
    const double expected =
        std::sqrt(1 + u.dot(v) + std::sqrt((1 - u.squaredNorm()) * (1 - v.squaredNorm()))) / std::numbers::sqrt2;
    const double b = bhattacharyya_q(from_bloch(u), from_bloch(v));
    EXPECT_NEAR(b, expected, 1e-9);
    EXPECT_NEAR(b, bhattacharyya_q(from_bloch(v), from_bloch(u)), 1e-9);
  }
}

TEST(Bhattacharyya, PureStatesUseOverlap) {
  // For pure states B = |<psi|phi>|.
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const CMatrixd psi = ginibre(3, 1, rng).normalized();
    const CMatrixd phi = ginibre(3, 1, rng).normalized();
    const double overlap = std::abs((psi.adjoint() * phi)(0, 0));
    EXPECT_NEAR(bhattacharyya_q(DensityMatrixd::pure(psi), DensityMatrixd::pure(phi)), overlap, 1e-9);
  }
}

TEST(Bures, ExamplesAndAffineRelation) {
  Rng rng(6);
  const DensityMatrixd rho = random_density(2, rng);
  const DensityMatrixd sigma = random_density(2, rng);
  EXPECT_NEAR(bures_sq(rho, rho), 0.0, 1e-9);
  EXPECT_NEAR(bures_sq(dm(diag2(1, 0)), dm(diag2(0, 1))), 2.0, 1e-12);
  EXPECT_NEAR(bures_sq(rho, sigma), 2 * (1 - bhattacharyya_q(rho, sigma)), 1e-15);
}

TEST(RelativeEntropy, Examples) {
  Rng rng(7);
  const DensityMatrixd rho = random_density(3, rng);
  EXPECT_NEAR(relative_entropy_q(rho, rho).value(), 0.0, 1e-12);
  EXPECT_TRUE(relative_entropy_q(dm(diag2(1, 0)), dm(diag2(0, 1))).is_infinite());
  const double classical = 0.5 * std::log2(0.5 / 0.25) + 0.5 * std::log2(0.5 / 0.75);
  EXPECT_NEAR(relative_entropy_q(dm(diag2(0.5, 0.5)), dm(diag2(0.25, 0.75))).value(), classical, 1e-14);
}

TEST(RelativeEntropy, SupportContainedIsFinite) {
  // supp(|0><0|) lies inside supp(I/2); the reverse does not.
  EXPECT_NEAR(relative_entropy_q(dm(diag2(1, 0)), DensityMatrixd::maximally_mixed(2)).value(), 1.0, 1e-14);
  EXPECT_TRUE(relative_entropy_q(DensityMatrixd::maximally_mixed(2), dm(diag2(1, 0))).is_infinite());
}

TEST(Qjsd, Examples) {
  Rng rng(8);
  const DensityMatrixd rho = random_density(2, rng);
  EXPECT_NEAR(qjsd(rho, rho), 0.0, 1e-12);
  EXPECT_NEAR(qjsd(dm(diag2(1, 0)), dm(diag2(0, 1))), 1.0, 1e-14);
  for (int t = 0; t < 100; ++t) {
    const DensityMatrixd a = random_density(2 + t % 3, rng);
    const DensityMatrixd b = random_density(2 + t % 3, rng);
    EXPECT_NEAR(qjsd(a, b), qjsd(b, a), 1e-12);
  }
}

TEST(Hellinger, Examples) {
  Rng rng(9);
  const DensityMatrixd rho = random_density(2, rng);
  EXPECT_NEAR(hellinger_sq(rho, rho), 0.0, 1e-12);
  EXPECT_NEAR(hellinger_sq(dm(diag2(1, 0)), dm(diag2(0, 1))), 2.0, 1e-12);
  for (int t = 0; t < 50; ++t) {
    const double a = rng.uniform();
    const double b = rng.uniform();
    const double expected = 2 * (1 - std::sqrt(a * b) - std::sqrt((1 - a) * (1 - b)));
    const DensityMatrixd r = dm(diag2(a, 1 - a));
    const DensityMatrixd s = dm(diag2(b, 1 - b));
    EXPECT_NEAR(hellinger_sq(r, s), expected, 1e-12);
    EXPECT_NEAR(hellinger_sq(r, s), bures_sq(r, s), 1e-9);
  }
}

TEST(Channel, IdentityDephasingAndPartialTrace) {
  Rng rng(10);
  const DensityMatrixd rho = random_density(3, rng);
  EXPECT_LE(hs_norm(apply_channel(KrausChanneld::identity(3), rho).matrix() - rho.matrix()), 1e-15);

  const DensityMatrixd plus(CMatrixd(0.5 * (id2() + pauli::x())));
  EXPECT_LE(hs_norm(apply_channel(KrausChanneld::dephasing(2), plus).matrix() - id2() / 2.0), 1e-15);

  const DensityMatrixd a = random_density(2, rng);
  const DensityMatrixd b = random_density(3, rng);
  const DensityMatrixd ab(kron(a.matrix(), b.matrix()));
  EXPECT_LE(hs_norm(apply_channel(KrausChanneld::partial_trace_second(2, 3), ab).matrix() - a.matrix()), 1e-14);
}

TEST(Channel, ValidatesTracePreservation) {
  EXPECT_THROW(KrausChanneld({CMatrixd(0.5 * id2())}), InvariantError);
  EXPECT_THROW(KrausChanneld({id2(), CMatrixd::Zero(3, 3)}), DimensionError);
  EXPECT_THROW(apply_channel(KrausChanneld::identity(2), DensityMatrixd::maximally_mixed(3)), DimensionError);
}

TEST(Channel, RandomChannelsPreserveTrace) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index dim = 2 + t % 3;
    const KrausChanneld ch = random_channel(dim, 2 + t % 3, rng);
    EXPECT_NEAR(ch(random_density(dim, rng)).matrix().trace().real(), 1.0, 1e-10);
  }
}

TEST(Dpi, IdentityChannelHoldsWithEquality) {
  Rng rng(12);
  for (Notion n : kAllNotions) {
    const DensityMatrixd rho = random_density(2, rng);
    const DensityMatrixd sigma = random_density(2, rng);
    EXPECT_TRUE(check_dpi(quantum_distance(n), KrausChanneld::identity(2), rho, sigma));
  }
}

TEST(Dpi, DephasingTraceDistanceFuzz) {
  Rng rng(13);
  const auto d = quantum_distance(Notion::Kolmogorov);
  const auto ch = KrausChanneld::dephasing(2);
  for (int t = 0; t < 1000; ++t) {
    EXPECT_TRUE(check_dpi(d, ch, random_density(2, rng), random_density(2, rng)));
  }
}

TEST(Dpi, RandomChannelRelativeEntropyFuzz) {
  Rng rng(14);
  const auto d = quantum_distance(Notion::RelativeEntropy);
  for (int t = 0; t < 1000; ++t) {
    const auto ch = random_channel(2, 2, rng);
    EXPECT_TRUE(check_dpi(d, ch, random_density(2, rng), random_density(2, rng)));
  }
}

TEST(Dpi, SimilaritiesUseReversedDirection) {
  Rng rng(15);
  const auto b = quantum_distance(Notion::Bhattacharyya);
  EXPECT_EQ(b.orientation, Orientation::Similarity);
  for (int t = 0; t < 200; ++t) {
    const auto ch = random_channel(3, 3, rng);
    const DensityMatrixd rho = random_density(3, rng);
    const DensityMatrixd sigma = random_density(3, rng);
    EXPECT_TRUE(check_dpi(b, ch, rho, sigma));
    EXPECT_GE(bhattacharyya_q(ch(rho), ch(sigma)), bhattacharyya_q(rho, sigma) - 1e-9);
  }
}

TEST(Fidelity, BoundedBelowByOverlap) {
  Rng rng(16);
  for (int t = 0; t < 300; ++t) {
    const DensityMatrixd rho = random_density(2 + t % 3, rng);
    const DensityMatrixd sigma = random_density(2 + t % 3, rng);
    const double b = bhattacharyya_q(rho, sigma);
    EXPECT_GE(b * b, (rho.matrix() * sigma.matrix()).trace().real() - 1e-9);
  }
}

TEST(Extended, InfinitySentinel) {
  const ExtendedReal inf = ExtendedReal::infinity();
  EXPECT_TRUE(inf > ExtendedReal(1e300));
  EXPECT_TRUE(inf <= inf);
  EXPECT_EQ(inf.weighted(0.0), ExtendedReal(0.0));
  EXPECT_TRUE((inf + ExtendedReal(1.0)).is_infinite());
  EXPECT_TRUE(inf.weighted(0.5).is_infinite());
  EXPECT_THROW((void)inf.value(), InvariantError);
  EXPECT_EQ(ExtendedReal(2.0).weighted(0.25), ExtendedReal(0.5));
}
