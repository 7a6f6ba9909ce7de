/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/measurement.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "holevo/distance.hpp"

namespace holevo {
namespace {

constexpr double kPovmTol = 1e-10;

CMatrixd basis_operator(Eigen::Index n, Eigen::Index row, Eigen::Index col) {
  CMatrixd p = CMatrixd::Zero(n, n);
  p(row, col) = 1;
  return p;
}

void require_dims(const Ensemble& e, const Povm& m) {
  if (e.dim() != m.dim()) {
    std::ostringstream msg;
    msg << "measurement of dimension " << m.dim() << " applied to ensemble of dimension " << e.dim();
    throw DimensionError(msg.str());
  }
}

bool holds(Orientation o, ExtendedReal bigger_side, ExtendedReal smaller_side, double tol) {
  // For distances: bigger_side >= smaller_side - tol; for similarities the reverse.
  if (o == Orientation::Distance) return smaller_side <= bigger_side + ExtendedReal(tol);
  return bigger_side <= smaller_side + ExtendedReal(tol);
}

bool close(ExtendedReal a, ExtendedReal b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a == b;
  return std::abs(a.value() - b.value()) <= tol;
}

}  // namespace

Povm::Povm(std::vector<CMatrixd> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw InvariantError("Povm: no effects");
  const Eigen::Index dim = effects_.front().rows();
  CMatrixd sum = CMatrixd::Zero(dim, dim);
  for (auto& m : effects_) {
    if (m.rows() != dim || m.cols() != dim) throw DimensionError("Povm: effects differ in dimension");
    if (!is_hermitian(m)) throw InvariantError("Povm: effect is not Hermitian");
    m = hermitian_part(m);
    if (eig(m).values.minCoeff() < -kPovmTol) throw InvariantError("Povm: effect has eigenvalue below -1e-10");
    sum += m;
  }
  if ((sum - CMatrixd::Identity(dim, dim)).cwiseAbs().maxCoeff() > kPovmTol) {
    throw InvariantError("Povm: effects do not sum to the identity within 1e-10");
  }
}

QubitVonNeumann::QubitVonNeumann(const Eigen::Vector3d& axis) : axis_(axis) {
  if (std::abs(axis_.norm() - 1.0) > 1e-12) throw InvariantError("QubitVonNeumann: axis is not a unit vector");
}

QubitVonNeumann QubitVonNeumann::from_generator(const Eigen::Vector4d& s) {
  return QubitVonNeumann(axis_from_s(s).normalized());
}

Povm QubitVonNeumann::povm() const { return effects_from_axis(axis_); }

Eigen::Vector3d axis_from_s(const Eigen::Vector4d& s) {
  if (std::abs(s.norm() - 1.0) > 1e-10) throw InvariantError("axis_from_s: generator is not a unit 4-vector");
  return {2.0 * (-s(0) * s(2) + s(1) * s(3)), 2.0 * (s(0) * s(1) + s(2) * s(3)),
          s(0) * s(0) + s(3) * s(3) - s(1) * s(1) - s(2) * s(2)};
}

Povm effects_from_axis(const Eigen::Vector3d& z) {
  if (std::abs(z.norm() - 1.0) > 1e-10) throw InvariantError("effects_from_axis: axis is not a unit vector");
  const CMatrixd zs = z.x() * pauli::x() + z.y() * pauli::y() + z.z() * pauli::z();
  const CMatrixd id = CMatrixd::Identity(2, 2);
  return Povm({0.5 * (id + zs), 0.5 * (id - zs)});
}

JointDistribution joint_distribution(const Ensemble& e, const Povm& m) {
  require_dims(e, m);
  Eigen::MatrixXd p(e.size(), m.outcomes());
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    const CMatrixd& rho = e.states()[static_cast<std::size_t>(i)].matrix();
    for (Eigen::Index j = 0; j < m.outcomes(); ++j) {
      p(i, j) = e.weights()[i] * (m.effects()[static_cast<std::size_t>(j)] * rho).trace().real();
    }
  }
  return JointDistribution(std::move(p));
}

JointDistribution joint_distribution_sqrt_form(const Ensemble& e, const Povm& m) {
  require_dims(e, m);
  Eigen::MatrixXd p(e.size(), m.outcomes());
  for (Eigen::Index j = 0; j < m.outcomes(); ++j) {
    const CMatrixd root = mat_sqrt(m.effects()[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < e.size(); ++i) {
      const CMatrixd& rho = e.states()[static_cast<std::size_t>(i)].matrix();
      p(i, j) = e.weights()[i] * (root * rho * root).trace().real();
    }
  }
  return JointDistribution(std::move(p));
}

double joint_divergence_at(const Ensemble& e, Notion notion, const Eigen::Vector3d& axis) {
  return d_of_joint(notion, joint_distribution(e, effects_from_axis(axis)));
}

GaiResult gai(const Ensemble& e, Notion notion, const OptimizerConfig& config) {
  if (e.dim() != 2) {
    throw UnsupportedDimensionError("gai: only qubit ensembles (dim 2) are supported, got dim " +
                                    std::to_string(e.dim()));
  }
  const Direction dir = direction(notion);
  const double sign = dir == Direction::Maximize ? -1.0 : 1.0;
  const SphereSearchResult r = minimize_on_sphere(
      [&](const Eigen::Vector3d& z) { return sign * joint_divergence_at(e, notion, z); }, config);
  GaiResult out;
  out.axis = r.axis;
  out.value = joint_divergence_at(e, notion, r.axis);
  out.direction = dir;
  out.iterations = r.iterations;
  out.evaluations = r.evaluations;
  return out;
}

bool inequality_holds(Notion notion, double lhs, double rhs, double tol) {
  return orientation(notion) == Orientation::Distance ? lhs <= rhs + tol : lhs >= rhs - tol;
}

InequalityCheck check_theorem1(const Ensemble& e, const Povm& m, Notion notion, double tol) {
  InequalityCheck c;
  c.lhs = d_of_joint(notion, joint_distribution(e, m));
  c.rhs = dbhq(e, notion);
  c.ok = inequality_holds(notion, c.lhs, c.rhs, tol);
  return c;
}

InequalityCheck check_purity_bound(const Ensemble& e, const Povm& m, double tol) {
  InequalityCheck c;
  c.lhs = d_of_joint(Notion::Bhattacharyya, joint_distribution(e, m));
  c.rhs = purity(e.average());
  c.ok = c.lhs >= c.rhs - tol;
  return c;
}

Theorem1Chain theorem1_chain(const Ensemble& e, const Povm& m, Notion notion) {
  require_dims(e, m);
  const Eigen::Index n = e.size();
  const Eigen::Index d = e.dim();
  const Eigen::Index k = m.outcomes();
  if (n * d * k > kMaxChainDim) {
    throw DimensionError("theorem1_chain: composite dimension " + std::to_string(n * d * k) + " exceeds cap " +
                         std::to_string(kMaxChainDim));
  }
  const QuantumDistance<double> dist = quantum_distance(notion);
  const CMatrixd ket0 = basis_operator(k, 0, 0);

  const DensityMatrixd rho_c = classical_quantum_state(e);
  const DensityMatrixd rho_c_unc = uncorrelated_state(e);
  const DensityMatrixd rho_0(kron(rho_c.matrix(), ket0));
  const DensityMatrixd rho_0_unc(kron(rho_c_unc.matrix(), ket0));

  // Measurement channel on P (x) Q (x) M: I (x) sqrt(M_j) (x) |j><l|.
  std::vector<CMatrixd> meas_kraus;
  const CMatrixd id_p = CMatrixd::Identity(n, n);
  for (Eigen::Index j = 0; j < k; ++j) {
    const CMatrixd root = mat_sqrt(m.effects()[static_cast<std::size_t>(j)]);
    for (Eigen::Index l = 0; l < k; ++l) {
      meas_kraus.push_back(kron(kron(id_p, root), basis_operator(k, j, l)));
    }
  }
  const KrausChanneld measure(std::move(meas_kraus));

  // Trace over Q: I_P (x) <q| (x) I_M.
  std::vector<CMatrixd> trace_kraus;
  const CMatrixd id_m = CMatrixd::Identity(k, k);
  for (Eigen::Index q = 0; q < d; ++q) {
    CMatrixd bra = CMatrixd::Zero(1, d);
    bra(0, q) = 1;
    trace_kraus.push_back(kron(kron(id_p, bra), id_m));
  }
  const KrausChanneld trace_q(std::move(trace_kraus));

  const DensityMatrixd rho_m = measure(rho_0);
  const DensityMatrixd rho_m_unc = measure(rho_0_unc);

  Theorem1Chain c;
  c.ensemble = dist(rho_c, rho_c_unc);
  c.padded = dist(rho_0, rho_0_unc);
  c.measured = dist(rho_m, rho_m_unc);
  c.classical = dist(trace_q(rho_m), trace_q(rho_m_unc));
  c.mean_distance = dbhq(e, notion);
  c.joint = d_of_joint(notion, joint_distribution_sqrt_form(e, m));
  return c;
}

bool chain_consistent(const Theorem1Chain& c, Notion notion, double tol) {
  const Orientation o = orientation(notion);
  return close(c.ensemble, c.padded, tol) && holds(o, c.padded, c.measured, tol) &&
         holds(o, c.measured, c.classical, tol) && close(c.ensemble, ExtendedReal(c.mean_distance), tol) &&
         close(c.classical, ExtendedReal(c.joint), tol);
}

}  // namespace holevo
