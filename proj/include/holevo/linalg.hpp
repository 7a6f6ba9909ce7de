/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Dense complex-Hermitian matrix algebra for small dimensions.
//
// Free functions accept any Eigen expression whose scalar is std::complex<Real>
// and evaluate it once; everything is templated on the real scalar type.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <type_traits>

#include "holevo/errors.hpp"

namespace holevo {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using CMatrixd = CMatrix<double>;
using RVectord = RVector<double>;

template <typename Real>
struct LinalgTolerance {
  /// Entry-wise Hermiticity tolerance.
  static constexpr Real hermitian = Real(1e-12);
  /// Trace of a density matrix must be one within this.
  static constexpr Real trace = Real(1e-10);
  /// Eigenvalues in [-psd, 0) are clamped to zero; anything lower is rejected.
  static constexpr Real psd = Real(1e-10);
  /// Eigenvalues at or below this are outside the support for matrix logs.
  static constexpr Real support = Real(1e-12);
};

/// Eigendecomposition A = U diag(values) U^dagger, values sorted descending.
template <typename Real>
struct Spectrum {
  RVector<Real> values;
  CMatrix<Real> vectors;

  CMatrix<Real> reconstruct() const {
    return vectors * values.template cast<std::complex<Real>>().asDiagonal() * vectors.adjoint();
  }

  /// U f(diag) U^dagger for a scalar function applied to each eigenvalue.
  template <typename F>
  CMatrix<Real> apply(F&& f) const {
    RVector<Real> mapped(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) mapped(k) = f(values(k));
    return vectors * mapped.template cast<std::complex<Real>>().asDiagonal() * vectors.adjoint();
  }
};

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a,
                  typename Derived::RealScalar tol = LinalgTolerance<typename Derived::RealScalar>::hermitian) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    }
  }
  return true;
}

/// Exact Hermitian part (A + A^dagger)/2; removes roundoff asymmetry of products.
template <typename Derived>
auto hermitian_part(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  CMatrix<Real> m = a;
  return CMatrix<Real>((m + m.adjoint()) * Real(0.5));
}

template <typename Real>
CMatrix<Real> identity(Eigen::Index dim) {
  return CMatrix<Real>::Identity(dim, dim);
}

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* op) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream msg;
    msg << op << ": expected a non-empty square matrix, got " << a.rows() << "x" << a.cols();
    throw DimensionError(msg.str());
  }
}

// Eigenvalues within this of zero are indistinguishable from roundoff of the solver.
template <typename Real>
Real spectral_noise_floor(const RVector<Real>& values) {
  const Real scale = std::max(Real(1), values.cwiseAbs().maxCoeff());
  return Real(8) * Real(values.size()) * std::numeric_limits<Real>::epsilon() * scale;
}

}  // namespace detail

template <typename Derived>
Spectrum<typename Derived::RealScalar> eig(const Eigen::MatrixBase<Derived>& a_expr) {
  using Real = typename Derived::RealScalar;
  const CMatrix<Real> a = a_expr;
  detail::require_square(a, "eig");
  if (!a.allFinite()) {
    std::ostringstream msg;
    msg << "eig: non-finite entries in " << a.rows() << "x" << a.cols() << " matrix";
    throw ConvergenceError(msg.str());
  }
  if (!is_hermitian(a)) throw InvariantError("eig: matrix is not Hermitian within 1e-12");

  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(a);
  if (solver.info() != Eigen::Success || !solver.eigenvalues().allFinite()) {
    std::ostringstream msg;
    msg << "eig: eigensolver failed to converge (dim " << a.rows()
        << ", max |entry| " << a.cwiseAbs().maxCoeff() << ", Frobenius norm " << a.norm() << ")";
    throw ConvergenceError(msg.str());
  }
  // Eigen sorts ascending.
  Spectrum<Real> out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

/// Principal square root of a PSD matrix. Negative eigenvalues (and those
/// below the solver's noise floor) are set to zero first.
template <typename Derived>
CMatrix<typename Derived::RealScalar> mat_sqrt(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  const Spectrum<Real> s = eig(a);
  if (s.values.minCoeff() < -LinalgTolerance<Real>::psd) {
    throw InvariantError("mat_sqrt: matrix has eigenvalues below -1e-10");
  }
  const Real floor = detail::spectral_noise_floor(s.values);
  return s.apply([floor](Real x) { return x > floor ? std::sqrt(x) : Real(0); });
}

/// log2 on the support; eigenvalues at or below 1e-12 map to 0.
template <typename Derived>
CMatrix<typename Derived::RealScalar> mat_log2_on_support(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  return eig(a).apply([](Real x) { return x > LinalgTolerance<Real>::support ? std::log2(x) : Real(0); });
}

/// Sum of absolute eigenvalues.
template <typename Derived>
typename Derived::RealScalar trace_norm(const Eigen::MatrixBase<Derived>& a) {
  return eig(a).values.cwiseAbs().sum();
}

/// sqrt(Tr A^dagger A); defined for any matrix.
template <typename Derived>
typename Derived::RealScalar hs_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.norm();
}

/// Kronecker product, (a (x) b)[i*db + k, j*db + l] = a[i,j] * b[k,l].
template <typename DerivedA, typename DerivedB>
CMatrix<typename DerivedA::RealScalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  using Real = typename DerivedA::RealScalar;
  static_assert(std::is_same_v<Real, typename DerivedB::RealScalar>, "kron: mixed scalar types");
  CMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Shannon entropy in bits of a list of eigenvalues/probabilities, 0 log 0 = 0.
template <typename Derived>
typename Derived::Scalar entropy_bits(const Eigen::MatrixBase<Derived>& values) {
  using Real = typename Derived::Scalar;
  Real h = 0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    const Real x = values(k);
    if (x > Real(0)) h -= x * std::log2(x);
  }
  return h;
}

/// PSD, unit-trace, Hermitian. Immutable once constructed.
template <typename Real>
class DensityMatrix {
 public:
  using Matrix = CMatrix<Real>;

  /// Validates Hermiticity (1e-12), trace (1e-10) and positivity (-1e-10);
  /// small negative eigenvalues are clamped and the trace restored.
  template <typename Derived>
  explicit DensityMatrix(const Eigen::MatrixBase<Derived>& m) : rho_(m) {
    detail::require_square(rho_, "DensityMatrix");
    if (!rho_.allFinite()) throw InvariantError("DensityMatrix: non-finite entries");
    if (!is_hermitian(rho_)) throw InvariantError("DensityMatrix: matrix is not Hermitian within 1e-12");
    rho_ = hermitian_part(rho_);
    const Real tr = rho_.trace().real();
    if (std::abs(tr - Real(1)) > LinalgTolerance<Real>::trace) {
      std::ostringstream msg;
      msg << "DensityMatrix: trace " << tr << " differs from 1 by more than 1e-10";
      throw InvariantError(msg.str());
    }
    const Spectrum<Real> s = eig(rho_);
    const Real lowest = s.values.minCoeff();
    if (lowest < -LinalgTolerance<Real>::psd) {
      std::ostringstream msg;
      msg << "DensityMatrix: eigenvalue " << lowest << " below -1e-10";
      throw InvariantError(msg.str());
    }
    if (lowest < Real(0)) {
      rho_ = hermitian_part(s.apply([](Real x) { return std::max(x, Real(0)); }));
      rho_ /= rho_.trace().real();
    }
  }

  static DensityMatrix maximally_mixed(Eigen::Index dim) {
    return DensityMatrix(Matrix(Matrix::Identity(dim, dim) / Real(dim)));
  }

  /// |psi><psi| for a (not necessarily normalized) nonzero vector.
  template <typename Derived>
  static DensityMatrix pure(const Eigen::MatrixBase<Derived>& psi) {
    const Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> v = psi.normalized();
    return DensityMatrix(Matrix(v * v.adjoint()));
  }

  const Matrix& matrix() const noexcept { return rho_; }
  Eigen::Index dim() const noexcept { return rho_.rows(); }

 private:
  Matrix rho_;
};

using DensityMatrixd = DensityMatrix<double>;

template <typename Real>
Real von_neumann_entropy(const DensityMatrix<Real>& rho) {
  return std::max(Real(0), entropy_bits(eig(rho.matrix()).values));
}

template <typename Real>
Real purity(const DensityMatrix<Real>& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

namespace pauli {

inline CMatrixd x() {
  CMatrixd m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline CMatrixd y() {
  CMatrixd m(2, 2);
  m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  return m;
}
inline CMatrixd z() {
  CMatrixd m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace pauli

}  // namespace holevo
