#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

namespace chordspec {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct SymmetricEigen {
  DenseVector<Scalar> values;   // descending
  DenseMatrix<Scalar> vectors;  // column i pairs with values(i)
  int sweeps = 0;
  bool converged = false;
};

/// Off-diagonal Frobenius norm of a square matrix.
template <typename Derived>
typename Derived::Scalar off_diagonal_norm(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

/// Cyclic Jacobi eigensolver for a real symmetric matrix. Sweeps stop once
/// the off-diagonal Frobenius norm drops below tol * max(1, ||A||_F).
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                      typename Derived::Scalar tol = 1e-14,
                                                      int max_sweeps = 50) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = input.rows();
  DenseMatrix<Scalar> a = input;
  DenseMatrix<Scalar> v = DenseMatrix<Scalar>::Identity(n, n);
  const Scalar scale = std::max(Scalar(1), a.norm());

  SymmetricEigen<Scalar> out;
  for (; out.sweeps < max_sweeps; ++out.sweeps) {
    if (off_diagonal_norm(a) <= tol * scale) {
      out.converged = true;
      break;
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
        v.applyOnTheRight(p, q, rot);
      }
    }
  }
  if (!out.converged) out.converged = off_diagonal_norm(a) <= tol * scale;

  std::vector<Eigen::Index> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&a](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(idx[k], idx[k]);
    out.vectors.col(k) = v.col(idx[k]);
  }
  return out;
}

template <typename Scalar>
struct PowerIterationResult {
  Scalar value = 0;
  DenseVector<Scalar> vector;
  int iterations = 0;
  bool converged = false;
};

/// Largest eigenvalue of a nonnegative symmetric matrix by power iteration on
/// A + I (the shift separates +rho from -rho for bipartite graphs). Stops when
/// successive Rayleigh quotients differ by less than tol.
template <typename Derived>
PowerIterationResult<typename Derived::Scalar> power_iteration(
    const Eigen::MatrixBase<Derived>& a, typename Derived::Scalar tol = 1e-13,
    int max_iterations = 200000) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  PowerIterationResult<Scalar> out;
  DenseVector<Scalar> x = DenseVector<Scalar>::Ones(n).normalized();
  Scalar previous = x.dot(a * x);
  int stable = 0;
  for (out.iterations = 1; out.iterations <= max_iterations; ++out.iterations) {
    DenseVector<Scalar> y = a * x + x;
    const Scalar norm = y.norm();
    if (norm == Scalar(0)) break;
    x = y / norm;
    const Scalar rayleigh = x.dot(a * x);
    stable = std::abs(rayleigh - previous) < tol ? stable + 1 : 0;
    previous = rayleigh;
    if (stable >= 3) {
      out.converged = true;
      break;
    }
  }
  out.value = previous;
  out.vector = x;
  return out;
}

/// max_i ||A q_i - lambda_i q_i||_2 over the computed eigenpairs.
template <typename Derived, typename Scalar>
Scalar max_residual(const Eigen::MatrixBase<Derived>& a, const SymmetricEigen<Scalar>& eig) {
  Scalar worst(0);
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const Scalar r = (a * eig.vectors.col(k) - eig.values(k) * eig.vectors.col(k)).norm();
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace chordspec
