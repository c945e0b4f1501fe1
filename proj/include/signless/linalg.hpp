#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace signless::linalg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Real symmetric matrix. Construction rejects input that is not exactly
/// symmetric.
template <typename Scalar>
class SymMatrix {
 public:
  SymMatrix() = default;

  explicit SymMatrix(DenseMatrix<Scalar> entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw std::invalid_argument("SymMatrix: not square");
    if (entries_ != entries_.transpose()) throw std::invalid_argument("SymMatrix: not symmetric");
  }

  static SymMatrix zero(Eigen::Index order) { return SymMatrix(DenseMatrix<Scalar>::Zero(order, order)); }
  static SymMatrix identity(Eigen::Index order) {
    return SymMatrix(DenseMatrix<Scalar>::Identity(order, order));
  }

  Eigen::Index order() const { return entries_.rows(); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  const DenseMatrix<Scalar>& matrix() const { return entries_; }

  Scalar max_abs_entry() const { return order() == 0 ? Scalar(0) : entries_.cwiseAbs().maxCoeff(); }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.order() == b.order() && a.entries_ == b.entries_;
  }

 private:
  DenseMatrix<Scalar> entries_;
};

/// Eigenvalues sorted non-increasing, with multiplicity.
template <typename Scalar>
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(DenseVector<Scalar> values) : values_(std::move(values)) {
    std::sort(values_.data(), values_.data() + values_.size(), std::greater<Scalar>());
  }

  Eigen::Index size() const { return values_.size(); }
  bool empty() const { return values_.size() == 0; }
  Scalar operator[](Eigen::Index i) const { return values_(i); }
  const DenseVector<Scalar>& values() const { return values_; }

  const Scalar* begin() const { return values_.data(); }
  const Scalar* end() const { return values_.data() + values_.size(); }

  Scalar sum() const { return values_.sum(); }

 private:
  DenseVector<Scalar> values_;
};

struct JacobiOptions {
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi rotation method.
///
/// Sweeps over every off-diagonal pair in row order until the off-diagonal
/// Frobenius norm drops below tolerance * max(1, ||A||_F). Throws
/// ConvergenceError once the sweep limit is exhausted.
template <typename Scalar>
Spectrum<Scalar> eigenvalues_sym(const SymMatrix<Scalar>& m, const JacobiOptions& options = {}) {
  using std::abs;
  using std::sqrt;
  if (!(options.tolerance > 0)) throw std::invalid_argument("eigenvalues_sym: tolerance must be positive");

  DenseMatrix<Scalar> a = m.matrix();
  const Eigen::Index n = a.rows();
  const Scalar scale = std::max<Scalar>(Scalar(1), a.norm());
  const Scalar threshold = Scalar(options.tolerance) * scale;

  auto off_norm = [&]() {
    Scalar s(0);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) s += 2 * a(i, j) * a(i, j);
    return sqrt(s);
  };

  int sweep = 0;
  while (off_norm() >= threshold) {
    if (sweep++ >= options.max_sweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) +
                             " sweeps");
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (2 * apq);
        Scalar t = Scalar(1) / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        const Scalar c = Scalar(1) / sqrt(t * t + 1);
        const Scalar s = t * c;
        // A <- J^T A J with J the rotation in the (p, q) plane.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
      }
    }
  }
  return Spectrum<Scalar>(a.diagonal());
}

/// Determinant by Gaussian elimination with partial pivoting.
template <typename Scalar>
Scalar determinant(const DenseMatrix<Scalar>& m) {
  using std::abs;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  DenseMatrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index r = col + 1; r < n; ++r)
      if (abs(a(r, col)) > abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == Scalar(0)) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const Scalar factor = a(r, col) / a(col, col);
      if (factor != Scalar(0)) a.row(r).tail(n - col) -= factor * a.row(col).tail(n - col);
    }
  }
  return det;
}

template <typename Scalar>
Scalar determinant(const SymMatrix<Scalar>& m) {
  return determinant<Scalar>(m.matrix());
}

/// `m` with row and column `drop_index` removed.
template <typename Scalar>
SymMatrix<Scalar> principal_minor(const SymMatrix<Scalar>& m, Eigen::Index drop_index) {
  const Eigen::Index n = m.order();
  if (drop_index < 0 || drop_index >= n) throw std::out_of_range("principal_minor: index out of range");
  DenseMatrix<Scalar> out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == drop_index) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == drop_index) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return SymMatrix<Scalar>(std::move(out));
}

/// Sets entries with |x| <= eps to exactly zero.
template <typename Scalar>
Spectrum<Scalar> clamp_near_zero(const Spectrum<Scalar>& s, Scalar eps) {
  DenseVector<Scalar> v = s.values();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) <= eps) v(i) = Scalar(0);
  return Spectrum<Scalar>(std::move(v));
}

}  // namespace signless::linalg
