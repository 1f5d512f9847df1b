#pragma once

// Dense linear algebra over the two scalar fields. Exact matrices are reduced
// with first-nonzero pivoting, complex ones with partial pivoting and an
// absolute tolerance scaled by the largest entry.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "twistcross/scalar.hpp"

namespace twistcross {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CMatrix = Matrix<Complex>;
using CVector = Vector<Complex>;

inline constexpr double kDefaultTolerance = 1e-9;

template <typename Derived>
auto conjugate(Eigen::MatrixBase<Derived> const& m) {
  using Scalar = typename Derived::Scalar;
  return m.unaryExpr([](Scalar const& x) { return ScalarTraits<Scalar>::conj(x); });
}

template <typename Derived>
auto adjoint(Eigen::MatrixBase<Derived> const& m) {
  return conjugate(m.transpose());
}

template <typename Derived>
double max_magnitude(Eigen::MatrixBase<Derived> const& m) {
  using Scalar = typename Derived::Scalar;
  double out   = 0.0;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      out = std::max(out, ScalarTraits<Scalar>::magnitude(m(i, j)));
    }
  }
  return out;
}

template <typename Derived>
bool is_zero(Eigen::MatrixBase<Derived> const& m, double tol = kDefaultTolerance) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!ScalarTraits<Scalar>::is_zero(m(i, j), tol)) {
        return false;
      }
    }
  }
  return true;
}

template <typename A, typename B>
bool approx_equal(Eigen::MatrixBase<A> const& a,
                  Eigen::MatrixBase<B> const& b,
                  double                      tol = kDefaultTolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  return is_zero(a - b, tol);
}

template <typename To, typename From>
Matrix<To> cast_matrix(Matrix<From> const& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      out(i, j) = scalar_cast<To>(m(i, j));
    }
  }
  return out;
}

template <typename To, typename From>
Vector<To> cast_vector(Vector<From> const& v) {
  Vector<To> out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    out(i) = scalar_cast<To>(v(i));
  }
  return out;
}

// Reduced row echelon form. `reduced` has `pivots.size()` leading nonzero
// rows; pivot entries are 1.
template <typename Scalar>
struct Echelon {
  Matrix<Scalar>     reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Scalar>
Echelon<Scalar> row_echelon(Matrix<Scalar> m, double tol = kDefaultTolerance) {
  using Traits = ScalarTraits<Scalar>;
  double const zero_tol = Traits::exact ? 0.0 : tol * std::max(1.0, max_magnitude(m));
  Echelon<Scalar> out;
  Index           row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index  best     = -1;
    double best_mag = 0.0;
    for (Index i = row; i < m.rows(); ++i) {
      if (Traits::is_zero(m(i, col), zero_tol)) {
        continue;
      }
      double mag = Traits::magnitude(m(i, col));
      if (best < 0 || (!Traits::exact && mag > best_mag)) {
        best     = i;
        best_mag = mag;
        if (Traits::exact) {
          break;
        }
      }
    }
    if (best < 0) {
      for (Index i = row; i < m.rows(); ++i) {
        m(i, col) = Scalar(0);
      }
      continue;
    }
    m.row(best).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i != row && !Traits::is_zero(m(i, col), 0.0)) {
        Scalar factor = m(i, col);
        m.row(i) -= factor * m.row(row);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Index rank(Matrix<Scalar> const& m, double tol = kDefaultTolerance) {
  return row_echelon(m, tol).rank();
}

// Columns form a basis of {x : m x = 0}.
template <typename Scalar>
Matrix<Scalar> nullspace(Matrix<Scalar> const& m, double tol = kDefaultTolerance) {
  auto const         ech = row_echelon(m, tol);
  std::vector<bool>  is_pivot(m.cols(), false);
  for (Index p : ech.pivots) {
    is_pivot[p] = true;
  }
  std::vector<Index> free;
  for (Index j = 0; j < m.cols(); ++j) {
    if (!is_pivot[j]) {
      free.push_back(j);
    }
  }
  Matrix<Scalar> out = Matrix<Scalar>::Zero(m.cols(), static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    Index f = free[k];
    out(f, static_cast<Index>(k)) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      out(ech.pivots[r], static_cast<Index>(k)) = -ech.reduced(static_cast<Index>(r), f);
    }
  }
  return out;
}

// Some solution of a x = b, if one exists.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(Matrix<Scalar> const& a,
                                    Vector<Scalar> const& b,
                                    double                tol = kDefaultTolerance) {
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto const ech = row_echelon(aug, tol);
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) {
    return std::nullopt;
  }
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    x(ech.pivots[r]) = ech.reduced(static_cast<Index>(r), a.cols());
  }
  if (!ScalarTraits<Scalar>::exact && !approx_equal(a * x, b, tol * std::max(1.0, max_magnitude(b)) * 10)) {
    return std::nullopt;
  }
  return x;
}

template <typename Scalar>
std::optional<Matrix<Scalar>> inverse(Matrix<Scalar> const& m, double tol = kDefaultTolerance) {
  if (m.rows() != m.cols()) {
    return std::nullopt;
  }
  Index const    n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << m, Matrix<Scalar>::Identity(n, n);
  auto const ech = row_echelon(aug, tol);
  if (ech.rank() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  return Matrix<Scalar>(ech.reduced.block(0, n, n, n));
}

// Incrementally grown subspace of Scalar^ambient. Exact spans keep echelon
// rows (each row vanishes at earlier pivots); complex spans keep an
// orthonormal basis.
template <typename Scalar>
class SpanBuilder {
 public:
  explicit SpanBuilder(Index ambient, double tol = kDefaultTolerance)
      : ambient_(ambient), tol_(tol) {}

  Index ambient() const { return ambient_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  Vector<Scalar> reduce(Vector<Scalar> v) const {
    if constexpr (ScalarTraits<Scalar>::exact) {
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar const& c = v(pivots_[k]);
        if (!c.is_zero()) {
          Scalar factor = c;
          v -= factor * rows_[k];
        }
      }
    } else {
      for (int pass = 0; pass < 2; ++pass) {
        for (auto const& q : rows_) {
          v -= q * q.dot(v);  // dot() conjugates its left argument
        }
      }
    }
    return v;
  }

  bool contains(Vector<Scalar> const& v) const {
    double scale = ScalarTraits<Scalar>::exact ? 0.0 : tol_ * std::max(1.0, max_magnitude(v));
    return is_zero(reduce(v), scale);
  }

  // Returns true when `v` enlarged the span.
  bool insert(Vector<Scalar> const& v) {
    Vector<Scalar> r = reduce(v);
    if constexpr (ScalarTraits<Scalar>::exact) {
      for (Index i = 0; i < r.size(); ++i) {
        if (!r(i).is_zero()) {
          Scalar inv = Scalar(1) / r(i);
          r *= inv;
          rows_.push_back(std::move(r));
          pivots_.push_back(i);
          return true;
        }
      }
      return false;
    } else {
      double norm = r.norm();
      if (norm <= tol_ * std::max(1.0, v.norm())) {
        return false;
      }
      rows_.push_back(r / norm);
      pivots_.push_back(-1);
      return true;
    }
  }

  // Columns span the subspace.
  Matrix<Scalar> basis() const {
    Matrix<Scalar> out(ambient_, rank());
    for (Index k = 0; k < rank(); ++k) {
      out.col(k) = rows_[static_cast<std::size_t>(k)];
    }
    return out;
  }

 private:
  Index                       ambient_;
  double                      tol_;
  std::vector<Vector<Scalar>> rows_;
  std::vector<Index>          pivots_;
};

// Rank of the column span of `m`.
template <typename Scalar>
Index column_rank(Matrix<Scalar> const& m, double tol = kDefaultTolerance) {
  SpanBuilder<Scalar> span(m.rows(), tol);
  for (Index j = 0; j < m.cols(); ++j) {
    span.insert(m.col(j));
  }
  return span.rank();
}

// True when the column spans of a and b coincide.
template <typename Scalar>
bool same_column_space(Matrix<Scalar> const& a,
                       Matrix<Scalar> const& b,
                       double                tol = kDefaultTolerance) {
  SpanBuilder<Scalar> sa(a.rows(), tol), sb(b.rows(), tol);
  for (Index j = 0; j < a.cols(); ++j) {
    sa.insert(a.col(j));
  }
  for (Index j = 0; j < b.cols(); ++j) {
    sb.insert(b.col(j));
  }
  if (sa.rank() != sb.rank()) {
    return false;
  }
  for (Index j = 0; j < b.cols(); ++j) {
    if (!sa.contains(b.col(j))) {
      return false;
    }
  }
  return true;
}

}  // namespace twistcross
