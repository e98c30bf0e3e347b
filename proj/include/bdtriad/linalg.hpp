#pragma once

// Exact dense linear algebra over any field-like scalar. Everything here is
// a template over Eigen expressions; nothing relies on floating point
// tolerances, so the scalar must have exact == and exact division.

#include "bdtriad/errors.hpp"
#include "bdtriad/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bdtriad {

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  Index rank = 0;
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  out.reduced = m;
  Matrix<Scalar>& r = out.reduced;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index pivot = row;
    while (pivot < r.rows() && r(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row) r.row(pivot).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    for (Index j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == Scalar(0)) continue;
      const Scalar factor = r(i, col);
      for (Index j = col; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

/// Columns form a basis of {v : m v = 0}, one column per free variable.
template <typename Derived>
Matrix<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(m.cols(), m.cols() - e.rank);
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (Index r = 0; r < e.rank; ++r) basis(e.pivots[static_cast<std::size_t>(r)], k) = -e.reduced(r, free);
    ++k;
  }
  return basis;
}

/// Inverse of a square matrix; throws DimensionError when singular.
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  const Index n = m.rows();
  Matrix<Scalar> augmented(n, 2 * n);
  augmented << m, Matrix<Scalar>::Identity(n, n);
  const auto e = rref(augmented);
  if (e.rank < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    throw DimensionError("inverse: matrix is singular");
  return e.reduced.rightCols(n);
}

template <typename DerivedX, typename DerivedY>
Matrix<typename DerivedX::Scalar> commutator(const Eigen::MatrixBase<DerivedX>& x,
                                             const Eigen::MatrixBase<DerivedY>& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw DimensionError("commutator: operands must be square of equal size");
  Matrix<typename DerivedX::Scalar> xy = x * y;
  xy.noalias() -= y * x;
  return xy;
}

/// x^k by repeated multiplication; x^0 is the identity.
template <typename Derived>
Matrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& x, Index k) {
  using Scalar = typename Derived::Scalar;
  if (x.rows() != x.cols()) throw DimensionError("matrix_power: matrix is not square");
  Matrix<Scalar> result = Matrix<Scalar>::Identity(x.rows(), x.cols());
  for (Index i = 0; i < k; ++i) result = (x * result).eval();
  return result;
}

/// Coefficients of det(t I - m), lowest degree first; the last entry is 1.
///
/// Reduces m to upper Hessenberg form by elementary similarity transforms and
/// then runs the standard three-term recurrence on the leading principal
/// minors. O(n^3) field operations, no divisions by data-dependent zero.
template <typename Derived>
std::vector<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionError("char_poly: matrix is not square");
  const Index n = m.rows();
  Matrix<Scalar> h = m;
  for (Index col = 0; col + 2 < n; ++col) {
    Index pivot = col + 1;
    while (pivot < n && h(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      h.row(pivot).swap(h.row(col + 1));
      h.col(pivot).swap(h.col(col + 1));
    }
    for (Index i = col + 2; i < n; ++i) {
      if (h(i, col) == Scalar(0)) continue;
      const Scalar u = h(i, col) / h(col + 1, col);
      h.row(i) -= u * h.row(col + 1);
      h.col(col + 1) += u * h.col(i);
    }
  }
  // p[k] is the characteristic polynomial of the leading k x k block.
  std::vector<std::vector<Scalar>> p(static_cast<std::size_t>(n + 1));
  p[0] = {Scalar(1)};
  for (Index k = 1; k <= n; ++k) {
    const auto& prev = p[static_cast<std::size_t>(k - 1)];
    std::vector<Scalar> next(static_cast<std::size_t>(k + 1), Scalar(0));
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j + 1] += prev[j];
      next[j] -= h(k - 1, k - 1) * prev[j];
    }
    Scalar chain(1);
    for (Index i = 1; i < k; ++i) {
      chain *= h(k - i, k - i - 1);
      if (chain == Scalar(0)) break;
      const Scalar coeff = h(k - i - 1, k - 1) * chain;
      const auto& lower = p[static_cast<std::size_t>(k - i - 1)];
      for (std::size_t j = 0; j < lower.size(); ++j) next[j] -= coeff * lower[j];
    }
    p[static_cast<std::size_t>(k)] = std::move(next);
  }
  return p[static_cast<std::size_t>(n)];
}

/// Evaluates a polynomial (lowest degree first) at a square matrix.
template <typename Derived>
Matrix<typename Derived::Scalar> polynomial_at(std::span<const typename Derived::Scalar> coeffs,
                                               const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = (m * acc).eval();
    acc.diagonal().array() += *it;
  }
  return acc;
}

/// One term left * X * right of a linear expression in an unknown matrix X.
template <typename Scalar>
struct MatrixTerm {
  Matrix<Scalar> left;
  Matrix<Scalar> right;
};

/// sum(terms) = rhs, linear in the unknown square matrix.
template <typename Scalar>
struct MatrixConstraint {
  std::vector<MatrixTerm<Scalar>> terms;
  Matrix<Scalar> rhs;
};

template <typename Scalar>
struct MatrixSystemSolution {
  Matrix<Scalar> particular;
  std::vector<Matrix<Scalar>> homogeneous;  // basis of the solution space of the homogeneous system
};

/// Term list for c * X.
template <typename Scalar>
std::vector<MatrixTerm<Scalar>> scaled_unknown(Index n, const Scalar& c) {
  return {{c * Matrix<Scalar>::Identity(n, n), Matrix<Scalar>::Identity(n, n)}};
}

/// Term list for c * [k, X] = c * (k X - X k).
template <typename Scalar>
std::vector<MatrixTerm<Scalar>> bracket_with_unknown(const Matrix<Scalar>& k, const Scalar& c = Scalar(1)) {
  const Index n = k.rows();
  return {{c * k, Matrix<Scalar>::Identity(n, n)}, {-c * Matrix<Scalar>::Identity(n, n), k}};
}

/// Solves a family of affine constraints on an unknown n x n matrix.
///
/// Each constraint is flattened through vec(L X R) = (R^T kron L) vec(X)
/// (column-major vec) into an exact system of m n^2 equations in n^2
/// unknowns. Throws InconsistentSystem when no solution exists.
template <typename Scalar>
MatrixSystemSolution<Scalar> solve_linear_matrix_system(Index n,
                                                        std::span<const MatrixConstraint<Scalar>> constraints) {
  const Index unknowns = n * n;
  const Index equations = static_cast<Index>(constraints.size()) * unknowns;
  Matrix<Scalar> system = Matrix<Scalar>::Zero(equations, unknowns + 1);
  Index block = 0;
  for (const auto& constraint : constraints) {
    if (constraint.rhs.rows() != n || constraint.rhs.cols() != n)
      throw DimensionError("solve_linear_matrix_system: right-hand side has wrong shape");
    for (const auto& term : constraint.terms) {
      if (term.left.rows() != n || term.left.cols() != n || term.right.rows() != n || term.right.cols() != n)
        throw DimensionError("solve_linear_matrix_system: term has wrong shape");
      // Entry (i, j) of L X R is sum_{p,q} L(i,p) X(p,q) R(q,j).
      for (Index j = 0; j < n; ++j)
        for (Index q = 0; q < n; ++q) {
          if (term.right(q, j) == Scalar(0)) continue;
          for (Index i = 0; i < n; ++i)
            for (Index p = 0; p < n; ++p) {
              if (term.left(i, p) == Scalar(0)) continue;
              system(block + j * n + i, q * n + p) += term.left(i, p) * term.right(q, j);
            }
        }
    }
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) system(block + j * n + i, unknowns) = constraint.rhs(i, j);
    block += unknowns;
  }
  const auto e = rref(system);
  if (!e.pivots.empty() && e.pivots.back() == unknowns)
    throw InconsistentSystem("solve_linear_matrix_system: constraints are inconsistent");

  auto unflatten = [n](const Vector<Scalar>& v) {
    Matrix<Scalar> x(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) x(i, j) = v(j * n + i);
    return x;
  };
  Vector<Scalar> particular = Vector<Scalar>::Zero(unknowns);
  for (Index r = 0; r < e.rank; ++r) particular(e.pivots[static_cast<std::size_t>(r)]) = e.reduced(r, unknowns);

  MatrixSystemSolution<Scalar> out;
  out.particular = unflatten(particular);
  const Matrix<Scalar> kernel = null_space(system.leftCols(unknowns));
  for (Index k = 0; k < kernel.cols(); ++k) out.homogeneous.push_back(unflatten(kernel.col(k)));
  return out;
}

/// Evaluates the left-hand side of a constraint at a candidate matrix.
template <typename Scalar>
Matrix<Scalar> apply_constraint(const MatrixConstraint<Scalar>& constraint, const Matrix<Scalar>& x) {
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(x.rows(), x.cols());
  for (const auto& term : constraint.terms) acc += term.left * x * term.right;
  return acc;
}

/// Dimension of the unital associative algebra generated by square matrices:
/// closes span{I} under left multiplication by each generator.
template <typename Scalar>
Index generated_algebra_dimension(std::span<const Matrix<Scalar>> generators, Index n) {
  struct Row {
    Vector<Scalar> v;
    Index pivot;
  };
  std::vector<Row> basis;
  std::vector<Matrix<Scalar>> frontier;
  auto flatten = [n](const Matrix<Scalar>& m) { return Eigen::Map<const Vector<Scalar>>(m.data(), n * n).eval(); };
  // Returns true when m enlarges the span.
  auto insert = [&](const Matrix<Scalar>& m) {
    Vector<Scalar> v = flatten(m);
    for (const Row& row : basis) {
      if (v(row.pivot) == Scalar(0)) continue;
      const Scalar factor = v(row.pivot);
      v -= factor * row.v;
    }
    Index pivot = 0;
    while (pivot < v.size() && v(pivot) == Scalar(0)) ++pivot;
    if (pivot == v.size()) return false;
    const Scalar lead = v(pivot);
    v /= lead;
    // Keep earlier rows reduced at the new pivot so reduction stays one pass.
    for (Row& row : basis)
      if (row.v(pivot) != Scalar(0)) {
        const Scalar factor = row.v(pivot);
        row.v -= factor * v;
      }
    basis.push_back({std::move(v), pivot});
    return true;
  };
  const Matrix<Scalar> identity = Matrix<Scalar>::Identity(n, n);
  insert(identity);
  frontier.push_back(identity);
  while (!frontier.empty() && static_cast<Index>(basis.size()) < n * n) {
    std::vector<Matrix<Scalar>> next;
    for (const auto& word : frontier)
      for (const auto& g : generators) {
        Matrix<Scalar> product = g * word;
        if (insert(product)) next.push_back(std::move(product));
      }
    frontier = std::move(next);
  }
  return static_cast<Index>(basis.size());
}

}  // namespace bdtriad
