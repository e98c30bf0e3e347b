#pragma once

#include "bdtriad/rational.hpp"

#include <optional>
#include <vector>

namespace bdtriad {

/// A subspace of Q^n held in canonical form.
///
/// The basis is the reduced column-echelon basis with each column rescaled to
/// a primitive integer vector whose pivot entry is positive. Equal subspaces
/// therefore have identical bases and compare equal with ==.
class Subspace {
 public:
  explicit Subspace(Index ambient_dim = 0);

  /// Span of the columns of `columns` (which need not be independent).
  static Subspace span(const RMatrix& columns);
  static Subspace full(Index ambient_dim);

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return basis_.cols() == 0; }

  /// ambient_dim x dim, columns in canonical order.
  const RMatrix& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const RVector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in basis(), or nullopt when v lies outside.
  std::optional<RVector> coordinates(const RVector& v) const;

  Subspace operator+(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  /// Image of the subspace under a square matrix.
  Subspace image_under(const RMatrix& x) const;

 private:
  Index ambient_dim_;
  RMatrix basis_;
  std::vector<Index> pivots_;
};

/// Basis of the null space of m as a canonical Subspace of Q^cols.
Subspace kernel_basis(const RMatrix& m);

/// Scales a nonzero rational vector to a primitive integer vector, keeping
/// the sign of its first nonzero entry positive.
RVector primitive_integer(const RVector& v);

}  // namespace bdtriad
