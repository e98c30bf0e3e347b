#include "bdtriad/subspace.hpp"

#include "bdtriad/errors.hpp"
#include "bdtriad/linalg.hpp"

namespace bdtriad {

RVector primitive_integer(const RVector& v) {
  Integer lcm_den(1);
  for (Index i = 0; i < v.size(); ++i) lcm_den = boost::multiprecision::lcm(lcm_den, denominator_of(v(i)));
  Integer gcd_num(0);
  for (Index i = 0; i < v.size(); ++i) gcd_num = boost::multiprecision::gcd(gcd_num, numerator_of(v(i) * Rational(lcm_den)));
  if (gcd_num == 0) return v;
  Rational scale(lcm_den, gcd_num);
  Index lead = 0;
  while (v(lead) == 0) ++lead;
  if (v(lead) < 0) scale = -scale;
  return v * scale;
}

Subspace::Subspace(Index ambient_dim) : ambient_dim_(ambient_dim), basis_(ambient_dim, 0) {}

Subspace Subspace::span(const RMatrix& columns) {
  Subspace s(columns.rows());
  const auto e = rref(RMatrix(columns.transpose()));
  s.basis_.resize(columns.rows(), e.rank);
  for (Index k = 0; k < e.rank; ++k) s.basis_.col(k) = primitive_integer(e.reduced.row(k).transpose());
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::full(Index ambient_dim) { return span(RMatrix::Identity(ambient_dim, ambient_dim)); }

std::optional<RVector> Subspace::coordinates(const RVector& v) const {
  if (v.size() != ambient_dim_) throw DimensionError("Subspace::coordinates: vector has wrong length");
  RVector coords(dim());
  RVector residual = v;
  for (Index k = 0; k < dim(); ++k) {
    const Index p = pivots_[static_cast<std::size_t>(k)];
    coords(k) = v(p) / basis_(p, k);
    residual -= coords(k) * basis_.col(k);
  }
  for (Index i = 0; i < residual.size(); ++i)
    if (residual(i) != 0) return std::nullopt;
  return coords;
}

bool Subspace::contains(const RVector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("Subspace::contains: ambient dimensions differ");
  for (Index k = 0; k < other.dim(); ++k)
    if (!contains(RVector(other.basis_.col(k)))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("Subspace::operator+: ambient dimensions differ");
  RMatrix both(ambient_dim_, dim() + other.dim());
  both << basis_, other.basis_;
  return span(both);
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_dim_ == other.ambient_dim_ && same(basis_, other.basis_);
}

Subspace Subspace::image_under(const RMatrix& x) const {
  if (x.cols() != ambient_dim_) throw DimensionError("Subspace::image_under: matrix has wrong width");
  return span(RMatrix(x * basis_));
}

Subspace kernel_basis(const RMatrix& m) { return Subspace::span(null_space(m)); }

}  // namespace bdtriad
