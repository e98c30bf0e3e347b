#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace bdtriad {

// Expression templates are disabled so the scalar composes with Eigen's own.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = Matrix<Rational>;
using RVector = Vector<Rational>;

/// Parses "p", "-p" or "p/q" (q > 0). Decimals, exponents and whitespace are
/// rejected. The result is in lowest terms. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q".
std::string to_string(const Rational& value);

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

template <typename Scalar>
bool is_zero(const Matrix<Scalar>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

/// Exact equality that also rejects shape mismatches (Eigen asserts instead).
template <typename Scalar>
bool same(const Matrix<Scalar>& x, const Matrix<Scalar>& y) {
  return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
}

/// Builds a dense rational matrix from integer rows; handy for fixtures.
RMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

}  // namespace bdtriad
