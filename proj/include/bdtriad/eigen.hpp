#pragma once

#include "bdtriad/rational.hpp"
#include "bdtriad/subspace.hpp"

#include <vector>

namespace bdtriad {

struct EigenPair {
  Rational value;
  Index algebraic_multiplicity = 0;
  Subspace eigenspace;
};

/// Rational spectrum of a square matrix, eigenvalues in ascending order.
struct EigenDecomposition {
  std::vector<EigenPair> pairs;
  bool diagonalizable = false;

  Index ambient_dim() const;
  std::vector<Rational> eigenvalues() const;
  /// Index of the pair holding `value`, or -1.
  Index find(const Rational& value) const;
};

/// All integer roots with multiplicity of a polynomial with integer
/// coefficients (lowest degree first, leading coefficient +-1 not required).
/// Candidates are divisors of the trailing nonzero coefficient bounded by
/// `bound` in absolute value; pass a negative bound to use the Cauchy bound.
std::vector<std::pair<Integer, Index>> integer_roots(std::vector<Integer> coeffs, Integer bound = Integer(-1));

/// Eigen-decomposition over Q.
///
/// The matrix is scaled by the lcm of its denominators so that the
/// characteristic polynomial is monic with integer coefficients; its rational
/// roots are then integers dividing the constant term (rational-root
/// theorem), searched inside the Gershgorin disc bound. Throws
/// IrrationalSpectrum when the rational roots do not exhaust the degree and
/// DimensionError for non-square or empty input.
EigenDecomposition eigen_decompose(const RMatrix& m);

/// Result of restricting x^k to dom and reading it in cod's coordinates.
struct RestrictedMap {
  bool bijective = false;
  /// dim(cod) x dim(dom); column j holds the cod-coordinates of x^k dom_j.
  RMatrix witness;
};

/// Throws ImageNotContained (with the offending basis index) when x^k dom is
/// not inside cod; otherwise reports whether the induced map is invertible.
RestrictedMap restricted_power_bijective(const RMatrix& x, Index k, const Subspace& dom, const Subspace& cod);

}  // namespace bdtriad
