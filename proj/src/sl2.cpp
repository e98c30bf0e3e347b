#include "bdtriad/sl2.hpp"

#include "bdtriad/eigen.hpp"
#include "bdtriad/errors.hpp"
#include "bdtriad/linalg.hpp"

namespace bdtriad {

Sl2Action make_vd(Index d) {
  if (d < 0) throw DimensionError("make_vd: d must be nonnegative");
  const Index n = d + 1;
  Sl2Action s{RMatrix::Zero(n, n), RMatrix::Zero(n, n), RMatrix::Zero(n, n)};
  for (Index i = 0; i < n; ++i) s.h(i, i) = d - 2 * i;
  for (Index i = 0; i < d; ++i) s.f(i + 1, i) = i + 1;
  for (Index i = 1; i < n; ++i) s.e(i - 1, i) = d - i + 1;
  return s;
}

bool satisfies_sl2_relations(const Sl2Action& s) {
  return same(commutator(s.h, s.e), RMatrix(2 * s.e)) && same(commutator(s.h, s.f), RMatrix(-2 * s.f)) &&
         same(commutator(s.e, s.f), s.h);
}

bool satisfies_equitable_relations(const EquitableTriple& t) {
  return same(commutator(t.x, t.y), RMatrix(2 * t.x + 2 * t.y)) &&
         same(commutator(t.y, t.z), RMatrix(2 * t.y + 2 * t.z)) &&
         same(commutator(t.z, t.x), RMatrix(2 * t.z + 2 * t.x));
}

EquitableTriple equitable_from_standard(const Sl2Action& s) {
  if (!satisfies_sl2_relations(s)) throw RelationViolation("equitable_from_standard: input is not an sl2 action");
  return {RMatrix(2 * s.e - s.h), RMatrix(-2 * s.f - s.h), s.h};
}

Sl2Action standard_from_equitable(const EquitableTriple& t) {
  if (!satisfies_equitable_relations(t))
    throw RelationViolation("standard_from_equitable: input is not an equitable triple");
  const Rational half(Integer(1), Integer(2));
  return {t.z, RMatrix(half * (t.x + t.z)), RMatrix(-half * (t.y + t.z))};
}

const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
  }
  return "?";
}

Parity segregation(const RMatrix& h) {
  const EigenDecomposition eig = eigen_decompose(h);
  if (!eig.diagonalizable) throw DimensionError("segregation: h is not diagonalizable");
  bool even = false, odd = false;
  for (const auto& p : eig.pairs) {
    if (denominator_of(p.value) != 1) throw Error("segregation: eigenvalue " + to_string(p.value) + " is not an integer");
    (numerator_of(p.value) % 2 == 0 ? even : odd) = true;
  }
  return even && odd ? Parity::mixed : (odd ? Parity::odd : Parity::even);
}

}  // namespace bdtriad
