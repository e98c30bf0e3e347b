#pragma once

// The irreducible sl2-modules V(d) and the equitable presentation.

#include "bdtriad/rational.hpp"

namespace bdtriad {

/// Standard basis action: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
struct Sl2Action {
  RMatrix h, e, f;
};

/// [X,Y] = 2X + 2Y, [Y,Z] = 2Y + 2Z, [Z,X] = 2Z + 2X.
struct EquitableTriple {
  RMatrix x, y, z;
};

/// V(d) in the basis v_0..v_d: h v_i = (d-2i) v_i, f v_i = (i+1) v_{i+1},
/// e v_i = (d-i+1) v_{i-1}.
Sl2Action make_vd(Index d);

bool satisfies_sl2_relations(const Sl2Action& s);
bool satisfies_equitable_relations(const EquitableTriple& t);

/// X = 2e - h, Y = -2f - h, Z = h. Throws RelationViolation on a non-sl2 input.
EquitableTriple equitable_from_standard(const Sl2Action& s);

/// e = (X + Z)/2, f = -(Y + Z)/2, h = Z. Throws RelationViolation on a
/// non-equitable input.
Sl2Action standard_from_equitable(const EquitableTriple& t);

enum class Parity { even, odd, mixed };

const char* to_string(Parity p);

/// Parity of the eigenvalues of h. Throws DimensionError when h is not
/// diagonalizable and IrrationalSpectrum / Error when an eigenvalue is not an
/// integer.
Parity segregation(const RMatrix& h);

}  // namespace bdtriad
