#pragma once

// Example inputs: V(d)-based thin reduced triads and the 6x6 non-thin triad
// with its candidate X02.

#include "bdtriad/io.hpp"
#include "bdtriad/tet.hpp"

namespace bdtriad {

/// A'' = -h, A = -h + beta f, A' = -h + gamma f on V(d). Requires beta, gamma
/// nonzero and distinct (DimensionError otherwise, as for d < 0). The result
/// is verified as a reduced thin BD triad of diameter d before returning.
TriadDocument fixture_vd_triad(Index d, const Rational& beta, const Rational& gamma);

struct Counterexample {
  TriadDocument document;
  RMatrix x02;
};

/// The reduced BD triad of shape (1,2,2,1) together with the matrix X02
/// forced on any module structure with X03 = A, X13 = A', X23 = A''.
Counterexample fixture_counterexample();

/// X03 = A, X13 = A', X23 = A'', X02 = x02 and X01 = X12 = 0.
TetModule counterexample_candidate(const Counterexample& c);

}  // namespace bdtriad
