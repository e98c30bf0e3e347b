#pragma once

// Candidate modules for the tetrahedron algebra: six generator matrices
// X_ij (i < j) with X_ji = -X_ij, and exact checks of the defining relations.

#include "bdtriad/bd_verify.hpp"
#include "bdtriad/sl2.hpp"

#include <array>
#include <string>
#include <vector>

namespace bdtriad {

class TetModule {
 public:
  /// Canonical pairs in storage order: 01, 02, 03, 12, 13, 23.
  static constexpr std::array<std::pair<int, int>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

  TetModule() = default;
  /// Throws DimensionError unless all six are square of one positive size.
  explicit TetModule(std::array<RMatrix, 6> canonical);
  static TetModule zero(Index dim);

  Index dim() const { return canonical_[0].rows(); }

  /// X_ij for distinct i, j in 0..3; X_ji = -X_ij.
  RMatrix generator(int i, int j) const;
  /// Stores x as X_ij, hence -x as X_ji.
  void set(int i, int j, const RMatrix& x);

  const std::array<RMatrix, 6>& canonical() const { return canonical_; }

 private:
  std::array<RMatrix, 6> canonical_;
};

std::string generator_name(int i, int j);

enum class RelationFamily { antisymmetry, corner, dolan_grady };

struct RelationDefect {
  RelationFamily family;
  std::vector<int> indices;  // (i,j), (h,i,j) or (h,i,j,k)
  std::string id;
  RMatrix defect;  // left side minus right side
};

struct RelationReport {
  bool antisymmetry_ok = true;
  bool corner_ok = true;
  bool dolan_grady_ok = true;
  int checked = 0;
  std::vector<RelationDefect> violations;  // sorted by family, then index tuple

  bool ok() const { return antisymmetry_ok && corner_ok && dolan_grady_ok; }
};

/// X_ij + X_ji = 0 (6 checks), [X_hi, X_ij] = 2X_hi + 2X_ij over ordered
/// distinct (h,i,j) (24 checks), and [X_hi,[X_hi,[X_hi,X_jk]]] = 4[X_hi,X_jk]
/// over ordered distinct (h,i,j,k) (24 checks).
RelationReport verify_tet_relations(const TetModule& m);

/// The common d such that every generator is diagonalizable with spectrum
/// exactly {d - 2i}; a refutation names the first nonconforming generator.
Verdict<Index> spectrum_diameter(const TetModule& m);

/// (X_ru, X_su, X_tu) with r < s < t the complement of u.
Triad corner_triad(const TetModule& m, int u);

/// (X_hi, X_ij, X_jh). Throws RelationViolation when it is not equitable.
EquitableTriple face_triple(const TetModule& m, int h, int i, int j);

struct Irreducibility {
  bool certified = false;
  Index algebra_dimension = 0;
};

/// Burnside test: the unital algebra generated by the generators is all of
/// End(V). Sufficient for irreducibility; "not certified" is not a proof of
/// reducibility.
Irreducibility irreducible_sufficient(const TetModule& m);

/// Verifies each corner triad as a reduced BD triad. Throws
/// RelationViolation naming the vertex when one fails.
std::array<TriadCertificate, 4> corner_triads_are_bd_triads(const TetModule& m);

}  // namespace bdtriad
