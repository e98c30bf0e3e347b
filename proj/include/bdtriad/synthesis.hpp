#pragma once

// Construction of a tetrahedron-algebra module from a thin reduced BD triad:
// raising maps R, r and the scalars c, a; the transformation B from its two
// bracket identities; B' and B''; assembly at a chosen corner; verification.

#include "bdtriad/bd_verify.hpp"
#include "bdtriad/errors.hpp"
#include "bdtriad/tet.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bdtriad {

/// A pipeline stage failed. `stage` is one of "input", "raising_maps",
/// "construct_B", "construct_B_prime_dprime", "relations", "spectrum",
/// "irreducibility", "corners".
class SynthesisError : public Error {
 public:
  SynthesisError(std::string stage, const std::string& detail)
      : Error(stage + ": " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct RaisingData {
  RMatrix big_r;    // R = A - A''
  RMatrix small_r;  // r = A' - A''
  /// r = cR and a = 1 - 1/c; both absent when d = 0, where R = r = 0.
  std::optional<Rational> c;
  std::optional<Rational> a;
};

/// Checks R V''_i in V''_{i+1}, r V''_i in V''_{i+1}, Rr = rR, bijectivity of
/// R and r on V''_i for i < d, r = cR with c not in {0, 1}, a not in {0, 1}.
/// `cert` must belong to `triad` and be thin and reduced.
RaisingData raising_maps(const Triad& triad, const TriadCertificate& cert);

struct BConstruction {
  RMatrix b;
  /// Dimension of the solution space of [A'',B] = 2A'' - 2B, [B,A'] = 2B + 2A'.
  Index solution_space_dim = 0;
  /// Whether trace(B) = 0 was needed to single out B.
  bool trace_filtered = false;
};

/// Solves the two bracket identities for B; when the solution is not unique,
/// keeps only trace-zero solutions and fails unless one remains. Then checks
/// that (A', -A'', B) is a reduced BD triple.
BConstruction construct_B(const Triad& triad, const RaisingData& rd);

struct IdentityCheck {
  std::string id;
  bool holds = false;
};

struct BPrimes {
  RMatrix b_prime;
  RMatrix b_dprime;
  std::vector<IdentityCheck> identities;
};

/// B' = (1/a - 1)^{-1} A'' + (a - 1)^{-1} B and B'' = (1 - 1/a) A' - B/a,
/// followed by the ten linear corner identities and the bracket identities
/// among A, A', A'', B, B', B''. For d = 0 both are zero.
BPrimes construct_B_prime_dprime(const Triad& triad, const RaisingData& rd, const RMatrix& b);

/// A permutation (r, s, t, u) of 0..3.
using CornerAssignment = std::array<int, 4>;
inline constexpr CornerAssignment kDefaultCorner = {0, 1, 2, 3};

/// Parses "0123"-style permutations; throws ParseError.
CornerAssignment parse_corner(const std::string& text);

struct SynthesisOptions {
  /// Reject non-thin input before any construction. With this off the
  /// pipeline runs until a stage fails.
  bool require_thin = true;
};

struct SynthesisResult {
  TriadCertificate triad_certificate;
  RaisingData raising;
  BConstruction b;
  RMatrix b_prime;
  RMatrix b_dprime;
  CornerAssignment corner = kDefaultCorner;
  TetModule module;
  RelationReport relations;
  Index diameter = 0;
  Irreducibility irreducibility;
  std::array<TriadCertificate, 4> corner_certificates;
  std::vector<IdentityCheck> identities;  // every named identity, all holding
};

/// X_ru = A, X_su = A', X_tu = A'', X_ts = B, X_rt = B', X_sr = B'', then full
/// verification. Throws SynthesisError at the first failing stage.
SynthesisResult synthesize_tet(const Triad& triad, CornerAssignment corner = kDefaultCorner,
                               SynthesisOptions options = {});

}  // namespace bdtriad
