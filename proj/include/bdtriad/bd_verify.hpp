#pragma once

// Verification of bidiagonal pairs, triples and triads.
//
// Each verifier either returns a certificate (standard orderings, eigenvalue
// sequences, diameter, shape and the commutator-power bijection witnesses)
// or a Refutation naming the first axiom clause that failed. Input errors
// (shape mismatches, irrational spectra) are thrown instead.

#include "bdtriad/eigen.hpp"
#include "bdtriad/rational.hpp"
#include "bdtriad/subspace.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace bdtriad {

/// Three transformations on a common space, in the order (A, A', A'').
struct Triad {
  RMatrix a;
  RMatrix a_prime;
  RMatrix a_dprime;

  Index dim() const { return a.rows(); }
  const RMatrix& operator[](std::size_t k) const { return k == 0 ? a : (k == 1 ? a_prime : a_dprime); }
  bool operator==(const Triad& other) const {
    return same(a, other.a) && same(a_prime, other.a_prime) && same(a_dprime, other.a_dprime);
  }
};

enum class Direction {
  raising,   // X U_i in U_i + U_{i+1}
  lowering,  // X U_i in U_{i-1} + U_i
};

struct ActorConstraint {
  std::reference_wrapper<const RMatrix> actor;
  Direction direction;
};

struct StandardOrdering {
  std::vector<Subspace> eigenspaces;
  std::vector<Rational> eigenvalues;

  Index diameter() const { return static_cast<Index>(eigenspaces.size()) - 1; }
};

/// The unique ordering of `primary`'s eigenspaces under which every actor
/// acts bidiagonally in its direction.
///
/// Builds the successor relation from the block structure of each actor in
/// an eigenbasis of the primary transformation. A relation that is a single
/// chain fixes the ordering; otherwise all orderings are enumerated when
/// there are at most nine eigenspaces. Throws NoStandardOrdering,
/// AmbiguousOrdering, or Error when the fallback would exceed that size.
StandardOrdering find_standard_ordering(const EigenDecomposition& primary, std::span<const ActorConstraint> actors);
StandardOrdering find_standard_ordering(const EigenDecomposition& primary, std::span<const RMatrix> actors,
                                        Direction direction = Direction::raising);

/// First failed axiom clause: "(i)", "(ii)", "(iii)", "diameter" or "shape".
struct Refutation {
  std::string clause;
  std::string detail;
  std::optional<Index> index;
  std::vector<RMatrix> witness;  // subspace bases, image vectors or restricted-map matrices
};

template <typename T>
class Verdict {
 public:
  Verdict(T value) : state_(std::move(value)) {}
  Verdict(Refutation refutation) : state_(std::move(refutation)) {}

  bool holds() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return holds(); }
  const T& value() const { return std::get<T>(state_); }
  T& value() { return std::get<T>(state_); }
  const Refutation& refutation() const { return std::get<Refutation>(state_); }

 private:
  std::variant<T, Refutation> state_;
};

/// Witness that [X, Y]^(d-2i) restricted to one eigenspace is a bijection
/// onto its mirror.
struct BijectionWitness {
  std::string family;
  Index i = 0;
  RMatrix witness;
};

enum class Structure { pair, triple, triad };

template <Structure S>
struct Certificate {
  static constexpr std::size_t arity = S == Structure::pair ? 2 : 3;

  Index diameter = 0;
  std::array<StandardOrdering, arity> orderings;
  std::vector<Index> shape;
  bool thin = false;
  std::vector<BijectionWitness> bijections;

  const std::vector<Rational>& sequence(std::size_t k) const { return orderings[k].eigenvalues; }

  /// Every eigenvalue sequence equals (2i - d).
  bool reduced() const {
    for (const auto& o : orderings)
      for (Index i = 0; i <= diameter; ++i)
        if (o.eigenvalues[static_cast<std::size_t>(i)] != Rational(2 * i - diameter)) return false;
    return true;
  }
};

using PairCertificate = Certificate<Structure::pair>;
using TripleCertificate = Certificate<Structure::triple>;
using TriadCertificate = Certificate<Structure::triad>;

Verdict<PairCertificate> verify_bd_pair(const RMatrix& a, const RMatrix& a_prime);
Verdict<TripleCertificate> verify_bd_triple(const RMatrix& a, const RMatrix& a_prime, const RMatrix& a_dprime);
Verdict<TriadCertificate> verify_bd_triad(const RMatrix& a, const RMatrix& a_prime, const RMatrix& a_dprime);
inline Verdict<TriadCertificate> verify_bd_triad(const Triad& t) { return verify_bd_triad(t.a, t.a_prime, t.a_dprime); }

struct Shape {
  std::vector<Index> rho;
  bool thin = false;
};

/// Recomputes the shape from a certificate's orderings. Throws
/// DimensionError when V_i, V_{d-i}, V'_i, V'_{d-i}, V''_i, V''_{d-i}
/// disagree in dimension.
Shape shape_of(const TriadCertificate& cert);

/// x -> scale * x + shift, scale nonzero.
struct AffineMap {
  Rational scale{1};
  Rational shift{0};

  bool operator==(const AffineMap&) const = default;
  RMatrix apply(const RMatrix& x) const;
  Rational apply(const Rational& x) const { return scale * x + shift; }
};

/// The affine map (r, s) with x = r y + s I, or nullopt.
std::optional<AffineMap> affine_relation(const RMatrix& x, const RMatrix& y);

struct AffineEquivalence {
  bool equivalent = false;
  std::array<AffineMap, 3> witnesses;  // t1[k] = witnesses[k].apply(t2[k])
  std::optional<std::size_t> failed_component;
};

AffineEquivalence affine_equivalent_triads(const Triad& t1, const Triad& t2);

/// (f0(A), f1(A'), f2(A'')).
Triad apply_affine(const Triad& t, const std::array<AffineMap, 3>& maps);

}  // namespace bdtriad
