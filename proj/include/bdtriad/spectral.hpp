#pragma once

// Eigenvalue-sequence recurrences and reduction of BD triads to the
// canonical sequences 2i - d.

#include "bdtriad/bd_verify.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace bdtriad {

struct RecurrenceCheck {
  bool holds = true;
  /// ratios[k][i-1] = (s_{i+1} - s_i) / (s_i - s_{i-1}) for sequence k, 1 <= i <= d-1.
  std::array<std::vector<Rational>, 3> ratios;
};

RecurrenceCheck check_recurrence(const TriadCertificate& cert);

/// Ratios of successive differences of one sequence; empty below length 3.
std::vector<Rational> difference_ratios(std::span<const Rational> s);

/// Successive differences all equal. Throws DimensionError below length 3.
bool is_one_recurrent(std::span<const Rational> s);

/// (r, s0) with sigma_i = r tau_i + s0 for every i, or nullopt. For length 1
/// the scale is fixed at 1.
std::optional<AffineMap> affine_witness_sequences(std::span<const Rational> sigma, std::span<const Rational> tau);

/// The sequence 2i - d, 0 <= i <= d.
std::vector<Rational> reduced_sequence(Index d);

struct Reduction {
  Triad reduced;
  std::array<AffineMap, 3> witnesses;  // reduced[k] = witnesses[k].apply(input[k])
  TriadCertificate certificate;        // of `reduced`
};

/// Maps each eigenvalue sequence onto 2i - d and re-verifies the result.
/// Throws RelationViolation when the input is not a BD triad and NoWitness
/// when some sequence is not affinely related to 2i - d.
Reduction reduce_triad(const Triad& triad);
Reduction reduce_triad(const Triad& triad, const TriadCertificate& cert);

}  // namespace bdtriad
