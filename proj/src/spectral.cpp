#include "bdtriad/spectral.hpp"

#include "bdtriad/errors.hpp"

namespace bdtriad {

std::vector<Rational> difference_ratios(std::span<const Rational> s) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const Rational below = s[i] - s[i - 1];
    if (below == 0) throw NoWitness("difference_ratios: repeated consecutive entries");
    out.push_back((s[i + 1] - s[i]) / below);
  }
  return out;
}

RecurrenceCheck check_recurrence(const TriadCertificate& cert) {
  RecurrenceCheck out;
  for (std::size_t k = 0; k < 3; ++k) {
    out.ratios[k] = difference_ratios(cert.sequence(k));
    for (const Rational& q : out.ratios[k])
      if (q != 1) out.holds = false;
  }
  return out;
}

bool is_one_recurrent(std::span<const Rational> s) {
  if (s.size() < 3) throw DimensionError("is_one_recurrent: needs at least three terms");
  for (std::size_t i = 2; i < s.size(); ++i)
    if (s[i] - s[i - 1] != s[1] - s[0]) return false;
  return true;
}

std::optional<AffineMap> affine_witness_sequences(std::span<const Rational> sigma, std::span<const Rational> tau) {
  if (sigma.size() != tau.size() || sigma.empty()) return std::nullopt;
  AffineMap map;
  if (sigma.size() > 1) {
    if (tau[1] == tau[0]) return std::nullopt;
    map.scale = (sigma[1] - sigma[0]) / (tau[1] - tau[0]);
    if (map.scale == 0) return std::nullopt;
  }
  map.shift = sigma[0] - map.scale * tau[0];
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (map.apply(tau[i]) != sigma[i]) return std::nullopt;
  return map;
}

std::vector<Rational> reduced_sequence(Index d) {
  std::vector<Rational> out;
  for (Index i = 0; i <= d; ++i) out.emplace_back(2 * i - d);
  return out;
}

Reduction reduce_triad(const Triad& triad) {
  const auto verdict = verify_bd_triad(triad);
  if (!verdict) {
    const Refutation& r = verdict.refutation();
    throw RelationViolation("reduce_triad: input is not a BD triad, clause " + r.clause + ": " + r.detail);
  }
  return reduce_triad(triad, verdict.value());
}

Reduction reduce_triad(const Triad& triad, const TriadCertificate& cert) {
  const std::vector<Rational> target = reduced_sequence(cert.diameter);
  Reduction out;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto map = affine_witness_sequences(target, cert.sequence(k));
    if (!map) throw NoWitness("reduce_triad: eigenvalue sequence " + std::to_string(k) + " is not 1-recurrent");
    out.witnesses[k] = *map;
  }
  out.reduced = apply_affine(triad, out.witnesses);
  auto verdict = verify_bd_triad(out.reduced);
  if (!verdict) throw RelationViolation("reduce_triad: reduced triad failed verification: " + verdict.refutation().detail);
  if (!verdict.value().reduced()) throw RelationViolation("reduce_triad: output sequences are not 2i - d");
  out.certificate = std::move(verdict.value());
  return out;
}

}  // namespace bdtriad
