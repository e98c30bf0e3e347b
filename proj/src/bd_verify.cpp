#include "bdtriad/bd_verify.hpp"

#include "bdtriad/errors.hpp"
#include "bdtriad/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bdtriad {

namespace {

constexpr Index kMaxFallbackEigenspaces = 9;

const char* const kNames[] = {"A", "A'", "A''"};

std::string eigen_label(const Rational& value) { return "eigenspace(" + to_string(value) + ")"; }

// Raising edges u -> w: some actor requires pos(w) = pos(u) + 1.
struct SuccessorGraph {
  std::vector<std::set<std::size_t>> succ;
  std::vector<std::set<std::size_t>> pred;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

SuccessorGraph successor_graph(const EigenDecomposition& primary, std::span<const ActorConstraint> actors) {
  const std::size_t m = primary.pairs.size();
  const Index n = primary.ambient_dim();
  RMatrix basis(n, n);
  std::vector<Index> offset(m + 1, 0);
  for (std::size_t k = 0; k < m; ++k) {
    const RMatrix& b = primary.pairs[k].eigenspace.basis();
    basis.middleCols(offset[k], b.cols()) = b;
    offset[k + 1] = offset[k] + b.cols();
  }
  const RMatrix basis_inv = inverse(basis);
  SuccessorGraph g{std::vector<std::set<std::size_t>>(m), std::vector<std::set<std::size_t>>(m), {}};
  for (const auto& constraint : actors) {
    const RMatrix& x = constraint.actor.get();
    if (x.rows() != n || x.cols() != n) throw DimensionError("find_standard_ordering: actor has wrong size");
    const RMatrix blocks = basis_inv * x * basis;
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t w = 0; w < m; ++w) {
        if (u == w) continue;
        const RMatrix block = blocks.block(offset[w], offset[u], offset[w + 1] - offset[w], offset[u + 1] - offset[u]);
        if (is_zero(block)) continue;
        const auto [from, to] = constraint.direction == Direction::raising ? std::pair{u, w} : std::pair{w, u};
        if (g.succ[from].insert(to).second) {
          g.pred[to].insert(from);
          g.edges.emplace_back(from, to);
        }
      }
  }
  return g;
}

std::optional<std::vector<std::size_t>> as_chain(const SuccessorGraph& g) {
  const std::size_t m = g.succ.size();
  std::optional<std::size_t> head;
  for (std::size_t u = 0; u < m; ++u) {
    if (g.succ[u].size() > 1 || g.pred[u].size() > 1) return std::nullopt;
    if (g.pred[u].empty()) {
      if (head) return std::nullopt;
      head = u;
    }
  }
  if (!head) return std::nullopt;
  std::vector<std::size_t> order{*head};
  while (!g.succ[order.back()].empty()) {
    order.push_back(*g.succ[order.back()].begin());
    if (order.size() > m) return std::nullopt;
  }
  if (order.size() != m) return std::nullopt;
  return order;
}

std::string describe_conflict(const EigenDecomposition& primary, const SuccessorGraph& g) {
  for (std::size_t u = 0; u < g.succ.size(); ++u) {
    if (g.succ[u].size() > 1) {
      std::string s = eigen_label(primary.pairs[u].value) + " must immediately precede each of";
      for (auto w : g.succ[u]) s += " " + eigen_label(primary.pairs[w].value);
      return s;
    }
    if (g.pred[u].size() > 1) {
      std::string s = eigen_label(primary.pairs[u].value) + " must immediately follow each of";
      for (auto w : g.pred[u]) s += " " + eigen_label(primary.pairs[w].value);
      return s;
    }
  }
  return "the successor relation contains a cycle";
}

void check_containments(const StandardOrdering& o, std::span<const ActorConstraint> actors) {
  const std::size_t m = o.eigenspaces.size();
  const Index n = o.eigenspaces.front().ambient_dim();
  for (const auto& constraint : actors)
    for (std::size_t i = 0; i < m; ++i) {
      Subspace allowed = o.eigenspaces[i];
      if (constraint.direction == Direction::raising && i + 1 < m) allowed = allowed + o.eigenspaces[i + 1];
      if (constraint.direction == Direction::lowering && i > 0) allowed = allowed + o.eigenspaces[i - 1];
      if (!allowed.contains(o.eigenspaces[i].image_under(constraint.actor.get())))
        throw Error("find_standard_ordering: internal containment check failed (n=" + std::to_string(n) + ")");
    }
}

}  // namespace

StandardOrdering find_standard_ordering(const EigenDecomposition& primary, std::span<const ActorConstraint> actors) {
  if (primary.pairs.empty()) throw DimensionError("find_standard_ordering: empty decomposition");
  if (!primary.diagonalizable) throw DimensionError("find_standard_ordering: primary is not diagonalizable");
  const std::size_t m = primary.pairs.size();
  const SuccessorGraph g = successor_graph(primary, actors);

  std::vector<std::size_t> order;
  if (auto chain = as_chain(g)) {
    order = std::move(*chain);
  } else {
    if (static_cast<Index>(m) > kMaxFallbackEigenspaces)
      throw Error("find_standard_ordering: successor relation is not a chain and " + std::to_string(m) +
                  " eigenspaces exceed the exhaustive-search limit");
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> pos(m);
    std::size_t found = 0;
    do {
      for (std::size_t k = 0; k < m; ++k) pos[perm[k]] = k;
      const bool ok = std::all_of(g.edges.begin(), g.edges.end(),
                                  [&](const auto& e) { return pos[e.second] == pos[e.first] + 1; });
      if (!ok) continue;
      if (++found > 1) break;
      order = perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (found == 0) throw NoStandardOrdering("no standard ordering: " + describe_conflict(primary, g));
    if (found > 1) {
      std::string s = "more than one ordering satisfies the containments; e.g. (";
      for (std::size_t k = 0; k < m; ++k) s += (k ? ", " : "") + to_string(primary.pairs[order[k]].value);
      throw AmbiguousOrdering(s + ")");
    }
  }

  StandardOrdering out;
  for (std::size_t k : order) {
    out.eigenspaces.push_back(primary.pairs[k].eigenspace);
    out.eigenvalues.push_back(primary.pairs[k].value);
  }
  check_containments(out, actors);
  return out;
}

StandardOrdering find_standard_ordering(const EigenDecomposition& primary, std::span<const RMatrix> actors,
                                        Direction direction) {
  std::vector<ActorConstraint> constraints;
  for (const RMatrix& x : actors) constraints.push_back({std::cref(x), direction});
  return find_standard_ordering(primary, constraints);
}

namespace {

struct Containment {
  std::size_t actor;
  Direction direction;
};

// [mats[x], mats[y]]^(d-2i) restricted to the eigenspaces of mats[base]:
// V_i -> V_{d-i} when `from_low`, otherwise V_{d-i} -> V_i.
struct BijectionFamily {
  std::size_t x, y, base;
  bool from_low;
};

struct StructureRules {
  std::vector<std::vector<Containment>> containments;  // per primary
  std::vector<BijectionFamily> families;
};

StructureRules rules_for(Structure s) {
  using enum Direction;
  switch (s) {
    case Structure::pair:
      return {{{{1, raising}}, {{0, raising}}}, {{1, 0, 0, true}, {0, 1, 1, true}}};
    case Structure::triple:
      return {{{{1, raising}, {2, lowering}}, {{2, raising}, {0, lowering}}, {{0, raising}, {1, lowering}}},
              {{1, 0, 0, true}, {2, 0, 0, false}, {2, 1, 1, true}, {0, 1, 1, false}, {0, 2, 2, true}, {1, 2, 2, false}}};
    case Structure::triad:
      return {{{{1, raising}, {2, raising}}, {{2, raising}, {0, raising}}, {{0, raising}, {1, raising}}},
              {{1, 0, 0, true}, {2, 0, 0, true}, {2, 1, 1, true}, {0, 1, 1, true}, {0, 2, 2, true}, {1, 2, 2, true}}};
  }
  throw Error("unknown structure");
}

std::string family_name(const BijectionFamily& f) {
  const std::string space = std::string(f.base == 0 ? "V" : (f.base == 1 ? "V'" : "V''"));
  const std::string bracket = "[" + std::string(kNames[f.x]) + "," + kNames[f.y] + "]^(d-2i)";
  return f.from_low ? bracket + " : " + space + "_i -> " + space + "_(d-i)"
                    : bracket + " : " + space + "_(d-i) -> " + space + "_i";
}

template <Structure S>
Verdict<Certificate<S>> verify_structure(std::span<const RMatrix> mats) {
  constexpr std::size_t arity = Certificate<S>::arity;
  const Index n = mats[0].rows();
  if (n == 0) throw DimensionError("verify: the underlying space must have positive dimension");
  for (const RMatrix& m : mats)
    if (m.rows() != n || m.cols() != n) throw DimensionError("verify: matrices must be square of equal size");

  const StructureRules rules = rules_for(S);
  Certificate<S> cert;

  // (i)
  std::vector<EigenDecomposition> eig;
  for (std::size_t k = 0; k < arity; ++k) {
    eig.push_back(eigen_decompose(mats[k]));
    if (!eig.back().diagonalizable) {
      Refutation r{"(i)", std::string(kNames[k]) + " is not diagonalizable", std::nullopt, {}};
      for (const auto& p : eig.back().pairs)
        if (p.eigenspace.dim() < p.algebraic_multiplicity) {
          r.detail += "; eigenvalue " + to_string(p.value) + " has algebraic multiplicity " +
                      std::to_string(p.algebraic_multiplicity) + " but eigenspace dimension " +
                      std::to_string(p.eigenspace.dim());
          r.witness.push_back(p.eigenspace.basis());
          break;
        }
      return r;
    }
  }

  // (ii)
  for (std::size_t k = 0; k < arity; ++k) {
    std::vector<ActorConstraint> actors;
    for (const auto& c : rules.containments[k]) actors.push_back({std::cref(mats[c.actor]), c.direction});
    try {
      cert.orderings[k] = find_standard_ordering(eig[k], actors);
    } catch (const NoStandardOrdering& e) {
      return Refutation{"(ii)", std::string("eigenspaces of ") + kNames[k] + ": " + e.what(), std::nullopt, {}};
    } catch (const AmbiguousOrdering& e) {
      return Refutation{"(ii)", std::string("eigenspaces of ") + kNames[k] + ": " + e.what(), std::nullopt, {}};
    }
  }

  // (iii)
  for (const auto& f : rules.families) {
    const StandardOrdering& o = cert.orderings[f.base];
    const Index d = o.diameter();
    const RMatrix bracket = commutator(mats[f.x], mats[f.y]);
    for (Index i = 0; 2 * i <= d; ++i) {
      const Subspace& low = o.eigenspaces[static_cast<std::size_t>(i)];
      const Subspace& high = o.eigenspaces[static_cast<std::size_t>(d - i)];
      const Subspace& src = f.from_low ? low : high;
      const Subspace& dst = f.from_low ? high : low;
      RestrictedMap map;
      try {
        map = restricted_power_bijective(bracket, d - 2 * i, src, dst);
      } catch (const ImageNotContained&) {
        return Refutation{"(iii)", family_name(f) + " does not map into the target eigenspace", i,
                          {src.basis(), dst.basis()}};
      }
      if (!map.bijective)
        return Refutation{"(iii)", family_name(f) + " is not a bijection", i, {src.basis(), dst.basis(), map.witness}};
      cert.bijections.push_back({family_name(f), i, std::move(map.witness)});
    }
  }

  cert.diameter = cert.orderings[0].diameter();
  for (std::size_t k = 1; k < arity; ++k)
    if (cert.orderings[k].diameter() != cert.diameter)
      return Refutation{"diameter",
                        std::string("diameters differ: ") + kNames[0] + " has " + std::to_string(cert.diameter) +
                            ", " + kNames[k] + " has " + std::to_string(cert.orderings[k].diameter()),
                        std::nullopt,
                        {}};

  const Index d = cert.diameter;
  for (Index i = 0; i <= d; ++i) {
    const Index rho = cert.orderings[0].eigenspaces[static_cast<std::size_t>(i)].dim();
    for (std::size_t k = 0; k < arity; ++k)
      for (Index j : {i, d - i})
        if (cert.orderings[k].eigenspaces[static_cast<std::size_t>(j)].dim() != rho)
          return Refutation{"shape",
                            std::string("eigenspace ") + std::to_string(j) + " of " + kNames[k] + " has dimension " +
                                std::to_string(cert.orderings[k].eigenspaces[static_cast<std::size_t>(j)].dim()) +
                                ", expected " + std::to_string(rho),
                            i,
                            {}};
    cert.shape.push_back(rho);
  }
  cert.thin = std::all_of(cert.shape.begin(), cert.shape.end(), [](Index r) { return r == 1; });
  return cert;
}

}  // namespace

Verdict<PairCertificate> verify_bd_pair(const RMatrix& a, const RMatrix& a_prime) {
  const std::array<RMatrix, 2> mats{a, a_prime};
  return verify_structure<Structure::pair>(mats);
}

Verdict<TripleCertificate> verify_bd_triple(const RMatrix& a, const RMatrix& a_prime, const RMatrix& a_dprime) {
  const std::array<RMatrix, 3> mats{a, a_prime, a_dprime};
  return verify_structure<Structure::triple>(mats);
}

Verdict<TriadCertificate> verify_bd_triad(const RMatrix& a, const RMatrix& a_prime, const RMatrix& a_dprime) {
  const std::array<RMatrix, 3> mats{a, a_prime, a_dprime};
  return verify_structure<Structure::triad>(mats);
}

Shape shape_of(const TriadCertificate& cert) {
  Shape out;
  const Index d = cert.diameter;
  for (Index i = 0; i <= d; ++i) {
    const Index rho = cert.orderings[0].eigenspaces[static_cast<std::size_t>(i)].dim();
    for (const auto& o : cert.orderings)
      for (Index j : {i, d - i})
        if (o.eigenspaces[static_cast<std::size_t>(j)].dim() != rho)
          throw DimensionError("shape_of: eigenspace dimensions disagree at index " + std::to_string(i));
    out.rho.push_back(rho);
  }
  out.thin = std::all_of(out.rho.begin(), out.rho.end(), [](Index r) { return r == 1; });
  return out;
}

RMatrix AffineMap::apply(const RMatrix& x) const {
  RMatrix out = scale * x;
  out.diagonal().array() += shift;
  return out;
}

std::optional<AffineMap> affine_relation(const RMatrix& x, const RMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols()) return std::nullopt;
  const Index n = x.rows();
  if (n == 0) return AffineMap{};
  // Strip the (0,0) entry times I; what remains must be proportional.
  RMatrix nx = x, ny = y;
  nx.diagonal().array() -= x(0, 0);
  ny.diagonal().array() -= y(0, 0);
  AffineMap map;
  Index k = 0;
  while (k < n * n && ny(k % n, k / n) == 0) ++k;
  if (k == n * n) {
    if (!is_zero(nx)) return std::nullopt;
    map.scale = 1;
  } else {
    map.scale = nx(k % n, k / n) / ny(k % n, k / n);
    if (map.scale == 0 || !same(nx, RMatrix(map.scale * ny))) return std::nullopt;
  }
  map.shift = x(0, 0) - map.scale * y(0, 0);
  return map;
}

AffineEquivalence affine_equivalent_triads(const Triad& t1, const Triad& t2) {
  if (t1.dim() != t2.dim()) throw DimensionError("affine_equivalent_triads: triads live on different spaces");
  AffineEquivalence out;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto rel = affine_relation(t1[k], t2[k]);
    if (!rel) {
      out.failed_component = k;
      return out;
    }
    out.witnesses[k] = *rel;
  }
  out.equivalent = true;
  return out;
}

Triad apply_affine(const Triad& t, const std::array<AffineMap, 3>& maps) {
  return {maps[0].apply(t.a), maps[1].apply(t.a_prime), maps[2].apply(t.a_dprime)};
}

}  // namespace bdtriad
