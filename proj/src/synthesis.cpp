#include "bdtriad/synthesis.hpp"

#include "bdtriad/eigen.hpp"
#include "bdtriad/linalg.hpp"

#include <algorithm>

namespace bdtriad {

namespace {

RMatrix identity(Index n) { return RMatrix::Identity(n, n); }

bool dolan_grady(const RMatrix& x, const RMatrix& y) {
  const RMatrix once = commutator(x, y);
  return same(commutator(x, commutator(x, once)), RMatrix(4 * once));
}

void require(std::vector<IdentityCheck>& log, const char* stage, std::string id, bool holds) {
  log.push_back({id, holds});
  if (!holds) throw SynthesisError(stage, "identity " + id + " does not hold");
}

}  // namespace

RaisingData raising_maps(const Triad& triad, const TriadCertificate& cert) {
  const char* stage = "raising_maps";
  if (!cert.thin) throw SynthesisError(stage, "the triad is not thin");
  if (!cert.reduced()) throw SynthesisError(stage, "the triad is not reduced");
  RaisingData rd{triad.a - triad.a_dprime, triad.a_prime - triad.a_dprime, std::nullopt, std::nullopt};
  const auto& vpp = cert.orderings[2].eigenspaces;
  const Index d = cert.diameter;
  const Index n = triad.dim();

  for (Index i = 0; i <= d; ++i) {
    const Subspace next = i < d ? vpp[static_cast<std::size_t>(i + 1)] : Subspace(n);
    const Subspace& here = vpp[static_cast<std::size_t>(i)];
    if (!next.contains(here.image_under(rd.big_r)))
      throw SynthesisError(stage, "R does not map V''_" + std::to_string(i) + " into V''_" + std::to_string(i + 1));
    if (!next.contains(here.image_under(rd.small_r)))
      throw SynthesisError(stage, "r does not map V''_" + std::to_string(i) + " into V''_" + std::to_string(i + 1));
    if (i < d) {
      if (!restricted_power_bijective(rd.big_r, 1, here, next).bijective)
        throw SynthesisError(stage, "R is not a bijection V''_" + std::to_string(i) + " -> V''_" + std::to_string(i + 1));
      if (!restricted_power_bijective(rd.small_r, 1, here, next).bijective)
        throw SynthesisError(stage, "r is not a bijection V''_" + std::to_string(i) + " -> V''_" + std::to_string(i + 1));
    }
  }
  if (!same(RMatrix(rd.big_r * rd.small_r), RMatrix(rd.small_r * rd.big_r)))
    throw SynthesisError(stage, "R and r do not commute");
  if (d == 0) return rd;

  // Probe c on V''_0, then check r = cR everywhere.
  const RVector v = vpp[0].basis().col(0);
  const RVector big = rd.big_r * v, small = rd.small_r * v;
  Index k = 0;
  while (k < n && big(k) == 0) ++k;
  if (k == n) throw SynthesisError(stage, "R vanishes on V''_0");
  const Rational c = small(k) / big(k);
  if (!same(rd.small_r, RMatrix(c * rd.big_r))) throw SynthesisError(stage, "r is not a scalar multiple of R");
  if (c == 0 || c == 1) throw SynthesisError(stage, "c = " + to_string(c) + " lies in {0, 1}");
  const Rational a = 1 - 1 / c;
  if (a == 0 || a == 1) throw SynthesisError(stage, "a = " + to_string(a) + " lies in {0, 1}");
  rd.c = c;
  rd.a = a;
  return rd;
}

BConstruction construct_B(const Triad& triad, const RaisingData&) {
  const char* stage = "construct_B";
  const Index n = triad.dim();
  // [A'', B] + 2B = 2A''  and  -[A', B] - 2B = 2A'.
  auto first = bracket_with_unknown<Rational>(triad.a_dprime);
  for (auto& t : scaled_unknown<Rational>(n, Rational(2))) first.push_back(t);
  auto second = bracket_with_unknown<Rational>(triad.a_prime, Rational(-1));
  for (auto& t : scaled_unknown<Rational>(n, Rational(-2))) second.push_back(t);
  const std::vector<MatrixConstraint<Rational>> constraints = {{first, RMatrix(2 * triad.a_dprime)},
                                                               {second, RMatrix(2 * triad.a_prime)}};
  MatrixSystemSolution<Rational> sol;
  try {
    sol = solve_linear_matrix_system<Rational>(n, constraints);
  } catch (const InconsistentSystem&) {
    throw SynthesisError(stage, "no B satisfies [A'',B] = 2A'' - 2B and [B,A'] = 2B + 2A'");
  }

  BConstruction out;
  out.b = sol.particular;
  out.solution_space_dim = static_cast<Index>(sol.homogeneous.size());
  if (!sol.homogeneous.empty()) {
    // Eigenvalues 2i - d with a palindromic shape sum to zero.
    out.trace_filtered = true;
    std::vector<Rational> traces;
    for (const auto& h : sol.homogeneous) traces.push_back(h.trace());
    const auto nonzero = std::count_if(traces.begin(), traces.end(), [](const Rational& t) { return t != 0; });
    if (nonzero == 0 && out.b.trace() != 0)
      throw SynthesisError(stage, "no trace-zero B satisfies the bracket identities");
    if (sol.homogeneous.size() > 1 || nonzero == 0)
      throw SynthesisError(stage, "B is not unique: " + std::to_string(sol.homogeneous.size()) +
                                      "-dimensional solution space remains ambiguous after the trace filter");
    out.b -= (out.b.trace() / traces[0]) * sol.homogeneous[0];
  }

  const auto verdict = verify_bd_triple(triad.a_prime, RMatrix(-triad.a_dprime), out.b);
  if (!verdict)
    throw SynthesisError(stage, "(A', -A'', B) is not a BD triple: clause " + verdict.refutation().clause + ": " +
                                    verdict.refutation().detail);
  if (!verdict.value().reduced()) throw SynthesisError(stage, "(A', -A'', B) is not reduced");
  return out;
}

BPrimes construct_B_prime_dprime(const Triad& triad, const RaisingData& rd, const RMatrix& b) {
  const char* stage = "construct_B_prime_dprime";
  const Index n = triad.dim();
  const RMatrix &A = triad.a, &Ap = triad.a_prime, &App = triad.a_dprime;
  BPrimes out{RMatrix::Zero(n, n), RMatrix::Zero(n, n), {}};
  auto& log = out.identities;

  if (rd.a) {
    const Rational a = *rd.a;
    const Rational inv = 1 / a;
    out.b_prime = (1 / (inv - 1)) * App + (1 / (a - 1)) * b;
    out.b_dprime = (1 - inv) * Ap - inv * b;
    const RMatrix &Bp = out.b_prime, &Bpp = out.b_dprime;
    require(log, stage, "A = (1-a)A' + aA''", same(A, RMatrix((1 - a) * Ap + a * App)));
    require(log, stage, "A' = (1-1/a)^-1 A'' + (1-a)^-1 A",
            same(Ap, RMatrix((1 / (1 - inv)) * App + (1 / (1 - a)) * A)));
    require(log, stage, "A'' = (1/a)A + (1-1/a)A'", same(App, RMatrix(inv * A + (1 - inv) * Ap)));
    require(log, stage, "B = (a-1)B' + aA''", same(b, RMatrix((a - 1) * Bp + a * App)));
    require(log, stage, "A'' = (1/a)B + (1/a-1)B'", same(App, RMatrix(inv * b + (inv - 1) * Bp)));
    require(log, stage, "B = -aB'' + (a-1)A'", same(b, RMatrix(-a * Bpp + (a - 1) * Ap)));
    require(log, stage, "A' = (a-1)^-1 B + (1-1/a)^-1 B''",
            same(Ap, RMatrix((1 / (a - 1)) * b + (1 / (1 - inv)) * Bpp)));
    require(log, stage, "A = (1-a)B' - aB''", same(A, RMatrix((1 - a) * Bp - a * Bpp)));
    require(log, stage, "B' = (1/a-1)^-1 B'' + (1-a)^-1 A",
            same(Bp, RMatrix((1 / (inv - 1)) * Bpp + (1 / (1 - a)) * A)));
    require(log, stage, "B'' = -(1/a)A + (1/a-1)B'", same(Bpp, RMatrix(-inv * A + (inv - 1) * Bp)));
  }

  const RMatrix &Bp = out.b_prime, &Bpp = out.b_dprime;
  auto bracket = [&](const char* id, const RMatrix& x, const RMatrix& y, const RMatrix& rhs) {
    require(log, stage, id, same(commutator(x, y), rhs));
  };
  bracket("[A,A'] = -2A + 2A'", A, Ap, -2 * A + 2 * Ap);
  bracket("[A',A''] = -2A' + 2A''", Ap, App, -2 * Ap + 2 * App);
  bracket("[A'',A] = -2A'' + 2A", App, A, -2 * App + 2 * A);
  bracket("[A'',B] = 2A'' - 2B", App, b, 2 * App - 2 * b);
  bracket("[B,A'] = 2B + 2A'", b, Ap, 2 * b + 2 * Ap);
  bracket("[B',A''] = 2B' + 2A''", Bp, App, 2 * Bp + 2 * App);
  bracket("[B',B] = 2B' + 2B", Bp, b, 2 * Bp + 2 * b);
  bracket("[B,B''] = 2B + 2B''", b, Bpp, 2 * b + 2 * Bpp);
  bracket("[A',B''] = 2A' - 2B''", Ap, Bpp, 2 * Ap - 2 * Bpp);
  bracket("[B'',B'] = 2B'' + 2B'", Bpp, Bp, 2 * Bpp + 2 * Bp);
  bracket("[B'',A] = 2B'' + 2A", Bpp, A, 2 * Bpp + 2 * A);
  bracket("[A,B'] = 2A - 2B'", A, Bp, 2 * A - 2 * Bp);
  require(log, stage, "[A,[A,[A,B]]] = 4[A,B]", dolan_grady(A, b));
  require(log, stage, "[B,[B,[B,A]]] = 4[B,A]", dolan_grady(b, A));
  require(log, stage, "[A',[A',[A',B']]] = 4[A',B']", dolan_grady(Ap, Bp));
  require(log, stage, "[B',[B',[B',A']]] = 4[B',A']", dolan_grady(Bp, Ap));
  require(log, stage, "[A'',[A'',[A'',B'']]] = 4[A'',B'']", dolan_grady(App, Bpp));
  require(log, stage, "[B'',[B'',[B'',A'']]] = 4[B'',A'']", dolan_grady(Bpp, App));
  return out;
}

CornerAssignment parse_corner(const std::string& text) {
  CornerAssignment out{};
  if (text.size() != 4) throw ParseError("corner must be a permutation of 0123, got '" + text + "'");
  for (std::size_t k = 0; k < 4; ++k) {
    if (text[k] < '0' || text[k] > '3') throw ParseError("corner must be a permutation of 0123, got '" + text + "'");
    out[k] = text[k] - '0';
  }
  CornerAssignment sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != kDefaultCorner) throw ParseError("corner must be a permutation of 0123, got '" + text + "'");
  return out;
}

SynthesisResult synthesize_tet(const Triad& triad, CornerAssignment corner, SynthesisOptions options) {
  CornerAssignment sorted = corner;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != kDefaultCorner) throw SynthesisError("input", "corner assignment is not a permutation of 0..3");

  SynthesisResult out;
  out.corner = corner;
  {
    auto verdict = verify_bd_triad(triad);
    if (!verdict)
      throw SynthesisError("input", "not a BD triad: clause " + verdict.refutation().clause + ": " +
                                        verdict.refutation().detail);
    out.triad_certificate = std::move(verdict.value());
  }
  const TriadCertificate& cert = out.triad_certificate;
  if (!cert.reduced()) throw SynthesisError("input", "the triad is not reduced; reduce it first");
  if (options.require_thin && !cert.thin) throw SynthesisError("input", "the triad is not thin");

  out.raising = raising_maps(triad, cert);
  out.b = construct_B(triad, out.raising);
  BPrimes primes = construct_B_prime_dprime(triad, out.raising, out.b.b);
  out.b_prime = std::move(primes.b_prime);
  out.b_dprime = std::move(primes.b_dprime);
  out.identities = std::move(primes.identities);

  const auto [r, s, t, u] = corner;
  out.module = TetModule::zero(triad.dim());
  out.module.set(r, u, triad.a);
  out.module.set(s, u, triad.a_prime);
  out.module.set(t, u, triad.a_dprime);
  out.module.set(t, s, out.b.b);
  out.module.set(r, t, out.b_prime);
  out.module.set(s, r, out.b_dprime);

  out.relations = verify_tet_relations(out.module);
  if (!out.relations.ok())
    throw SynthesisError("relations", std::to_string(out.relations.violations.size()) + " relation(s) fail, first " +
                                          out.relations.violations.front().id);

  const auto diameter = spectrum_diameter(out.module);
  if (!diameter) throw SynthesisError("spectrum", diameter.refutation().detail);
  if (diameter.value() != cert.diameter)
    throw SynthesisError("spectrum", "module diameter " + std::to_string(diameter.value()) +
                                         " differs from the triad's " + std::to_string(cert.diameter));
  out.diameter = diameter.value();

  out.irreducibility = irreducible_sufficient(out.module);
  if (!out.irreducibility.certified)
    throw SynthesisError("irreducibility", "generated algebra has dimension " +
                                               std::to_string(out.irreducibility.algebra_dimension));

  try {
    out.corner_certificates = corner_triads_are_bd_triads(out.module);
  } catch (const RelationViolation& e) {
    throw SynthesisError("corners", e.what());
  }
  const Triad at_u{out.module.generator(r, u), out.module.generator(s, u), out.module.generator(t, u)};
  if (!(at_u == triad))
    throw SynthesisError("corners", "corner triad at u does not reproduce the input");
  return out;
}

}  // namespace bdtriad
