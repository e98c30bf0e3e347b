#include "bdtriad/fixtures.hpp"

#include "bdtriad/errors.hpp"
#include "bdtriad/sl2.hpp"

namespace bdtriad {

TriadDocument fixture_vd_triad(Index d, const Rational& beta, const Rational& gamma) {
  if (d < 0) throw DimensionError("fixture_vd_triad: d must be nonnegative");
  if (beta == 0 || gamma == 0 || beta == gamma)
    throw DimensionError("fixture_vd_triad: beta and gamma must be nonzero and distinct");
  const Sl2Action s = make_vd(d);
  Triad t{RMatrix(-s.h + beta * s.f), RMatrix(-s.h + gamma * s.f), RMatrix(-s.h)};
  const auto v = verify_bd_triad(t);
  if (!v || !v.value().reduced() || !v.value().thin || v.value().diameter != d)
    throw Error("fixture_vd_triad: output failed verification");
  nlohmann::json params = {{"d", d}, {"beta", to_string(beta)}, {"gamma", to_string(gamma)}};
  return {std::move(t), {{"source", "vd-triad"}, {"parameters", std::move(params)}}};
}

Counterexample fixture_counterexample() {
  Triad t{from_rows({{-3, 0, 0, 0, 0, 0},
                     {1, -1, 0, 0, 0, 0},
                     {1, 0, -1, 0, 0, 0},
                     {0, 2, 0, 1, 0, 0},
                     {0, 1, 2, 0, 1, 0},
                     {0, 0, 0, 3, 0, 3}}),
          from_rows({{-3, 0, 0, 0, 0, 0},
                     {-2, -1, 0, 0, 0, 0},
                     {0, 0, -1, 0, 0, 0},
                     {0, -4, 0, 1, 0, 0},
                     {0, 0, -2, 0, 1, 0},
                     {0, 0, 0, -6, 0, 3}}),
          from_rows({{-3, 0, 0, 0, 0, 0},
                     {0, -1, 0, 0, 0, 0},
                     {0, 0, -1, 0, 0, 0},
                     {0, 0, 0, 1, 0, 0},
                     {0, 0, 0, 0, 1, 0},
                     {0, 0, 0, 0, 0, 3}})};
  return {{std::move(t), {{"source", "counterexample"}}},
          from_rows({{3, 12, 0, 0, 0, 0},
                     {0, 1, 0, 8, 0, 0},
                     {0, 0, 1, 5, 2, 0},
                     {0, 0, 0, -1, 0, 4},
                     {0, 0, 0, 0, -1, 6},
                     {0, 0, 0, 0, 0, -3}})};
}

TetModule counterexample_candidate(const Counterexample& c) {
  TetModule m = TetModule::zero(c.document.triad.dim());
  m.set(0, 3, c.document.triad.a);
  m.set(1, 3, c.document.triad.a_prime);
  m.set(2, 3, c.document.triad.a_dprime);
  m.set(0, 2, c.x02);
  return m;
}

}  // namespace bdtriad
