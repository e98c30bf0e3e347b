#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bdtriad/eigen.hpp"
#include "bdtriad/errors.hpp"
#include "bdtriad/linalg.hpp"
#include "bdtriad/subspace.hpp"
#include "test_support.hpp"

using namespace bdtriad;
using bdtriad::testing::counterexample_a;
using bdtriad::testing::faddeev_leverrier;
using bdtriad::testing::random_invertible;
using bdtriad::testing::random_matrix;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RVector vec(std::initializer_list<long> xs) {
  RVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("parse canonicalizes and rejects decimals") {
    CHECK(parse_rational("3/6") == Rational(Integer(1), Integer(2)));
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-8/4")) == "-2");
    CHECK(to_string(parse_rational("007")) == "7");
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
  }
}

TEST_SUITE("rref") {
  TEST_CASE("identity is its own reduced form") {
    const auto e = rref(RMatrix(RMatrix::Identity(3, 3)));
    CHECK(e.rank == 3);
    CHECK(e.reduced == RMatrix::Identity(3, 3));
  }
  TEST_CASE("zero matrix") {
    const auto e = rref(RMatrix(RMatrix::Zero(2, 3)));
    CHECK(e.rank == 0);
    CHECK(is_zero(e.reduced));
  }
  TEST_CASE("rank one 2x2") {
    const auto e = rref(from_rows({{1, 2}, {2, 4}}));
    CHECK(e.rank == 1);
    CHECK(e.reduced == from_rows({{1, 2}, {0, 0}}));
  }
}

TEST_SUITE("kernel") {
  TEST_CASE("identity has trivial kernel") { CHECK(kernel_basis(RMatrix(RMatrix::Identity(4, 4))).dim() == 0); }
  TEST_CASE("rank one 2x2") {
    const Subspace k = kernel_basis(from_rows({{1, 2}, {2, 4}}));
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span(RMatrix(vec({-2, 1}))));
    CHECK(k.basis().col(0) == vec({2, -1}));
  }
  TEST_CASE("zero 2x2 is everything") { CHECK(kernel_basis(RMatrix(RMatrix::Zero(2, 2))) == Subspace::full(2)); }

  TEST_CASE("property: kernel vectors are annihilated and dim = cols - rank") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const Index rows = 1 + trial % 4;
      const Index cols = 1 + (trial / 4) % 5;
      RMatrix m = random_matrix(rng, rows, cols);
      if (trial % 3 == 0 && rows > 1) m.row(rows - 1) = m.row(0) * Rational(2);
      const Subspace k = kernel_basis(m);
      CHECK(k.dim() == cols - rank(m));
      CHECK(is_zero(RMatrix(m * k.basis())));
    }
  }
}

TEST_SUITE("subspace") {
  TEST_CASE("canonical form makes equal subspaces equal") {
    const Subspace a = Subspace::span(from_rows({{1, 0}, {1, 1}, {0, 3}}));
    const Subspace b = Subspace::span(from_rows({{2, 1}, {3, 2}, {3, 3}}));
    CHECK(a == b);
    CHECK(a.dim() == 2);
  }
  TEST_CASE("coordinates and sums") {
    const Subspace line = Subspace::span(RMatrix(vec({2, -1})));
    const auto c = line.coordinates(vec({-4, 2}));
    REQUIRE(c.has_value());
    CHECK((*c)(0) == -2);
    CHECK_FALSE(line.contains(vec({1, 1})));
    CHECK(line + Subspace::span(RMatrix(vec({0, 1}))) == Subspace::full(2));
  }
}

TEST_SUITE("char_poly") {
  TEST_CASE("diagonal") { CHECK(char_poly(RMatrix(from_rows({{1, 0}, {0, 2}}))) == ints({2, -3, 1})); }
  TEST_CASE("nilpotent") { CHECK(char_poly(from_rows({{0, 1}, {0, 0}})) == ints({0, 0, 1})); }
  TEST_CASE("counterexample third matrix") {
    // (t+3)(t+1)^2(t-1)^2(t-3) = t^6 - 11 t^4 + 19 t^2 - 9
    const RMatrix app = from_rows({{-3, 0, 0, 0, 0, 0},
                                   {0, -1, 0, 0, 0, 0},
                                   {0, 0, -1, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0},
                                   {0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 3}});
    CHECK(char_poly(app) == ints({-9, 0, 19, 0, -11, 0, 1}));
    CHECK(char_poly(counterexample_a()) == ints({-9, 0, 19, 0, -11, 0, 1}));
  }
  TEST_CASE("non-square rejected") { CHECK_THROWS_AS(char_poly(RMatrix(RMatrix::Zero(2, 3))), DimensionError); }

  TEST_CASE("property: agrees with Faddeev-LeVerrier and satisfies Cayley-Hamilton") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      const Index n = 1 + trial % 7;
      RMatrix m = random_matrix(rng, n, n);
      if (trial % 4 == 0) m.col(0).setZero();  // forces Hessenberg pivot searches
      const auto p = char_poly(m);
      CHECK(p == faddeev_leverrier(m));
      CHECK(is_zero(polynomial_at(std::span<const Rational>(p), m)));
    }
  }
}

TEST_SUITE("eigen_decompose") {
  TEST_CASE("diagonal") {
    const auto e = eigen_decompose(from_rows({{-1, 0}, {0, 1}}));
    REQUIRE(e.pairs.size() == 2);
    CHECK(e.pairs[0].value == -1);
    CHECK(e.pairs[1].value == 1);
    CHECK(e.pairs[0].algebraic_multiplicity == 1);
    CHECK(e.diagonalizable);
  }
  TEST_CASE("Jordan block") {
    const auto e = eigen_decompose(from_rows({{0, 1}, {0, 0}}));
    REQUIRE(e.pairs.size() == 1);
    CHECK(e.pairs[0].value == 0);
    CHECK(e.pairs[0].algebraic_multiplicity == 2);
    CHECK(e.pairs[0].eigenspace.dim() == 1);
    CHECK_FALSE(e.diagonalizable);
  }
  TEST_CASE("counterexample first matrix has shape (1,2,2,1)") {
    const auto e = eigen_decompose(counterexample_a());
    REQUIRE(e.pairs.size() == 4);
    CHECK(e.eigenvalues() == ints({-3, -1, 1, 3}));
    const Index mult[] = {1, 2, 2, 1};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(e.pairs[i].algebraic_multiplicity == mult[i]);
      CHECK(e.pairs[i].eigenspace.dim() == mult[i]);
    }
    CHECK(e.diagonalizable);
  }
  TEST_CASE("irrational spectrum is rejected") {
    CHECK_THROWS_AS(eigen_decompose(from_rows({{0, 2}, {1, 0}})), IrrationalSpectrum);
    CHECK_THROWS_AS(eigen_decompose(from_rows({{0, -1}, {1, 0}})), IrrationalSpectrum);
  }
  TEST_CASE("rational eigenvalues with denominators") {
    RMatrix m(2, 2);
    m << Rational(Integer(1), Integer(2)), Rational(1), Rational(0), Rational(Integer(-2), Integer(3));
    const auto e = eigen_decompose(m);
    CHECK(e.eigenvalues() == std::vector<Rational>{Rational(Integer(-2), Integer(3)), Rational(Integer(1), Integer(2))});
  }
  TEST_CASE("integer roots with a large constant term use the factorization route") {
    // (t - 1000003)(t + 999983)(t - 7)
    const Integer a(1000003), b(-999983), c(7);
    std::vector<Integer> coeffs = {-(a * b * c), a * b + a * c + b * c, -(a + b + c), Integer(1)};
    const auto roots = integer_roots(coeffs);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].first == b);
    CHECK(roots[1].first == c);
    CHECK(roots[2].first == a);
  }

  TEST_CASE("property: multiplicities sum to n and diagonalizable iff eigenspaces fill the space") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ev(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
      const Index n = 1 + trial % 6;
      RMatrix core = RMatrix::Zero(n, n);
      for (Index i = 0; i < n; ++i) core(i, i) = ev(rng);
      const bool jordan = trial % 3 == 0 && n > 1;
      if (jordan) {
        core(1, 1) = core(0, 0);
        core(0, 1) = 1;
      }
      const RMatrix p = random_invertible(rng, n);
      const RMatrix m = p * core * inverse(p);
      const auto e = eigen_decompose(m);
      Index alg = 0, geo = 0;
      for (const auto& pair : e.pairs) {
        alg += pair.algebraic_multiplicity;
        geo += pair.eigenspace.dim();
        CHECK(pair.eigenspace.dim() <= pair.algebraic_multiplicity);
        CHECK(is_zero(RMatrix((m - pair.value * RMatrix::Identity(n, n)) * pair.eigenspace.basis())));
      }
      CHECK(alg == n);
      CHECK(e.diagonalizable == (geo == n));
      CHECK(e.diagonalizable == !jordan);
    }
  }
}

TEST_SUITE("commutator") {
  TEST_CASE("self commutator vanishes") {
    const RMatrix x = from_rows({{1, 2}, {3, 4}});
    CHECK(is_zero(commutator(x, x)));
  }
  TEST_CASE("sl2 weight relation on V(1)") {
    const RMatrix h = from_rows({{1, 0}, {0, -1}});
    const RMatrix f = from_rows({{0, 0}, {1, 0}});
    CHECK(commutator(h, f) == RMatrix(-2 * f));
  }
  TEST_CASE("antisymmetry and bilinearity on sampled matrices") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      const RMatrix x = random_matrix(rng, 3, 3), y = random_matrix(rng, 3, 3), z = random_matrix(rng, 3, 3);
      const Rational c1 = bdtriad::testing::small_rational(rng), c2 = bdtriad::testing::small_rational(rng);
      CHECK(commutator(x, y) == RMatrix(-commutator(y, x)));
      CHECK(commutator(x, RMatrix(c1 * y + c2 * z)) == RMatrix(c1 * commutator(x, y) + c2 * commutator(x, z)));
    }
  }
  TEST_CASE("size mismatch rejected") {
    CHECK_THROWS_AS(commutator(RMatrix(RMatrix::Zero(2, 2)), RMatrix(RMatrix::Zero(3, 3))), DimensionError);
  }
}

TEST_SUITE("restricted_power_bijective") {
  TEST_CASE("empty power is the identity") {
    const Subspace plane = Subspace::full(2);
    const auto r = restricted_power_bijective(from_rows({{5, 1}, {2, 7}}), 0, plane, plane);
    CHECK(r.bijective);
    CHECK(r.witness == RMatrix::Identity(2, 2));
  }
  TEST_CASE("d=1 lowering map") {
    const RMatrix x = from_rows({{0, 0}, {-2, 0}});
    const auto r = restricted_power_bijective(x, 1, Subspace::span(RMatrix(vec({2, -1}))),
                                              Subspace::span(RMatrix(vec({0, 1}))));
    CHECK(r.bijective);
    CHECK(r.witness == from_rows({{-4}}));
  }
  TEST_CASE("nilpotent square is contained but not bijective") {
    const auto r = restricted_power_bijective(from_rows({{0, 1}, {0, 0}}), 2, Subspace::full(2), Subspace::full(2));
    CHECK_FALSE(r.bijective);
  }
  TEST_CASE("image outside the codomain is a distinct error") {
    CHECK_THROWS_AS(restricted_power_bijective(from_rows({{0, 1}, {1, 0}}), 1, Subspace::span(RMatrix(vec({1, 0}))),
                                               Subspace::span(RMatrix(vec({1, 0})))),
                    ImageNotContained);
  }
}

TEST_SUITE("solve_linear_matrix_system") {
  TEST_CASE("identity constraint has the unique solution C") {
    const RMatrix c = from_rows({{1, 2}, {3, 4}});
    const std::vector<MatrixConstraint<Rational>> cs = {{scaled_unknown<Rational>(2, 1), c}};
    const auto sol = solve_linear_matrix_system<Rational>(2, cs);
    CHECK(sol.particular == c);
    CHECK(sol.homogeneous.empty());
  }
  TEST_CASE("[D, B] = 2D - 2B has a one-parameter family") {
    const RMatrix d = from_rows({{-1, 0}, {0, 1}});
    auto terms = bracket_with_unknown<Rational>(d);
    for (auto& t : scaled_unknown<Rational>(2, 2)) terms.push_back(t);
    const std::vector<MatrixConstraint<Rational>> cs = {{terms, RMatrix(2 * d)}};
    const auto sol = solve_linear_matrix_system<Rational>(2, cs);
    CHECK(sol.particular == from_rows({{-1, 0}, {0, 1}}));
    REQUIRE(sol.homogeneous.size() == 1);
    CHECK(sol.homogeneous[0] == from_rows({{0, 1}, {0, 0}}));
  }
  TEST_CASE("contradictory constraints") {
    const std::vector<MatrixConstraint<Rational>> cs = {{scaled_unknown<Rational>(2, 1), RMatrix::Zero(2, 2)},
                                                        {scaled_unknown<Rational>(2, 1), RMatrix::Identity(2, 2)}};
    CHECK_THROWS_AS(solve_linear_matrix_system<Rational>(2, cs), InconsistentSystem);
  }
  TEST_CASE("property: particular plus homogeneous combinations satisfy every constraint") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 15; ++trial) {
      const Index n = 1 + trial % 3;
      const RMatrix k = random_matrix(rng, n, n), target = random_matrix(rng, n, n);
      // Built from a known solution so the system is consistent.
      auto terms = bracket_with_unknown<Rational>(k);
      const std::vector<MatrixConstraint<Rational>> probe = {{terms, RMatrix::Zero(n, n)}};
      const RMatrix rhs = apply_constraint(probe[0], target);
      const std::vector<MatrixConstraint<Rational>> cs = {{terms, rhs}};
      const auto sol = solve_linear_matrix_system<Rational>(n, cs);
      CHECK(apply_constraint(cs[0], sol.particular) == rhs);
      RMatrix combo = sol.particular;
      for (const auto& h : sol.homogeneous) combo += bdtriad::testing::small_rational(rng) * h;
      CHECK(apply_constraint(cs[0], combo) == rhs);
      CHECK(sol.homogeneous.size() >= static_cast<std::size_t>(n));  // centralizer contains span{k^i}
    }
  }
}

TEST_SUITE("algebra dimension") {
  TEST_CASE("scalar action generates only the identity") {
    const std::vector<RMatrix> gens = {RMatrix::Zero(2, 2), RMatrix(3 * RMatrix::Identity(2, 2))};
    CHECK(generated_algebra_dimension<Rational>(gens, 2) == 1);
  }
  TEST_CASE("upper triangular pair generates the Borel algebra") {
    const std::vector<RMatrix> gens = {from_rows({{1, 0}, {0, 0}}), from_rows({{0, 1}, {0, 0}})};
    CHECK(generated_algebra_dimension<Rational>(gens, 2) == 3);
  }
}
