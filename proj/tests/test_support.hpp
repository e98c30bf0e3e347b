#pragma once

// Shared generators and oracles for the unit tests. Oracles here must stay
// independent of the library code paths they are used to check.

#include "bdtriad/linalg.hpp"
#include "bdtriad/rational.hpp"

#include <random>
#include <vector>

namespace bdtriad::testing {

inline Rational small_rational(std::mt19937& rng, int max_num = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Rational nonzero_rational(std::mt19937& rng, int max_num = 5, int max_den = 3) {
  Rational r;
  do r = small_rational(rng, max_num, max_den);
  while (r == 0);
  return r;
}

inline RMatrix random_matrix(std::mt19937& rng, Index rows, Index cols, int max_num = 5, int max_den = 3) {
  RMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = small_rational(rng, max_num, max_den);
  return m;
}

/// Unimodular-ish change of basis: a product of a random unit lower and unit
/// upper triangular integer matrix, so it is always invertible.
inline RMatrix random_invertible(std::mt19937& rng, Index n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  RMatrix lower = RMatrix::Identity(n, n);
  RMatrix upper = RMatrix::Identity(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j) {
      lower(i, j) = entry(rng);
      upper(j, i) = entry(rng);
    }
  return lower * upper;
}

/// Faddeev-LeVerrier: an independent route to det(tI - m), lowest degree first.
inline std::vector<Rational> faddeev_leverrier(const RMatrix& m) {
  const Index n = m.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  RMatrix mk = RMatrix::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    mk = (m * mk).eval();
    mk.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    const RMatrix amk = m * mk;
    c[static_cast<std::size_t>(n - k)] = -amk.trace() / Rational(k);
  }
  return c;
}

/// V(d) built directly from its defining matrix entries: A'' = -h,
/// A = -h + beta f, A' = -h + gamma f. Lower triangular, so the eigenspace
/// of 2i - d is one-dimensional for every i.
struct VdTriad {
  RMatrix a, a_prime, a_dprime;
};

inline VdTriad vd_triad(Index d, const Rational& beta, const Rational& gamma) {
  const Index n = d + 1;
  RMatrix h = RMatrix::Zero(n, n), f = RMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) h(i, i) = d - 2 * i;
  for (Index i = 0; i < d; ++i) f(i + 1, i) = i + 1;
  return {RMatrix(-h + beta * f), RMatrix(-h + gamma * f), RMatrix(-h)};
}

inline RMatrix counterexample_a() {
  return from_rows({{-3, 0, 0, 0, 0, 0},
                    {1, -1, 0, 0, 0, 0},
                    {1, 0, -1, 0, 0, 0},
                    {0, 2, 0, 1, 0, 0},
                    {0, 1, 2, 0, 1, 0},
                    {0, 0, 0, 3, 0, 3}});
}

inline RMatrix counterexample_a_prime() {
  return from_rows({{-3, 0, 0, 0, 0, 0},
                    {-2, -1, 0, 0, 0, 0},
                    {0, 0, -1, 0, 0, 0},
                    {0, -4, 0, 1, 0, 0},
                    {0, 0, -2, 0, 1, 0},
                    {0, 0, 0, -6, 0, 3}});
}

inline RMatrix counterexample_a_dprime() {
  RMatrix m = RMatrix::Zero(6, 6);
  const long diag[] = {-3, -1, -1, 1, 1, 3};
  for (Index i = 0; i < 6; ++i) m(i, i) = diag[i];
  return m;
}

inline RMatrix counterexample_x02() {
  return from_rows({{3, 12, 0, 0, 0, 0},
                    {0, 1, 0, 8, 0, 0},
                    {0, 0, 1, 5, 2, 0},
                    {0, 0, 0, -1, 0, 4},
                    {0, 0, 0, 0, -1, 6},
                    {0, 0, 0, 0, 0, -3}});
}

}  // namespace bdtriad::testing
