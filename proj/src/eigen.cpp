#include "bdtriad/eigen.hpp"

#include "bdtriad/errors.hpp"
#include "bdtriad/linalg.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace bdtriad {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Above this many trial divisions the divisor set comes from a factorization.
constexpr unsigned long kScanLimit = 4'000'000;

Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
  if (n % 2 == 0) return Integer(2);
  std::uniform_int_distribution<unsigned long> pick(1, 1'000'000);
  while (true) {
    Integer y(pick(rng)), c(pick(rng)), g(1), r(1), q(1), x, ys;
    const unsigned long m = 64;
    auto step = [&](const Integer& v) { return (v * v + c) % n; };
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = step(y);
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < m && Integer(i) < r - k; ++i) {
          y = step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 30)) {
    ++out[n];
    return;
  }
  const Integer d = pollard_brent(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

std::vector<Integer> divisors_up_to(const Integer& n, const Integer& bound) {
  std::vector<Integer> out;
  const Integer root = isqrt(n);
  const Integer limit = std::min(root, bound);
  if (limit <= Integer(kScanLimit)) {
    for (unsigned long m = 1; Integer(m) <= limit; ++m) {
      if (n % m != 0) continue;
      out.emplace_back(m);
      const Integer co = n / m;
      if (co != Integer(m) && co <= bound) out.push_back(co);
    }
    return out;
  }
  // Large constant term and large bound: enumerate divisors from the factorization.
  std::map<Integer, int> primes;
  Integer rest = n;
  for (unsigned long p = 2; p < 10'000 && Integer(p) * p <= rest; ++p)
    while (rest % p == 0) {
      ++primes[Integer(p)];
      rest /= p;
    }
  std::mt19937_64 rng(0x5eed);
  factor_into(rest, primes, rng);
  out.emplace_back(1);
  for (const auto& [p, e] : primes) {
    const std::size_t existing = out.size();
    Integer power(1);
    for (int k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::erase_if(out, [&](const Integer& d) { return d > bound; });
  return out;
}

// Divides coeffs by (t - root) in place when root is a root; returns whether it was.
bool deflate(std::vector<Integer>& coeffs, const Integer& root) {
  const std::size_t n = coeffs.size() - 1;
  std::vector<Integer> quotient(n);
  Integer carry = coeffs[n];
  for (std::size_t k = n; k-- > 0;) {
    quotient[k] = carry;
    carry = coeffs[k] + root * carry;
  }
  if (carry != 0) return false;
  coeffs = std::move(quotient);
  return true;
}

}  // namespace

std::vector<std::pair<Integer, Index>> integer_roots(std::vector<Integer> coeffs, Integer bound) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::vector<std::pair<Integer, Index>> roots;
  if (coeffs.size() <= 1) return roots;
  Index zero_mult = 0;
  while (coeffs[static_cast<std::size_t>(zero_mult)] == 0) ++zero_mult;
  coeffs.erase(coeffs.begin(), coeffs.begin() + zero_mult);
  if (zero_mult > 0) roots.emplace_back(Integer(0), zero_mult);
  if (coeffs.size() <= 1) return roots;

  const Integer lead = abs(coeffs.back());
  Integer cauchy(0);
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) cauchy = std::max(cauchy, abs(coeffs[i]));
  cauchy = 1 + (cauchy + lead - 1) / lead;
  if (bound < 0 || bound > cauchy) bound = cauchy;

  for (const Integer& d : divisors_up_to(abs(coeffs.front()), bound)) {
    for (const Integer& candidate : {-d, d}) {
      Index mult = 0;
      while (coeffs.size() > 1 && deflate(coeffs, candidate)) ++mult;
      if (mult > 0) roots.emplace_back(candidate, mult);
    }
    if (coeffs.size() <= 1) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Index EigenDecomposition::ambient_dim() const {
  return pairs.empty() ? 0 : pairs.front().eigenspace.ambient_dim();
}

std::vector<Rational> EigenDecomposition::eigenvalues() const {
  std::vector<Rational> out;
  for (const auto& p : pairs) out.push_back(p.value);
  return out;
}

Index EigenDecomposition::find(const Rational& value) const {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].value == value) return static_cast<Index>(i);
  return -1;
}

EigenDecomposition eigen_decompose(const RMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("eigen_decompose: matrix is not square");
  const Index n = m.rows();
  if (n == 0) throw DimensionError("eigen_decompose: empty matrix");

  Integer scale(1);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) scale = boost::multiprecision::lcm(scale, denominator_of(m(i, j)));
  const RMatrix scaled = m * Rational(scale);

  std::vector<Integer> coeffs;
  for (const Rational& c : char_poly(scaled)) coeffs.push_back(numerator_of(c));

  Integer gershgorin(0);
  for (Index i = 0; i < n; ++i) {
    Integer row(0);
    for (Index j = 0; j < n; ++j) row += abs(numerator_of(scaled(i, j)));
    gershgorin = std::max(gershgorin, row);
  }

  EigenDecomposition out;
  Index found = 0;
  Index geometric = 0;
  for (const auto& [root, mult] : integer_roots(coeffs, gershgorin)) {
    EigenPair pair;
    pair.value = Rational(root, scale);
    pair.algebraic_multiplicity = mult;
    pair.eigenspace = kernel_basis(RMatrix(m - pair.value * RMatrix::Identity(n, n)));
    found += mult;
    geometric += pair.eigenspace.dim();
    out.pairs.push_back(std::move(pair));
  }
  if (found != n)
    throw IrrationalSpectrum("eigen_decompose: only " + std::to_string(found) + " of " + std::to_string(n) +
                             " eigenvalues (with multiplicity) are rational");
  out.diagonalizable = geometric == n;
  return out;
}

RestrictedMap restricted_power_bijective(const RMatrix& x, Index k, const Subspace& dom, const Subspace& cod) {
  if (x.rows() != x.cols()) throw DimensionError("restricted_power_bijective: matrix is not square");
  if (dom.ambient_dim() != x.rows() || cod.ambient_dim() != x.rows())
    throw DimensionError("restricted_power_bijective: subspaces live in a different space");
  const RMatrix images = matrix_power(x, k) * dom.basis();
  RestrictedMap out;
  out.witness.resize(cod.dim(), dom.dim());
  for (Index j = 0; j < dom.dim(); ++j) {
    const auto coords = cod.coordinates(images.col(j));
    if (!coords)
      throw ImageNotContained("restricted_power_bijective: image of basis vector " + std::to_string(j) +
                              " leaves the codomain");
    out.witness.col(j) = *coords;
  }
  out.bijective = dom.dim() == cod.dim() && rank(out.witness) == dom.dim();
  return out;
}

}  // namespace bdtriad
