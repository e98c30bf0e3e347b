#include "bdtriad/tet.hpp"

#include "bdtriad/eigen.hpp"
#include "bdtriad/errors.hpp"
#include "bdtriad/linalg.hpp"

namespace bdtriad {

namespace {

void check_vertex(int v) {
  if (v < 0 || v > 3) throw DimensionError("vertex " + std::to_string(v) + " is not in 0..3");
}

std::size_t slot(int i, int j) {
  for (std::size_t k = 0; k < TetModule::kPairs.size(); ++k)
    if (TetModule::kPairs[k] == std::pair{i, j}) return k;
  throw DimensionError("no generator X_" + std::to_string(i) + std::to_string(j));
}

std::string tuple_id(const char* family, std::initializer_list<int> idx) {
  std::string s = std::string(family) + "(";
  bool first = true;
  for (int v : idx) {
    s += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace

TetModule::TetModule(std::array<RMatrix, 6> canonical) : canonical_(std::move(canonical)) {
  const Index n = canonical_[0].rows();
  if (n == 0) throw DimensionError("TetModule: dimension must be positive");
  for (const RMatrix& x : canonical_)
    if (x.rows() != n || x.cols() != n) throw DimensionError("TetModule: generators must be square of one size");
}

TetModule TetModule::zero(Index dim) {
  std::array<RMatrix, 6> gens;
  gens.fill(RMatrix::Zero(dim, dim));
  return TetModule(std::move(gens));
}

RMatrix TetModule::generator(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw DimensionError("generator indices must differ");
  return i < j ? canonical_[slot(i, j)] : RMatrix(-canonical_[slot(j, i)]);
}

void TetModule::set(int i, int j, const RMatrix& x) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw DimensionError("generator indices must differ");
  if (x.rows() != dim() || x.cols() != dim()) throw DimensionError("TetModule::set: wrong size");
  if (i < j)
    canonical_[slot(i, j)] = x;
  else
    canonical_[slot(j, i)] = -x;
}

std::string generator_name(int i, int j) { return "X" + std::to_string(i) + std::to_string(j); }

RelationReport verify_tet_relations(const TetModule& m) {
  RelationReport report;
  std::array<std::array<RMatrix, 4>, 4> x;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) x[i][j] = m.generator(i, j);

  for (const auto& [i, j] : TetModule::kPairs) {
    ++report.checked;
    const RMatrix defect = x[i][j] + x[j][i];
    if (!is_zero(defect)) {
      report.antisymmetry_ok = false;
      report.violations.push_back({RelationFamily::antisymmetry, {i, j}, tuple_id("antisymmetry", {i, j}), defect});
    }
  }
  for (int h = 0; h < 4; ++h)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (h == i || i == j || h == j) continue;
        ++report.checked;
        const RMatrix defect = commutator(x[h][i], x[i][j]) - 2 * x[h][i] - 2 * x[i][j];
        if (!is_zero(defect)) {
          report.corner_ok = false;
          report.violations.push_back({RelationFamily::corner, {h, i, j}, tuple_id("corner", {h, i, j}), defect});
        }
      }
  for (int h = 0; h < 4; ++h)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          if (h == i || h == j || h == k || i == j || i == k || j == k) continue;
          ++report.checked;
          const RMatrix once = commutator(x[h][i], x[j][k]);
          const RMatrix thrice = commutator(x[h][i], commutator(x[h][i], once));
          const RMatrix defect = thrice - 4 * once;
          if (!is_zero(defect)) {
            report.dolan_grady_ok = false;
            report.violations.push_back(
                {RelationFamily::dolan_grady, {h, i, j, k}, tuple_id("dolan-grady", {h, i, j, k}), defect});
          }
        }
  return report;
}

Verdict<Index> spectrum_diameter(const TetModule& m) {
  std::optional<Index> d;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const std::string name = generator_name(i, j);
      EigenDecomposition eig;
      try {
        eig = eigen_decompose(m.generator(i, j));
      } catch (const IrrationalSpectrum& e) {
        return Refutation{"spectrum", name + ": " + e.what(), std::nullopt, {m.generator(i, j)}};
      }
      std::string spectrum = "{";
      for (const auto& p : eig.pairs) spectrum += (spectrum.size() > 1 ? "," : "") + to_string(p.value);
      spectrum += "}";
      if (!eig.diagonalizable)
        return Refutation{"spectrum", name + " is not diagonalizable", std::nullopt, {m.generator(i, j)}};
      const Index here = static_cast<Index>(eig.pairs.size()) - 1;
      if (!d) d = here;
      bool conforms = here == *d;
      for (Index k = 0; conforms && k <= here; ++k)
        conforms = eig.pairs[static_cast<std::size_t>(k)].value == Rational(2 * k - here);
      if (!conforms)
        return Refutation{"spectrum",
                          name + " has spectrum " + spectrum + ", expected {d-2i} with d = " + std::to_string(*d),
                          std::nullopt,
                          {m.generator(i, j)}};
    }
  return *d;
}

Triad corner_triad(const TetModule& m, int u) {
  check_vertex(u);
  std::array<int, 3> rst{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != u) rst[static_cast<std::size_t>(k++)] = v;
  return {m.generator(rst[0], u), m.generator(rst[1], u), m.generator(rst[2], u)};
}

EquitableTriple face_triple(const TetModule& m, int h, int i, int j) {
  check_vertex(h);
  check_vertex(i);
  check_vertex(j);
  if (h == i || i == j || h == j) throw DimensionError("face_triple: vertices must be distinct");
  EquitableTriple t{m.generator(h, i), m.generator(i, j), m.generator(j, h)};
  if (!satisfies_equitable_relations(t))
    throw RelationViolation("face_triple: (" + generator_name(h, i) + ", " + generator_name(i, j) + ", " +
                            generator_name(j, h) + ") is not an equitable triple");
  return t;
}

Irreducibility irreducible_sufficient(const TetModule& m) {
  const Index n = m.dim();
  const Index dim = generated_algebra_dimension<Rational>(std::span<const RMatrix>(m.canonical()), n);
  return {dim == n * n, dim};
}

std::array<TriadCertificate, 4> corner_triads_are_bd_triads(const TetModule& m) {
  std::array<TriadCertificate, 4> out;
  for (int u = 0; u < 4; ++u) {
    auto v = verify_bd_triad(corner_triad(m, u));
    if (!v)
      throw RelationViolation("corner triad at vertex " + std::to_string(u) + " is not a BD triad: clause " +
                              v.refutation().clause + ": " + v.refutation().detail);
    if (!v.value().reduced())
      throw RelationViolation("corner triad at vertex " + std::to_string(u) + " is not reduced");
    out[static_cast<std::size_t>(u)] = std::move(v.value());
  }
  return out;
}

}  // namespace bdtriad
