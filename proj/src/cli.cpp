#include "bdtriad/cli.hpp"

#include "bdtriad/errors.hpp"
#include "bdtriad/fixtures.hpp"
#include "bdtriad/io.hpp"
#include "bdtriad/spectral.hpp"
#include "bdtriad/synthesis.hpp"
#include "bdtriad/tet.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

namespace bdtriad {

namespace {

using nlohmann::json;

constexpr const char* kComponentNames[] = {"A", "A'", "A''"};

json rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : " ") + to_string(v);
  return out;
}

std::string shape_string(const std::vector<Index>& rho) {
  std::string out = "(";
  for (std::size_t i = 0; i < rho.size(); ++i) out += (i ? "," : "") + std::to_string(rho[i]);
  return out + ")";
}

std::string matrix_string(const RMatrix& m) {
  std::string out = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (Index j = 0; j < m.cols(); ++j) out += (j ? "," : "") + to_string(m(i, j));
    out += "]";
  }
  return out + "]";
}

json refutation_to_json(const Refutation& r) {
  json j = {{"verdict", "refuted"}, {"clause", r.clause}, {"detail", r.detail}};
  j["index"] = r.index ? json(*r.index) : json(nullptr);
  j["witness"] = json::array();
  for (const auto& w : r.witness) j["witness"].push_back(matrix_to_json(w));
  return j;
}

void print_refutation(std::ostream& out, const std::string& what, const Refutation& r) {
  out << what << ": refuted at " << r.clause << ": " << r.detail << '\n';
  if (r.index) out << "  index: " << *r.index << '\n';
  for (std::size_t k = 0; k < r.witness.size(); ++k) out << "  witness " << k << ": " << matrix_string(r.witness[k]) << '\n';
}

json certificate_to_json(const TriadCertificate& cert) {
  json j = {{"verdict", "certified"},
            {"diameter", cert.diameter},
            {"shape", cert.shape},
            {"thin", cert.thin},
            {"reduced", cert.reduced()}};
  json seqs = json::object();
  json orderings = json::object();
  for (std::size_t k = 0; k < 3; ++k) {
    seqs[kComponentNames[k]] = rationals_to_json(cert.sequence(k));
    json spaces = json::array();
    for (const auto& s : cert.orderings[k].eigenspaces) spaces.push_back(matrix_to_json(s.basis()));
    orderings[kComponentNames[k]] = std::move(spaces);
  }
  j["sequences"] = std::move(seqs);
  j["eigenspace_bases"] = std::move(orderings);
  json bij = json::array();
  for (const auto& b : cert.bijections)
    bij.push_back({{"family", b.family}, {"i", b.i}, {"witness", matrix_to_json(b.witness)}});
  j["bijections"] = std::move(bij);
  return j;
}

void print_certificate(std::ostream& out, const std::string& what, const TriadCertificate& cert) {
  out << what << ": BD triad certified\n"
      << "  diameter: " << cert.diameter << '\n'
      << "  shape: " << shape_string(cert.shape) << (cert.thin ? " (thin)" : " (not thin)") << '\n'
      << "  reduced: " << (cert.reduced() ? "yes" : "no") << '\n';
  for (std::size_t k = 0; k < 3; ++k) out << "  sequence " << kComponentNames[k] << ": " << join(cert.sequence(k)) << '\n';
  out << "  bijection witnesses: " << cert.bijections.size() << '\n';
}

json affine_to_json(const AffineMap& m) { return {{"scale", to_string(m.scale)}, {"shift", to_string(m.shift)}}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  bool json_output = false;
  std::string input;
  std::string output;
  std::string corner = "0123";
  long long d = 0;
  std::string beta;
  std::string gamma;
};

int triad_verify(const Options& o, std::ostream& out) {
  const auto doc = load_triad(o.input);
  const auto v = verify_bd_triad(doc.triad);
  if (o.json_output) {
    emit(out, v ? certificate_to_json(v.value()) : refutation_to_json(v.refutation()));
  } else if (v) {
    print_certificate(out, o.input, v.value());
  } else {
    print_refutation(out, o.input, v.refutation());
  }
  return v ? kExitOk : kExitRefuted;
}

int triad_reduce(const Options& o, std::ostream& out) {
  const auto doc = load_triad(o.input);
  const auto v = verify_bd_triad(doc.triad);
  if (!v) {
    if (o.json_output)
      emit(out, refutation_to_json(v.refutation()));
    else
      print_refutation(out, o.input, v.refutation());
    return kExitRefuted;
  }
  const Reduction red = reduce_triad(doc.triad, v.value());
  json witnesses = json::array();
  for (const auto& w : red.witnesses) witnesses.push_back(affine_to_json(w));
  TriadDocument result{red.reduced, doc.metadata};
  result.metadata["reduction_witnesses"] = witnesses;
  save_triad(o.output, result);
  if (o.json_output) {
    json j = certificate_to_json(red.certificate);
    j["witnesses"] = witnesses;
    j["output"] = o.output;
    emit(out, j);
  } else {
    out << o.input << ": reduced to " << o.output << '\n';
    for (std::size_t k = 0; k < 3; ++k)
      out << "  " << kComponentNames[k] << " -> " << to_string(red.witnesses[k].scale) << " * "
          << kComponentNames[k] << " + " << to_string(red.witnesses[k].shift) << " I\n";
    print_certificate(out, o.output, red.certificate);
  }
  return kExitOk;
}

int triad_synthesize(const Options& o, std::ostream& out) {
  const auto doc = load_triad(o.input);
  const CornerAssignment corner = parse_corner(o.corner);
  SynthesisResult res;
  try {
    res = synthesize_tet(doc.triad, corner);
  } catch (const SynthesisError& e) {
    if (o.json_output)
      emit(out, {{"verdict", "refuted"}, {"stage", e.stage()}, {"detail", e.what()}});
    else
      out << o.input << ": synthesis failed at stage " << e.what() << '\n';
    return kExitRefuted;
  }
  save_module(o.output, res.module);
  if (o.json_output) {
    json j = {{"verdict", "synthesized"},
              {"output", o.output},
              {"corner", o.corner},
              {"diameter", res.diameter},
              {"c", res.raising.c ? json(to_string(*res.raising.c)) : json(nullptr)},
              {"a", res.raising.a ? json(to_string(*res.raising.a)) : json(nullptr)},
              {"B", matrix_to_json(res.b.b)},
              {"B_solution_space_dim", res.b.solution_space_dim},
              {"B_trace_filtered", res.b.trace_filtered},
              {"Bprime", matrix_to_json(res.b_prime)},
              {"Bdprime", matrix_to_json(res.b_dprime)},
              {"relations_checked", res.relations.checked},
              {"algebra_dimension", res.irreducibility.algebra_dimension},
              {"irreducible", res.irreducibility.certified}};
    json ids = json::array();
    for (const auto& id : res.identities) ids.push_back({{"id", id.id}, {"holds", id.holds}});
    j["identities"] = std::move(ids);
    emit(out, j);
  } else {
    out << o.input << ": module written to " << o.output << " (corner " << o.corner << ")\n"
        << "  diameter: " << res.diameter << '\n';
    if (res.raising.c) out << "  c = " << to_string(*res.raising.c) << ", a = " << to_string(*res.raising.a) << '\n';
    out << "  B = " << matrix_string(res.b.b) << " (solution space dim " << res.b.solution_space_dim << ")\n"
        << "  B' = " << matrix_string(res.b_prime) << '\n'
        << "  B'' = " << matrix_string(res.b_dprime) << '\n'
        << "  relations: " << res.relations.checked << " checked, all hold\n"
        << "  generated algebra dimension: " << res.irreducibility.algebra_dimension << " (irreducible)\n"
        << "  corner triads: 4 certified\n";
  }
  return kExitOk;
}

json defect_to_json(const RelationDefect& d) {
  return {{"id", d.id}, {"indices", d.indices}, {"defect", matrix_to_json(d.defect)}};
}

int tet_verify(const Options& o, std::ostream& out) {
  const TetModule m = load_module(o.input);
  const RelationReport rel = verify_tet_relations(m);
  const auto spectrum = spectrum_diameter(m);
  const Irreducibility irr = irreducible_sufficient(m);
  const bool ok = rel.ok() && spectrum.holds();
  if (o.json_output) {
    json j = {{"verdict", ok ? "verified" : "refuted"},
              {"relations_checked", rel.checked},
              {"antisymmetry", rel.antisymmetry_ok},
              {"corner_relations", rel.corner_ok},
              {"dolan_grady", rel.dolan_grady_ok},
              {"algebra_dimension", irr.algebra_dimension},
              {"irreducible", irr.certified}};
    j["violations"] = json::array();
    for (const auto& d : rel.violations) j["violations"].push_back(defect_to_json(d));
    j["spectrum"] = spectrum ? json{{"diameter", spectrum.value()}} : refutation_to_json(spectrum.refutation());
    emit(out, j);
  } else {
    out << o.input << ": " << (ok ? "module relations verified" : "module refuted") << '\n'
        << "  relations checked: " << rel.checked << ", violations: " << rel.violations.size() << '\n';
    for (const auto& d : rel.violations) out << "  " << d.id << " defect: " << matrix_string(d.defect) << '\n';
    if (spectrum)
      out << "  spectrum: every generator has eigenvalues d-2i with d = " << spectrum.value() << '\n';
    else
      out << "  spectrum: " << spectrum.refutation().detail << '\n';
    out << "  generated algebra dimension: " << irr.algebra_dimension
        << (irr.certified ? " (irreducible)" : " (irreducibility not certified)") << '\n';
  }
  return ok ? kExitOk : kExitRefuted;
}

int tet_corners(const Options& o, std::ostream& out) {
  const TetModule m = load_module(o.input);
  bool all = true;
  json corners = json::array();
  for (int u = 0; u < 4; ++u) {
    const auto v = verify_bd_triad(corner_triad(m, u));
    all = all && v.holds();
    json j = v ? certificate_to_json(v.value()) : refutation_to_json(v.refutation());
    j["u"] = u;
    corners.push_back(std::move(j));
    if (o.json_output) continue;
    const std::string what = o.input + " corner " + std::to_string(u);
    if (v)
      out << what << ": BD triad certified, diameter " << v.value().diameter << ", shape "
          << shape_string(v.value().shape) << (v.value().reduced() ? ", reduced" : ", not reduced") << '\n';
    else
      print_refutation(out, what, v.refutation());
  }
  if (o.json_output) emit(out, {{"verdict", all ? "verified" : "refuted"}, {"corners", corners}});
  return all ? kExitOk : kExitRefuted;
}

int fixture_vd(const Options& o, std::ostream& out) {
  const auto doc = fixture_vd_triad(static_cast<Index>(o.d), parse_rational(o.beta), parse_rational(o.gamma));
  save_triad(o.output, doc);
  if (o.json_output)
    emit(out, {{"output", o.output}, {"metadata", doc.metadata}});
  else
    out << "V(" << o.d << ") triad written to " << o.output << '\n';
  return kExitOk;
}

int fixture_counterexample_cmd(const Options& o, std::ostream& out) {
  const std::filesystem::path dir = o.output;
  std::filesystem::create_directories(dir);
  const Counterexample c = fixture_counterexample();
  save_triad(dir / "triad.json", c.document);
  save_json(dir / "x02.json", {{"dim", c.x02.rows()}, {"X02", matrix_to_json(c.x02)}});
  save_module(dir / "candidate_module.json", counterexample_candidate(c));
  const std::vector<std::string> files = {(dir / "triad.json").string(), (dir / "x02.json").string(),
                                          (dir / "candidate_module.json").string()};
  if (o.json_output) {
    emit(out, {{"outputs", files}});
  } else {
    for (const auto& f : files) out << "wrote " << f << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of bidiagonal triads and tetrahedron-algebra modules", "bdtriad"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&, std::ostream&) = nullptr;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, auto fn) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->add_flag("--json", o.json_output, "Emit a machine-readable report");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  CLI::App* triad = app.add_subcommand("triad", "Operate on a triad document");
  triad->require_subcommand(1);
  CLI::App* verify = leaf(triad, "verify", "Verify the BD triad axioms", triad_verify);
  verify->add_option("file", o.input, "Triad document")->required();
  CLI::App* reduce = leaf(triad, "reduce", "Reduce to eigenvalue sequences 2i-d", triad_reduce);
  reduce->add_option("file", o.input, "Triad document")->required();
  reduce->add_option("-o,--output", o.output, "Output triad document")->required();
  CLI::App* synth = leaf(triad, "synthesize", "Build a tetrahedron-algebra module", triad_synthesize);
  synth->add_option("file", o.input, "Thin reduced triad document")->required();
  synth->add_option("--corner", o.corner, "Permutation rstu of 0123 (default 0123)");
  synth->add_option("-o,--output", o.output, "Output module document")->required();

  CLI::App* tet = app.add_subcommand("tet", "Operate on a module document");
  tet->require_subcommand(1);
  leaf(tet, "verify", "Check relations, spectra and irreducibility", tet_verify)
      ->add_option("file", o.input, "Module document")
      ->required();
  leaf(tet, "corners", "Verify the four corner triads", tet_corners)
      ->add_option("file", o.input, "Module document")
      ->required();

  CLI::App* fixture = app.add_subcommand("fixture", "Write example inputs");
  fixture->require_subcommand(1);
  CLI::App* vd = leaf(fixture, "vd-triad", "Thin reduced triad on V(d)", fixture_vd);
  vd->add_option("--d", o.d, "Diameter")->required()->check(CLI::NonNegativeNumber);
  vd->add_option("--beta", o.beta, "Nonzero rational p/q")->required();
  vd->add_option("--gamma", o.gamma, "Nonzero rational p/q, distinct from beta")->required();
  vd->add_option("-o,--output", o.output, "Output triad document")->required();
  leaf(fixture, "counterexample", "Non-thin 6x6 triad, X02 and candidate module", fixture_counterexample_cmd)
      ->add_option("-o,--output", o.output, "Output directory")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action(o, out);
  } catch (const NoWitness& e) {
    err << "error: " << e.what() << '\n';
    return kExitRefuted;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace bdtriad
