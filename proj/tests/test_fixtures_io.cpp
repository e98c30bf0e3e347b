#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bdtriad/errors.hpp"
#include "bdtriad/fixtures.hpp"
#include "bdtriad/io.hpp"
#include "test_support.hpp"

#include <filesystem>
#include <random>

using namespace bdtriad;
namespace bt = bdtriad::testing;
namespace fs = std::filesystem;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

const std::pair<Rational, Rational> kParams[] = {{1, 2}, {1, -1}, {2, 3}, {q(1, 2), q(1, 3)}};

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("bdtriad-io-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string parse_error_message(const nlohmann::json& j) {
  try {
    triad_from_json(j, "doc");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

nlohmann::json d1_json() {
  return nlohmann::json::parse(R"({"dim": 2,
    "A": [["-1","0"],["1","1"]],
    "Aprime": [["-1","0"],["2","1"]],
    "Adprime": [["-1","0"],["0","1"]]})");
}

}  // namespace

TEST_SUITE("fixture_vd_triad") {
  TEST_CASE("d=1, beta=1, gamma=2") {
    const auto doc = fixture_vd_triad(1, 1, 2);
    CHECK(doc.triad.a == from_rows({{-1, 0}, {1, 1}}));
    CHECK(doc.triad.a_prime == from_rows({{-1, 0}, {2, 1}}));
    CHECK(doc.triad.a_dprime == from_rows({{-1, 0}, {0, 1}}));
    CHECK(doc.metadata["source"] == "vd-triad");
    CHECK(doc.metadata["parameters"]["gamma"] == "2");
  }

  TEST_CASE("d=0 gives three 1x1 zero matrices") {
    const auto doc = fixture_vd_triad(0, 1, 2);
    for (std::size_t k = 0; k < 3; ++k) CHECK(doc.triad[k] == RMatrix::Zero(1, 1));
  }

  TEST_CASE("d=2: lower triangular with diagonal (-2,0,2)") {
    const auto doc = fixture_vd_triad(2, 1, 2);
    for (std::size_t k = 0; k < 3; ++k) {
      const RMatrix& m = doc.triad[k];
      REQUIRE(m.rows() == 3);
      CHECK(m(0, 0) == -2);
      CHECK(m(1, 1) == 0);
      CHECK(m(2, 2) == 2);
      CHECK(m(0, 1) == 0);
      CHECK(m(0, 2) == 0);
      CHECK(m(1, 2) == 0);
    }
    const auto v = verify_bd_triad(doc.triad);
    REQUIRE(v.holds());
    CHECK(v.value().thin);
    CHECK(v.value().reduced());
  }

  TEST_CASE("every d <= 8 and parameter pair: reduced, thin, diameter d, matching the sl2 oracle") {
    for (Index d = 0; d <= 8; ++d)
      for (const auto& [beta, gamma] : kParams) {
        CAPTURE(d);
        const auto doc = fixture_vd_triad(d, beta, gamma);
        const auto oracle = bt::vd_triad(d, beta, gamma);
        CHECK(doc.triad.a == oracle.a);
        CHECK(doc.triad.a_prime == oracle.a_prime);
        CHECK(doc.triad.a_dprime == oracle.a_dprime);
        const auto v = verify_bd_triad(doc.triad);
        REQUIRE(v.holds());
        CHECK(v.value().reduced());
        CHECK(v.value().thin);
        CHECK(v.value().diameter == d);
      }
  }

  TEST_CASE("parameter constraints") {
    CHECK_THROWS_AS(fixture_vd_triad(2, 0, 1), DimensionError);
    CHECK_THROWS_AS(fixture_vd_triad(2, 1, 0), DimensionError);
    CHECK_THROWS_AS(fixture_vd_triad(2, 3, 3), DimensionError);
    CHECK_THROWS_AS(fixture_vd_triad(-1, 1, 2), DimensionError);
  }
}

TEST_SUITE("fixture_counterexample") {
  TEST_CASE("matrices are the published ones") {
    const auto c = fixture_counterexample();
    CHECK(c.document.triad.a == bt::counterexample_a());
    CHECK(c.document.triad.a_prime == bt::counterexample_a_prime());
    CHECK(c.document.triad.a_dprime == bt::counterexample_a_dprime());
    CHECK(c.x02 == bt::counterexample_x02());
    CHECK(c.document.triad.a.col(0) == from_rows({{-3}, {1}, {1}, {0}, {0}, {0}}));
    CHECK(c.x02.row(0) == from_rows({{3, 12, 0, 0, 0, 0}}));
  }

  TEST_CASE("certifies with shape (1,2,2,1) and is not thin") {
    const auto v = verify_bd_triad(fixture_counterexample().document.triad);
    REQUIRE(v.holds());
    CHECK(v.value().shape == std::vector<Index>{1, 2, 2, 1});
    CHECK_FALSE(v.value().thin);
    CHECK(v.value().reduced());
  }

  TEST_CASE("candidate module places A, A', A'' and X02") {
    const auto c = fixture_counterexample();
    const TetModule m = counterexample_candidate(c);
    CHECK(m.generator(0, 3) == c.document.triad.a);
    CHECK(m.generator(1, 3) == c.document.triad.a_prime);
    CHECK(m.generator(2, 3) == c.document.triad.a_dprime);
    CHECK(m.generator(0, 2) == c.x02);
    CHECK(m.generator(0, 1) == RMatrix::Zero(6, 6));
    CHECK(m.generator(1, 2) == RMatrix::Zero(6, 6));
  }
}

TEST_SUITE("io") {
  TEST_CASE("save then load is the identity on a fixture document") {
    TempDir dir;
    const auto doc = fixture_vd_triad(1, 1, 2);
    save_triad(dir.path / "t.json", doc);
    CHECK(load_triad(dir.path / "t.json") == doc);
  }

  TEST_CASE("random documents and modules round trip") {
    std::mt19937 rng(20261016);
    TempDir dir;
    for (int trial = 0; trial < 20; ++trial) {
      const Index n = 1 + trial % 5;
      TriadDocument doc{{bt::random_matrix(rng, n, n, 50, 9), bt::random_matrix(rng, n, n, 50, 9),
                         bt::random_matrix(rng, n, n, 50, 9)},
                        {{"trial", trial}}};
      CHECK(triad_from_json(parse_json(triad_to_json(doc).dump())) == doc);
      save_triad(dir.path / "t.json", doc);
      CHECK(load_triad(dir.path / "t.json") == doc);

      std::array<RMatrix, 6> gens;
      for (auto& g : gens) g = bt::random_matrix(rng, n, n, 50, 9);
      const TetModule m(gens);
      save_module(dir.path / "m.json", m);
      const TetModule back = load_module(dir.path / "m.json");
      for (std::size_t k = 0; k < 6; ++k) CHECK(back.canonical()[k] == gens[k]);
    }
  }

  TEST_CASE("entries are normalized") {
    auto j = d1_json();
    j["A"][1][0] = "3/6";
    j["A"][0][0] = "-004";
    const auto doc = triad_from_json(j);
    CHECK(doc.triad.a(1, 0) == q(1, 2));
    CHECK(doc.triad.a(0, 0) == -4);
    CHECK(triad_to_json(doc)["A"][1][0] == "1/2");
  }

  TEST_CASE("decimal entry is rejected with its position") {
    auto j = d1_json();
    j["Aprime"][1][0] = "1.5";
    const std::string msg = parse_error_message(j);
    CHECK(msg.find("doc: Aprime row 1 column 0") != std::string::npos);
    CHECK(msg.find("1.5") != std::string::npos);
  }

  TEST_CASE("malformed documents") {
    SUBCASE("numeric entry") {
      auto j = d1_json();
      j["A"][0][1] = 0;
      CHECK(parse_error_message(j).find("A row 0 column 1") != std::string::npos);
    }
    SUBCASE("zero denominator") {
      auto j = d1_json();
      j["A"][0][1] = "1/0";
      CHECK(parse_error_message(j).find("A row 0 column 1") != std::string::npos);
    }
    SUBCASE("ragged row") {
      auto j = d1_json();
      j["Adprime"][1] = {"0"};
      CHECK(parse_error_message(j).find("Adprime row 1: has 1 entries, expected 2") != std::string::npos);
    }
    SUBCASE("row count differs from dim") {
      auto j = d1_json();
      j["dim"] = 3;
      CHECK(parse_error_message(j).find("A: has 2 rows, expected 3") != std::string::npos);
    }
    SUBCASE("missing matrix") {
      auto j = d1_json();
      j.erase("Aprime");
      CHECK(parse_error_message(j).find("missing matrix 'Aprime'") != std::string::npos);
    }
    SUBCASE("missing dim") {
      auto j = d1_json();
      j.erase("dim");
      CHECK(parse_error_message(j).find("'dim'") != std::string::npos);
    }
    SUBCASE("metadata not an object") {
      auto j = d1_json();
      j["metadata"] = 3;
      CHECK(parse_error_message(j).find("metadata") != std::string::npos);
    }
  }

  TEST_CASE("invalid JSON text reports the byte offset") {
    try {
      parse_json("{\"dim\": 2,, }", "f.json");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("f.json: invalid JSON at byte") != std::string::npos);
    }
  }

  TEST_CASE("module document requires all six generators") {
    const auto c = fixture_counterexample();
    auto j = module_to_json(counterexample_candidate(c));
    CHECK(j["X02"] == matrix_to_json(c.x02));
    j.erase("X12");
    CHECK_THROWS_AS(module_from_json(j), ParseError);
  }

  TEST_CASE("missing file") { CHECK_THROWS_AS(load_triad("/nonexistent/triad.json"), ParseError); }
}
