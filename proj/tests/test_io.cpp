#include <catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "konig/io.hpp"
#include "test_util.hpp"

using Catch::Matchers::ContainsSubstring;
using konig::BipartiteGraph;
using konig::Edge;
using konig::MatrixPosition;
using konig::ParseError;
using konig::PatternMode;
using konig::VertexId;

namespace {

std::string edge_list_text(const BipartiteGraph& graph) {
  std::ostringstream out;
  out << graph.left_count() << " " << graph.right_count() << "\n";
  for (const Edge& e : graph.edges()) {
    out << e.left << " " << e.right << "\n";
  }
  return out.str();
}

std::string mtx_text(const konig::SparsityPattern& pattern) {
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate pattern general\n";
  out << pattern.row_count() << " " << pattern.col_count() << " "
      << pattern.entries().size() << "\n";
  for (const MatrixPosition& pos : pattern.entries()) {
    out << pos.row + 1 << " " << pos.col + 1 << "\n";
  }
  return out.str();
}

}  // namespace

TEST_CASE("edge lists parse with comments and blank lines", "[io]") {
  const auto graph = konig::parse_edge_list(
      "# a complete 2 x 3 graph\n"
      "2 3\n"
      "\n"
      "0 0\n0 1\n0 2\n"
      "1 0  # trailing comment\n1 1\n1 2\n");
  CHECK(graph.left_count() == 2);
  CHECK(graph.right_count() == 3);
  CHECK(graph.edge_count() == 6);
}

TEST_CASE("edge lists allow isolated vertices and no edges", "[io]") {
  const auto graph = konig::parse_edge_list("4 2\n");
  CHECK(graph.left_count() == 4);
  CHECK(graph.edge_count() == 0);

  const auto sparse = konig::parse_edge_list("2 3\n0 0\n1 2\n");
  CHECK(sparse.left_count() == 2);
  CHECK(sparse.right_count() == 3);
  CHECK(sparse.edges() == std::vector<Edge>{{0, 0}, {1, 2}});
}

TEST_CASE("edge list errors carry line numbers", "[io]") {
  CHECK_THROWS_MATCHES(konig::parse_edge_list(""), ParseError,
                       Catch::Matchers::MessageMatches(
                           ContainsSubstring("missing 'L R' header")));
  CHECK_THROWS_MATCHES(
      konig::parse_edge_list("2\n"), ParseError,
      Catch::Matchers::MessageMatches(ContainsSubstring("header must be")));
  CHECK_THROWS_MATCHES(konig::parse_edge_list("2 2\n0\n"), ParseError,
                       Catch::Matchers::MessageMatches(
                           ContainsSubstring("edge line must be")));
  CHECK_THROWS_MATCHES(
      konig::parse_edge_list("2 2\n0 x\n"), ParseError,
      Catch::Matchers::MessageMatches(ContainsSubstring("expected an "
                                                        "integer")));

  try {
    konig::parse_edge_list("# sized two by two\n2 2\n5 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "left index 5 out of bounds, line 3");
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_MATCHES(
      konig::parse_edge_list("2 2\n0 9\n"), ParseError,
      Catch::Matchers::MessageMatches(
          ContainsSubstring("right index 9 out of bounds, line 2")));
  CHECK_THROWS_MATCHES(
      konig::parse_edge_list("-1 2\n"), ParseError,
      Catch::Matchers::MessageMatches(ContainsSubstring("nonnegative")));
}

TEST_CASE("general edge lists parse and validate", "[io]") {
  const auto input = konig::parse_general_edge_list(
      "# hexagon\n6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  CHECK(input.vertex_count == 6);
  CHECK(input.edges.size() == 6);

  CHECK_THROWS_MATCHES(konig::parse_general_edge_list(""), ParseError,
                       Catch::Matchers::MessageMatches(
                           ContainsSubstring("missing 'N' header")));
  CHECK_THROWS_MATCHES(
      konig::parse_general_edge_list("3 3\n"), ParseError,
      Catch::Matchers::MessageMatches(ContainsSubstring("single vertex")));
  CHECK_THROWS_MATCHES(
      konig::parse_general_edge_list("3\n0 7\n"), ParseError,
      Catch::Matchers::MessageMatches(
          ContainsSubstring("vertex index 7 out of bounds, line 2")));
  CHECK_THROWS_MATCHES(
      konig::parse_general_edge_list("3\n1 1\n"), ParseError,
      Catch::Matchers::MessageMatches(
          ContainsSubstring("self-loop at vertex 1")));
}

TEST_CASE("matrix market files parse in both modes", "[io]") {
  const std::string text =
      "%%MatrixMarket matrix coordinate real general\n"
      "% explicit zero in the corner\n"
      "2 2 2\n"
      "1 1 0.0\n"
      "2 2 5.0\n";
  const auto predicate = konig::parse_matrix_market(text);
  CHECK(predicate.entries() == std::vector<MatrixPosition>{{1, 1}});
  const auto structural =
      konig::parse_matrix_market(text, PatternMode::structural);
  CHECK(structural.entries() ==
        std::vector<MatrixPosition>{{0, 0}, {1, 1}});
}

TEST_CASE("pattern files have no values to test", "[io]") {
  const auto pattern = konig::parse_matrix_market(
      "%%MatrixMarket matrix coordinate pattern general\n"
      "2 3 2\n"
      "1 3\n"
      "2 1\n");
  CHECK(pattern.row_count() == 2);
  CHECK(pattern.col_count() == 3);
  CHECK(pattern.entries() == std::vector<MatrixPosition>{{0, 2}, {1, 0}});

  const auto identity = konig::parse_matrix_market(
      "%%MatrixMarket matrix coordinate real general\n"
      "3 3 3\n"
      "1 1 1.0\n"
      "2 2 1.0\n"
      "3 3 1.0\n");
  CHECK(identity.entries() ==
        std::vector<MatrixPosition>{{0, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("symmetric files mirror off-diagonal entries", "[io]") {
  const auto pattern = konig::parse_matrix_market(
      "%%MatrixMarket matrix coordinate integer symmetric\n"
      "3 3 3\n"
      "1 1 4\n"
      "2 1 7\n"
      "3 3 1\n");
  CHECK(pattern.entries() ==
        std::vector<MatrixPosition>{{0, 0}, {0, 1}, {1, 0}, {2, 2}});
}

TEST_CASE("integer fields and empty matrices parse", "[io]") {
  const auto pattern = konig::parse_matrix_market(
      "%%MatrixMarket matrix coordinate integer general\n"
      "2 2 1\n"
      "1 2 -3\n");
  CHECK(pattern.entries() == std::vector<MatrixPosition>{{0, 1}});
  const auto empty = konig::parse_matrix_market(
      "%%MatrixMarket matrix coordinate real general\n"
      "3 3 0\n");
  CHECK(empty.entries().empty());
}

TEST_CASE("matrix market errors carry line numbers", "[io]") {
  CHECK_THROWS_MATCHES(konig::parse_matrix_market("1 1 0\n"), ParseError,
                       Catch::Matchers::MessageMatches(
                           ContainsSubstring("missing '%%MatrixMarket'")));
  CHECK_THROWS_MATCHES(
      konig::parse_matrix_market(
          "%%MatrixMarket matrix coordinate complex general\n1 1 0\n"),
      ParseError,
      Catch::Matchers::MessageMatches(
          ContainsSubstring("unsupported field 'complex'")));
  CHECK_THROWS_MATCHES(
      konig::parse_matrix_market(
          "%%MatrixMarket matrix array real general\n1 1 0\n"),
      ParseError,
      Catch::Matchers::MessageMatches(
          ContainsSubstring("expected 'matrix coordinate'")));
  CHECK_THROWS_MATCHES(
      konig::parse_matrix_market(
          "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 "
          "1.0\n"),
      ParseError,
      Catch::Matchers::MessageMatches(
          ContainsSubstring("coordinate (3, 1) out of bounds")));
  CHECK_THROWS_MATCHES(
      konig::parse_matrix_market("%%MatrixMarket matrix coordinate real "
                                 "general\n2 2 2\n1 1 1.0\n1 1 2.0\n"),
      ParseError,
      Catch::Matchers::MessageMatches(
          ContainsSubstring("duplicate coordinate (1, 1)")));
  CHECK_THROWS_MATCHES(
      konig::parse_matrix_market(
          "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 "
          "1.0\n"),
      ParseError,
      Catch::Matchers::MessageMatches(ContainsSubstring("declared 2")));
  CHECK_THROWS_MATCHES(
      konig::parse_matrix_market(
          "%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 "
          "1.0\n2 2 1.0\n"),
      ParseError,
      Catch::Matchers::MessageMatches(
          ContainsSubstring("more data lines than the declared 1")));
  CHECK_THROWS_MATCHES(
      konig::parse_matrix_market(
          "%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1\n"),
      ParseError,
      Catch::Matchers::MessageMatches(
          ContainsSubstring("coordinate line must have")));
}

TEST_CASE("symmetric files tolerate redundant mirror entries", "[io]") {
  // (1,2) restates the mirror of (2,1); the copies collapse.
  const auto pattern = konig::parse_matrix_market(
      "%%MatrixMarket matrix coordinate integer symmetric\n"
      "2 2 2\n"
      "2 1 1\n"
      "1 2 1\n");
  CHECK(pattern.entries() == std::vector<MatrixPosition>{{0, 1}, {1, 0}});
}

TEST_CASE("graphs survive an edge-list round trip", "[io][property]") {
  testutil::Rng rng(140);
  for (int trial = 0; trial < 40; ++trial) {
    const auto graph = testutil::random_graph(rng, 6, 5, 0.3);
    const auto reparsed = konig::parse_edge_list(edge_list_text(graph));
    CHECK(reparsed.left_count() == graph.left_count());
    CHECK(reparsed.right_count() == graph.right_count());
    CHECK(reparsed.edges() == graph.edges());
  }
}

TEST_CASE("patterns survive a matrix market round trip", "[io][property]") {
  testutil::Rng rng(141);
  for (int trial = 0; trial < 40; ++trial) {
    std::bernoulli_distribution keep(0.3);
    std::vector<MatrixPosition> entries;
    for (VertexId r = 0; r < 5; ++r) {
      for (VertexId c = 0; c < 7; ++c) {
        if (keep(rng)) entries.push_back({r, c});
      }
    }
    const konig::SparsityPattern pattern(5, 7, std::move(entries));
    const auto reparsed = konig::parse_matrix_market(mtx_text(pattern));
    CHECK(reparsed.entries() == pattern.entries());
  }
}
