#include <catch_amalgamated.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

#include "konig/matching.hpp"
#include "konig/oracle.hpp"
#include "test_util.hpp"

using konig::BipartiteGraph;
using konig::KPath;
using konig::kNoVertex;
using konig::Matching;
using konig::MatchingStrategy;
using konig::VertexId;

namespace {

Matching matching_of(const BipartiteGraph& graph,
                     const std::vector<konig::Edge>& pairs) {
  Matching m(graph.left_count(), graph.right_count());
  for (const konig::Edge& e : pairs) {
    m.pair_of_left[static_cast<std::size_t>(e.left)] = e.right;
    m.pair_of_right[static_cast<std::size_t>(e.right)] = e.left;
    ++m.size;
  }
  return m;
}

}  // namespace

TEST_CASE("fresh matchings are empty", "[matching]") {
  const Matching m(3, 2);
  CHECK(m.size == 0);
  CHECK(m.edges().empty());
  CHECK(m.pair_of_left == std::vector<VertexId>(3, kNoVertex));
  CHECK(m.left_exposed(0));
  CHECK(m.right_exposed(1));
}

TEST_CASE("matching verification accepts valid matchings", "[matching]") {
  const BipartiteGraph graph(2, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 2}});
  CHECK_FALSE(konig::verify_matching(graph, Matching(2, 3)));
  const Matching m = matching_of(graph, {{0, 1}, {1, 0}});
  CHECK_FALSE(konig::verify_matching(graph, m));
  CHECK(m.edges() == std::vector<konig::Edge>{{0, 1}, {1, 0}});
}

TEST_CASE("matching verification reports each defect", "[matching]") {
  const BipartiteGraph graph(2, 2, {{0, 0}, {1, 1}});

  Matching non_edge = matching_of(graph, {{0, 0}});
  non_edge.pair_of_left[0] = 1;
  non_edge.pair_of_right[0] = kNoVertex;
  non_edge.pair_of_right[1] = 0;
  REQUIRE(konig::verify_matching(graph, non_edge).has_value());
  CHECK_THAT(*konig::verify_matching(graph, non_edge),
             Catch::Matchers::ContainsSubstring("is not an edge"));

  Matching shared = matching_of(graph, {{0, 0}, {1, 1}});
  shared.pair_of_left[1] = 0;  // both lefts claim right 0
  const auto verdict = konig::verify_matching(graph, shared);
  REQUIRE(verdict.has_value());
  CHECK_THAT(*verdict, Catch::Matchers::ContainsSubstring("shared vertex"));

  Matching miscounted = matching_of(graph, {{0, 0}});
  miscounted.size = 2;
  CHECK_THAT(*konig::verify_matching(graph, miscounted),
             Catch::Matchers::ContainsSubstring("size field"));

  CHECK(konig::verify_matching(graph, Matching(3, 2)).has_value());
}

TEST_CASE("the canonical augmenting path on the two-edge chain",
          "[kpath]") {
  // Edges (0,0), (1,0), (1,1); only (1,0) is matched. The one way to
  // enlarge the matching walks L0, R0, L1, R1.
  const BipartiteGraph graph(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  const Matching m = matching_of(graph, {{1, 0}});

  const auto independent = testutil::all_augmenting_paths(graph, m);
  REQUIRE(independent.size() == 1);
  CHECK(independent.front() == std::vector<VertexId>{0, 0, 1, 1});

  const auto path = konig::find_augmenting_k_path(graph, m);
  REQUIRE(path.has_value());
  CHECK(path->vertices == std::vector<VertexId>{0, 0, 1, 1});
  CHECK(path->edge_count() == 3);
  CHECK(path->edge_in_matching == std::vector<bool>{false, true, false});
  CHECK_FALSE(konig::verify_k_path(graph, m, *path));

  const Matching larger = konig::augment(m, *path, graph);
  CHECK(larger.size == 2);
  CHECK_FALSE(konig::verify_matching(graph, larger));
  CHECK(larger.pair_of_left == std::vector<VertexId>{0, 1});
}

TEST_CASE("path verification rejects malformed sequences", "[kpath]") {
  const BipartiteGraph graph(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  const Matching m = matching_of(graph, {{1, 0}});

  const auto reject = [&](std::vector<VertexId> vertices,
                          std::vector<bool> roles) {
    KPath path;
    path.vertices = std::move(vertices);
    path.edge_in_matching = std::move(roles);
    return konig::verify_k_path(graph, m, path);
  };

  CHECK_THAT(*reject({0, 0, 1}, {false, true}),
             Catch::Matchers::ContainsSubstring("even length"));
  CHECK_THAT(*reject({}, {}),
             Catch::Matchers::ContainsSubstring("even length"));
  // L1 is matched, so no K-path can begin there.
  CHECK_THAT(*reject({1, 1}, {false}),
             Catch::Matchers::ContainsSubstring("exposed left"));
  // R0 is matched, so stopping there leaves the path non-augmenting.
  CHECK_THAT(*reject({0, 0}, {false}),
             Catch::Matchers::ContainsSubstring("exposed right"));
  CHECK_THAT(*reject({0, 1}, {false}),
             Catch::Matchers::ContainsSubstring("not a graph edge"));
  // Correct walk, wrong role annotation.
  CHECK_THAT(*reject({0, 0, 1, 1}, {false, false, false}),
             Catch::Matchers::ContainsSubstring("role flag"));
  CHECK(reject({0, 0, 1, 1}, {false, true, false}) == std::nullopt);
}

TEST_CASE("path verification rejects vertex reuse", "[kpath]") {
  // A 4-cycle where walking back through R0 would revisit L0.
  const BipartiteGraph graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const Matching m = matching_of(graph, {{0, 0}});
  KPath path;
  path.vertices = {1, 0, 0, 0};
  path.edge_in_matching = {false, true, false};
  CHECK_THAT(*konig::verify_k_path(graph, m, path),
             Catch::Matchers::ContainsSubstring("repeated vertex"));
}

TEST_CASE("search finds no path in a maximum matching", "[kpath]") {
  const BipartiteGraph graph(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  const Matching maximum = matching_of(graph, {{0, 0}, {1, 1}});
  CHECK_FALSE(konig::find_augmenting_k_path(graph, maximum).has_value());
  CHECK(testutil::all_augmenting_paths(graph, maximum).empty());
}

TEST_CASE("a lone edge is itself an augmenting path", "[kpath]") {
  const BipartiteGraph graph(1, 1, {{0, 0}});
  const auto path = konig::find_augmenting_k_path(graph, Matching(1, 1));
  REQUIRE(path.has_value());
  CHECK(path->vertices == std::vector<VertexId>{0, 0});
  CHECK(path->edge_in_matching == std::vector<bool>{false});

  const Matching one = konig::augment(Matching(1, 1), *path, graph);
  CHECK(one.size == 1);
  CHECK(one.pair_of_left == std::vector<VertexId>{0});
  CHECK_FALSE(konig::find_augmenting_k_path(graph, one).has_value());
}

TEST_CASE("search prefers the lowest exposed vertices", "[kpath]") {
  const BipartiteGraph graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const auto path =
      konig::find_augmenting_k_path(graph, Matching(2, 2));
  REQUIRE(path.has_value());
  CHECK(path->vertices == std::vector<VertexId>{0, 0});
}

TEST_CASE("augment rejects stale or invalid paths", "[kpath]") {
  const BipartiteGraph graph(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  const Matching m = matching_of(graph, {{1, 0}});
  KPath stale;
  stale.vertices = {1, 1};
  stale.edge_in_matching = {false};
  CHECK_THROWS_AS(konig::augment(m, stale, graph), std::invalid_argument);
  CHECK_THROWS_WITH(konig::augment(m, stale, graph),
                    Catch::Matchers::ContainsSubstring("not augmenting"));
}

TEST_CASE("augmentation grows random matchings soundly",
          "[kpath][property]") {
  testutil::Rng rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    const auto graph = testutil::random_graph(rng, 6, 6, 0.3);
    Matching m = testutil::random_partial_matching(rng, graph, 0.4);
    REQUIRE_FALSE(konig::verify_matching(graph, m));
    const auto path = konig::find_augmenting_k_path(graph, m);
    const auto reference = testutil::all_augmenting_paths(graph, m);
    if (!path.has_value()) {
      // No augmenting path anywhere means the matching is maximum.
      CHECK(reference.empty());
      if (graph.edge_count() <= konig::kDefaultMatchingOracleEdgeLimit) {
        CHECK(m.size == konig::brute_force_max_matching(graph));
      }
      continue;
    }
    CHECK_FALSE(reference.empty());
    CHECK_FALSE(konig::verify_k_path(graph, m, *path));
    const Matching grown = konig::augment(m, *path, graph);
    CHECK(grown.size == m.size + 1);
    CHECK_FALSE(konig::verify_matching(graph, grown));
  }
}

TEST_CASE("both strategies compute maximum matchings", "[maximum]") {
  std::vector<konig::Edge> k23;
  for (VertexId p = 0; p < 2; ++p) {
    for (VertexId q = 0; q < 3; ++q) k23.push_back({p, q});
  }
  const BipartiteGraph graph(2, 3, k23);
  for (const auto strategy :
       {MatchingStrategy::simple, MatchingStrategy::layered}) {
    const Matching m = konig::maximum_matching(graph, strategy);
    CHECK(m.size == 2);
    CHECK_FALSE(konig::verify_matching(graph, m));
  }

  // Complete square graphs pair every vertex.
  for (VertexId n = 1; n <= 4; ++n) {
    std::vector<konig::Edge> knn;
    for (VertexId p = 0; p < n; ++p) {
      for (VertexId q = 0; q < n; ++q) knn.push_back({p, q});
    }
    CHECK(konig::maximum_matching(BipartiteGraph(n, n, knn)).size == n);
  }

  // Three lefts funneled through two rights: one left stays exposed.
  const BipartiteGraph funnel(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  const Matching best = konig::maximum_matching(funnel);
  CHECK(best.size == 2);
  CHECK(konig::brute_force_max_matching(funnel) == 2);
}

TEST_CASE("maximum matching handles degenerate shapes", "[maximum]") {
  CHECK(konig::maximum_matching(BipartiteGraph(0, 0, {})).size == 0);
  CHECK(konig::maximum_matching(BipartiteGraph(4, 3, {})).size == 0);
  const BipartiteGraph star(1, 5, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(konig::maximum_matching(star).size == 1);
  const BipartiteGraph skew(5, 1, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  CHECK(konig::maximum_matching(skew).size == 1);
}

TEST_CASE("strategies agree with each other and the reference",
          "[maximum][property]") {
  testutil::Rng rng(90210);
  for (int trial = 0; trial < 150; ++trial) {
    const auto graph = testutil::random_graph(rng, 5, 4, 0.35);
    if (graph.edge_count() > konig::kDefaultMatchingOracleEdgeLimit) continue;
    const Matching simple =
        konig::maximum_matching(graph, MatchingStrategy::simple);
    const Matching layered =
        konig::maximum_matching(graph, MatchingStrategy::layered);
    CHECK_FALSE(konig::verify_matching(graph, simple));
    CHECK_FALSE(konig::verify_matching(graph, layered));
    CHECK(simple.size == layered.size);
    CHECK(simple.size == konig::brute_force_max_matching(graph));
    CHECK_FALSE(konig::find_augmenting_k_path(graph, simple).has_value());
    CHECK_FALSE(konig::find_augmenting_k_path(graph, layered).has_value());
  }
}

TEST_CASE("matching computation is deterministic", "[maximum]") {
  testutil::Rng rng(31337);
  const auto graph = testutil::random_graph(rng, 12, 12, 0.25);
  for (const auto strategy :
       {MatchingStrategy::simple, MatchingStrategy::layered}) {
    const Matching first = konig::maximum_matching(graph, strategy);
    const Matching second = konig::maximum_matching(graph, strategy);
    CHECK(first.pair_of_left == second.pair_of_left);
    CHECK(first.pair_of_right == second.pair_of_right);
  }
}
