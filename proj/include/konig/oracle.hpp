#pragma once

// Brute-force reference implementations for desk-scale instances. These
// deliberately share no traversal or bookkeeping with the main
// algorithms: the matching oracle backtracks over edge subsets and the
// cover oracle branches on uncovered edges, each against its own copy of
// the edge list.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "konig/bipartite_graph.hpp"

namespace konig {

inline constexpr std::size_t kDefaultMatchingOracleEdgeLimit = 24;
inline constexpr std::size_t kDefaultCoverOracleVertexLimit = 20;

namespace detail {

// Branches per left vertex that has any edges: leave it unmatched, or
// match it to each still-free neighbor.
inline VertexId oracle_matching_backtrack(
    const std::vector<std::vector<VertexId>>& adjacency, std::size_t index,
    std::vector<bool>& right_used) {
  if (index == adjacency.size()) return 0;
  VertexId best =
      oracle_matching_backtrack(adjacency, index + 1, right_used);
  for (VertexId q : adjacency[index]) {
    if (right_used[static_cast<std::size_t>(q)]) continue;
    right_used[static_cast<std::size_t>(q)] = true;
    const VertexId with =
        1 + oracle_matching_backtrack(adjacency, index + 1, right_used);
    right_used[static_cast<std::size_t>(q)] = false;
    if (with > best) best = with;
  }
  return best;
}

// Branches on the first edge not yet covered: one of its endpoints must
// join the cover. Prunes once the current choice count reaches the best.
inline void oracle_cover_branch(const std::vector<Edge>& edges,
                                std::vector<bool>& left_chosen,
                                std::vector<bool>& right_chosen,
                                VertexId chosen, VertexId& best) {
  if (chosen >= best) return;
  const Edge* uncovered = nullptr;
  for (const Edge& e : edges) {
    if (!left_chosen[static_cast<std::size_t>(e.left)] &&
        !right_chosen[static_cast<std::size_t>(e.right)]) {
      uncovered = &e;
      break;
    }
  }
  if (uncovered == nullptr) {
    best = chosen;
    return;
  }
  left_chosen[static_cast<std::size_t>(uncovered->left)] = true;
  oracle_cover_branch(edges, left_chosen, right_chosen, chosen + 1, best);
  left_chosen[static_cast<std::size_t>(uncovered->left)] = false;

  right_chosen[static_cast<std::size_t>(uncovered->right)] = true;
  oracle_cover_branch(edges, left_chosen, right_chosen, chosen + 1, best);
  right_chosen[static_cast<std::size_t>(uncovered->right)] = false;
}

}  // namespace detail

/// Exact maximum size of a pairwise vertex-disjoint edge set, by
/// exhaustive backtracking. Rejects instances with more than `edge_limit`
/// edges.
inline VertexId brute_force_max_matching(
    const BipartiteGraph& graph,
    std::size_t edge_limit = kDefaultMatchingOracleEdgeLimit) {
  if (graph.edge_count() > edge_limit) {
    throw std::invalid_argument(
        "matching oracle limited to " + std::to_string(edge_limit) +
        " edges, got " + std::to_string(graph.edge_count()));
  }
  // Group edges by left endpoint, keeping only occupied left vertices.
  std::vector<std::vector<VertexId>> adjacency;
  for (VertexId p = 0; p < graph.left_count(); ++p) {
    const auto row = graph.neighbors_of_left(p);
    if (!row.empty()) adjacency.emplace_back(row.begin(), row.end());
  }
  std::vector<bool> right_used(static_cast<std::size_t>(graph.right_count()));
  return detail::oracle_matching_backtrack(adjacency, 0, right_used);
}

/// Exact minimum number of vertices covering every edge, by branching on
/// uncovered edges. Rejects instances with more than `vertex_limit`
/// vertices in total.
inline VertexId brute_force_min_cover(
    const BipartiteGraph& graph,
    std::size_t vertex_limit = kDefaultCoverOracleVertexLimit) {
  const std::size_t total = static_cast<std::size_t>(graph.left_count()) +
                            static_cast<std::size_t>(graph.right_count());
  if (total > vertex_limit) {
    throw std::invalid_argument(
        "cover oracle limited to " + std::to_string(vertex_limit) +
        " vertices, got " + std::to_string(total));
  }
  const std::vector<Edge> edges = graph.edges();
  std::vector<bool> left_chosen(static_cast<std::size_t>(graph.left_count()));
  std::vector<bool> right_chosen(
      static_cast<std::size_t>(graph.right_count()));
  // No cover needs more vertices than there are edges.
  VertexId best = static_cast<VertexId>(edges.size());
  detail::oracle_cover_branch(edges, left_chosen, right_chosen, 0, best);
  return best;
}

/// Streams every bipartite graph with the given side sizes exactly once:
/// all 2^(left * right) edge subsets, in ascending bitmask order (bit
/// k stands for the edge (k / right_count, k % right_count)).
class GraphEnumerator {
 public:
  GraphEnumerator(VertexId left_count, VertexId right_count,
                  std::size_t cell_limit = 16)
      : left_count_(left_count), right_count_(right_count) {
    if (left_count < 0 || right_count < 0) {
      throw std::invalid_argument("side sizes must be nonnegative");
    }
    const std::size_t cells = static_cast<std::size_t>(left_count) *
                              static_cast<std::size_t>(right_count);
    if (cells > cell_limit) {
      throw std::invalid_argument(
          "exhaustive enumeration limited to " + std::to_string(cell_limit) +
          " cells, got " + std::to_string(cells));
    }
    total_ = std::uint64_t{1} << cells;
  }

  std::uint64_t total() const { return total_; }

  /// Next graph in the stream, or std::nullopt once exhausted.
  std::optional<BipartiteGraph> next() {
    if (mask_ >= total_) return std::nullopt;
    std::vector<Edge> edges;
    for (std::uint64_t bits = mask_; bits != 0; bits &= bits - 1) {
      const int k = std::countr_zero(bits);
      edges.push_back({static_cast<VertexId>(k / right_count_),
                       static_cast<VertexId>(k % right_count_)});
    }
    ++mask_;
    return BipartiteGraph(left_count_, right_count_, std::move(edges));
  }

 private:
  VertexId left_count_;
  VertexId right_count_;
  std::uint64_t total_ = 0;
  std::uint64_t mask_ = 0;
};

inline GraphEnumerator enumerate_bipartite_graphs(VertexId left_count,
                                                  VertexId right_count,
                                                  std::size_t cell_limit = 16) {
  return GraphEnumerator(left_count, right_count, cell_limit);
}

}  // namespace konig
