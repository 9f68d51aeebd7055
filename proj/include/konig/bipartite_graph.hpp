#pragma once

// Immutable bipartite graph over a fixed left/right vertex bipartition,
// stored as sorted CSR adjacency in both directions, plus a 2-coloring
// routine that turns a general undirected graph into one (or reports an
// odd cycle as the witness of non-bipartiteness).

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace konig {

using VertexId = std::int32_t;

/// Sentinel for "no vertex" (e.g. an unmatched slot in pairing arrays).
inline constexpr VertexId kNoVertex = -1;

enum class Side { left, right };

/// An edge joining left vertex `left` to right vertex `right`.
struct Edge {
  VertexId left = 0;
  VertexId right = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

inline std::string edge_to_string(VertexId left, VertexId right) {
  return "(" + std::to_string(left) + ", " + std::to_string(right) + ")";
}

}  // namespace detail

/// Bipartite graph with `left_count()` left vertices and `right_count()`
/// right vertices, both indexed densely from 0. Adjacency lists are
/// strictly increasing; parallel edges collapse at construction. The
/// reverse adjacency is kept as the exact transpose. Instances are
/// immutable after construction and safe to share across threads.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds the graph from an edge list. Duplicate edges collapse to one.
  /// Throws std::invalid_argument naming the offending edge if an index
  /// is out of bounds.
  BipartiteGraph(VertexId left_count, VertexId right_count,
                 std::vector<Edge> edges)
      : left_count_(left_count), right_count_(right_count) {
    if (left_count < 0 || right_count < 0) {
      throw std::invalid_argument("vertex counts must be nonnegative");
    }
    for (const Edge& e : edges) {
      if (e.left < 0 || e.left >= left_count_ || e.right < 0 ||
          e.right >= right_count_) {
        throw std::invalid_argument(
            "edge " + detail::edge_to_string(e.left, e.right) +
            " out of bounds for " + std::to_string(left_count_) + "x" +
            std::to_string(right_count_) + " graph");
      }
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    left_offsets_.assign(static_cast<std::size_t>(left_count_) + 1, 0);
    right_offsets_.assign(static_cast<std::size_t>(right_count_) + 1, 0);
    left_targets_.resize(edges.size());
    right_targets_.resize(edges.size());

    for (const Edge& e : edges) {
      ++left_offsets_[static_cast<std::size_t>(e.left) + 1];
      ++right_offsets_[static_cast<std::size_t>(e.right) + 1];
    }
    for (std::size_t i = 1; i < left_offsets_.size(); ++i) {
      left_offsets_[i] += left_offsets_[i - 1];
    }
    for (std::size_t i = 1; i < right_offsets_.size(); ++i) {
      right_offsets_[i] += right_offsets_[i - 1];
    }

    // Edges are sorted by (left, right), so each left row fills in
    // ascending right order; scanning them in that order also fills each
    // right row in ascending left order.
    std::vector<std::size_t> left_fill(left_offsets_.begin(),
                                       left_offsets_.end() - 1);
    std::vector<std::size_t> right_fill(right_offsets_.begin(),
                                        right_offsets_.end() - 1);
    for (const Edge& e : edges) {
      left_targets_[left_fill[static_cast<std::size_t>(e.left)]++] = e.right;
      right_targets_[right_fill[static_cast<std::size_t>(e.right)]++] = e.left;
    }
  }

  VertexId left_count() const { return left_count_; }
  VertexId right_count() const { return right_count_; }
  std::size_t edge_count() const { return left_targets_.size(); }

  /// Right neighbors of left vertex `p`, strictly increasing.
  std::span<const VertexId> neighbors_of_left(VertexId p) const {
    assert(p >= 0 && p < left_count_);
    const auto u = static_cast<std::size_t>(p);
    return {left_targets_.data() + left_offsets_[u],
            left_offsets_[u + 1] - left_offsets_[u]};
  }

  /// Left neighbors of right vertex `q`, strictly increasing.
  std::span<const VertexId> neighbors_of_right(VertexId q) const {
    assert(q >= 0 && q < right_count_);
    const auto v = static_cast<std::size_t>(q);
    return {right_targets_.data() + right_offsets_[v],
            right_offsets_[v + 1] - right_offsets_[v]};
  }

  bool has_edge(VertexId p, VertexId q) const {
    if (p < 0 || p >= left_count_ || q < 0 || q >= right_count_) return false;
    const auto row = neighbors_of_left(p);
    return std::binary_search(row.begin(), row.end(), q);
  }

  /// All edges in ascending (left, right) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId p = 0; p < left_count_; ++p) {
      for (VertexId q : neighbors_of_left(p)) out.push_back({p, q});
    }
    return out;
  }

 private:
  VertexId left_count_ = 0;
  VertexId right_count_ = 0;
  std::vector<std::size_t> left_offsets_{0};
  std::vector<std::size_t> right_offsets_{0};
  std::vector<VertexId> left_targets_;
  std::vector<VertexId> right_targets_;
};

/// Adjacency of one vertex, selected by side. Out-of-bounds indices are
/// rejected.
inline std::span<const VertexId> neighbors(const BipartiteGraph& graph,
                                           Side side, VertexId index) {
  const VertexId count =
      side == Side::left ? graph.left_count() : graph.right_count();
  if (index < 0 || index >= count) {
    throw std::invalid_argument("vertex index " + std::to_string(index) +
                                " out of bounds");
  }
  return side == Side::left ? graph.neighbors_of_left(index)
                            : graph.neighbors_of_right(index);
}

/// Raised when a general graph admits no bipartition. Carries one odd
/// cycle as a vertex sequence: consecutive vertices are adjacent in the
/// input, the last is adjacent to the first, and the length is odd.
class NonBipartiteError : public std::runtime_error {
 public:
  explicit NonBipartiteError(std::vector<VertexId> cycle)
      : std::runtime_error("graph is not bipartite: odd cycle of length " +
                           std::to_string(cycle.size())),
        odd_cycle_(std::move(cycle)) {}

  const std::vector<VertexId>& odd_cycle() const { return odd_cycle_; }

 private:
  std::vector<VertexId> odd_cycle_;
};

/// Result of 2-coloring a general graph: the bipartite view plus the
/// mapping between original vertex ids and dense per-side indices.
struct GeneralPartition {
  BipartiteGraph graph;
  std::vector<Side> side_of;            // per original vertex
  std::vector<VertexId> index_in_side;  // per original vertex
  std::vector<VertexId> left_vertices;  // original id per left index
  std::vector<VertexId> right_vertices;  // original id per right index
};

namespace detail {

// Rotates/reflects a simple cycle to start at its smallest vertex, taking
// the direction with the smaller successor. Makes witnesses reproducible.
inline std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
  if (cycle.empty()) return cycle;
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

}  // namespace detail

/// 2-colors a general undirected graph, assigning each BFS root (and every
/// isolated vertex) to the left side. Returns the induced bipartite graph
/// together with the vertex correspondence; the edge sets agree exactly up
/// to duplicate collapse. Throws NonBipartiteError with an odd-cycle
/// witness if no 2-coloring exists, and std::invalid_argument on self-loops
/// or out-of-bounds endpoints.
inline GeneralPartition partition_general_graph(
    VertexId vertex_count,
    const std::vector<std::pair<VertexId, VertexId>>& undirected_edges) {
  if (vertex_count < 0) {
    throw std::invalid_argument("vertex count must be nonnegative");
  }
  const auto n = static_cast<std::size_t>(vertex_count);

  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [u, v] : undirected_edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw std::invalid_argument("edge " + detail::edge_to_string(u, v) +
                                  " out of bounds for " +
                                  std::to_string(vertex_count) + " vertices");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  constexpr std::int8_t kUncolored = -1;
  std::vector<std::int8_t> color(n, kUncolored);  // 0 = left, 1 = right
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<VertexId> depth(n, 0);

  for (VertexId root = 0; root < vertex_count; ++root) {
    if (color[static_cast<std::size_t>(root)] != kUncolored) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop();
      const auto ui = static_cast<std::size_t>(u);
      for (VertexId v : adj[ui]) {
        const auto vi = static_cast<std::size_t>(v);
        if (color[vi] == kUncolored) {
          color[vi] = static_cast<std::int8_t>(1 - color[ui]);
          parent[vi] = u;
          depth[vi] = depth[ui] + 1;
          queue.push(v);
        } else if (color[vi] == color[ui]) {
          // Same-color edge closes an odd cycle through the BFS tree:
          // climb both endpoints to their lowest common ancestor.
          VertexId a = u;
          VertexId b = v;
          std::vector<VertexId> from_a{a};
          std::vector<VertexId> from_b{b};
          while (depth[static_cast<std::size_t>(a)] >
                 depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            from_a.push_back(a);
          }
          while (depth[static_cast<std::size_t>(b)] >
                 depth[static_cast<std::size_t>(a)]) {
            b = parent[static_cast<std::size_t>(b)];
            from_b.push_back(b);
          }
          while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
            from_a.push_back(a);
            from_b.push_back(b);
          }
          // from_a ends at the ancestor, from_b holds the way back to v.
          std::vector<VertexId> cycle(from_a.begin(), from_a.end());
          cycle.insert(cycle.end(), from_b.rbegin() + 1, from_b.rend());
          throw NonBipartiteError(detail::canonical_cycle(std::move(cycle)));
        }
      }
    }
  }

  GeneralPartition result;
  result.side_of.resize(n);
  result.index_in_side.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] == 0) {
      result.side_of[v] = Side::left;
      result.index_in_side[v] =
          static_cast<VertexId>(result.left_vertices.size());
      result.left_vertices.push_back(static_cast<VertexId>(v));
    } else {
      result.side_of[v] = Side::right;
      result.index_in_side[v] =
          static_cast<VertexId>(result.right_vertices.size());
      result.right_vertices.push_back(static_cast<VertexId>(v));
    }
  }

  std::vector<Edge> edges;
  edges.reserve(undirected_edges.size());
  for (const auto& [u, v] : undirected_edges) {
    const auto ui = static_cast<std::size_t>(u);
    const auto vi = static_cast<std::size_t>(v);
    const VertexId left = result.side_of[ui] == Side::left ? u : v;
    const VertexId right = result.side_of[ui] == Side::left ? v : u;
    edges.push_back({result.index_in_side[static_cast<std::size_t>(left)],
                     result.index_in_side[static_cast<std::size_t>(right)]});
  }
  result.graph = BipartiteGraph(
      static_cast<VertexId>(result.left_vertices.size()),
      static_cast<VertexId>(result.right_vertices.size()), std::move(edges));
  return result;
}

}  // namespace konig
