#pragma once

// Maximum bipartite matching by alternating-path search. The simple
// strategy grows the matching one augmenting path at a time from the
// empty matching; the layered strategy augments along a maximal set of
// vertex-disjoint shortest paths per phase (Hopcroft-Karp). Both are
// deterministic: vertices are scanned in ascending index order.

#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "konig/bipartite_graph.hpp"

namespace konig {

/// A set of vertex-disjoint edges, stored as mutually consistent pairing
/// arrays; kNoVertex marks an exposed (unmatched) vertex.
struct Matching {
  std::vector<VertexId> pair_of_left;
  std::vector<VertexId> pair_of_right;
  VertexId size = 0;

  Matching() = default;
  Matching(VertexId left_count, VertexId right_count)
      : pair_of_left(static_cast<std::size_t>(left_count), kNoVertex),
        pair_of_right(static_cast<std::size_t>(right_count), kNoVertex) {}

  bool left_exposed(VertexId p) const {
    return pair_of_left[static_cast<std::size_t>(p)] == kNoVertex;
  }
  bool right_exposed(VertexId q) const {
    return pair_of_right[static_cast<std::size_t>(q)] == kNoVertex;
  }

  /// Matched edges in ascending left order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(size));
    for (std::size_t p = 0; p < pair_of_left.size(); ++p) {
      if (pair_of_left[p] != kNoVertex) {
        out.push_back({static_cast<VertexId>(p), pair_of_left[p]});
      }
    }
    return out;
  }
};

/// An alternating path, stored as its vertex sequence. Vertices at even
/// positions are left indices and vertices at odd positions are right
/// indices; the first vertex is an exposed left vertex. Edge i of the
/// path is matched exactly when `edge_in_matching[i]` (odd positions for
/// a path taken against a matching).
struct KPath {
  std::vector<VertexId> vertices;
  std::vector<bool> edge_in_matching;

  std::size_t edge_count() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
};

/// Checks the matching against the graph: pairing arrays mutually
/// consistent, every matched pair an actual edge, no vertex reused, and
/// the size field accurate. Returns the first violation found, or
/// std::nullopt when valid.
inline std::optional<std::string> verify_matching(const BipartiteGraph& graph,
                                                  const Matching& matching) {
  if (matching.pair_of_left.size() !=
          static_cast<std::size_t>(graph.left_count()) ||
      matching.pair_of_right.size() !=
          static_cast<std::size_t>(graph.right_count())) {
    return "pairing arrays do not match the graph dimensions";
  }
  VertexId matched_left = 0;
  for (std::size_t p = 0; p < matching.pair_of_left.size(); ++p) {
    const VertexId q = matching.pair_of_left[p];
    if (q == kNoVertex) continue;
    ++matched_left;
    if (q < 0 || q >= graph.right_count()) {
      return "left vertex " + std::to_string(p) +
             " paired with out-of-bounds right vertex " + std::to_string(q);
    }
    if (matching.pair_of_right[static_cast<std::size_t>(q)] !=
        static_cast<VertexId>(p)) {
      return "shared vertex: right vertex " + std::to_string(q) +
             " claimed by left vertex " + std::to_string(p) +
             " but paired with " +
             std::to_string(matching.pair_of_right[static_cast<std::size_t>(q)]);
    }
    if (!graph.has_edge(static_cast<VertexId>(p), q)) {
      return "pair " + detail::edge_to_string(static_cast<VertexId>(p), q) +
             " is not an edge of the graph";
    }
  }
  VertexId matched_right = 0;
  for (std::size_t q = 0; q < matching.pair_of_right.size(); ++q) {
    const VertexId p = matching.pair_of_right[q];
    if (p == kNoVertex) continue;
    ++matched_right;
    if (p < 0 || p >= graph.left_count() ||
        matching.pair_of_left[static_cast<std::size_t>(p)] !=
            static_cast<VertexId>(q)) {
      return "shared vertex: left vertex " + std::to_string(p) +
             " claimed by right vertex " + std::to_string(q);
    }
  }
  if (matched_left != matching.size || matched_right != matching.size) {
    return "size field " + std::to_string(matching.size) +
           " disagrees with " + std::to_string(matched_left) +
           " matched left / " + std::to_string(matched_right) +
           " matched right vertices";
  }
  return std::nullopt;
}

/// Checks that `path` is a valid augmenting alternating path for
/// `matching`: open, no repeated vertices, starts at an exposed left
/// vertex, ends at an exposed right vertex, edges alternate
/// unmatched/matched starting unmatched, and every step is a graph edge.
inline std::optional<std::string> verify_k_path(const BipartiteGraph& graph,
                                                const Matching& matching,
                                                const KPath& path) {
  const auto& seq = path.vertices;
  if (seq.size() < 2 || seq.size() % 2 != 0) {
    return "vertex sequence must have positive even length";
  }
  if (path.edge_in_matching.size() != seq.size() - 1) {
    return "edge role flags do not match the edge count";
  }
  std::vector<bool> seen_left(static_cast<std::size_t>(graph.left_count()));
  std::vector<bool> seen_right(static_cast<std::size_t>(graph.right_count()));
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const VertexId v = seq[i];
    const bool is_left = i % 2 == 0;
    const VertexId count =
        is_left ? graph.left_count() : graph.right_count();
    if (v < 0 || v >= count) {
      return "vertex " + std::to_string(v) + " at position " +
             std::to_string(i) + " out of bounds";
    }
    auto& seen = is_left ? seen_left : seen_right;
    if (seen[static_cast<std::size_t>(v)]) {
      return "repeated vertex " + std::to_string(v);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (!matching.left_exposed(seq.front())) {
    return "path does not start at an exposed left vertex";
  }
  if (!matching.right_exposed(seq.back())) {
    return "path does not end at an exposed right vertex";
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const VertexId p = i % 2 == 0 ? seq[i] : seq[i + 1];
    const VertexId q = i % 2 == 0 ? seq[i + 1] : seq[i];
    if (!graph.has_edge(p, q)) {
      return "step " + detail::edge_to_string(p, q) + " is not a graph edge";
    }
    const bool matched =
        matching.pair_of_left[static_cast<std::size_t>(p)] == q;
    const bool expected = i % 2 == 1;  // 2nd, 4th, ... edges are matched
    if (matched != expected) {
      return "edge " + std::to_string(i) + " of the path is " +
             (matched ? "matched" : "unmatched") + " but should be " +
             (expected ? "matched" : "unmatched");
    }
    if (path.edge_in_matching[i] != expected) {
      return "edge role flag " + std::to_string(i) + " is wrong";
    }
  }
  return std::nullopt;
}

/// Breadth-first search for an augmenting alternating path: start from
/// every exposed left vertex at once, alternate unmatched edges (left to
/// right) with matched edges (right to left), and stop at the first
/// exposed right vertex reached. Adjacency is scanned in ascending order,
/// so the result is deterministic. Returns std::nullopt when no such path
/// exists, which certifies that the matching is maximum.
inline std::optional<KPath> find_augmenting_k_path(const BipartiteGraph& graph,
                                                   const Matching& matching) {
  assert(!verify_matching(graph, matching));
  // Per right vertex, the left vertex whose unmatched edge first reached
  // it; kNoVertex while unvisited.
  std::vector<VertexId> reached_from(
      static_cast<std::size_t>(graph.right_count()), kNoVertex);
  std::queue<VertexId> queue;
  for (VertexId p = 0; p < graph.left_count(); ++p) {
    if (matching.left_exposed(p)) queue.push(p);
  }

  while (!queue.empty()) {
    const VertexId p = queue.front();
    queue.pop();
    for (VertexId q : graph.neighbors_of_left(p)) {
      if (reached_from[static_cast<std::size_t>(q)] != kNoVertex) continue;
      reached_from[static_cast<std::size_t>(q)] = p;
      const VertexId partner =
          matching.pair_of_right[static_cast<std::size_t>(q)];
      if (partner == kNoVertex) {
        // Exposed right vertex: walk the parent chain back to the start.
        KPath path;
        VertexId right = q;
        while (true) {
          const VertexId left = reached_from[static_cast<std::size_t>(right)];
          path.vertices.push_back(right);
          path.vertices.push_back(left);
          if (matching.left_exposed(left)) break;
          right = matching.pair_of_left[static_cast<std::size_t>(left)];
        }
        std::reverse(path.vertices.begin(), path.vertices.end());
        path.edge_in_matching.resize(path.vertices.size() - 1);
        for (std::size_t i = 0; i < path.edge_in_matching.size(); ++i) {
          path.edge_in_matching[i] = i % 2 == 1;
        }
        return path;
      }
      queue.push(partner);
    }
  }
  return std::nullopt;
}

/// Replaces the matching by its symmetric difference with an augmenting
/// path: the path's matched edges leave, its unmatched edges (one more)
/// enter, so the size grows by exactly 1. Throws std::invalid_argument if
/// the path is not a valid augmenting path for `matching`.
inline Matching augment(const Matching& matching, const KPath& path,
                        const BipartiteGraph& graph) {
  if (const auto why = verify_k_path(graph, matching, path)) {
    throw std::invalid_argument("path is not augmenting: " + *why);
  }
  Matching next = matching;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); i += 2) {
    const VertexId p = path.vertices[i];
    const VertexId q = path.vertices[i + 1];
    next.pair_of_left[static_cast<std::size_t>(p)] = q;
    next.pair_of_right[static_cast<std::size_t>(q)] = p;
  }
  ++next.size;
  return next;
}

enum class MatchingStrategy { simple, layered };

namespace detail {

inline Matching maximum_matching_simple(const BipartiteGraph& graph) {
  Matching matching(graph.left_count(), graph.right_count());
  while (auto path = find_augmenting_k_path(graph, matching)) {
    matching = augment(matching, *path, graph);
  }
  return matching;
}

// Hopcroft-Karp. Seeds greedily, then repeats: a BFS layering from the
// exposed left vertices, followed by depth-first extraction of a maximal
// set of vertex-disjoint shortest augmenting paths. The DFS is iterative;
// shortest paths can be long on large graphs.
inline Matching maximum_matching_layered(const BipartiteGraph& graph) {
  constexpr VertexId kInf = std::numeric_limits<VertexId>::max();
  const auto left_n = static_cast<std::size_t>(graph.left_count());

  Matching matching(graph.left_count(), graph.right_count());
  for (VertexId p = 0; p < graph.left_count(); ++p) {
    for (VertexId q : graph.neighbors_of_left(p)) {
      if (matching.right_exposed(q)) {
        matching.pair_of_left[static_cast<std::size_t>(p)] = q;
        matching.pair_of_right[static_cast<std::size_t>(q)] = p;
        ++matching.size;
        break;
      }
    }
  }

  std::vector<VertexId> layer(left_n);
  std::vector<std::uint32_t> cursor(left_n);
  std::vector<VertexId> stack_left;
  std::vector<VertexId> stack_right;
  std::vector<VertexId> frontier;

  while (true) {
    // BFS phase: layer the left vertices; free_layer is the length (in
    // left-vertex hops) of the shortest augmenting path, if any.
    VertexId free_layer = kInf;
    frontier.clear();
    for (VertexId p = 0; p < graph.left_count(); ++p) {
      if (matching.left_exposed(p)) {
        layer[static_cast<std::size_t>(p)] = 0;
        frontier.push_back(p);
      } else {
        layer[static_cast<std::size_t>(p)] = kInf;
      }
    }
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const VertexId p = frontier[head];
      const VertexId d = layer[static_cast<std::size_t>(p)];
      if (d + 1 >= free_layer) continue;
      for (VertexId q : graph.neighbors_of_left(p)) {
        const VertexId w = matching.pair_of_right[static_cast<std::size_t>(q)];
        if (w == kNoVertex) {
          free_layer = d + 1;
        } else if (layer[static_cast<std::size_t>(w)] == kInf) {
          layer[static_cast<std::size_t>(w)] = d + 1;
          frontier.push_back(w);
        }
      }
    }
    if (free_layer == kInf) break;

    // DFS phase along layered edges only, one explicit stack per root.
    std::fill(cursor.begin(), cursor.end(), 0);
    for (VertexId root = 0; root < graph.left_count(); ++root) {
      if (!matching.left_exposed(root)) continue;
      stack_left.assign(1, root);
      stack_right.clear();
      while (!stack_left.empty()) {
        const VertexId p = stack_left.back();
        const auto pi = static_cast<std::size_t>(p);
        const auto row = graph.neighbors_of_left(p);
        bool advanced = false;
        while (cursor[pi] < row.size()) {
          const VertexId q = row[cursor[pi]++];
          const VertexId w =
              matching.pair_of_right[static_cast<std::size_t>(q)];
          if (w == kNoVertex) {
            if (layer[pi] + 1 != free_layer) continue;
            // Found a shortest augmenting path; flip it along the stacks.
            stack_right.push_back(q);
            for (std::size_t i = stack_left.size(); i-- > 0;) {
              matching.pair_of_left[static_cast<std::size_t>(
                  stack_left[i])] = stack_right[i];
              matching.pair_of_right[static_cast<std::size_t>(
                  stack_right[i])] = stack_left[i];
            }
            ++matching.size;
            stack_left.clear();
            stack_right.clear();
            advanced = true;
            break;
          }
          if (layer[static_cast<std::size_t>(w)] == layer[pi] + 1) {
            stack_right.push_back(q);
            stack_left.push_back(w);
            advanced = true;
            break;
          }
        }
        if (!advanced) {
          // Dead end: this vertex cannot reach a free right vertex in
          // this phase.
          layer[pi] = kInf;
          stack_left.pop_back();
          if (!stack_right.empty()) stack_right.pop_back();
        }
      }
    }
  }
  return matching;
}

}  // namespace detail

/// Maximum matching of `graph`. Both strategies return a matching of the
/// true maximum size; the simple strategy is the reference (single
/// augmentation from the empty matching), the layered one the fast path.
/// Deterministic for a fixed graph and strategy.
inline Matching maximum_matching(
    const BipartiteGraph& graph,
    MatchingStrategy strategy = MatchingStrategy::layered) {
  Matching matching = strategy == MatchingStrategy::simple
                          ? detail::maximum_matching_simple(graph)
                          : detail::maximum_matching_layered(graph);
  assert(!verify_matching(graph, matching));
  return matching;
}

}  // namespace konig
