#pragma once

// Minimum vertex cover extraction from a maximum matching. Alternating
// reachability is computed once, by breadth-first closure from all
// exposed left vertices; each matched pair then contributes its right
// endpoint when that endpoint is reachable and its left endpoint
// otherwise. The resulting cover has exactly the matching's size, so the
// matching/cover pair certifies both optima at once.

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "konig/bipartite_graph.hpp"
#include "konig/matching.hpp"

namespace konig {

/// Vertices covering every edge of the graph.
struct VertexCover {
  std::vector<VertexId> left_vertices;   // ascending
  std::vector<VertexId> right_vertices;  // ascending
  VertexId size = 0;
};

/// Vertex sets reachable by alternating paths from the exposed left
/// vertices (which are themselves included). Against a maximum matching,
/// every reachable right vertex is matched.
struct AlternatingReachability {
  std::vector<bool> reachable_left;
  std::vector<bool> reachable_right;
};

/// Raised when alternating reachability runs into an exposed right
/// vertex: the matching was not maximum, and the discovered augmenting
/// path proves it.
class NotMaximumError : public std::runtime_error {
 public:
  explicit NotMaximumError(KPath path)
      : std::runtime_error(
            "matching is not maximum: found an augmenting path of " +
            std::to_string(path.edge_count()) + " edges"),
        augmenting_path_(std::move(path)) {}

  const KPath& augmenting_path() const { return augmenting_path_; }

 private:
  KPath augmenting_path_;
};

/// Breadth-first closure over alternating paths: an unmatched edge leads
/// left to right, a matched edge leads right to left. Starts from every
/// exposed left vertex simultaneously. Throws NotMaximumError (naming the
/// augmenting path) if an exposed right vertex turns out reachable.
inline AlternatingReachability alternating_reachability(
    const BipartiteGraph& graph, const Matching& maximum) {
  assert(!verify_matching(graph, maximum));
  AlternatingReachability reach;
  reach.reachable_left.assign(static_cast<std::size_t>(graph.left_count()),
                              false);
  reach.reachable_right.assign(static_cast<std::size_t>(graph.right_count()),
                               false);

  std::vector<VertexId> reached_from(
      static_cast<std::size_t>(graph.right_count()), kNoVertex);
  std::vector<VertexId> frontier;
  for (VertexId p = 0; p < graph.left_count(); ++p) {
    if (maximum.left_exposed(p)) {
      reach.reachable_left[static_cast<std::size_t>(p)] = true;
      frontier.push_back(p);
    }
  }

  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const VertexId p = frontier[head];
    for (VertexId q : graph.neighbors_of_left(p)) {
      const auto qi = static_cast<std::size_t>(q);
      if (reach.reachable_right[qi]) continue;
      if (maximum.pair_of_left[static_cast<std::size_t>(p)] == q) continue;
      reach.reachable_right[qi] = true;
      reached_from[qi] = p;
      const VertexId partner = maximum.pair_of_right[qi];
      if (partner == kNoVertex) {
        // The closure walked into an augmenting path; reconstruct it.
        KPath path;
        VertexId right = q;
        while (true) {
          const VertexId left = reached_from[static_cast<std::size_t>(right)];
          path.vertices.push_back(right);
          path.vertices.push_back(left);
          if (maximum.left_exposed(left)) break;
          right = maximum.pair_of_left[static_cast<std::size_t>(left)];
        }
        std::reverse(path.vertices.begin(), path.vertices.end());
        path.edge_in_matching.resize(path.vertices.size() - 1);
        for (std::size_t i = 0; i < path.edge_in_matching.size(); ++i) {
          path.edge_in_matching[i] = i % 2 == 1;
        }
        throw NotMaximumError(std::move(path));
      }
      reach.reachable_left[static_cast<std::size_t>(partner)] = true;
      frontier.push_back(partner);
    }
  }
  return reach;
}

/// Builds the minimum vertex cover from a maximum matching: for each
/// matched pair, the right endpoint if reachable by an alternating path
/// from an exposed left vertex, else the left endpoint. The cover size
/// equals the matching size.
inline VertexCover extract_cover(const BipartiteGraph& graph,
                                 const Matching& maximum) {
  const AlternatingReachability reach =
      alternating_reachability(graph, maximum);
  VertexCover cover;
  for (VertexId p = 0; p < graph.left_count(); ++p) {
    const VertexId q = maximum.pair_of_left[static_cast<std::size_t>(p)];
    if (q == kNoVertex) continue;
    if (reach.reachable_right[static_cast<std::size_t>(q)]) {
      cover.right_vertices.push_back(q);
    } else {
      cover.left_vertices.push_back(p);
    }
  }
  std::sort(cover.right_vertices.begin(), cover.right_vertices.end());
  cover.size = static_cast<VertexId>(cover.left_vertices.size() +
                                     cover.right_vertices.size());
  assert(cover.size == maximum.size);
  return cover;
}

/// Scans every edge and returns the first one with neither endpoint in
/// the cover (in ascending (left, right) order), or std::nullopt when the
/// cover is valid.
inline std::optional<Edge> verify_cover(const BipartiteGraph& graph,
                                        const VertexCover& cover) {
  std::vector<bool> in_left(static_cast<std::size_t>(graph.left_count()));
  std::vector<bool> in_right(static_cast<std::size_t>(graph.right_count()));
  for (VertexId p : cover.left_vertices) {
    if (p >= 0 && p < graph.left_count())
      in_left[static_cast<std::size_t>(p)] = true;
  }
  for (VertexId q : cover.right_vertices) {
    if (q >= 0 && q < graph.right_count())
      in_right[static_cast<std::size_t>(q)] = true;
  }
  for (VertexId p = 0; p < graph.left_count(); ++p) {
    if (in_left[static_cast<std::size_t>(p)]) continue;
    for (VertexId q : graph.neighbors_of_left(p)) {
      if (!in_right[static_cast<std::size_t>(q)]) return Edge{p, q};
    }
  }
  return std::nullopt;
}

/// Maximum matching and minimum vertex cover of equal size: each is the
/// optimality certificate of the other (no cover can be smaller than any
/// matching, and no matching larger than any cover).
inline std::pair<Matching, VertexCover> konig_certificate(
    const BipartiteGraph& graph,
    MatchingStrategy strategy = MatchingStrategy::layered) {
  Matching matching = maximum_matching(graph, strategy);
  VertexCover cover = extract_cover(graph, matching);
  return {std::move(matching), std::move(cover)};
}

/// Which of the four endpoint configurations an edge falls into, given a
/// maximum matching: both endpoints exposed (impossible at maximality),
/// only the left exposed, only the right exposed, or both matched.
enum class EdgeCase : std::size_t {
  both_exposed = 0,
  left_exposed = 1,
  right_exposed = 2,
  both_matched = 3,
};

/// Per-edge audit of the cover extraction rule. `counts` tallies edges by
/// EdgeCase; `violations` lists every edge whose case-specific coverage
/// reason fails to hold. A correct extraction yields no violations and no
/// both-exposed edges.
struct CoverCaseDiagnostics {
  std::array<std::size_t, 4> counts{};
  std::vector<std::string> violations;

  bool ok() const { return violations.empty() && counts[0] == 0; }
};

/// Classifies every edge against the matching, the reachability closure,
/// and the extracted cover, checking the reason each edge is covered:
///   - both endpoints exposed: contradiction with maximality, recorded as
///     a violation;
///   - left exposed: the edge alone is an alternating path, so the right
///     endpoint must be reachable and chosen;
///   - right exposed: the left endpoint's matched partner must be
///     unreachable (else the closure would extend to this exposed right
///     vertex), so the left endpoint is chosen;
///   - both matched: either the left endpoint is chosen, or its partner
///     is reachable, in which case the closure must also reach the right
///     endpoint, making it chosen.
inline CoverCaseDiagnostics classify_cover_cases(
    const BipartiteGraph& graph, const Matching& maximum,
    const AlternatingReachability& reach, const VertexCover& cover) {
  CoverCaseDiagnostics diag;
  std::vector<bool> in_left(static_cast<std::size_t>(graph.left_count()));
  std::vector<bool> in_right(static_cast<std::size_t>(graph.right_count()));
  for (VertexId p : cover.left_vertices)
    in_left[static_cast<std::size_t>(p)] = true;
  for (VertexId q : cover.right_vertices)
    in_right[static_cast<std::size_t>(q)] = true;

  const auto complain = [&diag](VertexId p, VertexId q,
                                const std::string& why) {
    diag.violations.push_back("edge " + detail::edge_to_string(p, q) + ": " +
                              why);
  };

  for (VertexId p = 0; p < graph.left_count(); ++p) {
    const auto pi = static_cast<std::size_t>(p);
    for (VertexId q : graph.neighbors_of_left(p)) {
      const auto qi = static_cast<std::size_t>(q);
      const bool p_exposed = maximum.left_exposed(p);
      const bool q_exposed = maximum.right_exposed(q);
      EdgeCase edge_case;
      if (p_exposed && q_exposed) {
        edge_case = EdgeCase::both_exposed;
        complain(p, q, "both endpoints exposed, contradicting maximality");
      } else if (p_exposed) {
        edge_case = EdgeCase::left_exposed;
        if (!reach.reachable_right[qi]) {
          complain(p, q,
                   "right endpoint not reachable despite the exposed left "
                   "endpoint");
        } else if (!in_right[qi]) {
          complain(p, q, "reachable right endpoint not in the cover");
        }
      } else if (q_exposed) {
        edge_case = EdgeCase::right_exposed;
        const VertexId partner = maximum.pair_of_left[pi];
        if (reach.reachable_right[static_cast<std::size_t>(partner)]) {
          complain(p, q,
                   "matched partner of the left endpoint is reachable, so "
                   "the closure should have reached this exposed right "
                   "vertex");
        } else if (!in_left[pi]) {
          complain(p, q, "left endpoint not in the cover");
        }
      } else {
        edge_case = EdgeCase::both_matched;
        const VertexId p_partner = maximum.pair_of_left[pi];
        if (p_partner == q) {
          if (in_left[pi] == in_right[qi]) {
            complain(p, q,
                     "matched edge must have exactly one endpoint in the "
                     "cover");
          }
        } else if (!in_left[pi]) {
          // The left endpoint was skipped, so its partner is reachable;
          // the closure then crosses this edge to the right endpoint.
          if (!reach.reachable_right[qi] || !in_right[qi]) {
            complain(p, q,
                     "left endpoint skipped but right endpoint not "
                     "reachable and covered");
          }
        }
      }
      ++diag.counts[static_cast<std::size_t>(edge_case)];
    }
  }
  return diag;
}

}  // namespace konig
