#pragma once

// Matrix-side view of the matching/cover duality. A sparsity pattern is
// the set of positions whose element satisfies a caller-chosen predicate
// (by default: nonzero); rows map to left vertices and columns to right
// vertices, one edge per entry. Structural rank, maximum transversal and
// minimum line cover then follow from the graph-side certificates.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "konig/bipartite_graph.hpp"
#include "konig/cover.hpp"
#include "konig/matching.hpp"

namespace konig {

using MatrixIndex = VertexId;

/// A (row, column) position.
struct MatrixPosition {
  MatrixIndex row = 0;
  MatrixIndex col = 0;

  friend bool operator==(const MatrixPosition&, const MatrixPosition&) =
      default;
  friend auto operator<=>(const MatrixPosition&, const MatrixPosition&) =
      default;
};

/// One stored element of a matrix, for predicate-based pattern building.
template <typename T>
struct MatrixEntry {
  MatrixIndex row = 0;
  MatrixIndex col = 0;
  T value{};
};

/// The positions of a p x q matrix that count as entries. Stored sorted
/// row-major and deduplicated; immutable after construction.
class SparsityPattern {
 public:
  SparsityPattern() = default;

  SparsityPattern(MatrixIndex row_count, MatrixIndex col_count,
                  std::vector<MatrixPosition> entries)
      : row_count_(row_count), col_count_(col_count) {
    if (row_count < 0 || col_count < 0) {
      throw std::invalid_argument("matrix dimensions must be nonnegative");
    }
    for (const MatrixPosition& pos : entries) {
      if (pos.row < 0 || pos.row >= row_count_ || pos.col < 0 ||
          pos.col >= col_count_) {
        throw std::invalid_argument(
            "position " + detail::edge_to_string(pos.row, pos.col) +
            " out of bounds for " + std::to_string(row_count_) + "x" +
            std::to_string(col_count_) + " matrix");
      }
    }
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    entries_ = std::move(entries);
  }

  MatrixIndex row_count() const { return row_count_; }
  MatrixIndex col_count() const { return col_count_; }
  const std::vector<MatrixPosition>& entries() const { return entries_; }

 private:
  MatrixIndex row_count_ = 0;
  MatrixIndex col_count_ = 0;
  std::vector<MatrixPosition> entries_;  // sorted row-major
};

/// Rows and columns (collectively: lines) that together contain every
/// entry of a pattern.
struct LineCover {
  std::vector<MatrixIndex> rows;  // ascending
  std::vector<MatrixIndex> cols;  // ascending
  MatrixIndex size = 0;
};

/// Entries that pairwise share no line. The maximum transversal size is
/// the structural rank.
struct Transversal {
  std::vector<MatrixPosition> positions;  // sorted row-major
};

/// Builds the pattern of positions whose element satisfies `predicate`.
/// The combinatorics downstream see only the surviving positions, never
/// the element values, so any element type works.
/// The predicate sees either the element alone or, when it takes three
/// arguments, the position as well: `p(value)` or `p(row, col, value)`.
template <typename T, typename Predicate>
SparsityPattern pattern_from_values(MatrixIndex row_count,
                                    MatrixIndex col_count,
                                    const std::vector<MatrixEntry<T>>& values,
                                    Predicate&& predicate) {
  std::vector<MatrixPosition> entries;
  for (const MatrixEntry<T>& entry : values) {
    bool keep = false;
    if constexpr (std::is_invocable_v<Predicate&, const T&>) {
      keep = predicate(entry.value);
    } else {
      keep = predicate(entry.row, entry.col, entry.value);
    }
    if (keep) {
      entries.push_back({entry.row, entry.col});
    }
  }
  return SparsityPattern(row_count, col_count, std::move(entries));
}

/// Default predicate: an element counts when it is not zero.
template <typename T>
SparsityPattern pattern_from_values(
    MatrixIndex row_count, MatrixIndex col_count,
    const std::vector<MatrixEntry<T>>& values) {
  static_assert(std::is_arithmetic_v<T>,
                "the default predicate needs arithmetic elements; pass an "
                "explicit predicate otherwise");
  return pattern_from_values(row_count, col_count, values,
                             [](const T& v) { return v != T{0}; });
}

/// The bipartite graph of a pattern: one left vertex per row, one right
/// vertex per column, one edge per entry, nothing else.
inline BipartiteGraph to_graph(const SparsityPattern& pattern) {
  std::vector<Edge> edges;
  edges.reserve(pattern.entries().size());
  for (const MatrixPosition& pos : pattern.entries()) {
    edges.push_back({pos.row, pos.col});
  }
  return BipartiteGraph(pattern.row_count(), pattern.col_count(),
                        std::move(edges));
}

/// Maximum number of entries that pairwise share no line; at most
/// min(row_count, col_count).
inline MatrixIndex structural_rank(
    const SparsityPattern& pattern,
    MatchingStrategy strategy = MatchingStrategy::layered) {
  return maximum_matching(to_graph(pattern), strategy).size;
}

/// A maximum set of entries pairwise sharing no line, mapped back from a
/// maximum matching of the pattern's graph.
inline Transversal maximum_transversal(
    const SparsityPattern& pattern,
    MatchingStrategy strategy = MatchingStrategy::layered) {
  const Matching matching = maximum_matching(to_graph(pattern), strategy);
  Transversal transversal;
  transversal.positions.reserve(static_cast<std::size_t>(matching.size));
  for (std::size_t row = 0; row < matching.pair_of_left.size(); ++row) {
    if (matching.pair_of_left[row] != kNoVertex) {
      transversal.positions.push_back(
          {static_cast<MatrixIndex>(row), matching.pair_of_left[row]});
    }
  }
  return transversal;
}

/// A smallest set of lines containing every entry, mapped back from the
/// extracted vertex cover; its size equals the structural rank.
inline LineCover minimum_line_cover(
    const SparsityPattern& pattern,
    MatchingStrategy strategy = MatchingStrategy::layered) {
  const auto [matching, cover] =
      konig_certificate(to_graph(pattern), strategy);
  LineCover lines;
  lines.rows = cover.left_vertices;
  lines.cols = cover.right_vertices;
  lines.size = cover.size;
  return lines;
}

/// Returns the first entry (row-major) lying in no chosen line, or
/// std::nullopt when the cover is valid.
inline std::optional<MatrixPosition> verify_line_cover(
    const SparsityPattern& pattern, const LineCover& cover) {
  std::vector<bool> row_chosen(static_cast<std::size_t>(pattern.row_count()));
  std::vector<bool> col_chosen(static_cast<std::size_t>(pattern.col_count()));
  for (MatrixIndex r : cover.rows) {
    if (r >= 0 && r < pattern.row_count())
      row_chosen[static_cast<std::size_t>(r)] = true;
  }
  for (MatrixIndex c : cover.cols) {
    if (c >= 0 && c < pattern.col_count())
      col_chosen[static_cast<std::size_t>(c)] = true;
  }
  for (const MatrixPosition& pos : pattern.entries()) {
    if (!row_chosen[static_cast<std::size_t>(pos.row)] &&
        !col_chosen[static_cast<std::size_t>(pos.col)]) {
      return pos;
    }
  }
  return std::nullopt;
}

}  // namespace konig
