#pragma once

// Certificate reports for the command-line front end. A report always
// carries both witnesses (matching and cover, or transversal and line
// cover) with their verification verdicts; the size equality is asserted
// before anything is emitted. Rendering is deterministic so reports can
// be golden-tested byte for byte, with only the timing line varying.

#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "konig/bipartite_graph.hpp"
#include "konig/cover.hpp"
#include "konig/io.hpp"
#include "konig/matching.hpp"
#include "konig/matrix.hpp"

namespace konig {

enum class InputKind { edge_list, general_graph, matrix };

inline std::string to_string(MatchingStrategy strategy) {
  return strategy == MatchingStrategy::simple ? "simple" : "layered";
}

inline std::string to_string(PatternMode mode) {
  return mode == PatternMode::predicate ? "predicate" : "structural";
}

struct Report {
  std::string command;
  InputKind kind = InputKind::edge_list;
  std::string input_name;
  MatchingStrategy strategy = MatchingStrategy::layered;

  VertexId left_count = 0;
  VertexId right_count = 0;
  std::size_t edge_count = 0;

  // General-graph mode: original vertex id per side index.
  std::vector<VertexId> left_labels;
  std::vector<VertexId> right_labels;

  Matching matching;
  VertexCover cover;
  bool matching_valid = false;
  bool cover_valid = false;
  bool sizes_equal = false;

  // Matrix mode only. `matrix_view` marks reports whose transversal and
  // line-cover fields are populated; `kind` alone only controls naming.
  PatternMode mode = PatternMode::predicate;
  bool matrix_view = false;
  Transversal transversal;
  LineCover line_cover;
  bool line_cover_valid = false;
  bool structurally_singular = false;

  double elapsed_ms = 0.0;

  VertexId structural_rank() const { return matching.size; }
};

namespace detail {

inline void fill_certificate(Report& report, const BipartiteGraph& graph) {
  const auto start = std::chrono::steady_clock::now();
  auto [matching, cover] = konig_certificate(graph, report.strategy);
  report.matching = std::move(matching);
  report.cover = std::move(cover);
  report.matching_valid = !verify_matching(graph, report.matching);
  report.cover_valid = !verify_cover(graph, report.cover);
  report.sizes_equal = report.matching.size == report.cover.size;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  if (!report.matching_valid || !report.cover_valid || !report.sizes_equal) {
    throw std::logic_error(
        "internal error: certificate failed its own verification");
  }
}

}  // namespace detail

/// Certificate report for a bipartite graph input.
inline Report make_graph_report(std::string command, std::string input_name,
                                const BipartiteGraph& graph,
                                MatchingStrategy strategy) {
  Report report;
  report.command = std::move(command);
  report.kind = InputKind::edge_list;
  report.input_name = std::move(input_name);
  report.strategy = strategy;
  report.left_count = graph.left_count();
  report.right_count = graph.right_count();
  report.edge_count = graph.edge_count();
  detail::fill_certificate(report, graph);
  return report;
}

/// Certificate report for a general undirected graph; the partition's
/// vertex correspondence is kept so output can speak in original ids.
inline Report make_general_report(std::string command, std::string input_name,
                                  const GeneralPartition& partition,
                                  MatchingStrategy strategy) {
  Report report = make_graph_report(std::move(command), std::move(input_name),
                                    partition.graph, strategy);
  report.kind = InputKind::general_graph;
  report.left_labels = partition.left_vertices;
  report.right_labels = partition.right_vertices;
  return report;
}

/// Certificate report for a sparsity pattern: the graph-side witnesses
/// plus their matrix-side views (transversal and line cover).
inline Report make_matrix_report(std::string command, std::string input_name,
                                 const SparsityPattern& pattern,
                                 PatternMode mode,
                                 MatchingStrategy strategy) {
  Report report;
  report.command = std::move(command);
  report.kind = InputKind::matrix;
  report.input_name = std::move(input_name);
  report.strategy = strategy;
  report.mode = mode;
  report.matrix_view = true;
  report.left_count = pattern.row_count();
  report.right_count = pattern.col_count();
  report.edge_count = pattern.entries().size();
  const BipartiteGraph graph = to_graph(pattern);
  detail::fill_certificate(report, graph);

  report.transversal.positions.reserve(
      static_cast<std::size_t>(report.matching.size));
  for (std::size_t row = 0; row < report.matching.pair_of_left.size();
       ++row) {
    if (report.matching.pair_of_left[row] != kNoVertex) {
      report.transversal.positions.push_back(
          {static_cast<MatrixIndex>(row), report.matching.pair_of_left[row]});
    }
  }
  report.line_cover.rows = report.cover.left_vertices;
  report.line_cover.cols = report.cover.right_vertices;
  report.line_cover.size = report.cover.size;
  report.line_cover_valid = !verify_line_cover(pattern, report.line_cover);
  report.structurally_singular =
      report.matching.size < std::min(pattern.row_count(),
                                      pattern.col_count());
  if (!report.line_cover_valid) {
    throw std::logic_error(
        "internal error: line cover failed its own verification");
  }
  return report;
}

namespace detail {

inline std::string left_name(const Report& report, VertexId p) {
  switch (report.kind) {
    case InputKind::general_graph:
      return "v" + std::to_string(report.left_labels[
                       static_cast<std::size_t>(p)]);
    case InputKind::matrix:
      return "r" + std::to_string(p);
    default:
      return "L" + std::to_string(p);
  }
}

inline std::string right_name(const Report& report, VertexId q) {
  switch (report.kind) {
    case InputKind::general_graph:
      return "v" + std::to_string(report.right_labels[
                       static_cast<std::size_t>(q)]);
    case InputKind::matrix:
      return "c" + std::to_string(q);
    default:
      return "R" + std::to_string(q);
  }
}

inline std::string input_summary(const Report& report) {
  std::ostringstream out;
  switch (report.kind) {
    case InputKind::edge_list:
      out << "edge list " << report.input_name << ", " << report.left_count
          << " x " << report.right_count << ", " << report.edge_count
          << " edges";
      break;
    case InputKind::general_graph:
      out << "general graph " << report.input_name << ", "
          << report.left_count + report.right_count << " vertices, "
          << report.edge_count << " edges (bipartition "
          << report.left_count << " | " << report.right_count << ")";
      break;
    case InputKind::matrix:
      out << "matrix " << report.input_name << ", " << report.left_count
          << " x " << report.right_count << ", " << report.edge_count
          << " entries (" << to_string(report.mode) << " mode)";
      break;
  }
  return out.str();
}

inline void render_matching_lines(const Report& report, std::ostream& out) {
  out << "matching size: " << report.matching.size << "\n";
  out << "matching:";
  for (const Edge& e : report.matching.edges()) {
    out << " (" << left_name(report, e.left) << ", "
        << right_name(report, e.right) << ")";
  }
  out << "\n";
}

inline void render_cover_lines(const Report& report, std::ostream& out) {
  out << "cover size: " << report.cover.size << "\n";
  out << "cover:";
  for (VertexId p : report.cover.left_vertices) {
    out << " " << left_name(report, p);
  }
  for (VertexId q : report.cover.right_vertices) {
    out << " " << right_name(report, q);
  }
  out << "\n";
}

}  // namespace detail

/// Human-readable rendering; which sections appear depends on the
/// command.
inline std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "input: " << detail::input_summary(report) << "\n";
  out << "strategy: " << to_string(report.strategy) << "\n";

  if (report.command == "match" || report.command == "certify") {
    detail::render_matching_lines(report, out);
  }
  if (report.command == "cover" || report.command == "certify") {
    detail::render_cover_lines(report, out);
  }
  if (report.command == "strank") {
    out << "structural rank: " << report.structural_rank() << " of "
        << std::min(report.left_count, report.right_count) << " possible\n";
    out << "structurally singular: "
        << (report.structurally_singular ? "yes" : "no") << "\n";
  }
  if (report.command == "linecover") {
    out << "line cover size: " << report.line_cover.size << "\n";
    out << "rows:";
    for (MatrixIndex r : report.line_cover.rows) out << " " << r;
    out << "\n";
    out << "cols:";
    for (MatrixIndex c : report.line_cover.cols) out << " " << c;
    out << "\n";
    out << "transversal size: " << report.transversal.positions.size()
        << "\n";
  }

  out << "verification: matching "
      << (report.matching_valid ? "valid" : "INVALID") << ", cover "
      << (report.cover_valid ? "valid" : "INVALID") << ", sizes "
      << (report.sizes_equal ? "equal" : "UNEQUAL") << "\n";
  out << "time: " << report.elapsed_ms << " ms\n";
  return out.str();
}

/// Machine-readable rendering: one JSON document holding the full
/// certificate regardless of command. Key order is fixed; `timing_ms` is
/// the only field that varies between identical runs.
inline std::string render_structured(const Report& report) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  nlohmann::ordered_json input;
  switch (report.kind) {
    case InputKind::edge_list:
      input["kind"] = "edge_list";
      input["left"] = report.left_count;
      input["right"] = report.right_count;
      input["edges"] = report.edge_count;
      break;
    case InputKind::general_graph:
      input["kind"] = "general_graph";
      input["vertices"] = report.left_count + report.right_count;
      input["edges"] = report.edge_count;
      input["left_labels"] = report.left_labels;
      input["right_labels"] = report.right_labels;
      break;
    case InputKind::matrix:
      input["kind"] = "matrix";
      input["rows"] = report.left_count;
      input["cols"] = report.right_count;
      input["entries"] = report.edge_count;
      input["mode"] = to_string(report.mode);
      break;
  }
  input["path"] = report.input_name;
  doc["input"] = std::move(input);
  doc["strategy"] = to_string(report.strategy);

  nlohmann::ordered_json matching;
  matching["size"] = report.matching.size;
  auto pairs = nlohmann::ordered_json::array();
  for (const Edge& e : report.matching.edges()) {
    pairs.push_back({e.left, e.right});
  }
  matching["pairs"] = std::move(pairs);
  doc["matching"] = std::move(matching);

  nlohmann::ordered_json cover;
  cover["size"] = report.cover.size;
  cover["left"] = report.cover.left_vertices;
  cover["right"] = report.cover.right_vertices;
  doc["cover"] = std::move(cover);

  if (report.matrix_view) {
    doc["structural_rank"] = report.structural_rank();
    auto positions = nlohmann::ordered_json::array();
    for (const MatrixPosition& pos : report.transversal.positions) {
      positions.push_back({pos.row, pos.col});
    }
    doc["transversal"] = std::move(positions);
    nlohmann::ordered_json lines;
    lines["size"] = report.line_cover.size;
    lines["rows"] = report.line_cover.rows;
    lines["cols"] = report.line_cover.cols;
    doc["line_cover"] = std::move(lines);
    doc["structurally_singular"] = report.structurally_singular;
  }

  nlohmann::ordered_json verification;
  verification["matching_valid"] = report.matching_valid;
  verification["cover_valid"] = report.cover_valid;
  verification["sizes_equal"] = report.sizes_equal;
  if (report.matrix_view) {
    verification["line_cover_valid"] = report.line_cover_valid;
  }
  doc["verification"] = std::move(verification);
  doc["timing_ms"] = report.elapsed_ms;
  return doc.dump(2) + "\n";
}

}  // namespace konig
