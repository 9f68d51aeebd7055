#pragma once

// Text input formats. Edge lists: a "L R" header line, then one
// "left right" pair per line; '#' starts a comment. General-graph lists:
// a "N" header, then undirected "u v" pairs. Matrix Market: coordinate
// format with real, integer or pattern fields, 1-based indices.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "konig/bipartite_graph.hpp"
#include "konig/matrix.hpp"

namespace konig {

/// Input rejection with the 1-based line number where it happened.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(message + ", line " + std::to_string(line)),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// How stored elements become pattern entries: `predicate` keeps only
/// nonzero values (explicitly stored zeros are dropped), `structural`
/// keeps every stored position.
enum class PatternMode { predicate, structural };

namespace detail {

struct Line {
  std::string_view text;
  std::size_t number = 0;
};

// Splits into lines, strips '\r' and '#'-comments, drops blank lines.
inline std::vector<Line> significant_lines(std::string_view text,
                                           char comment_char) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line =
        eol == std::string_view::npos ? text : text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (const std::size_t hash = line.find(comment_char);
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (!line.empty()) lines.push_back({line, number});
  }
  return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

inline std::int64_t parse_integer(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("expected an integer, got '" + std::string(field) + "'",
                     line);
  }
  return value;
}

inline double parse_real(std::string_view field, std::size_t line) {
  // std::from_chars for doubles is incomplete in some standard libraries;
  // go through strtod on a null-terminated copy.
  const std::string buffer(field);
  char* end = nullptr;
  const double value = std::strtod(buffer.c_str(), &end);
  if (end != buffer.c_str() + buffer.size()) {
    throw ParseError("expected a number, got '" + buffer + "'", line);
  }
  return value;
}

inline std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

}  // namespace detail

/// Parses the bipartite edge-list format: header "L R", one edge per
/// line, indices 0-based. Parallel edges collapse. Malformed or
/// out-of-bounds lines are rejected with their line number.
inline BipartiteGraph parse_edge_list(std::string_view text) {
  const auto lines = detail::significant_lines(text, '#');
  if (lines.empty()) {
    throw ParseError("missing 'L R' header", 1);
  }
  const auto header = detail::split_fields(lines[0].text);
  if (header.size() != 2) {
    throw ParseError("header must be 'L R'", lines[0].number);
  }
  const std::int64_t left_count =
      detail::parse_integer(header[0], lines[0].number);
  const std::int64_t right_count =
      detail::parse_integer(header[1], lines[0].number);
  if (left_count < 0 || right_count < 0) {
    throw ParseError("vertex counts must be nonnegative", lines[0].number);
  }

  std::vector<Edge> edges;
  edges.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = detail::split_fields(lines[i].text);
    if (fields.size() != 2) {
      throw ParseError("edge line must be 'left right'", lines[i].number);
    }
    const std::int64_t left = detail::parse_integer(fields[0], lines[i].number);
    const std::int64_t right =
        detail::parse_integer(fields[1], lines[i].number);
    if (left < 0 || left >= left_count) {
      throw ParseError("left index " + std::to_string(left) +
                           " out of bounds",
                       lines[i].number);
    }
    if (right < 0 || right >= right_count) {
      throw ParseError("right index " + std::to_string(right) +
                           " out of bounds",
                       lines[i].number);
    }
    edges.push_back(
        {static_cast<VertexId>(left), static_cast<VertexId>(right)});
  }
  return BipartiteGraph(static_cast<VertexId>(left_count),
                        static_cast<VertexId>(right_count), std::move(edges));
}

/// A general undirected graph as read from text: header "N", one
/// undirected edge per line.
struct GeneralGraphInput {
  VertexId vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

inline GeneralGraphInput parse_general_edge_list(std::string_view text) {
  const auto lines = detail::significant_lines(text, '#');
  if (lines.empty()) {
    throw ParseError("missing 'N' header", 1);
  }
  const auto header = detail::split_fields(lines[0].text);
  if (header.size() != 1) {
    throw ParseError("header must be a single vertex count", lines[0].number);
  }
  const std::int64_t vertex_count =
      detail::parse_integer(header[0], lines[0].number);
  if (vertex_count < 0) {
    throw ParseError("vertex count must be nonnegative", lines[0].number);
  }

  GeneralGraphInput input;
  input.vertex_count = static_cast<VertexId>(vertex_count);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = detail::split_fields(lines[i].text);
    if (fields.size() != 2) {
      throw ParseError("edge line must be 'u v'", lines[i].number);
    }
    const std::int64_t u = detail::parse_integer(fields[0], lines[i].number);
    const std::int64_t v = detail::parse_integer(fields[1], lines[i].number);
    for (const std::int64_t w : {u, v}) {
      if (w < 0 || w >= vertex_count) {
        throw ParseError("vertex index " + std::to_string(w) +
                             " out of bounds",
                         lines[i].number);
      }
    }
    if (u == v) {
      throw ParseError("self-loop at vertex " + std::to_string(u),
                       lines[i].number);
    }
    input.edges.emplace_back(static_cast<VertexId>(u),
                             static_cast<VertexId>(v));
  }
  return input;
}

/// Parses Matrix Market coordinate files (real, integer or pattern
/// fields; general or symmetric). Indices are converted to 0-based. A
/// `pattern` field forces structural mode; otherwise `mode` decides
/// whether explicitly stored zeros survive.
inline SparsityPattern parse_matrix_market(
    std::string_view text, PatternMode mode = PatternMode::predicate) {
  const auto lines = detail::significant_lines(text, '\0');
  if (lines.empty() || !lines[0].text.starts_with("%%MatrixMarket")) {
    throw ParseError("missing '%%MatrixMarket' banner", 1);
  }
  const auto banner = detail::split_fields(lines[0].text);
  if (banner.size() < 4) {
    throw ParseError("banner must name object, format, field and symmetry",
                     lines[0].number);
  }
  const std::string object = detail::to_lower(banner[1]);
  const std::string format = detail::to_lower(banner[2]);
  const std::string field = detail::to_lower(banner[3]);
  const std::string symmetry =
      banner.size() > 4 ? detail::to_lower(banner[4]) : "general";
  if (object != "matrix" || format != "coordinate") {
    throw ParseError("expected 'matrix coordinate', got '" + object + " " +
                         format + "'",
                     lines[0].number);
  }
  if (field != "real" && field != "integer" && field != "pattern") {
    throw ParseError("unsupported field '" + field + "'", lines[0].number);
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw ParseError("unsupported symmetry '" + symmetry + "'",
                     lines[0].number);
  }
  const bool is_pattern = field == "pattern";
  const bool keep_zeros = is_pattern || mode == PatternMode::structural;

  std::size_t next = 1;
  while (next < lines.size() && lines[next].text.starts_with("%")) ++next;
  if (next == lines.size()) {
    throw ParseError("missing 'rows cols nnz' size line",
                     lines.back().number);
  }
  const auto size_fields = detail::split_fields(lines[next].text);
  if (size_fields.size() != 3) {
    throw ParseError("size line must be 'rows cols nnz'", lines[next].number);
  }
  const std::int64_t rows =
      detail::parse_integer(size_fields[0], lines[next].number);
  const std::int64_t cols =
      detail::parse_integer(size_fields[1], lines[next].number);
  const std::int64_t declared =
      detail::parse_integer(size_fields[2], lines[next].number);
  if (rows < 0 || cols < 0 || declared < 0) {
    throw ParseError("size line entries must be nonnegative",
                     lines[next].number);
  }
  ++next;

  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
  std::vector<MatrixPosition> entries;
  std::int64_t read = 0;
  for (; next < lines.size(); ++next) {
    if (lines[next].text.starts_with("%")) continue;
    if (read == declared) {
      throw ParseError("more data lines than the declared " +
                           std::to_string(declared) + " entries",
                       lines[next].number);
    }
    const auto fields = detail::split_fields(lines[next].text);
    const std::size_t expected_fields = is_pattern ? 2 : 3;
    if (fields.size() != expected_fields) {
      throw ParseError("coordinate line must have " +
                           std::to_string(expected_fields) + " fields",
                       lines[next].number);
    }
    const std::int64_t row =
        detail::parse_integer(fields[0], lines[next].number);
    const std::int64_t col =
        detail::parse_integer(fields[1], lines[next].number);
    const std::string coordinate =
        "(" + std::to_string(row) + ", " + std::to_string(col) + ")";
    if (row < 1 || row > rows || col < 1 || col > cols) {
      throw ParseError("coordinate " + coordinate + " out of bounds",
                       lines[next].number);
    }
    if (const auto [it, inserted] =
            seen.emplace(std::make_pair(row, col), lines[next].number);
        !inserted) {
      throw ParseError("duplicate coordinate " + coordinate,
                       lines[next].number);
    }
    ++read;

    bool keep = keep_zeros;
    if (!keep) {
      const double value = field == "integer"
                               ? static_cast<double>(detail::parse_integer(
                                     fields[2], lines[next].number))
                               : detail::parse_real(fields[2],
                                                    lines[next].number);
      keep = value != 0.0;
    } else if (!is_pattern) {
      // Still validate the value field even when every entry is kept.
      if (field == "integer") {
        detail::parse_integer(fields[2], lines[next].number);
      } else {
        detail::parse_real(fields[2], lines[next].number);
      }
    }
    if (keep) {
      entries.push_back({static_cast<MatrixIndex>(row - 1),
                         static_cast<MatrixIndex>(col - 1)});
      if (symmetry == "symmetric" && row != col) {
        entries.push_back({static_cast<MatrixIndex>(col - 1),
                           static_cast<MatrixIndex>(row - 1)});
      }
    }
  }
  if (read != declared) {
    throw ParseError("declared " + std::to_string(declared) +
                         " entries but found " + std::to_string(read),
                     lines.empty() ? 1 : lines.back().number);
  }
  return SparsityPattern(static_cast<MatrixIndex>(rows),
                         static_cast<MatrixIndex>(cols), std::move(entries));
}

}  // namespace konig
