// Command-line front end: reads a graph or sparsity pattern from a file
// and prints a matching / vertex cover certificate, the structural rank,
// or a minimum line cover. Exit status is 0 on success, 1 on usage or
// input errors, and 2 when `strank` finds a structurally singular
// pattern.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "konig/konig.hpp"

namespace {

struct Options {
  std::string path;
  std::string format = "auto";
  std::string mode = "predicate";
  std::string strategy = "layered";
  std::string output = "text";
  bool general = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

konig::SparsityPattern pattern_from_graph(const konig::BipartiteGraph& graph) {
  std::vector<konig::MatrixPosition> positions;
  positions.reserve(graph.edge_count());
  for (const konig::Edge& e : graph.edges()) {
    positions.push_back({e.left, e.right});
  }
  return {graph.left_count(), graph.right_count(), std::move(positions)};
}

void emit(const konig::Report& report, const std::string& output) {
  std::cout << (output == "structured" ? konig::render_structured(report)
                                       : konig::render_text(report));
}

int run(const std::string& command, const Options& opt) {
  const std::string text = read_file(opt.path);
  const bool mtx = opt.format == "mtx" ||
                   (opt.format == "auto" && opt.path.ends_with(".mtx"));
  const konig::MatchingStrategy strategy =
      opt.strategy == "simple" ? konig::MatchingStrategy::simple
                               : konig::MatchingStrategy::layered;
  const konig::PatternMode mode = opt.mode == "structural"
                                      ? konig::PatternMode::structural
                                      : konig::PatternMode::predicate;

  if (command == "strank" || command == "linecover") {
    const konig::SparsityPattern pattern =
        mtx ? konig::parse_matrix_market(text, mode)
            : pattern_from_graph(konig::parse_edge_list(text));
    const konig::Report report =
        konig::make_matrix_report(command, opt.path, pattern, mode, strategy);
    emit(report, opt.output);
    return command == "strank" && report.structurally_singular ? 2 : 0;
  }

  if (opt.general) {
    if (mtx) {
      throw std::invalid_argument("--general requires an edge-list input");
    }
    const konig::GeneralGraphInput input =
        konig::parse_general_edge_list(text);
    const konig::GeneralPartition partition =
        konig::partition_general_graph(input.vertex_count, input.edges);
    const konig::Report report =
        konig::make_general_report(command, opt.path, partition, strategy);
    emit(report, opt.output);
    return 0;
  }

  const konig::BipartiteGraph graph =
      mtx ? konig::to_graph(konig::parse_matrix_market(text, mode))
          : konig::parse_edge_list(text);
  konig::Report report =
      konig::make_graph_report(command, opt.path, graph, strategy);
  if (mtx) {
    report.kind = konig::InputKind::matrix;
    report.mode = mode;
  }
  emit(report, opt.output);
  return 0;
}

// Desk-checking aid: compares the main algorithms against the
// brute-force references on a small input. Not part of the public
// surface, so it stays out of --help.
int run_oracle(const Options& opt) {
  const std::string text = read_file(opt.path);
  const bool mtx = opt.format == "mtx" ||
                   (opt.format == "auto" && opt.path.ends_with(".mtx"));
  konig::BipartiteGraph graph = [&] {
    if (opt.general) {
      if (mtx) {
        throw std::invalid_argument("--general requires an edge-list input");
      }
      const konig::GeneralGraphInput input =
          konig::parse_general_edge_list(text);
      return konig::partition_general_graph(input.vertex_count, input.edges)
          .graph;
    }
    if (mtx) {
      return konig::to_graph(konig::parse_matrix_market(text));
    }
    return konig::parse_edge_list(text);
  }();

  const konig::VertexId oracle_matching =
      konig::brute_force_max_matching(graph);
  const konig::VertexId oracle_cover = konig::brute_force_min_cover(graph);
  const auto [matching, cover] = konig::konig_certificate(graph);
  std::cout << "oracle matching size: " << oracle_matching << "\n"
            << "oracle cover size: " << oracle_cover << "\n"
            << "algorithm matching size: " << matching.size << "\n"
            << "algorithm cover size: " << cover.size << "\n";
  const bool agree =
      oracle_matching == matching.size && oracle_cover == cover.size;
  std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Maximum matchings, minimum vertex covers, and structural rank of "
      "bipartite graphs and sparse matrices"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* cmd, bool graph_command) {
    cmd->add_option("path", opt.path, "input file")->required();
    cmd->add_option("--format", opt.format,
                    "input format: auto, edgelist, or mtx")
        ->check(CLI::IsMember({"auto", "edgelist", "mtx"}))
        ->capture_default_str();
    cmd->add_option("--mode", opt.mode,
                    "matrix entry handling: predicate drops explicit "
                    "zeros, structural keeps every stored entry")
        ->check(CLI::IsMember({"predicate", "structural"}))
        ->capture_default_str();
    cmd->add_option("--strategy", opt.strategy, "matching strategy")
        ->check(CLI::IsMember({"simple", "layered"}))
        ->capture_default_str();
    cmd->add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    if (graph_command) {
      cmd->add_flag("--general", opt.general,
                    "input is a general undirected graph; 2-color it or "
                    "report an odd cycle");
    }
  };

  add_common(app.add_subcommand("match", "maximum matching"), true);
  add_common(app.add_subcommand("cover", "minimum vertex cover"), true);
  add_common(
      app.add_subcommand("certify",
                         "matching and cover of equal size, verified"),
      true);
  add_common(app.add_subcommand("strank", "structural rank of a pattern"),
             false);
  add_common(
      app.add_subcommand("linecover",
                         "fewest rows and columns covering every entry"),
      false);
  CLI::App* oracle = app.add_subcommand("oracle", "");
  add_common(oracle, true);
  oracle->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return command == "oracle" ? run_oracle(opt) : run(command, opt);
  } catch (const konig::NonBipartiteError& e) {
    std::cerr << "error: " << e.what() << "\nodd cycle:";
    for (konig::VertexId v : e.odd_cycle()) {
      std::cerr << " " << v;
    }
    std::cerr << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
