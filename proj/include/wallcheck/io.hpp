#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wallcheck/embedding.hpp"
#include "wallcheck/graph.hpp"
#include "wallcheck/lemmas.hpp"

namespace wallcheck {

struct ParseError : InputError {
  using InputError::InputError;
};

/// Line-oriented text format:
///   graph <name> v=<n> e=<m>
///   v <id> <role>
///   e <id> <id> <class>
/// Roles: Plain, Terminal:a..d, Bottleneck:<i>, Row:<layer>:<pos>,
/// Subdiv:<u>-<v>, Branch. Classes: Plain, JumpEdge, TerminalAttachment.
std::string serialize_graph(const LabeledGraph& g);
LabeledGraph parse_graph(const std::string& text);
LabeledGraph load_graph_file(const std::string& path);
void save_graph_file(const LabeledGraph& g, const std::string& path);

std::string role_token(const Role& r);
Role parse_role_token(const std::string& tok);

// Certificates as JSON documents.
std::string embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const std::string& text);
std::string linkage_to_json(const Linkage& l);
Linkage linkage_from_json(const std::string& text);
std::string packing_to_json(const Packing& p);
Packing packing_from_json(const std::string& text);

/// Lemma report as a JSON object with stable key order; wall_ms is the only
/// timing field.
std::string report_to_json(const LemmaReport& r);
std::string reports_to_json(const std::vector<LemmaReport>& rs);
/// Same document with timing fields removed, for byte comparisons.
std::string strip_timing(const std::string& report_json);

struct DotOverlay {
  std::vector<Path> paths;     // drawn in the overlay's color
  std::string label;
};

/// DOT text for the graph; overlays color path edges (first overlay red,
/// then blue, green, ...). Terminals are filled, bottlenecks doubled,
/// jump-edges bold.
std::string export_dot(const LabeledGraph& g,
                       const std::vector<DotOverlay>& overlays = {});

DotOverlay overlay_from_embedding(const Embedding& e);
DotOverlay overlay_from_linkage(const Linkage& l);

/// CLI entry point; argv excludes the program name. Exit codes: 0 verified /
/// witness found, 1 refuted / none, 2 input error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err);

}  // namespace wallcheck
