#pragma once

#include <map>
#include <string>
#include <variant>

#include "modhom/graph.hpp"

namespace modhom {

// Line-oriented text format, 1-indexed vertices:
//   c <comment>
//   p graph|multi|bip <n> <m>
//   e <u> <v>          one line per edge (m lines)
//   l <v>              bip only: v is a left vertex
//   pin <v> <target>   labelled only
enum class GraphKind { simple, multi, bipartite, labelled };

// Pins are kept as written (target vertex id, or 0/1 spin) until bound.
struct LabelledGraphFile {
  Multigraph base;
  std::map<int, int> raw_pins;

  // Targets read as 1-indexed vertices of a target graph with h_n vertices.
  PartiallyLabelledGraph for_homs(int h_n) const;
  PinnedSpinGraph for_spin() const;
};

using ParsedGraph = std::variant<Graph, Multigraph, BipartiteGraph, LabelledGraphFile>;

// Errors are InputError with a "line N: " prefix.
ParsedGraph parse_graph(const std::string& text, GraphKind kind);
Graph parse_simple_graph(const std::string& text);
Multigraph parse_multigraph(const std::string& text);
BipartiteGraph parse_bipartite_graph(const std::string& text);
LabelledGraphFile parse_labelled_graph(const std::string& text);

std::string format_graph(const Graph& g);
std::string format_bipartite(const BipartiteGraph& g);

std::string read_text_file(const std::string& path);

}  // namespace modhom
