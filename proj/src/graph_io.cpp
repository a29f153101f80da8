#include "modhom/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "modhom/errors.hpp"

namespace modhom {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

struct RawFile {
  int n = -1;
  int m = 0;
  int header_line = 0;
  std::vector<std::pair<Edge, int>> edges;  // 0-indexed edge, source line
  std::vector<std::pair<int, int>> left;    // vertex, line
  std::vector<std::tuple<int, int, int>> pins;  // vertex, target, line
  int last_line = 0;
};

long long read_int(std::istringstream& in, int line, const char* what) {
  long long v;
  if (!(in >> v)) fail(line, std::string("expected integer ") + what);
  return v;
}

RawFile read_raw(const std::string& text, GraphKind kind) {
  RawFile f;
  std::istringstream all(text);
  std::string row;
  int line = 0;
  while (std::getline(all, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    std::istringstream in(row);
    std::string tag;
    if (!(in >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (f.n >= 0) fail(line, "duplicate header");
      std::string fmt;
      in >> fmt;
      if (fmt != "graph" && fmt != "multi" && fmt != "bip") fail(line, "unknown format '" + fmt + "'");
      long long n = read_int(in, line, "vertex count");
      long long m = read_int(in, line, "edge count");
      if (n < 0 || m < 0 || n > 1'000'000) fail(line, "bad header counts");
      f.n = static_cast<int>(n);
      f.m = static_cast<int>(m);
      f.header_line = line;
    } else {
      if (f.n < 0) fail(line, "'" + tag + "' before header");
      auto vertex = [&](const char* what) {
        long long v = read_int(in, line, what);
        if (v < 1 || v > f.n) fail(line, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(f.n));
        return static_cast<int>(v - 1);
      };
      if (tag == "e") {
        int u = vertex("endpoint");
        int v = vertex("endpoint");
        f.edges.push_back({{u, v}, line});
      } else if (tag == "l") {
        if (kind != GraphKind::bipartite) fail(line, "'l' lines only allowed in bipartite files");
        f.left.emplace_back(vertex("vertex"), line);
      } else if (tag == "pin") {
        if (kind != GraphKind::labelled) fail(line, "'pin' lines only allowed in labelled files");
        int v = vertex("vertex");
        long long t = read_int(in, line, "pin target");
        if (t < 0) fail(line, "negative pin target");
        f.pins.emplace_back(v, static_cast<int>(t), line);
      } else {
        fail(line, "unknown line type '" + tag + "'");
      }
      std::string extra;
      if (in >> extra) fail(line, "trailing token '" + extra + "'");
    }
  }
  f.last_line = line;
  if (f.n < 0) fail(line, "missing 'p' header");
  if (static_cast<int>(f.edges.size()) != f.m) {
    fail(f.header_line, "header declares " + std::to_string(f.m) + " edges, found " + std::to_string(f.edges.size()));
  }
  return f;
}

Graph simple_from(const RawFile& f) {
  std::set<Edge> seen;
  std::vector<Edge> es;
  for (auto [e, line] : f.edges) {
    if (e.first == e.second) fail(line, "loop at vertex " + std::to_string(e.first + 1) + " in a simple graph");
    Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
    if (!seen.insert(key).second) fail(line, "duplicate edge");
    es.push_back(e);
  }
  return Graph(f.n, es);
}

Multigraph multi_from(const RawFile& f) {
  std::vector<Edge> es;
  for (auto [e, line] : f.edges) es.push_back(e);
  return Multigraph(f.n, es);
}

}  // namespace

ParsedGraph parse_graph(const std::string& text, GraphKind kind) {
  RawFile f = read_raw(text, kind);
  switch (kind) {
    case GraphKind::simple:
      return simple_from(f);
    case GraphKind::multi:
      return multi_from(f);
    case GraphKind::bipartite: {
      std::vector<bool> is_left(f.n, false);
      for (auto [v, line] : f.left) is_left[v] = true;
      Graph g = simple_from(f);
      for (auto [e, line] : f.edges) {
        if (is_left[e.first] == is_left[e.second]) fail(line, "edge joins two vertices of the same side");
      }
      return BipartiteGraph(std::move(g), std::move(is_left));
    }
    case GraphKind::labelled: {
      LabelledGraphFile out{multi_from(f), {}};
      for (auto [v, t, line] : f.pins) {
        if (!out.raw_pins.emplace(v, t).second) fail(line, "vertex pinned twice");
      }
      return out;
    }
  }
  throw InputError("unknown graph kind");
}

Graph parse_simple_graph(const std::string& text) { return std::get<Graph>(parse_graph(text, GraphKind::simple)); }
Multigraph parse_multigraph(const std::string& text) {
  return std::get<Multigraph>(parse_graph(text, GraphKind::multi));
}
BipartiteGraph parse_bipartite_graph(const std::string& text) {
  return std::get<BipartiteGraph>(parse_graph(text, GraphKind::bipartite));
}
LabelledGraphFile parse_labelled_graph(const std::string& text) {
  return std::get<LabelledGraphFile>(parse_graph(text, GraphKind::labelled));
}

PartiallyLabelledGraph LabelledGraphFile::for_homs(int h_n) const {
  PartiallyLabelledGraph out{base.to_simple(), {}};
  for (auto [v, t] : raw_pins) {
    if (t < 1 || t > h_n) {
      throw InputError("pin target " + std::to_string(t) + " of vertex " + std::to_string(v + 1) +
                       " outside target range 1.." + std::to_string(h_n));
    }
    out.pins[v] = t - 1;
  }
  return out;
}

PinnedSpinGraph LabelledGraphFile::for_spin() const {
  PinnedSpinGraph out{base, {}};
  for (auto [v, t] : raw_pins) {
    if (t != 0 && t != 1) throw InputError("spin pin of vertex " + std::to_string(v + 1) + " must be 0 or 1");
    out.pins[v] = t;
  }
  return out;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p graph " << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string format_bipartite(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "p bip " << g.n() << " " << g.graph().m() << "\n";
  for (int v : g.left()) out << "l " << v + 1 << "\n";
  for (auto [u, v] : g.graph().edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace modhom
