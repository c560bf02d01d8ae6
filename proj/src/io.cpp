#include "majdom/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

namespace majdom::io {

ParseError::ParseError(int line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

bool parse_int(const std::string& tok, long& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stol(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace

AnyGraph parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool directed = false;
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::set<std::pair<Vertex, Vertex>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;

    if (n < 0) {
      long count = 0;
      if (toks.size() != 2 || (toks[0] != "digraph" && toks[0] != "graph") ||
          !parse_int(toks[1], count)) {
        throw ParseError(lineno, "expected header 'digraph N' or 'graph N'");
      }
      if (count < 1 || count > kMaxVertices) {
        throw ParseError(lineno, "vertex count must lie in [1, " + std::to_string(kMaxVertices) + "]");
      }
      directed = toks[0] == "digraph";
      n = static_cast<int>(count);
      continue;
    }

    long u = 0;
    long v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v)) {
      throw ParseError(lineno, "expected 'u v'");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(lineno, "vertex index out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    auto key = directed ? std::pair<Vertex, Vertex>(u, v)
                        : std::pair<Vertex, Vertex>(std::min(u, v), std::max(u, v));
    if (!seen.insert(key).second) {
      throw ParseError(lineno, std::string("duplicate ") + (directed ? "arc " : "edge ") +
                                   std::to_string(u) + " " + std::to_string(v));
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw ParseError(0, "missing header");
  if (directed) return Digraph(n, pairs);
  return Graph(n, pairs);
}

Digraph parse_digraph(std::istream& in) {
  auto g = parse(in);
  if (auto* d = std::get_if<Digraph>(&g)) return *d;
  throw ParseError(0, "expected a digraph, found an undirected graph");
}

Graph parse_graph(std::istream& in) {
  auto g = parse(in);
  if (auto* u = std::get_if<Graph>(&g)) return *u;
  throw ParseError(0, "expected an undirected graph, found a digraph");
}

namespace {

template <typename F>
auto with_input(const std::string& path, F&& f) {
  if (path == "-") return f(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return f(in);
}

}  // namespace

AnyGraph read_any(const std::string& path) {
  return with_input(path, [](std::istream& in) { return parse(in); });
}
Digraph read_digraph(const std::string& path) {
  return with_input(path, [](std::istream& in) { return parse_digraph(in); });
}
Graph read_graph(const std::string& path) {
  return with_input(path, [](std::istream& in) { return parse_graph(in); });
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream os;
  os << "digraph " << d.order() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_dot(const Digraph& d, const std::optional<SignFunction>& f) {
  std::ostringstream os;
  os << "digraph {\n";
  if (f) {
    for (Vertex v = 0; v < d.order(); ++v) {
      os << "  " << v << " [label=\"" << (f->value(v) > 0 ? "+1" : "-1") << "\"];\n";
    }
  } else {
    // Emit isolated vertices so the vertex count survives.
    for (Vertex v = 0; v < d.order(); ++v) {
      if (!d.out(v) && !d.in(v)) os << "  " << v << ";\n";
    }
  }
  for (auto [u, v] : d.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace majdom::io
