#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "majdom/digraph.hpp"

namespace majdom::io {

/// Malformed edge-list input. `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Either header kind; lets callers accept whatever the file declares.
using AnyGraph = std::variant<Digraph, Graph>;

// Edge-list grammar: '#' starts a comment line, blank lines are skipped, the
// first data line is "digraph N" or "graph N", then one "u v" pair per line.
AnyGraph parse(std::istream& in);
Digraph parse_digraph(std::istream& in);
Graph parse_graph(std::istream& in);

/// Reads a file, or standard input when `path` is "-".
AnyGraph read_any(const std::string& path);
Digraph read_digraph(const std::string& path);
Graph read_graph(const std::string& path);

std::string to_edge_list(const Digraph& d);
std::string to_edge_list(const Graph& g);

std::string to_dot(const Digraph& d, const std::optional<SignFunction>& f = std::nullopt);

}  // namespace majdom::io
