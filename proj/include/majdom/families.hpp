#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "majdom/digraph.hpp"

namespace majdom::families {

enum class Kind {
  directed_path,
  directed_cycle,
  transitive_tournament,
  complete_digraph,
  empty_digraph,
  oriented_star,
  figure1,
  figure2,
  path_graph,
  cycle_graph,
  star_graph,
  double_star_graph,
  complete_bipartite_graph,
};

/// Family plus its parameters. Unused parameters stay zero:
///   n         path/cycle/tournament/complete/empty/star kinds
///   a, b      oriented_star (in, out leaves), double_star_graph (leaves on each stem)
///   r, s      complete_bipartite_graph
///   k         figure2
struct FamilySpec {
  Kind kind{};
  int n = 0;
  int a = 0;
  int b = 0;
  int r = 0;
  int s = 0;
  int k = 0;

  /// Number of vertices of the generated (di)graph.
  int order() const;
  bool directed() const;
  std::string describe() const;
};

std::string_view name(Kind k);
std::optional<Kind> kind_from_name(std::string_view s);

Digraph directed_path(int n);
Digraph directed_cycle(int n);
Digraph transitive_tournament(int n);
Digraph complete_digraph(int n);
Digraph empty_digraph(int n);
/// Vertex 0 is the center; leaves 1..in_leaves point at it, the rest are
/// pointed at by it.
Digraph oriented_star(int in_leaves, int out_leaves);

/// Vertex layout of figure1(): a, b, c, v, d, e, f.
inline constexpr Vertex kFigure1V = 3;
Digraph figure1();

/// Layout: u = 0, v = 1, S = [2, 2+k), T = [2+k, 2k+4).
inline constexpr Vertex kFigure2U = 0;
inline constexpr Vertex kFigure2V = 1;
Digraph figure2(int k);

Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,n-1}; vertex 0 is the center.
Graph star_graph(int n);
/// Stems 0 and 1; leaves 2..a+1 hang on 0, the remaining b on 1.
Graph double_star_graph(int a, int b);
/// Parts [0, r) and [r, r+s).
Graph complete_bipartite_graph(int r, int s);

/// Builds the member of a family described by `spec`.
std::variant<Digraph, Graph> build(const FamilySpec& spec);

}  // namespace majdom::families
