#include "majdom/families.hpp"

#include <array>

namespace majdom::families {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

constexpr std::array<std::pair<Kind, std::string_view>, 13> kNames{{
    {Kind::directed_path, "directed_path"},
    {Kind::directed_cycle, "directed_cycle"},
    {Kind::transitive_tournament, "transitive_tournament"},
    {Kind::complete_digraph, "complete_digraph"},
    {Kind::empty_digraph, "empty_digraph"},
    {Kind::oriented_star, "oriented_star"},
    {Kind::figure1, "figure1"},
    {Kind::figure2, "figure2"},
    {Kind::path_graph, "path_graph"},
    {Kind::cycle_graph, "cycle_graph"},
    {Kind::star_graph, "star_graph"},
    {Kind::double_star_graph, "double_star_graph"},
    {Kind::complete_bipartite_graph, "complete_bipartite_graph"},
}};

}  // namespace

std::string_view name(Kind k) {
  for (auto [kind, s] : kNames) {
    if (kind == k) return s;
  }
  return "unknown";
}

std::optional<Kind> kind_from_name(std::string_view s) {
  for (auto [kind, str] : kNames) {
    if (str == s) return kind;
  }
  return std::nullopt;
}

int FamilySpec::order() const {
  switch (kind) {
    case Kind::oriented_star: return a + b + 1;
    case Kind::figure1: return 7;
    case Kind::figure2: return 2 * k + 4;
    case Kind::double_star_graph: return a + b + 2;
    case Kind::complete_bipartite_graph: return r + s;
    default: return n;
  }
}

bool FamilySpec::directed() const {
  switch (kind) {
    case Kind::path_graph:
    case Kind::cycle_graph:
    case Kind::star_graph:
    case Kind::double_star_graph:
    case Kind::complete_bipartite_graph: return false;
    default: return true;
  }
}

std::string FamilySpec::describe() const {
  std::string s(name(kind));
  switch (kind) {
    case Kind::oriented_star: return s + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::figure1: return s;
    case Kind::figure2: return s + "(" + std::to_string(k) + ")";
    case Kind::double_star_graph:
      return s + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::complete_bipartite_graph:
      return s + "(" + std::to_string(r) + "," + std::to_string(this->s) + ")";
    default: return s + "(" + std::to_string(n) + ")";
  }
}

Digraph directed_path(int n) {
  require(n >= 1, "directed_path needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
  return {n, arcs};
}

Digraph directed_cycle(int n) {
  require(n >= 3, "directed_cycle needs n >= 3");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return {n, arcs};
}

Digraph transitive_tournament(int n) {
  require(n >= 1, "transitive_tournament needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
  }
  return {n, arcs};
}

Digraph complete_digraph(int n) {
  require(n >= 1, "complete_digraph needs n >= 1");
  std::vector<Mask> out(n);
  for (Vertex i = 0; i < n; ++i) out[i] = full_mask(n) & ~bit(i);
  return from_out_masks(n, std::move(out));
}

Digraph empty_digraph(int n) {
  require(n >= 0, "empty_digraph needs n >= 0");
  return Digraph(n);
}

Digraph oriented_star(int in_leaves, int out_leaves) {
  require(in_leaves >= 0 && out_leaves >= 0 && in_leaves + out_leaves >= 1,
          "oriented_star needs at least one leaf");
  std::vector<Arc> arcs;
  Vertex leaf = 1;
  for (int i = 0; i < in_leaves; ++i) arcs.emplace_back(leaf++, 0);
  for (int i = 0; i < out_leaves; ++i) arcs.emplace_back(0, leaf++);
  return {in_leaves + out_leaves + 1, arcs};
}

Digraph figure1() {
  enum : Vertex { a, b, c, v, d, e, f };
  static_assert(v == kFigure1V);
  return {7, {{v, c}, {v, d}, {c, a}, {c, b}, {d, f}, {f, e}, {e, d}}};
}

Digraph figure2(int k) {
  require(k >= 1, "figure2 needs k >= 1");
  std::vector<Arc> arcs;
  for (Vertex s = 2; s < 2 + k; ++s) {
    arcs.emplace_back(s, kFigure2U);
    arcs.emplace_back(s, kFigure2V);
  }
  for (Vertex t = 2 + k; t < 2 * k + 4; ++t) arcs.emplace_back(t, kFigure2V);
  return {2 * k + 4, arcs};
}

Graph path_graph(int n) {
  require(n >= 1, "path_graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return {n, edges};
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return {n, edges};
}

Graph star_graph(int n) {
  require(n >= 2, "star_graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
  return {n, edges};
}

Graph double_star_graph(int a, int b) {
  require(a >= 1 && b >= 1, "double_star_graph needs a, b >= 1");
  std::vector<Edge> edges{{0, 1}};
  Vertex leaf = 2;
  for (int i = 0; i < a; ++i) edges.emplace_back(0, leaf++);
  for (int i = 0; i < b; ++i) edges.emplace_back(1, leaf++);
  return {a + b + 2, edges};
}

Graph complete_bipartite_graph(int r, int s) {
  require(r >= 1 && s >= 1, "complete_bipartite_graph needs r, s >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < r; ++i) {
    for (Vertex j = r; j < r + s; ++j) edges.emplace_back(i, j);
  }
  return {r + s, edges};
}

std::variant<Digraph, Graph> build(const FamilySpec& spec) {
  switch (spec.kind) {
    case Kind::directed_path: return directed_path(spec.n);
    case Kind::directed_cycle: return directed_cycle(spec.n);
    case Kind::transitive_tournament: return transitive_tournament(spec.n);
    case Kind::complete_digraph: return complete_digraph(spec.n);
    case Kind::empty_digraph: return empty_digraph(spec.n);
    case Kind::oriented_star: return oriented_star(spec.a, spec.b);
    case Kind::figure1: return figure1();
    case Kind::figure2: return figure2(spec.k);
    case Kind::path_graph: return path_graph(spec.n);
    case Kind::cycle_graph: return cycle_graph(spec.n);
    case Kind::star_graph: return star_graph(spec.n);
    case Kind::double_star_graph: return double_star_graph(spec.a, spec.b);
    case Kind::complete_bipartite_graph: return complete_bipartite_graph(spec.r, spec.s);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace majdom::families
