#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majdom {

/// Vertex sets are bitmasks; bit i set means vertex i is a member.
using Mask = std::uint64_t;
using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested instance is larger than the configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }
inline constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, Vertex v) { return (m >> v) & 1U; }

std::vector<Vertex> to_vertices(Mask m);
Mask from_vertices(int n, const std::vector<Vertex>& vs);

/// Simple digraph: no loops, no duplicate arcs; opposite pairs allowed.
/// Immutable after construction; in-neighborhoods are derived on construction.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<Arc>& arcs);

  int order() const { return n_; }
  Mask out(Vertex v) const { return out_[v]; }
  Mask in(Vertex v) const { return in_[v]; }
  Mask closed_out(Vertex v) const { return out_[v] | bit(v); }
  Mask closed_in(Vertex v) const { return in_[v] | bit(v); }
  int out_degree(Vertex v) const { return popcount(out_[v]); }
  int in_degree(Vertex v) const { return popcount(in_[v]); }
  bool has_arc(Vertex u, Vertex v) const { return contains(out_[u], v); }
  int arc_count() const;
  /// Maximum out-degree over all vertices.
  int max_out_degree() const;
  /// Arcs in ascending (u, v) order.
  std::vector<Arc> arcs() const;
  bool has_opposite_pair() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  friend Digraph from_out_masks(int n, std::vector<Mask> out);
  int n_ = 0;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

/// Builds a digraph straight from out-neighborhood masks (validated).
Digraph from_out_masks(int n, std::vector<Mask> out);

/// Simple undirected graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  Mask neighbors(Vertex v) const { return adj_[v]; }
  Mask closed(Vertex v) const { return adj_[v] | bit(v); }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool has_edge(Vertex u, Vertex v) const { return contains(adj_[u], v); }
  int edge_count() const;
  /// Edges {u, v} with u < v, sorted ascending.
  std::vector<Edge> edges() const;
  /// The symmetric digraph with arcs both ways along every edge; its closed
  /// out-neighborhoods coincide with the closed neighborhoods of the graph.
  Digraph symmetric_digraph() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
};

/// A +1/-1 labelling of the vertices, stored as the set of +1 vertices.
class SignFunction {
 public:
  SignFunction() = default;
  SignFunction(int n, Mask positives);
  static SignFunction all_positive(int n) { return {n, full_mask(n)}; }
  static SignFunction all_negative(int n) { return {n, 0}; }
  static SignFunction from_positives(int n, const std::vector<Vertex>& vs) {
    return {n, from_vertices(n, vs)};
  }

  int order() const { return n_; }
  Mask positives() const { return pos_; }
  int value(Vertex v) const { return contains(pos_, v) ? 1 : -1; }
  int positive_count() const { return popcount(pos_); }
  int weight() const { return 2 * popcount(pos_) - n_; }
  /// Sum of f over a vertex set.
  int sum(Mask s) const { return 2 * popcount(s & pos_) - popcount(s); }
  SignFunction with(Vertex v, int sign) const;
  /// Rendered as "+-++..." in vertex order.
  std::string signs() const;

  friend bool operator==(const SignFunction&, const SignFunction&) = default;

 private:
  int n_ = 0;
  Mask pos_ = 0;
};

// ---------------------------------------------------------------------------
// Defining predicates.

/// f(N+[v]).
int closed_out_sum(const Digraph& d, const SignFunction& f, Vertex v);
/// Vertices v with f(N+[v]) >= 1.
Mask satisfied_set(const Digraph& d, const SignFunction& f);
/// Majority out-dominating: 2|S| >= n.
bool is_modf(const Digraph& d, const SignFunction& f);

inline constexpr int kMinimalityCap = 20;

/// No MODF g != f with g <= f pointwise. Requires is_modf(d, f). Single
/// flips are tried first; the subset search behind them throws CapExceeded
/// when f has more than kMinimalityCap positive vertices.
bool is_minimal_modf(const Digraph& d, const SignFunction& f);

/// Every +1 vertex v has some u in N-[v] with f(N+[u]) in {1, 2}.
bool minimality_necessary_condition(const Digraph& d, const SignFunction& f);

bool is_majority_dominating(const Graph& g, const SignFunction& f);

/// Every vertex outside s has an out-neighbor in s.
bool is_in_dominating(const Digraph& d, Mask s);

Digraph reverse_digraph(const Digraph& d);

}  // namespace majdom
