#include "majdom/digraph.hpp"

#include <algorithm>
#include <string>

namespace majdom {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
}

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(n) + ")");
  }
}

void check_sizes(int graph_n, const SignFunction& f) {
  if (f.order() != graph_n) {
    throw std::invalid_argument("sign function has " + std::to_string(f.order()) +
                                " vertices, graph has " + std::to_string(graph_n));
  }
  if (graph_n == 0) throw std::invalid_argument("empty digraph has no majority functions");
}

}  // namespace

std::vector<Vertex> to_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask from_vertices(int n, const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) {
    check_vertex(n, v);
    m |= bit(v);
  }
  return m;
}

// ---------------------------------------------------------------------------

Digraph::Digraph(int n) : n_(n) {
  check_order(n);
  out_.assign(n, 0);
  in_.assign(n, 0);
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
  for (auto [u, v] : arcs) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_arc(u, v)) {
      throw std::invalid_argument("duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
    }
    out_[u] |= bit(v);
    in_[v] |= bit(u);
  }
}

Digraph from_out_masks(int n, std::vector<Mask> out) {
  Digraph d(n);
  if (static_cast<int>(out.size()) != n) throw std::invalid_argument("mask count != order");
  for (Vertex u = 0; u < n; ++u) {
    if (out[u] & ~full_mask(n)) throw std::out_of_range("out-neighbor index out of range");
    if (contains(out[u], u)) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    for (Vertex v : to_vertices(out[u])) d.in_[v] |= bit(u);
  }
  d.out_ = std::move(out);
  return d;
}

int Digraph::arc_count() const {
  int m = 0;
  for (Mask o : out_) m += popcount(o);
  return m;
}

int Digraph::max_out_degree() const {
  int best = 0;
  for (Mask o : out_) best = std::max(best, popcount(o));
  return best;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : to_vertices(out_[u])) out.emplace_back(u, v);
  }
  return out;
}

bool Digraph::has_opposite_pair() const {
  for (Vertex u = 0; u < n_; ++u) {
    if (out_[u] & in_[u]) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
    }
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

int Graph::edge_count() const {
  int m = 0;
  for (Mask a : adj_) m += popcount(a);
  return m / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : to_vertices(adj_[u] & ~full_mask(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

Digraph Graph::symmetric_digraph() const { return from_out_masks(n_, adj_); }

// ---------------------------------------------------------------------------

SignFunction::SignFunction(int n, Mask positives) : n_(n), pos_(positives) {
  check_order(n);
  if (positives & ~full_mask(n)) throw std::out_of_range("positive vertex outside [0, n)");
}

SignFunction SignFunction::with(Vertex v, int sign) const {
  check_vertex(n_, v);
  return {n_, sign > 0 ? (pos_ | bit(v)) : (pos_ & ~bit(v))};
}

std::string SignFunction::signs() const {
  std::string s(n_, '-');
  for (Vertex v : to_vertices(pos_)) s[v] = '+';
  return s;
}

// ---------------------------------------------------------------------------

int closed_out_sum(const Digraph& d, const SignFunction& f, Vertex v) {
  check_sizes(d.order(), f);
  check_vertex(d.order(), v);
  return f.sum(d.closed_out(v));
}

Mask satisfied_set(const Digraph& d, const SignFunction& f) {
  check_sizes(d.order(), f);
  Mask s = 0;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (f.sum(d.closed_out(v)) >= 1) s |= bit(v);
  }
  return s;
}

bool is_modf(const Digraph& d, const SignFunction& f) {
  return 2 * popcount(satisfied_set(d, f)) >= d.order();
}

bool is_minimal_modf(const Digraph& d, const SignFunction& f) {
  if (!is_modf(d, f)) throw std::invalid_argument("sign function is not a MODF");
  const Mask pos = f.positives();
  const int n = d.order();
  for (Vertex v : to_vertices(pos)) {
    if (is_modf(d, {n, pos & ~bit(v)})) return false;
  }
  if (popcount(pos) > kMinimalityCap) {
    throw CapExceeded("minimality check capped at " + std::to_string(kMinimalityCap) +
                      " positive vertices, got " + std::to_string(popcount(pos)));
  }
  // Every proper submask of the positives is a candidate g < f.
  for (Mask g = (pos - 1) & pos;; g = (g - 1) & pos) {
    if (is_modf(d, {n, g})) return false;
    if (g == 0) break;
  }
  return true;
}

bool minimality_necessary_condition(const Digraph& d, const SignFunction& f) {
  if (!is_modf(d, f)) throw std::invalid_argument("sign function is not a MODF");
  for (Vertex v : to_vertices(f.positives())) {
    bool found = false;
    for (Vertex u : to_vertices(d.closed_in(v))) {
      const int s = f.sum(d.closed_out(u));
      if (s == 1 || s == 2) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_majority_dominating(const Graph& g, const SignFunction& f) {
  check_sizes(g.order(), f);
  int satisfied = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.sum(g.closed(v)) >= 1) ++satisfied;
  }
  return 2 * satisfied >= g.order();
}

bool is_in_dominating(const Digraph& d, Mask s) {
  if (s & ~full_mask(d.order())) throw std::out_of_range("set member outside [0, n)");
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!contains(s, v) && !(d.out(v) & s)) return false;
  }
  return true;
}

Digraph reverse_digraph(const Digraph& d) {
  std::vector<Mask> out(d.order());
  for (Vertex v = 0; v < d.order(); ++v) out[v] = d.in(v);
  return from_out_masks(d.order(), std::move(out));
}

}  // namespace majdom
