#include "majdom/transforms.hpp"

#include <string>

namespace majdom {

namespace {

void check_vertex(const Digraph& d, Vertex v) {
  if (v < 0 || v >= d.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

std::string arc_name(Vertex u, Vertex v) { return std::to_string(u) + " -> " + std::to_string(v); }

std::vector<Mask> out_masks(const Digraph& d) {
  std::vector<Mask> out(d.order());
  for (Vertex v = 0; v < d.order(); ++v) out[v] = d.out(v);
  return out;
}

}  // namespace

Digraph reverse_arc(const Digraph& d, Vertex u, Vertex v) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (!d.has_arc(u, v)) throw std::invalid_argument("no arc " + arc_name(u, v));
  if (d.has_arc(v, u)) throw std::invalid_argument("reversing would duplicate arc " + arc_name(v, u));
  auto out = out_masks(d);
  out[u] &= ~bit(v);
  out[v] |= bit(u);
  return from_out_masks(d.order(), std::move(out));
}

Digraph delete_arc(const Digraph& d, Vertex u, Vertex v) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (!d.has_arc(u, v)) throw std::invalid_argument("no arc " + arc_name(u, v));
  auto out = out_masks(d);
  out[u] &= ~bit(v);
  return from_out_masks(d.order(), std::move(out));
}

Digraph delete_vertex(const Digraph& d, Vertex v) {
  check_vertex(d, v);
  if (d.order() < 2) throw std::invalid_argument("cannot delete the last vertex");
  const Mask low = full_mask(v);
  auto squeeze = [&](Mask m) { return (m & low) | ((m >> 1) & ~low); };
  std::vector<Mask> out;
  out.reserve(d.order() - 1);
  for (Vertex u = 0; u < d.order(); ++u) {
    if (u != v) out.push_back(squeeze(d.out(u) & ~bit(v)));
  }
  return from_out_masks(d.order() - 1, std::move(out));
}

Digraph orientation_from_majority_function(const Graph& g, const SignFunction& f) {
  if (!is_majority_dominating(g, f)) throw std::invalid_argument("f is not majority dominating");
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) {
    if (f.value(u) == f.value(v)) {
      arcs.emplace_back(u, v);
    } else if (f.value(u) < 0) {
      arcs.emplace_back(u, v);
    } else {
      arcs.emplace_back(v, u);
    }
  }
  return {g.order(), arcs};
}

}  // namespace majdom
