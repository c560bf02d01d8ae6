#include "majdom/orientations.hpp"

#include <limits>
#include <string>

namespace majdom {

std::uint64_t orientation_count(const Graph& g) {
  const int m = g.edge_count();
  if (m > kOrientationEdgeCap) {
    throw CapExceeded("orientation enumeration is capped at " + std::to_string(kOrientationEdgeCap) +
                      " edges, got " + std::to_string(m));
  }
  return std::uint64_t{1} << m;
}

Digraph orientation_at(const Graph& g, std::uint64_t index) {
  const auto edges = g.edges();
  std::vector<Mask> out(g.order(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [lo, hi] = edges[i];
    if ((index >> i) & 1U) {
      out[hi] |= bit(lo);
    } else {
      out[lo] |= bit(hi);
    }
  }
  return from_out_masks(g.order(), std::move(out));
}

std::string_view symmetry_name(Symmetry s) { return s == Symmetry::stars ? "stars" : "none"; }

std::optional<StarShape> detect_star_shape(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.edge_count() != n - 1) return std::nullopt;

  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) == n - 1) {
      StarShape s;
      s.stem_u = c;
      s.leaves_u = to_vertices(g.neighbors(c));
      return s;
    }
  }
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) < 2 || g.degree(v) < 2) continue;
    const Mask lu = g.neighbors(u) & ~bit(v);
    const Mask lv = g.neighbors(v) & ~bit(u);
    if (popcount(lu) + popcount(lv) != n - 2) continue;
    bool pendant = true;
    for (Vertex x : to_vertices(lu | lv)) pendant = pendant && g.degree(x) == 1;
    if (!pendant) continue;
    return StarShape{u, v, to_vertices(lu), to_vertices(lv)};
  }
  return std::nullopt;
}

std::vector<Digraph> canonical_star_orientations(const Graph& g, const StarShape& shape) {
  auto orient_leaves = [](std::vector<Arc>& arcs, Vertex stem, const std::vector<Vertex>& leaves,
                          std::size_t out_count) {
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (i < out_count) {
        arcs.emplace_back(stem, leaves[i]);
      } else {
        arcs.emplace_back(leaves[i], stem);
      }
    }
  };

  std::vector<Digraph> out;
  if (shape.stem_v < 0) {
    for (std::size_t k = 0; k <= shape.leaves_u.size(); ++k) {
      std::vector<Arc> arcs;
      orient_leaves(arcs, shape.stem_u, shape.leaves_u, k);
      out.emplace_back(g.order(), arcs);
    }
    return out;
  }
  for (int forward = 1; forward >= 0; --forward) {
    for (std::size_t i = 0; i <= shape.leaves_u.size(); ++i) {
      for (std::size_t j = 0; j <= shape.leaves_v.size(); ++j) {
        std::vector<Arc> arcs;
        arcs.push_back(forward ? Arc{shape.stem_u, shape.stem_v} : Arc{shape.stem_v, shape.stem_u});
        orient_leaves(arcs, shape.stem_u, shape.leaves_u, i);
        orient_leaves(arcs, shape.stem_v, shape.leaves_v, j);
        out.emplace_back(g.order(), arcs);
      }
    }
  }
  return out;
}

namespace {

SolveResult solve(const Digraph& d, Method method) {
  return method == Method::oracle ? gamma_maj_out_oracle(d) : gamma_maj_out_bb(d);
}

struct Extremes {
  int min_value = std::numeric_limits<int>::max();
  std::uint64_t min_index = 0;
  int max_value = std::numeric_limits<int>::min();
  std::uint64_t max_index = 0;

  void add(int value, std::uint64_t index) {
    if (value < min_value || (value == min_value && index < min_index)) {
      min_value = value;
      min_index = index;
    }
    if (value > max_value || (value == max_value && index < max_index)) {
      max_value = value;
      max_index = index;
    }
  }
};

}  // namespace

OrientationResult dom_DOM(const Graph& g, Symmetry symmetry, Method method) {
  if (g.order() < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (g.order() > kDomOrderCap || g.edge_count() > kDomEdgeCap) {
    throw CapExceeded("dom/DOM needs n <= " + std::to_string(kDomOrderCap) + " and |E| <= " +
                      std::to_string(kDomEdgeCap));
  }

  std::vector<Digraph> reps;
  if (symmetry == Symmetry::stars) {
    if (auto shape = detect_star_shape(g)) reps = canonical_star_orientations(g, *shape);
  }
  const bool reduced = !reps.empty();
  const std::uint64_t count = reduced ? reps.size() : orientation_count(g);
  auto nth = [&](std::uint64_t i) { return reduced ? reps[i] : orientation_at(g, i); };

  Extremes best;
#pragma omp parallel
  {
    Extremes local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      local.add(solve(nth(i), method).optimum, i);
    }
#pragma omp critical(majdom_orientation_reduce)
    if (local.max_value != std::numeric_limits<int>::min()) {
      best.add(local.min_value, local.min_index);
      best.add(local.max_value, local.max_index);
    }
  }

  OrientationResult r;
  r.orientations_enumerated = count;
  r.dom_orientation = nth(best.min_index);
  r.dom_witness = solve(r.dom_orientation, method).witness;
  r.dom_plus = best.min_value;
  r.DOM_orientation = nth(best.max_index);
  r.DOM_plus = best.max_value;
  return r;
}

std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "unknown";
}

GammaComparison compare_with_gamma_maj(const Graph& g, Symmetry symmetry) {
  const auto orient = dom_DOM(g, symmetry);
  GammaComparison c;
  c.gamma_maj = gamma_maj_undirected(g).optimum;
  c.dom_plus = orient.dom_plus;
  c.DOM_plus = orient.DOM_plus;
  c.gamma_vs_DOM = c.gamma_maj < c.DOM_plus    ? Ordering::less
                   : c.gamma_maj == c.DOM_plus ? Ordering::equal
                                               : Ordering::greater;
  c.dom_at_most_gamma = c.dom_plus <= c.gamma_maj;
  return c;
}

}  // namespace majdom
