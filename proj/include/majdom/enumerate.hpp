#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "majdom/digraph.hpp"

namespace majdom::enumerate {

using Rng = std::mt19937_64;

/// Labelled digraphs on n vertices (opposite pairs allowed) are indexed by
/// codes in [0, 2^(n(n-1))): one bit per ordered pair (u, v), u != v, in
/// row-major order.
std::uint64_t digraph_count(int n);
Digraph digraph_from_code(int n, std::uint64_t code);

template <class Fn>
void for_each_digraph(int n, Fn&& fn) {
  const std::uint64_t count = digraph_count(n);
  for (std::uint64_t c = 0; c < count; ++c) fn(digraph_from_code(n, c));
}

/// Every labelled digraph on n vertices with all out-degrees equal to d.
std::vector<Digraph> out_regular_digraphs(int n, int d);

/// Each ordered pair (u, v), u != v, is an arc with probability p.
Digraph random_digraph(int n, double p, Rng& rng);
/// Each vertex picks d distinct out-neighbors uniformly.
Digraph random_out_regular(int n, int d, Rng& rng);
/// Random orientation of a random circulant graph, randomly relabelled, so
/// d+(v) + d-(v) is the same for every vertex.
Digraph random_regular_underlying(int n, Rng& rng);

Digraph relabel(const Digraph& d, const std::vector<Vertex>& perm);

/// One representative per isomorphism class of graphs on n <= 7 vertices.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Tournaments on n vertices whose out-degrees are non-increasing in vertex
/// index. Every tournament is isomorphic to at least one of them.
std::vector<Digraph> score_sorted_tournaments(int n);
/// Streaming form; stops early when `visit` returns false.
void for_each_score_sorted_tournament(int n, const std::function<bool(const Digraph&)>& visit);

}  // namespace majdom::enumerate
