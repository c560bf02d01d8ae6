#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "majdom/digraph.hpp"
#include "majdom/solver.hpp"

namespace majdom {

/// Caps for 2^|E| orientation enumeration and for solving every orientation.
inline constexpr int kOrientationEdgeCap = 24;
inline constexpr int kDomEdgeCap = 20;
inline constexpr int kDomOrderCap = 20;

/// Orientation `index` of g: bit i of the index reverses edge i of
/// g.edges() (0 keeps low -> high).
Digraph orientation_at(const Graph& g, std::uint64_t index);
std::uint64_t orientation_count(const Graph& g);

/// Calls fn(index, digraph) for all 2^|E| orientations in index order.
template <class Fn>
void for_each_orientation(const Graph& g, Fn&& fn) {
  const std::uint64_t count = orientation_count(g);
  for (std::uint64_t i = 0; i < count; ++i) fn(i, orientation_at(g, i));
}

enum class Symmetry { none, stars };
std::string_view symmetry_name(Symmetry s);

/// Stem/leaf structure of a star or double star, detected from adjacency.
struct StarShape {
  Vertex stem_u = -1;
  Vertex stem_v = -1;  // -1 for a plain star
  std::vector<Vertex> leaves_u;
  std::vector<Vertex> leaves_v;
};
std::optional<StarShape> detect_star_shape(const Graph& g);

/// One orientation per leaf-permutation class of a star or double star:
/// within each stem the out-oriented leaves take the lowest indices.
std::vector<Digraph> canonical_star_orientations(const Graph& g, const StarShape& shape);

struct OrientationResult {
  int dom_plus = 0;
  Digraph dom_orientation;
  SignFunction dom_witness;
  int DOM_plus = 0;
  Digraph DOM_orientation;
  std::uint64_t orientations_enumerated = 0;
};

/// dom+ and DOM+ as min and max of gamma+_maj over the orientations of g.
/// With Symmetry::stars, stars and double stars are reduced to their
/// leaf-symmetry classes; other graphs fall back to full enumeration.
OrientationResult dom_DOM(const Graph& g, Symmetry symmetry = Symmetry::none,
                          Method method = Method::oracle);

enum class Ordering { less, equal, greater };
std::string_view ordering_name(Ordering o);

struct GammaComparison {
  int gamma_maj = 0;
  int dom_plus = 0;
  int DOM_plus = 0;
  /// gamma_maj compared to DOM+.
  Ordering gamma_vs_DOM{};
  bool dom_at_most_gamma = false;
};

GammaComparison compare_with_gamma_maj(const Graph& g, Symmetry symmetry = Symmetry::none);

}  // namespace majdom
