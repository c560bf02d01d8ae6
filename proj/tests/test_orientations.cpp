#include <doctest.h>

#include "majdom/families.hpp"
#include "majdom/orientations.hpp"
#include "oracles.hpp"

using namespace majdom;
namespace fam = majdom::families;

TEST_CASE("orientation enumeration") {
  CHECK(orientation_count(fam::path_graph(3)) == 4);
  int directed_cycles = 0;
  int total = 0;
  for_each_orientation(fam::cycle_graph(3), [&](std::uint64_t, const Digraph& d) {
    ++total;
    CHECK(d.arc_count() == 3);
    CHECK_FALSE(d.has_opposite_pair());
    bool cyclic = true;
    for (Vertex v = 0; v < 3; ++v) cyclic = cyclic && d.out_degree(v) == 1;
    if (cyclic) ++directed_cycles;
  });
  CHECK(total == 8);
  CHECK(directed_cycles == 2);

  const Digraph zero = orientation_at(fam::path_graph(3), 0);
  CHECK(zero == Digraph(3, {{0, 1}, {1, 2}}));
  CHECK(orientation_at(fam::path_graph(3), 0b10) == Digraph(3, {{0, 1}, {2, 1}}));
  CHECK_THROWS_AS(orientation_count(fam::complete_bipartite_graph(5, 5)), CapExceeded);
}

TEST_CASE("dom and DOM of small graphs") {
  auto p6 = dom_DOM(fam::path_graph(6));
  CHECK(p6.dom_plus == -2);
  CHECK(p6.DOM_plus == 0);
  CHECK(p6.orientations_enumerated == 32);
  CHECK(gamma_maj_out_oracle(p6.dom_orientation).optimum == -2);
  CHECK(is_modf(p6.dom_orientation, p6.dom_witness));
  CHECK(p6.dom_witness.weight() == -2);
  CHECK(gamma_maj_out_oracle(p6.DOM_orientation).optimum == 0);

  auto c3 = dom_DOM(fam::cycle_graph(3));
  CHECK(c3.dom_plus == 1);
  CHECK(c3.DOM_plus == 3);

  CHECK(dom_DOM(fam::complete_bipartite_graph(2, 3)).dom_plus == -1);
  CHECK(dom_DOM(fam::path_graph(1)).dom_plus == 1);
}

TEST_CASE("dom and DOM with branch-and-bound agree with the oracle") {
  for (int n = 3; n <= 7; ++n) {
    const Graph g = fam::cycle_graph(n);
    const auto a = dom_DOM(g, Symmetry::none, Method::oracle);
    const auto b = dom_DOM(g, Symmetry::none, Method::branch_and_bound);
    CHECK(a.dom_plus == b.dom_plus);
    CHECK(a.DOM_plus == b.DOM_plus);
  }
}

TEST_CASE("dom and DOM match an independent enumeration") {
  for (const Graph& g : {fam::path_graph(5), fam::star_graph(5), fam::double_star_graph(1, 2),
                         fam::complete_bipartite_graph(2, 2)}) {
    const auto r = dom_DOM(g);
    const auto [lo, hi] = oracle::dom_DOM(g);
    CHECK(r.dom_plus == lo);
    CHECK(r.DOM_plus == hi);
  }
}

TEST_CASE("star shape detection") {
  auto star = detect_star_shape(fam::star_graph(6));
  REQUIRE(star);
  CHECK(star->stem_u == 0);
  CHECK(star->stem_v == -1);
  CHECK(star->leaves_u.size() == 5);

  auto ds = detect_star_shape(fam::double_star_graph(2, 3));
  REQUIRE(ds);
  CHECK(ds->leaves_u.size() + ds->leaves_v.size() == 5);

  CHECK_FALSE(detect_star_shape(fam::cycle_graph(5)));
  CHECK_FALSE(detect_star_shape(fam::complete_bipartite_graph(2, 3)));
}

TEST_CASE("canonical star orientations") {
  const Graph star = fam::star_graph(7);
  CHECK(canonical_star_orientations(star, *detect_star_shape(star)).size() == 7);
  const Graph ds = fam::double_star_graph(2, 3);
  CHECK(canonical_star_orientations(ds, *detect_star_shape(ds)).size() == 2 * 3 * 4);
}

TEST_CASE("symmetry reduction matches plain enumeration") {
  for (int n = 2; n <= 9; ++n) {
    const Graph g = fam::star_graph(n);
    const auto plain = dom_DOM(g);
    const auto reduced = dom_DOM(g, Symmetry::stars);
    CHECK(plain.dom_plus == reduced.dom_plus);
    CHECK(plain.DOM_plus == reduced.DOM_plus);
    CHECK(reduced.orientations_enumerated <= plain.orientations_enumerated);
  }
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 4; ++b) {
      const Graph g = fam::double_star_graph(a, b);
      const auto plain = dom_DOM(g);
      const auto reduced = dom_DOM(g, Symmetry::stars);
      CHECK(plain.dom_plus == reduced.dom_plus);
      CHECK(plain.DOM_plus == reduced.DOM_plus);
    }
  }
  // Not a star: the flag falls back to full enumeration.
  CHECK(dom_DOM(fam::cycle_graph(5), Symmetry::stars).orientations_enumerated == 32);
}

TEST_CASE("comparison with gamma_maj") {
  const auto p8 = compare_with_gamma_maj(fam::path_graph(8));
  CHECK(p8.gamma_maj == 0);
  CHECK(p8.DOM_plus == 0);
  CHECK(p8.gamma_vs_DOM == Ordering::equal);
  CHECK(p8.dom_at_most_gamma);

  const auto p10 = compare_with_gamma_maj(fam::path_graph(10));
  CHECK(p10.gamma_maj == -2);
  CHECK(p10.DOM_plus == 0);
  CHECK(p10.gamma_vs_DOM == Ordering::less);

  const auto s6 = compare_with_gamma_maj(fam::star_graph(6));
  CHECK(s6.DOM_plus == 0);
  CHECK(s6.gamma_maj == 2);
  CHECK(s6.gamma_vs_DOM == Ordering::greater);

  const auto ds = compare_with_gamma_maj(fam::double_star_graph(2, 2));
  CHECK(ds.gamma_maj == 0);
  CHECK(ds.DOM_plus == 0);
  CHECK(ds.gamma_vs_DOM == Ordering::equal);
}

TEST_CASE("dom_DOM caps") {
  CHECK_THROWS_AS(dom_DOM(fam::complete_bipartite_graph(3, 7)), CapExceeded);
  CHECK_THROWS_AS(dom_DOM(fam::path_graph(21)), CapExceeded);
}
