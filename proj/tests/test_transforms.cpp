#include <doctest.h>

#include "majdom/families.hpp"
#include "majdom/solver.hpp"
#include "majdom/transforms.hpp"

using namespace majdom;
namespace fam = majdom::families;

TEST_CASE("arc reversal") {
  const Digraph c3 = fam::directed_cycle(3);
  const Digraph r = reverse_arc(c3, 0, 1);
  CHECK(r.has_arc(1, 0));
  CHECK_FALSE(r.has_arc(0, 1));
  CHECK(r.arc_count() == 3);
  CHECK(gamma_maj_out_oracle(c3).optimum == 3);
  CHECK(gamma_maj_out_oracle(r).optimum == 1);
  CHECK(reverse_arc(r, 1, 0) == c3);
  CHECK_THROWS_AS(reverse_arc(c3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(reverse_arc(Digraph(2, {{0, 1}, {1, 0}}), 0, 1), std::invalid_argument);
}

TEST_CASE("arc deletion") {
  const Digraph c3 = fam::directed_cycle(3);
  CHECK(gamma_maj_out_oracle(delete_arc(c3, 2, 0)).optimum == 1);
  CHECK_THROWS_AS(delete_arc(c3, 0, 2), std::invalid_argument);

  const Digraph star = fam::oriented_star(2, 2);
  CHECK(gamma_maj_out_oracle(star).optimum == -1);
  for (Vertex leaf : to_vertices(star.out(0))) {
    CHECK(gamma_maj_out_oracle(delete_arc(star, 0, leaf)).optimum == 1);
  }
}

TEST_CASE("vertex deletion") {
  const Digraph d = fam::figure1();
  const Digraph minus_v = delete_vertex(d, fam::kFigure1V);
  CHECK(minus_v.order() == 6);
  CHECK(minus_v.arc_count() == 5);
  CHECK(gamma_maj_out_oracle(minus_v).optimum == -2);

  // Vertices above the deleted one shift down: 0->1->2->3 minus 1 is 1->2 relabelled.
  CHECK(delete_vertex(fam::directed_path(4), 1) == Digraph(3, {{1, 2}}));

  for (int k = 1; k <= 3; ++k) {
    const Digraph f2 = fam::figure2(k);
    CHECK(gamma_maj_out_oracle(f2).optimum <= -2 * k);
    CHECK(gamma_maj_out_oracle(delete_vertex(f2, fam::kFigure2U)).optimum >= 0);
  }
  CHECK_THROWS_AS(delete_vertex(Digraph(1), 0), std::invalid_argument);
  CHECK_THROWS_AS(delete_vertex(d, 7), std::out_of_range);
}

TEST_CASE("orientation from a majority dominating function") {
  const Graph p4 = fam::path_graph(4);
  const SignFunction f(4, bit(1) | bit(2));
  const Digraph o = orientation_from_majority_function(p4, f);
  CHECK(o.arc_count() == 3);
  CHECK(o.has_arc(0, 1));
  CHECK(o.has_arc(1, 2));
  CHECK(o.has_arc(3, 2));
  CHECK(is_modf(o, f));

  const Graph k = fam::complete_bipartite_graph(3, 3);
  const SignFunction all = SignFunction::all_positive(6);
  CHECK(is_modf(orientation_from_majority_function(k, all), all));

  CHECK_THROWS_AS(orientation_from_majority_function(fam::star_graph(5), SignFunction(5, bit(0))),
                  std::invalid_argument);
}
