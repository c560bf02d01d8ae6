#include <doctest.h>

#include "majdom/families.hpp"
#include "majdom/solver.hpp"
#include "oracles.hpp"

using namespace majdom;
namespace fam = majdom::families;

TEST_CASE("oracle values of named digraphs") {
  CHECK(gamma_maj_out_oracle(fam::directed_cycle(6)).optimum == 2);
  CHECK(gamma_maj_out_oracle(fam::directed_path(7)).optimum == 1);
  CHECK(gamma_maj_out_oracle(fam::figure1()).optimum == 1);
  CHECK(gamma_maj_out_oracle(fam::empty_digraph(9)).optimum == 1);
  CHECK(gamma_maj_out_oracle(fam::transitive_tournament(12)).optimum == -4);
}

TEST_CASE("oracle witness and tie-break") {
  const SolveResult r = gamma_maj_out_oracle(fam::directed_cycle(4));
  CHECK(r.optimum == 2);
  CHECK(r.method == Method::oracle);
  CHECK(is_modf(fam::directed_cycle(4), r.witness));
  CHECK(r.witness.weight() == 2);
  // {0,1,2} is the first three-vertex list that works.
  CHECK(r.witness.positives() == 0b0111);
  CHECK(serial::gamma_maj_out_oracle(fam::directed_cycle(4)).witness == r.witness);
  // Optima {0,3} and {1,2}: the list order and the integer order disagree.
  const Digraph d(4, {{0, 3}, {3, 0}, {1, 2}, {2, 1}});
  CHECK(gamma_maj_out_oracle(d).witness.positives() == (bit(0) | bit(3)));
  CHECK(serial::gamma_maj_out_oracle(d).witness.positives() == (bit(0) | bit(3)));
  CHECK(gamma_minus(d).witness == (bit(0) | bit(1)));
}

TEST_CASE("solver input checks") {
  CHECK_THROWS_AS(gamma_maj_out_oracle(Digraph(0)), std::invalid_argument);
  CHECK_THROWS_AS(gamma_maj_out_oracle(fam::empty_digraph(kOracleCap + 1)), CapExceeded);
  CHECK_THROWS_AS(gamma_maj_out_bb(fam::empty_digraph(kBranchBoundCap + 1)), CapExceeded);
  CHECK_THROWS_AS(gamma_minus(fam::empty_digraph(kOracleCap + 1)), CapExceeded);
}

TEST_CASE("branch-and-bound on named digraphs") {
  CHECK(gamma_maj_out_bb(fam::transitive_tournament(12)).optimum == -4);
  CHECK(gamma_maj_out_bb(fam::figure1()).optimum == 1);
  for (int n = 3; n <= 16; ++n) {
    const SolveResult r = gamma_maj_out_bb(fam::directed_cycle(n));
    CHECK(r.optimum == (n % 2 == 0 ? 2 : 3));
    CHECK(r.method == Method::branch_and_bound);
    CHECK(is_modf(fam::directed_cycle(n), r.witness));
    CHECK(r.witness.weight() == r.optimum);
  }
  // Beyond the oracle cap the dispatcher switches method.
  const SolveResult big = gamma_maj_out(fam::directed_cycle(30));
  CHECK(big.method == Method::branch_and_bound);
  CHECK(big.optimum == 2);
  CHECK(gamma_maj_out(fam::directed_path(31)).optimum == 1);
}

TEST_CASE("gamma_maj of undirected graphs") {
  CHECK(gamma_maj_undirected(fam::path_graph(8)).optimum == 0);
  CHECK(gamma_maj_undirected(fam::path_graph(10)).optimum == -2);
  CHECK(gamma_maj_undirected(fam::cycle_graph(6)).optimum == oracle::gamma_plus(fam::cycle_graph(6)));
  CHECK(gamma_maj_undirected(fam::cycle_graph(6)).optimum == 0);
  CHECK(gamma_maj_undirected(fam::cycle_graph(9)).optimum == -1);
  CHECK(gamma_maj_undirected(fam::star_graph(5)).optimum == 1);
  CHECK(gamma_maj_undirected(fam::path_graph(2)).optimum == 2);
  const SolveResult r = gamma_maj_undirected(fam::cycle_graph(7));
  CHECK(is_majority_dominating(fam::cycle_graph(7), r.witness));
  CHECK(serial::gamma_maj_undirected(fam::cycle_graph(7)).witness == r.witness);
}

TEST_CASE("modf decision") {
  CHECK(modf_decision(fam::directed_cycle(4), 2));
  CHECK_FALSE(modf_decision(fam::directed_cycle(4), 1));
  for (int n = 1; n <= 6; ++n) CHECK(modf_decision(fam::complete_digraph(n), n));
  CHECK(modf_decision(fam::directed_cycle(40), 40));
}

TEST_CASE("in-domination number") {
  CHECK(gamma_minus(fam::directed_cycle(3)).optimum == 2);
  CHECK(gamma_minus(fam::directed_cycle(4)).optimum == 2);
  CHECK(gamma_minus(fam::directed_cycle(4)).witness == 0b0101);
  for (int n = 1; n <= 6; ++n) CHECK(gamma_minus(fam::complete_digraph(n)).optimum == 1);
  CHECK(gamma_minus(fam::empty_digraph(5)).optimum == 5);
  CHECK(serial::gamma_minus(fam::directed_cycle(7)).witness == gamma_minus(fam::directed_cycle(7)).witness);
  CHECK(gamma_minus(fam::directed_cycle(7)).optimum == oracle::gamma_minus(fam::directed_cycle(7)));
}

TEST_CASE("gamma minus bound") {
  CHECK(check_gamma_minus_bound(fam::directed_cycle(4)));
  CHECK(check_gamma_minus_bound(fam::complete_digraph(5)));
  CHECK(check_gamma_minus_bound(fam::empty_digraph(6)));
  CHECK_THROWS_AS(check_gamma_minus_bound(fam::directed_path(3)), std::invalid_argument);
  CHECK(regular_out_degree(fam::complete_digraph(4)) == 3);
  CHECK(regular_out_degree(fam::directed_path(3)) == -1);
}

TEST_CASE("optimal MODF enumeration") {
  const auto all = optimal_modfs(fam::directed_cycle(4));
  // Three consecutive positives in any of four rotations.
  CHECK(all == std::vector<Mask>{0b0111, 0b1011, 0b1101, 0b1110});
  for (Mask m : optimal_modfs(fam::transitive_tournament(6))) {
    CHECK(is_modf(fam::transitive_tournament(6), SignFunction(6, m)));
    CHECK(SignFunction(6, m).weight() == gamma_maj_out_oracle(fam::transitive_tournament(6)).optimum);
  }
}

TEST_CASE("ceil_div handles negative numerators") {
  CHECK(ceil_div(7, 4) == 2);
  CHECK(ceil_div(8, 4) == 2);
  CHECK(ceil_div(0, 6) == 0);
  CHECK(ceil_div(-1, 6) == 0);
  CHECK(ceil_div(-6, 6) == -1);
  CHECK(ceil_div(-7, 6) == -1);
  CHECK(floor_div(-1, 6) == -1);
  CHECK(floor_div(5, 6) == 0);
  CHECK(floor_div(6, 6) == 1);
}

TEST_CASE("closed forms") {
  using fam::FamilySpec;
  using fam::Kind;
  CHECK(closed_form(FamilySpec{Kind::transitive_tournament, 7}, Quantity::gamma_plus).predicted == -1);
  CHECK(closed_form(FamilySpec{Kind::path_graph, 6}, Quantity::dom_plus).predicted == -2);
  CHECK(closed_form(FamilySpec{Kind::path_graph, 6}, Quantity::DOM_plus).predicted == 0);
  CHECK(closed_form(FamilySpec{Kind::cycle_graph, 3}, Quantity::dom_plus).predicted == 1);
  CHECK(closed_form(FamilySpec{Kind::cycle_graph, 4}, Quantity::dom_plus).predicted == 0);
  CHECK(closed_form(FamilySpec{Kind::cycle_graph, 9}, Quantity::gamma_maj).predicted == -1);
  CHECK(closed_form(FamilySpec{Kind::path_graph, 8}, Quantity::gamma_maj).predicted == 0);
  CHECK(closed_form(FamilySpec{Kind::path_graph, 10}, Quantity::gamma_maj).predicted == -2);
  CHECK(closed_form(FamilySpec{Kind::cycle_graph, 15}, Quantity::gamma_maj).predicted == -3);
  CHECK(closed_form(FamilySpec{Kind::star_graph, 6}, Quantity::gamma_maj).predicted == 2);
  CHECK(closed_form(FamilySpec{Kind::star_graph, 5}, Quantity::gamma_maj).predicted == 1);

  FamilySpec ds{Kind::double_star_graph};
  ds.a = 6;
  ds.b = 6;
  CHECK(closed_form(ds, Quantity::dom_plus).predicted == -4);
  ds.b = 5;
  CHECK(closed_form(ds, Quantity::dom_plus).predicted == -3);
  ds.a = 1;
  ds.b = 11;
  CHECK(closed_form(ds, Quantity::dom_plus).predicted == -2);

  FamilySpec k{Kind::complete_bipartite_graph};
  k.r = 3;
  k.s = 4;
  CHECK(closed_form(k, Quantity::dom_plus).predicted == -3);
  k.r = 1;
  CHECK_THROWS_AS(closed_form(k, Quantity::dom_plus), std::invalid_argument);

  CHECK_THROWS_AS(closed_form(FamilySpec{Kind::star_graph, 4}, Quantity::dom_plus), std::invalid_argument);
  CHECK_THROWS_AS(closed_form(FamilySpec{Kind::directed_cycle, 5}, Quantity::dom_plus),
                  std::invalid_argument);
  CHECK(closed_forms(FamilySpec{Kind::path_graph, 6}).size() == 3);
  CHECK(closed_forms(FamilySpec{Kind::figure1}).empty());
}

TEST_CASE("thread count does not change results") {
  const Digraph d = fam::figure2(4);
  const int initial = max_threads();
  set_threads(1);
  const SolveResult one = gamma_maj_out_oracle(d);
  set_threads(4);
  const SolveResult four = gamma_maj_out_oracle(d);
  set_threads(initial);
  CHECK(one.optimum == four.optimum);
  CHECK(one.witness == four.witness);
  CHECK(max_threads() >= 1);
}
