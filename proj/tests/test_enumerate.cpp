#include <doctest.h>

#include <algorithm>
#include <set>

#include "majdom/conjecture.hpp"
#include "majdom/enumerate.hpp"
#include "majdom/families.hpp"
#include "majdom/solver.hpp"
#include "oracles.hpp"

using namespace majdom;
namespace en = majdom::enumerate;
namespace fam = majdom::families;

TEST_CASE("labelled digraph codes") {
  CHECK(en::digraph_count(1) == 1);
  CHECK(en::digraph_count(3) == 64);
  CHECK(en::digraph_from_code(3, 0).arc_count() == 0);
  CHECK(en::digraph_from_code(3, 63) == fam::complete_digraph(3));
  std::set<std::vector<Arc>> seen;
  en::for_each_digraph(3, [&](const Digraph& d) { seen.insert(d.arcs()); });
  CHECK(seen.size() == 64);
  CHECK_THROWS_AS(en::digraph_count(8), CapExceeded);
}

TEST_CASE("out-regular digraphs") {
  CHECK(en::out_regular_digraphs(4, 1).size() == 81);
  CHECK(en::out_regular_digraphs(4, 3).size() == 1);
  CHECK(en::out_regular_digraphs(3, 0).size() == 1);
  for (const Digraph& d : en::out_regular_digraphs(4, 2)) CHECK(regular_out_degree(d) == 2);
}

TEST_CASE("random generators are seeded and respect their contracts") {
  en::Rng a(42);
  en::Rng b(42);
  CHECK(en::random_digraph(9, 0.5, a) == en::random_digraph(9, 0.5, b));
  CHECK(en::random_digraph(6, 0.0, a).arc_count() == 0);
  CHECK(en::random_digraph(6, 1.0, a) == fam::complete_digraph(6));

  en::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    CHECK(regular_out_degree(en::random_out_regular(12, 4, rng)) == 4);
    const Digraph d = en::random_regular_underlying(9, rng);
    CHECK_FALSE(d.has_opposite_pair());
    const int c = d.in_degree(0) + d.out_degree(0);
    for (Vertex v = 1; v < 9; ++v) CHECK(d.in_degree(v) + d.out_degree(v) == c);
  }
}

TEST_CASE("relabelling") {
  const Digraph p = fam::directed_path(3);
  CHECK(en::relabel(p, {2, 1, 0}) == Digraph(3, {{2, 1}, {1, 0}}));
}

TEST_CASE("non-isomorphic graph counts") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(en::nonisomorphic_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("score-sorted tournaments") {
  for (int n = 1; n <= 6; ++n) {
    for (const Digraph& t : en::score_sorted_tournaments(n)) {
      CHECK(t.arc_count() == n * (n - 1) / 2);
      CHECK_FALSE(t.has_opposite_pair());
      for (Vertex v = 1; v < n; ++v) CHECK(t.out_degree(v - 1) >= t.out_degree(v));
    }
  }
  // Every tournament on 4 vertices is isomorphic to one in the list: check
  // the four isomorphism classes show up through their score sequences.
  std::set<std::vector<int>> scores;
  for (const Digraph& t : en::score_sorted_tournaments(4)) {
    std::vector<int> s;
    for (Vertex v = 0; v < 4; ++v) s.push_back(t.out_degree(v));
    scores.insert(s);
  }
  CHECK(scores.size() == 4);
  int visited = 0;
  en::for_each_score_sorted_tournament(5, [&](const Digraph&) { return ++visited < 3; });
  CHECK(visited == 3);
}

TEST_CASE("in-degree monotonicity") {
  const Digraph t = fam::transitive_tournament(4);
  // In-degrees are 0,1,2,3.
  CHECK(conjecture::indegree_monotone(t, bit(3)));
  CHECK(conjecture::indegree_monotone(t, bit(2) | bit(3)));
  CHECK_FALSE(conjecture::indegree_monotone(t, bit(0)));
  CHECK(conjecture::indegree_monotone(t, 0));
}

TEST_CASE("regular conjecture on fixtures") {
  for (int n = 1; n <= 8; ++n) CHECK(conjecture::regular_conjecture_holds(fam::transitive_tournament(n)));
  for (int n = 3; n <= 8; ++n) CHECK(conjecture::regular_conjecture_holds(fam::directed_cycle(n)));
  const auto r = conjecture::scan_regular({fam::directed_cycle(5), fam::transitive_tournament(6)});
  CHECK(r.instances_checked == 2);
  CHECK(r.status == conjecture::Status::no_counterexample);
  CHECK_THROWS_AS(conjecture::scan_regular({fam::directed_path(3)}), std::invalid_argument);
}

TEST_CASE("regular conjecture scans") {
  conjecture::RegularScanOptions opts;
  opts.max_n = 5;
  const auto r = conjecture::scan_regular(opts);
  CHECK(r.status == conjecture::Status::no_counterexample);
  CHECK(r.instances_checked > 0);

  opts.source = conjecture::Source::random_regular_underlying;
  opts.max_n = 8;
  opts.samples_per_n = 10;
  const auto random = conjecture::scan_regular(opts);
  CHECK(random.status == conjecture::Status::counterexample_found);
  REQUIRE(random.counterexample);
  CHECK(conjecture::reverify(conjecture::Id::regular_indegree_monotone, *random.counterexample));

  opts.source = conjecture::Source::all_tournaments;
  opts.max_n = 10;
  CHECK_THROWS_AS(conjecture::scan_regular(opts), CapExceeded);
}

TEST_CASE("bipartite scan") {
  const auto r = conjecture::scan_bipartite(3, 9);
  CHECK(r.instances_checked == 3);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].r == 2);
  CHECK(r.rows[0].s == 2);
  CHECK(r.rows[0].observed == 2);
  CHECK(r.rows[0].predicted == 2);
  CHECK(r.rows[1].observed == 1);
  CHECK(r.rows[1].predicted == 3);
  CHECK(r.rows[2].observed == 0);
  CHECK(r.rows[2].predicted == 2);
  CHECK(r.status == conjecture::Status::counterexample_found);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->r == 2);
  CHECK(r.counterexample->s == 3);
  CHECK(conjecture::reverify(conjecture::Id::bipartite_DOM, *r.counterexample));
  CHECK_THROWS_AS(conjecture::scan_bipartite(5, 20), CapExceeded);
}

TEST_CASE("two disjoint transitive triangles break the regular conjecture") {
  // Underlying graph is 2-regular. The only in-degree monotone pair is the
  // two sinks, which satisfy nothing else.
  const Digraph d(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(gamma_maj_out_oracle(d).optimum == -2);
  CHECK_FALSE(conjecture::regular_conjecture_holds(d));
  conjecture::Counterexample c;
  c.digraph = d;
  c.optimal_witnesses = optimal_modfs(d);
  CHECK(conjecture::reverify(conjecture::Id::regular_indegree_monotone, c));
  CHECK(conjecture::scan_regular(std::vector<Digraph>{d}).status == conjecture::Status::counterexample_found);
}

TEST_CASE("reverify rejects a fabricated counterexample") {
  conjecture::Counterexample fake;
  fake.digraph = fam::transitive_tournament(5);
  CHECK_FALSE(conjecture::reverify(conjecture::Id::regular_indegree_monotone, fake));
  fake.r = 2;
  fake.s = 2;
  fake.observed = 3;
  fake.predicted = 2;
  CHECK_FALSE(conjecture::reverify(conjecture::Id::bipartite_DOM, fake));
}

TEST_CASE("a six-vertex tournament breaks the regular conjecture") {
  // In-degrees 2,2,2,3,3,3. Every optimum has three positives, and the only
  // monotone choice {3,4,5} satisfies just vertices 3 and 4.
  const Digraph t(6, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 0}, {2, 3},
                      {2, 5}, {3, 4}, {3, 5}, {4, 2}, {4, 5}, {5, 0}, {5, 1}});
  CHECK(oracle::gamma_plus(t) == 0);
  CHECK_FALSE(is_modf(t, SignFunction(6, bit(3) | bit(4) | bit(5))));
  CHECK(satisfied_set(t, SignFunction(6, bit(3) | bit(4) | bit(5))) == (bit(3) | bit(4)));
  CHECK_FALSE(conjecture::regular_conjecture_holds(t));
  conjecture::RegularScanOptions opts;
  opts.max_n = 6;
  const auto r = conjecture::scan_regular(opts);
  CHECK(r.status == conjecture::Status::counterexample_found);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->digraph.order() == 6);
  CHECK(conjecture::reverify(conjecture::Id::regular_indegree_monotone, *r.counterexample));
}
