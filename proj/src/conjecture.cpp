#include "majdom/conjecture.hpp"

#include <algorithm>
#include <limits>

#include "majdom/enumerate.hpp"
#include "majdom/families.hpp"
#include "majdom/orientations.hpp"
#include "majdom/solver.hpp"

namespace majdom::conjecture {

std::string_view id_name(Id id) {
  return id == Id::regular_indegree_monotone ? "regular_indegree_monotone" : "bipartite_DOM";
}

std::string_view status_name(Status s) {
  return s == Status::no_counterexample ? "no_counterexample" : "counterexample_found";
}

std::string_view source_name(Source s) {
  return s == Source::all_tournaments ? "all_tournaments" : "random_regular_underlying";
}

bool indegree_monotone(const Digraph& d, Mask positives) {
  int max_negative = std::numeric_limits<int>::min();
  int min_positive = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < d.order(); ++v) {
    if (contains(positives, v)) {
      min_positive = std::min(min_positive, d.in_degree(v));
    } else {
      max_negative = std::max(max_negative, d.in_degree(v));
    }
  }
  return max_negative <= min_positive;
}

bool regular_conjecture_holds(const Digraph& d) {
  for (Mask m : optimal_modfs(d)) {
    if (indegree_monotone(d, m)) return true;
  }
  return false;
}

namespace {

bool underlying_regular(const Digraph& d) {
  const int c = d.in_degree(0) + d.out_degree(0);
  for (Vertex v = 1; v < d.order(); ++v) {
    if (d.in_degree(v) + d.out_degree(v) != c) return false;
  }
  return true;
}

void record_regular(Report& r, const Digraph& d) {
  ++r.instances_checked;
  if (r.counterexample || regular_conjecture_holds(d)) return;
  Counterexample c;
  c.digraph = d;
  c.optimal_witnesses = optimal_modfs(d);
  if (reverify(Id::regular_indegree_monotone, c)) {
    r.counterexample = std::move(c);
    r.status = Status::counterexample_found;
  }
}

}  // namespace

bool reverify(Id id, const Counterexample& c) {
  if (id == Id::regular_indegree_monotone) {
    const Digraph& d = c.digraph;
    if (d.order() < 1 || d.order() > kOracleCap || !underlying_regular(d)) return false;
    const int best = serial::gamma_maj_out_oracle(d).optimum;
    for (Mask m = 0; m < (Mask{1} << d.order()); ++m) {
      const SignFunction f(d.order(), m);
      if (f.weight() == best && is_modf(d, f) && indegree_monotone(d, m)) return false;
    }
    return true;
  }
  const Graph g = families::complete_bipartite_graph(c.r, c.s);
  int dom_max = std::numeric_limits<int>::min();
  for_each_orientation(g, [&](std::uint64_t, const Digraph& d) {
    dom_max = std::max(dom_max, serial::gamma_maj_out_oracle(d).optimum);
  });
  return dom_max == c.observed && dom_max != c.predicted;
}

Report scan_regular(const std::vector<Digraph>& digraphs) {
  Report r;
  r.id = Id::regular_indegree_monotone;
  for (const Digraph& d : digraphs) {
    if (!underlying_regular(d)) throw std::invalid_argument("underlying graph is not regular");
    record_regular(r, d);
  }
  return r;
}

Report scan_regular(const RegularScanOptions& opts) {
  Report r;
  r.id = Id::regular_indegree_monotone;
  if (opts.source == Source::all_tournaments) {
    if (opts.max_n > 9) throw CapExceeded("exhaustive tournament scan supports max_n <= 9");
    for (int n = 1; n <= opts.max_n && !r.counterexample; ++n) {
      enumerate::for_each_score_sorted_tournament(n, [&](const Digraph& t) {
        record_regular(r, t);
        return !r.counterexample;
      });
    }
    return r;
  }
  enumerate::Rng rng(opts.seed);
  for (int n = 3; n <= opts.max_n && !r.counterexample; ++n) {
    for (int i = 0; i < opts.samples_per_n && !r.counterexample; ++i) {
      record_regular(r, enumerate::random_regular_underlying(n, rng));
    }
  }
  return r;
}

Report scan_bipartite(int max_rs, int product_cap) {
  if (product_cap > 16) throw CapExceeded("bipartite scan needs r*s <= 16");
  Report r;
  r.id = Id::bipartite_DOM;
  for (int a = 2; a <= max_rs; ++a) {
    for (int b = a; b <= max_rs; ++b) {
      if (a * b > product_cap) continue;
      const auto res = dom_DOM(families::complete_bipartite_graph(a, b));
      const int predicted = (a + b) % 2 == 0 ? 2 : 3;
      r.rows.push_back({a, b, res.DOM_plus, predicted});
      ++r.instances_checked;
      if (res.DOM_plus != predicted && !r.counterexample) {
        Counterexample c;
        c.digraph = res.DOM_orientation;
        c.r = a;
        c.s = b;
        c.observed = res.DOM_plus;
        c.predicted = predicted;
        if (reverify(Id::bipartite_DOM, c)) {
          r.counterexample = std::move(c);
          r.status = Status::counterexample_found;
        }
      }
    }
  }
  return r;
}

}  // namespace majdom::conjecture
