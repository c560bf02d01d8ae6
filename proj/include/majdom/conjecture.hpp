#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "majdom/digraph.hpp"

namespace majdom::conjecture {

enum class Id { regular_indegree_monotone, bipartite_DOM };
enum class Status { no_counterexample, counterexample_found };
std::string_view id_name(Id id);
std::string_view status_name(Status s);

struct Counterexample {
  Digraph digraph;
  /// regular: every optimal positives mask (none is in-degree monotone).
  std::vector<Mask> optimal_witnesses;
  /// bipartite: parts and the enumerated vs predicted DOM+.
  int r = 0;
  int s = 0;
  int observed = 0;
  int predicted = 0;
};

struct BipartiteRow {
  int r = 0;
  int s = 0;
  int observed = 0;
  int predicted = 0;
};

struct Report {
  Id id{};
  std::uint64_t instances_checked = 0;
  std::optional<Counterexample> counterexample;
  Status status = Status::no_counterexample;
  std::vector<BipartiteRow> rows;  // bipartite scan only
};

/// (f(u) = -1 and f(v) = +1) implies d-(u) <= d-(v).
bool indegree_monotone(const Digraph& d, Mask positives);

/// Some minimum-weight MODF is in-degree monotone.
bool regular_conjecture_holds(const Digraph& d);

/// Independent recheck of a reported counterexample with the serial oracle
/// and the plain predicates.
bool reverify(Id id, const Counterexample& c);

enum class Source { all_tournaments, random_regular_underlying };
std::string_view source_name(Source s);

struct RegularScanOptions {
  int max_n = 7;
  Source source = Source::all_tournaments;
  std::uint64_t seed = 1;
  int samples_per_n = 50;  // random mode
};

/// Tournament mode covers every tournament up to isomorphism for n <= 9.
Report scan_regular(const RegularScanOptions& opts);
/// Scans an explicit list of digraphs with regular underlying graph.
Report scan_regular(const std::vector<Digraph>& digraphs);

/// DOM+(K_{r,s}) by full orientation enumeration for 2 <= r <= s <= max_rs
/// with r*s <= product_cap (at most 16), compared with 2 (r+s even) / 3 (odd).
Report scan_bipartite(int max_rs, int product_cap = 16);

}  // namespace majdom::conjecture
