#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "majdom/digraph.hpp"
#include "majdom/families.hpp"

namespace majdom {

enum class Method { oracle, branch_and_bound };
std::string_view method_name(Method m);

struct SolveResult {
  int optimum = 0;
  SignFunction witness;
  std::uint64_t nodes_explored = 0;
  Method method = Method::oracle;
};

/// Minimum in-dominating set: `optimum` is its cardinality.
struct InDominationResult {
  int optimum = 0;
  Mask witness = 0;
  std::uint64_t nodes_explored = 0;
};

/// Hard limit for 2^n enumeration.
inline constexpr int kOracleCap = 26;
/// Practical ceiling for branch-and-bound.
inline constexpr int kBranchBoundCap = 40;

/// Sets the OpenMP worker count for the parallel kernels (0 keeps the default).
void set_threads(int threads);
int max_threads();

// Parallel exhaustive kernels. Results are identical to the serial reference:
// minimum weight, ties broken by the lexicographically smallest sorted list of
// positive vertices.
SolveResult gamma_maj_out_oracle(const Digraph& d);
SolveResult gamma_maj_undirected(const Graph& g);
InDominationResult gamma_minus(const Digraph& d);

/// Plain single-threaded scans over every mask; kept as the reference the
/// parallel kernels are tested against.
namespace serial {
SolveResult gamma_maj_out_oracle(const Digraph& d);
SolveResult gamma_maj_undirected(const Graph& g);
InDominationResult gamma_minus(const Digraph& d);
}  // namespace serial

/// Branch-and-bound on vertex signs, most constrained vertex first.
SolveResult gamma_maj_out_bb(const Digraph& d);

/// Oracle up to kOracleCap, branch-and-bound above it.
SolveResult gamma_maj_out(const Digraph& d);

/// Is there a MODF of weight at most k?
bool modf_decision(const Digraph& d, int k);

/// Every minimum-weight MODF, as positives masks in ascending order.
std::vector<Mask> optimal_modfs(const Digraph& d);

/// gamma^- (2 delta^+ + 1) <= (delta^+ + 1) n for an out-regular digraph.
bool check_gamma_minus_bound(const Digraph& d);

/// Common out-degree, or -1 when out-degrees differ.
int regular_out_degree(const Digraph& d);

// ---------------------------------------------------------------------------
// Closed-form predictions.

enum class Quantity { gamma_plus, dom_plus, DOM_plus, gamma_maj };
std::string_view quantity_name(Quantity q);

struct ClosedFormPrediction {
  families::FamilySpec family;
  Quantity quantity{};
  int predicted = 0;
  std::string formula_id;
};

/// Ceiling of a / b for b > 0, exact for negative a.
constexpr int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
/// Floor of a / b for b > 0, exact for negative a.
constexpr int floor_div(int a, int b) { return -ceil_div(-a, b); }

/// Throws std::invalid_argument when no formula covers the family/parameters.
ClosedFormPrediction closed_form(const families::FamilySpec& family, Quantity q);
/// All quantities with a known formula for this family member.
std::vector<ClosedFormPrediction> closed_forms(const families::FamilySpec& family);

}  // namespace majdom
