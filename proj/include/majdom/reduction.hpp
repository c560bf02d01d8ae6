#pragma once

#include <optional>
#include <vector>

#include "majdom/digraph.hpp"

namespace majdom::reduction {

enum class Part { T, Dprime, Dsecond };

/// Gadget built from an in-domination instance (source, k). Layout:
///   T   = [0, n+2d), a complete digraph, with X = [0, d)
///   D'  = [n+2d, 2n+2d), a copy of the source
///   D'' = [2n+2d, 2n+4d), no internal arcs
/// plus symmetric arcs between X and every vertex of D' and D''.
struct GadgetInstance {
  Digraph source;
  int k = 0;
  int d = 0;
  Digraph gadget;
  Mask x_set = 0;
  int weight_threshold = 0;
  std::vector<Part> part_map;

  int source_order() const { return source.order(); }
  Mask part(Part p) const;
  /// Gadget index of source vertex v.
  Vertex copy_of(Vertex v) const { return source.order() + 2 * d + v; }
  /// Source vertices whose copies lie in `m`.
  Mask project_to_source(Mask m) const;
  /// Expected arc count: (n+2d)(n+2d-1) + |A(D')| + 4d^2 + 2dn.
  int expected_arc_count() const;
};

/// Out-regular with degree d, 4d > n-2, k >= 1 and 2k < n+2.
bool validate_instance(const Digraph& source, int k);

/// Throws std::invalid_argument when the instance is invalid.
GadgetInstance build_gadget(const Digraph& source, int k);

/// f with positives = copies of S plus X. S must be in-dominating in the
/// source with |S| <= k.
SignFunction lift_in_dominating_to_modf(const GadgetInstance& g, Mask s);

/// Exchange pass: while some X vertex is -1, swap it with the lowest +1
/// vertex of D'. Weight is unchanged; stops early if D' has no +1 vertex.
SignFunction normalize_x_positive(const GadgetInstance& g, SignFunction f, int* exchanges = nullptr);

/// The structural claims of the backward direction, checked on a
/// threshold-achieving MODF after normalization.
struct ProofStepChecks {
  SignFunction witness;      // as found
  SignFunction normalized;   // after the exchange pass
  int exchanges = 0;
  bool normalized_is_modf = false;
  bool positives_at_most_k_plus_d = false;
  bool t_sums_nonpositive = false;
  bool x_all_positive = false;
  Mask extracted = 0;  // source vertices positive in D'
  bool extracted_in_dominating = false;
  bool extracted_within_k = false;

  bool all_pass() const {
    return normalized_is_modf && positives_at_most_k_plus_d && t_sums_nonpositive && x_all_positive &&
           extracted_in_dominating && extracted_within_k;
  }
};

ProofStepChecks proof_step_checks(const GadgetInstance& g, const SignFunction& witness);

struct EquivalenceReport {
  int gamma_minus = 0;
  Mask in_dominating_witness = 0;
  bool source_yes = false;  // gamma^-(source) <= k
  int gadget_optimum = 0;
  SignFunction gadget_witness;
  bool gadget_yes = false;  // gamma+_maj(gadget) <= threshold
  bool agree = false;
  /// Present when the gadget side is a yes-instance.
  std::optional<ProofStepChecks> proof_steps;
  /// Present when the source side is a yes-instance: the lifted MODF.
  std::optional<SignFunction> lifted;
  bool lifted_valid = false;
};

/// Decides both sides by brute force. Throws CapExceeded when the gadget
/// order exceeds the oracle cap.
EquivalenceReport equivalence_check(const Digraph& source, int k);

}  // namespace majdom::reduction
