#include "majdom/reduction.hpp"

#include <string>

#include "majdom/families.hpp"
#include "majdom/solver.hpp"

namespace majdom::reduction {

Mask GadgetInstance::part(Part p) const {
  Mask m = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(part_map.size()); ++v) {
    if (part_map[v] == p) m |= bit(v);
  }
  return m;
}

Mask GadgetInstance::project_to_source(Mask m) const {
  return (m >> copy_of(0)) & full_mask(source.order());
}

int GadgetInstance::expected_arc_count() const {
  const int n = source.order();
  const int t = n + 2 * d;
  return t * (t - 1) + source.arc_count() + 4 * d * d + 2 * d * n;
}

bool validate_instance(const Digraph& source, int k) {
  const int n = source.order();
  if (n < 1) return false;
  const int d = regular_out_degree(source);
  return d >= 0 && 4 * d > n - 2 && k >= 1 && 2 * k < n + 2;
}

GadgetInstance build_gadget(const Digraph& source, int k) {
  if (!validate_instance(source, k)) {
    throw std::invalid_argument("not a valid instance: need an out-regular digraph with 4d > n-2, "
                                "k >= 1 and 2k < n+2");
  }
  const int n = source.order();
  const int d = regular_out_degree(source);
  const int t_order = n + 2 * d;
  const int order = 2 * n + 4 * d;
  if (order > kMaxVertices) throw CapExceeded("gadget order " + std::to_string(order) + " too large");

  GadgetInstance g;
  g.source = source;
  g.k = k;
  g.d = d;
  g.x_set = full_mask(d);
  g.weight_threshold = 2 * k - 2 * n - 2 * d;
  g.part_map.assign(order, Part::T);
  for (Vertex v = t_order; v < t_order + n; ++v) g.part_map[v] = Part::Dprime;
  for (Vertex v = t_order + n; v < order; ++v) g.part_map[v] = Part::Dsecond;

  const Mask t_mask = full_mask(t_order);
  const Mask dprime = full_mask(t_order + n) & ~t_mask;
  const Mask dsecond = full_mask(order) & ~full_mask(t_order + n);

  std::vector<Mask> out(order, 0);
  for (Vertex v = 0; v < t_order; ++v) out[v] = t_mask & ~bit(v);
  for (Vertex x : to_vertices(g.x_set)) out[x] |= dprime | dsecond;
  for (Vertex v = 0; v < n; ++v) {
    out[g.copy_of(v)] = (source.out(v) << g.copy_of(0)) | g.x_set;
  }
  for (Vertex v : to_vertices(dsecond)) out[v] = g.x_set;
  g.gadget = from_out_masks(order, std::move(out));
  return g;
}

SignFunction lift_in_dominating_to_modf(const GadgetInstance& g, Mask s) {
  if (!is_in_dominating(g.source, s)) throw std::invalid_argument("set is not in-dominating");
  if (popcount(s) > g.k) throw std::invalid_argument("set is larger than k");
  return {g.gadget.order(), (s << g.copy_of(0)) | g.x_set};
}

SignFunction normalize_x_positive(const GadgetInstance& g, SignFunction f, int* exchanges) {
  int swaps = 0;
  const Mask dprime = g.part(Part::Dprime);
  for (Vertex u : to_vertices(g.x_set & ~f.positives())) {
    const Mask candidates = f.positives() & dprime;
    if (!candidates) break;
    const Vertex x = to_vertices(candidates).front();
    f = f.with(u, 1).with(x, -1);
    ++swaps;
  }
  if (exchanges) *exchanges = swaps;
  return f;
}

ProofStepChecks proof_step_checks(const GadgetInstance& g, const SignFunction& witness) {
  ProofStepChecks c;
  c.witness = witness;
  c.normalized = normalize_x_positive(g, witness, &c.exchanges);
  const SignFunction& f = c.normalized;

  c.normalized_is_modf = is_modf(g.gadget, f);
  c.positives_at_most_k_plus_d = f.positive_count() <= g.k + g.d;
  c.t_sums_nonpositive = true;
  for (Vertex v : to_vertices(g.part(Part::T))) {
    if (f.sum(g.gadget.closed_out(v)) > 0) c.t_sums_nonpositive = false;
  }
  c.x_all_positive = (f.positives() & g.x_set) == g.x_set;
  c.extracted = g.project_to_source(f.positives());
  c.extracted_in_dominating = is_in_dominating(g.source, c.extracted);
  c.extracted_within_k = popcount(c.extracted) <= g.k;
  return c;
}

EquivalenceReport equivalence_check(const Digraph& source, int k) {
  const GadgetInstance g = build_gadget(source, k);
  if (g.gadget.order() > kOracleCap) {
    throw CapExceeded("gadget order " + std::to_string(g.gadget.order()) + " exceeds the oracle cap");
  }

  EquivalenceReport r;
  const auto in_dom = gamma_minus(source);
  r.gamma_minus = in_dom.optimum;
  r.in_dominating_witness = in_dom.witness;
  r.source_yes = in_dom.optimum <= k;

  const auto modf = gamma_maj_out_oracle(g.gadget);
  r.gadget_optimum = modf.optimum;
  r.gadget_witness = modf.witness;
  r.gadget_yes = modf.optimum <= g.weight_threshold;
  r.agree = r.source_yes == r.gadget_yes;

  if (r.source_yes) {
    r.lifted = lift_in_dominating_to_modf(g, in_dom.witness);
    r.lifted_valid = is_modf(g.gadget, *r.lifted) && r.lifted->weight() <= g.weight_threshold;
  }
  if (r.gadget_yes) r.proof_steps = proof_step_checks(g, modf.witness);
  return r;
}

}  // namespace majdom::reduction
