#include "majdom/solver.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace majdom {

std::string_view method_name(Method m) {
  return m == Method::oracle ? "oracle" : "branch-and-bound";
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

void check_oracle_size(int n) {
  if (n < 1) throw std::invalid_argument("exact solvers need at least one vertex");
  if (n > kOracleCap) {
    throw CapExceeded("oracle enumeration is capped at n = " + std::to_string(kOracleCap) +
                      ", got " + std::to_string(n));
  }
}

/// Majority test over closed out-neighborhoods. Vertex v is satisfied when at
/// least `need[v]` members of N+[v] are positive, i.e. f(N+[v]) >= 1.
struct MajorityKernel {
  int n = 0;
  int required = 0;  // ceil(n / 2) satisfied vertices
  std::array<Mask, kMaxVertices> closed{};
  std::array<int, kMaxVertices> need{};

  explicit MajorityKernel(const Digraph& d) : n(d.order()), required((d.order() + 1) / 2) {
    for (Vertex v = 0; v < n; ++v) {
      closed[v] = d.closed_out(v);
      need[v] = (d.out_degree(v) + 3) / 2;
    }
  }

  bool accepts(Mask pos) const {
    int misses_left = n - required;
    for (int v = 0; v < n; ++v) {
      if (popcount(pos & closed[v]) < need[v] && --misses_left < 0) return false;
    }
    return true;
  }
};

/// Every closed out-neighborhood meets the candidate set.
struct AbsorbentKernel {
  int n = 0;
  std::array<Mask, kMaxVertices> closed{};

  explicit AbsorbentKernel(const Digraph& d) : n(d.order()) {
    for (Vertex v = 0; v < n; ++v) closed[v] = d.closed_out(v);
  }

  bool accepts(Mask s) const {
    for (int v = 0; v < n; ++v) {
      if (!(s & closed[v])) return false;
    }
    return true;
  }
};

struct ScanResult {
  int best_count;
  Mask best;
  std::uint64_t evaluated;
};

Mask reverse_bits(Mask m, int n) {
  m = ((m >> 1) & 0x5555555555555555ULL) | ((m & 0x5555555555555555ULL) << 1);
  m = ((m >> 2) & 0x3333333333333333ULL) | ((m & 0x3333333333333333ULL) << 2);
  m = ((m >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((m & 0x0F0F0F0F0F0F0F0FULL) << 4);
  m = ((m >> 8) & 0x00FF00FF00FF00FFULL) | ((m & 0x00FF00FF00FF00FFULL) << 8);
  m = ((m >> 16) & 0x0000FFFF0000FFFFULL) | ((m & 0x0000FFFF0000FFFFULL) << 16);
  m = (m >> 32) | (m << 32);
  return m >> (64 - n);
}

// Among sets of equal size, ordering by this key is lexicographic order of
// the sorted vertex lists: the smaller list owns the lowest differing vertex.
// The map is an involution, so it also turns a key back into its mask.
Mask lex_key(Mask m, int n) { return full_mask(n) ^ reverse_bits(m, n); }

bool better(int count, Mask key, int best_count, Mask best_key) {
  return count < best_count || (count == best_count && key < best_key);
}

// Keys are visited in increasing order inside each static chunk, so a set
// whose size is no better than the thread-local incumbent cannot win.
template <class Kernel>
ScanResult scan_parallel(const Kernel& kernel, int n) {
  const std::int64_t total = std::int64_t{1} << n;
  int best_count = n + 1;
  Mask best = 0;
  std::uint64_t evaluated = 0;

#pragma omp parallel
  {
    int local_count = n + 1;
    Mask local_best = 0;
    std::uint64_t local_evaluated = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < total; ++i) {
      const Mask key = static_cast<Mask>(i);
      const Mask m = lex_key(key, n);
      const int c = popcount(m);
      if (c >= local_count) continue;
      ++local_evaluated;
      if (kernel.accepts(m)) {
        local_count = c;
        local_best = key;
      }
    }
#pragma omp critical(majdom_scan_reduce)
    {
      evaluated += local_evaluated;
      if (better(local_count, local_best, best_count, best)) {
        best_count = local_count;
        best = local_best;
      }
    }
  }
  return {best_count, lex_key(best, n), evaluated};
}

template <class Kernel>
ScanResult scan_serial(const Kernel& kernel, int n) {
  const Mask total = Mask{1} << n;
  int best_count = n + 1;
  Mask best = 0;
  for (Mask m = 0; m < total; ++m) {
    if (kernel.accepts(m) && better(popcount(m), lex_key(m, n), best_count, lex_key(best, n))) {
      best_count = popcount(m);
      best = m;
    }
  }
  return {best_count, best, total};
}

SolveResult to_solve_result(int n, const ScanResult& r) {
  return {2 * r.best_count - n, SignFunction(n, r.best), r.evaluated, Method::oracle};
}

}  // namespace

SolveResult gamma_maj_out_oracle(const Digraph& d) {
  check_oracle_size(d.order());
  return to_solve_result(d.order(), scan_parallel(MajorityKernel(d), d.order()));
}

SolveResult gamma_maj_undirected(const Graph& g) {
  return gamma_maj_out_oracle(g.symmetric_digraph());
}

InDominationResult gamma_minus(const Digraph& d) {
  check_oracle_size(d.order());
  auto r = scan_parallel(AbsorbentKernel(d), d.order());
  return {r.best_count, r.best, r.evaluated};
}

namespace serial {

SolveResult gamma_maj_out_oracle(const Digraph& d) {
  check_oracle_size(d.order());
  return to_solve_result(d.order(), scan_serial(MajorityKernel(d), d.order()));
}

SolveResult gamma_maj_undirected(const Graph& g) {
  return serial::gamma_maj_out_oracle(g.symmetric_digraph());
}

InDominationResult gamma_minus(const Digraph& d) {
  check_oracle_size(d.order());
  auto r = scan_serial(AbsorbentKernel(d), d.order());
  return {r.best_count, r.best, r.evaluated};
}

}  // namespace serial

// ---------------------------------------------------------------------------
// Branch-and-bound.

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Digraph& d)
      : n_(d.order()), required_((n_ + 1) / 2), best_count_(n_), best_(full_mask(n_)) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return d.out_degree(a) + d.in_degree(a) > d.out_degree(b) + d.in_degree(b);
    });
    in_lists_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      in_lists_[v] = to_vertices(d.closed_in(v));
      need_[v] = (d.out_degree(v) + 3) / 2;
      free_[v] = d.out_degree(v) + 1;
      positive_[v] = 0;
    }
    possible_ = n_;
    sure_ = 0;
  }

  SolveResult run() {
    search(0, 0);
    return {2 * best_count_ - n_, SignFunction(n_, best_), nodes_, Method::branch_and_bound};
  }

 private:
  bool is_possible(Vertex v) const { return positive_[v] + free_[v] >= need_[v]; }
  bool is_sure(Vertex v) const { return positive_[v] >= need_[v]; }

  void assign(Vertex v, bool positive, int delta) {
    for (Vertex u : in_lists_[v]) {
      const bool was_possible = is_possible(u);
      const bool was_sure = is_sure(u);
      free_[u] -= delta;
      if (positive) positive_[u] += delta;
      possible_ += static_cast<int>(is_possible(u)) - static_cast<int>(was_possible);
      sure_ += static_cast<int>(is_sure(u)) - static_cast<int>(was_sure);
    }
  }

  void search(int depth, int count) {
    ++nodes_;
    if (possible_ < required_) return;
    if (count >= best_count_) return;
    if (sure_ >= required_) {
      // Every remaining vertex can stay -1.
      best_count_ = count;
      best_ = current_;
      return;
    }
    // At least one more positive is needed to gain a satisfied vertex.
    if (count + 1 >= best_count_ || depth == n_) return;

    const Vertex v = order_[depth];
    assign(v, false, 1);
    search(depth + 1, count);
    assign(v, false, -1);

    current_ |= bit(v);
    assign(v, true, 1);
    search(depth + 1, count + 1);
    assign(v, true, -1);
    current_ &= ~bit(v);
  }

  int n_;
  int required_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> in_lists_;
  std::array<int, kMaxVertices> need_{};
  std::array<int, kMaxVertices> free_{};
  std::array<int, kMaxVertices> positive_{};
  int possible_ = 0;
  int sure_ = 0;
  int best_count_;
  Mask best_;
  Mask current_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult gamma_maj_out_bb(const Digraph& d) {
  if (d.order() < 1) throw std::invalid_argument("exact solvers need at least one vertex");
  if (d.order() > kBranchBoundCap) {
    throw CapExceeded("branch-and-bound is capped at n = " + std::to_string(kBranchBoundCap));
  }
  return BranchAndBound(d).run();
}

SolveResult gamma_maj_out(const Digraph& d) {
  return d.order() <= kOracleCap ? gamma_maj_out_oracle(d) : gamma_maj_out_bb(d);
}

bool modf_decision(const Digraph& d, int k) {
  if (d.order() < 1) throw std::invalid_argument("exact solvers need at least one vertex");
  if (k >= d.order()) return true;
  return gamma_maj_out(d).optimum <= k;
}

std::vector<Mask> optimal_modfs(const Digraph& d) {
  const int n = d.order();
  const int count = (gamma_maj_out_oracle(d).optimum + n) / 2;
  const MajorityKernel kernel(d);
  std::vector<Mask> out;
  if (count == 0) {
    if (kernel.accepts(0)) out.push_back(0);
    return out;
  }
  // Gosper's hack walks the popcount layer in increasing order.
  const Mask limit = Mask{1} << n;
  for (Mask m = (Mask{1} << count) - 1; m < limit;) {
    if (kernel.accepts(m)) out.push_back(m);
    const Mask c = m & -m;
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

int regular_out_degree(const Digraph& d) {
  if (d.order() == 0) return -1;
  const int deg = d.out_degree(0);
  for (Vertex v = 1; v < d.order(); ++v) {
    if (d.out_degree(v) != deg) return -1;
  }
  return deg;
}

bool check_gamma_minus_bound(const Digraph& d) {
  const int delta = regular_out_degree(d);
  if (delta < 0) throw std::invalid_argument("digraph is not out-regular");
  const int g = gamma_minus(d).optimum;
  return g * (2 * delta + 1) <= (delta + 1) * d.order();
}

// ---------------------------------------------------------------------------
// Closed forms.

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::gamma_plus: return "gamma_plus";
    case Quantity::dom_plus: return "dom_plus";
    case Quantity::DOM_plus: return "DOM_plus";
    case Quantity::gamma_maj: return "gamma_maj";
  }
  return "unknown";
}

namespace {

using families::FamilySpec;
using families::Kind;

int parity(int n, int even, int odd) { return n % 2 == 0 ? even : odd; }
int tournament_formula(int n) { return -n + 2 * ceil_div(n + 2, 4); }

[[noreturn]] void no_formula(const FamilySpec& f, Quantity q) {
  throw std::invalid_argument("no closed form for " + std::string(quantity_name(q)) + " of " +
                              f.describe());
}

}  // namespace

ClosedFormPrediction closed_form(const FamilySpec& f, Quantity q) {
  const int n = f.order();
  auto make = [&](int value, std::string id) { return ClosedFormPrediction{f, q, value, std::move(id)}; };

  switch (q) {
    case Quantity::gamma_plus:
      if (f.kind == Kind::directed_cycle && n >= 3) return make(parity(n, 2, 3), "directed_cycle");
      if (f.kind == Kind::directed_path && n >= 1) return make(parity(n, 0, 1), "directed_path");
      if (f.kind == Kind::transitive_tournament && n >= 1)
        return make(tournament_formula(n), "transitive_tournament");
      break;

    case Quantity::dom_plus:
      if (f.kind == Kind::path_graph && n >= 2) return make(tournament_formula(n), "path_dom");
      if (f.kind == Kind::cycle_graph && n >= 3) return make(tournament_formula(n), "cycle_dom");
      if (f.kind == Kind::star_graph && n >= 5) return make(parity(n, -2, -1), "star_dom");
      if (f.kind == Kind::double_star_graph && n >= 5) {
        const bool degree_two = f.a == 1 || f.b == 1;
        if (n >= 13 && !degree_two) return make(parity(n, -4, -3), "double_star_dom_large");
        return make(parity(n, -2, -1), "double_star_dom_small");
      }
      if (f.kind == Kind::complete_bipartite_graph && std::min(f.r, f.s) >= 2)
        return make(4 - n, "bipartite_dom");
      break;

    case Quantity::DOM_plus:
      if (f.kind == Kind::path_graph && n >= 2) return make(parity(n, 0, 1), "path_DOM");
      if (f.kind == Kind::cycle_graph && n >= 3) return make(parity(n, 2, 3), "cycle_DOM");
      if (f.kind == Kind::star_graph && n >= 2) return make(parity(n, 0, 1), "star_DOM");
      if (f.kind == Kind::double_star_graph) return make(parity(n, 0, 1), "double_star_DOM");
      break;

    case Quantity::gamma_maj:
      if ((f.kind == Kind::path_graph && n >= 3) || (f.kind == Kind::cycle_graph && n >= 3)) {
        // Floors, not ceilings: the ceiling version is off for n = 5..8, 11..14, ...
        return make(n % 2 == 0 ? -2 * floor_div(n - 4, 6) : 1 - 2 * floor_div(n - 3, 6),
                    f.kind == Kind::path_graph ? "path_gamma_maj" : "cycle_gamma_maj");
      }
      // By leaf count m: 1 for even m, 2 for odd m.
      if (f.kind == Kind::star_graph && n >= 3) return make(parity(n - 1, 1, 2), "star_gamma_maj");
      if (f.kind == Kind::double_star_graph) return make(parity(n, 0, 1), "double_star_gamma_maj");
      break;
  }
  no_formula(f, q);
}

std::vector<ClosedFormPrediction> closed_forms(const FamilySpec& f) {
  std::vector<ClosedFormPrediction> out;
  for (Quantity q : {Quantity::gamma_plus, Quantity::dom_plus, Quantity::DOM_plus, Quantity::gamma_maj}) {
    try {
      out.push_back(closed_form(f, q));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace majdom
