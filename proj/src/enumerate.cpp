#include "majdom/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace majdom::enumerate {

std::uint64_t digraph_count(int n) {
  if (n < 1 || n * (n - 1) > 40) throw CapExceeded("exhaustive digraph enumeration needs 1 <= n <= 6");
  return std::uint64_t{1} << (n * (n - 1));
}

Digraph digraph_from_code(int n, std::uint64_t code) {
  std::vector<Mask> out(n, 0);
  int b = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((code >> b++) & 1U) out[u] |= bit(v);
    }
  }
  return from_out_masks(n, std::move(out));
}

std::vector<Digraph> out_regular_digraphs(int n, int d) {
  if (n < 1 || d < 0 || d > n - 1) throw std::invalid_argument("need 0 <= d <= n-1");
  // Choices per vertex: all d-subsets of the other vertices.
  std::vector<std::vector<Mask>> choices(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      if (!contains(m, v) && popcount(m) == d) choices[v].push_back(m);
    }
  }
  std::vector<Digraph> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Mask> masks(n);
    for (Vertex v = 0; v < n; ++v) masks[v] = choices[v][idx[v]];
    out.push_back(from_out_masks(n, std::move(masks)));
    int pos = 0;
    while (pos < n && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

Digraph random_digraph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Mask> out(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) out[u] |= bit(v);
    }
  }
  return from_out_masks(n, std::move(out));
}

Digraph random_out_regular(int n, int d, Rng& rng) {
  if (d < 0 || d > n - 1) throw std::invalid_argument("need 0 <= d <= n-1");
  std::vector<Mask> out(n, 0);
  std::vector<Vertex> others;
  for (Vertex u = 0; u < n; ++u) {
    others.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (v != u) others.push_back(v);
    }
    std::shuffle(others.begin(), others.end(), rng);
    for (int i = 0; i < d; ++i) out[u] |= bit(others[i]);
  }
  return from_out_masks(n, std::move(out));
}

Digraph relabel(const Digraph& d, const std::vector<Vertex>& perm) {
  std::vector<Mask> out(d.order(), 0);
  for (auto [u, v] : d.arcs()) out[perm[u]] |= bit(perm[v]);
  return from_out_masks(d.order(), std::move(out));
}

Digraph random_regular_underlying(int n, Rng& rng) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  std::vector<int> jumps;
  std::bernoulli_distribution coin(0.5);
  while (jumps.empty()) {
    for (int j = 1; j <= n / 2; ++j) {
      if (coin(rng)) jumps.push_back(j);
    }
  }
  std::vector<Mask> out(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (int j : jumps) {
      const Vertex v = (u + j) % n;
      // The jump n/2 on even n pairs u with v twice; orient it once.
      if (2 * j == n && u > v) continue;
      if (coin(rng)) {
        out[u] |= bit(v);
      } else {
        out[v] |= bit(u);
      }
    }
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(from_out_masks(n, std::move(out)), perm);
}

namespace {

// Upper triangle of the adjacency matrix with rows/columns taken through
// `inv` (new position -> old vertex), as a bit string.
std::uint32_t graph_code(const std::vector<Mask>& adj, const std::vector<Vertex>& inv, int n) {
  std::uint32_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      code = (code << 1) | static_cast<std::uint32_t>(contains(adj[inv[i]], inv[j]));
    }
  }
  return code;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 7) throw CapExceeded("isomorphism-free graph generation supports 1 <= n <= 7");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  while (std::next_permutation(p.begin(), p.end())) perms.push_back(p);

  // Keep a code only if no relabelling produces a larger one.
  std::vector<Graph> out;
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << pairs); ++code) {
    std::vector<Edge> edges;
    std::vector<Mask> adj(n, 0);
    int b = pairs - 1;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j, --b) {
        if ((code >> b) & 1U) {
          edges.emplace_back(i, j);
          adj[i] |= bit(j);
          adj[j] |= bit(i);
        }
      }
    }
    bool canonical = true;
    for (const auto& perm : perms) {
      if (graph_code(adj, perm, n) > code) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.emplace_back(n, edges);
  }
  return out;
}

namespace {

class SortedTournamentSearch {
 public:
  SortedTournamentSearch(int n, const std::function<bool(const Digraph&)>& visit)
      : n_(n), out_(n, 0), score_(n, 0), visit_(visit) {}

  void run() {
    if (n_ == 1) {
      visit_(Digraph(1));
      return;
    }
    pair(0, 1);
  }

 private:
  // Decide the arc between i and j (i < j), row by row.
  void pair(Vertex i, Vertex j) {
    if (j == n_) {
      finish_row(i);
      return;
    }
    for (int dir = 0; dir < 2 && !stopped_; ++dir) {
      const Vertex from = dir == 0 ? i : j;
      const Vertex to = dir == 0 ? j : i;
      out_[from] |= bit(to);
      ++score_[from];
      if (i == 0 || score_[i] <= score_[i - 1]) pair(i, j + 1);
      --score_[from];
      out_[from] &= ~bit(to);
    }
  }

  void finish_row(Vertex i) {
    if (i > 0 && score_[i] > score_[i - 1]) return;
    // Remaining vertices share the leftover arcs with scores <= score_[i].
    int used = 0;
    for (Vertex v = 0; v <= i; ++v) used += score_[v];
    const int left = n_ * (n_ - 1) / 2 - used;
    if (left > (n_ - 1 - i) * score_[i]) return;
    if (i + 2 >= n_) {
      if (i + 1 < n_ && score_[i + 1] > score_[i]) return;
      stopped_ = !visit_(from_out_masks(n_, out_));
      return;
    }
    pair(i + 1, i + 2);
  }

  int n_;
  std::vector<Mask> out_;
  std::vector<int> score_;
  const std::function<bool(const Digraph&)>& visit_;
  bool stopped_ = false;
};

}  // namespace

void for_each_score_sorted_tournament(int n, const std::function<bool(const Digraph&)>& visit) {
  if (n < 1 || n > 9) throw CapExceeded("tournament enumeration supports 1 <= n <= 9");
  SortedTournamentSearch(n, visit).run();
}

std::vector<Digraph> score_sorted_tournaments(int n) {
  std::vector<Digraph> out;
  for_each_score_sorted_tournament(n, [&](const Digraph& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace majdom::enumerate
