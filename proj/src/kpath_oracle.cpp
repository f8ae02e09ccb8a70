// Maximum k-path length without going through RSK. Paths are chains of the
// order (a,b) < (a',b') iff a < a' and b <= b', so a node set is the support
// of a k-path iff it splits into at most k chains, i.e. its minimum chain
// cover (|S| minus a maximum matching on comparable pairs) is at most k.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "klrim/diagrams.hpp"

namespace klrim {

namespace {

constexpr int kExhaustiveLimit = 14;

bool below(const Node& a, const Node& b) { return a.row < b.row && a.col <= b.col; }

// Kuhn's augmenting paths on the comparability bipartite graph restricted
// to `mask`.
class ChainCover {
 public:
  explicit ChainCover(const std::vector<Node>& nodes) : n_(static_cast<int>(nodes.size())) {
    succ_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (below(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]))
          succ_[static_cast<std::size_t>(i)] |= 1u << j;
  }

  int minimum_chains(std::uint32_t mask) {
    match_.assign(static_cast<std::size_t>(n_), -1);
    int matched = 0;
    for (int i = 0; i < n_; ++i) {
      if (!(mask & (1u << i))) continue;
      visited_ = 0;
      if (augment(i, mask)) ++matched;
    }
    return std::popcount(mask) - matched;
  }

 private:
  bool augment(int i, std::uint32_t mask) {
    std::uint32_t candidates = succ_[static_cast<std::size_t>(i)] & mask & ~visited_;
    while (candidates) {
      const int j = std::countr_zero(candidates);
      candidates &= candidates - 1;
      visited_ |= 1u << j;
      int& owner = match_[static_cast<std::size_t>(j)];
      if (owner < 0 || augment(owner, mask)) {
        owner = i;
        return true;
      }
    }
    return false;
  }

  int n_;
  std::vector<std::uint32_t> succ_;
  std::vector<int> match_;
  std::uint32_t visited_ = 0;
};

struct Edge {
  int to;
  int cap;
  int cost;
};

}  // namespace

int kpath_max_by_flow(const Diagram& d, int k) {
  if (k < 1) return 0;
  const auto& nodes = d.nodes();
  const int n = d.size();
  // Vertex split: in(v) = 2v, out(v) = 2v+1; source 2n, sink 2n+1.
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * n + 2));
  auto add = [&](int u, int v, int cap, int cost) {
    adj[static_cast<std::size_t>(u)].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, cap, cost});
    adj[static_cast<std::size_t>(v)].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, 0, -cost});
  };
  for (int v = 0; v < n; ++v) {
    add(source, 2 * v, 1, 0);
    add(2 * v, 2 * v + 1, 1, -1);
    add(2 * v + 1, sink, 1, 0);
    for (int w = 0; w < n; ++w)
      if (below(nodes[static_cast<std::size_t>(v)], nodes[static_cast<std::size_t>(w)])) add(2 * v + 1, 2 * w, 1, 0);
  }
  const int vertices = 2 * n + 2;
  int covered = 0;
  for (int unit = 0; unit < k; ++unit) {
    // Bellman-Ford shortest path; the residual graph has no negative cycles.
    std::vector<int> dist(static_cast<std::size_t>(vertices), std::numeric_limits<int>::max());
    std::vector<int> via(static_cast<std::size_t>(vertices), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    for (int round = 0; round < vertices; ++round) {
      bool changed = false;
      for (int u = 0; u < vertices; ++u) {
        if (dist[static_cast<std::size_t>(u)] == std::numeric_limits<int>::max()) continue;
        for (int e : adj[static_cast<std::size_t>(u)]) {
          const auto& edge = edges[static_cast<std::size_t>(e)];
          if (edge.cap <= 0) continue;
          const int nd = dist[static_cast<std::size_t>(u)] + edge.cost;
          if (nd < dist[static_cast<std::size_t>(edge.to)]) {
            dist[static_cast<std::size_t>(edge.to)] = nd;
            via[static_cast<std::size_t>(edge.to)] = e;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    const int best = dist[static_cast<std::size_t>(sink)];
    if (best == std::numeric_limits<int>::max() || best >= 0) break;
    for (int v = sink; v != source;) {
      const int e = via[static_cast<std::size_t>(v)];
      edges[static_cast<std::size_t>(e)].cap -= 1;
      edges[static_cast<std::size_t>(e ^ 1)].cap += 1;
      v = edges[static_cast<std::size_t>(e ^ 1)].to;
    }
    covered -= best;
  }
  return covered;
}

int brute_force_kpath_max(const Diagram& d, int k) {
  if (k < 1) return 0;
  const int n = d.size();
  if (k >= n) return n;
  if (n > kExhaustiveLimit) return kpath_max_by_flow(d, k);
  ChainCover cover(d.nodes());
  int best = 0;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) <= best) continue;
    if (cover.minimum_chains(mask) <= k) best = std::popcount(mask);
  }
  return best;
}

}  // namespace klrim
