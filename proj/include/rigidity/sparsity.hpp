#pragma once

#include <queue>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

namespace detail {

// Max-flow (Edmonds-Karp); tiny networks only.
struct Flow {
  struct Edge {
    int to, cap, rev;
  };
  std::vector<std::vector<Edge>> adj;
  explicit Flow(int n) : adj(n) {}
  void add(int a, int b, int cap) {
    adj[a].push_back({b, cap, static_cast<int>(adj[b].size())});
    adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1});
  }
  int run(int s, int t) {
    int total = 0;
    for (;;) {
      std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
      std::queue<int> q;
      q.push(s);
      parent[s] = {s, -1};
      while (!q.empty() && parent[t].first < 0) {
        int u = q.front();
        q.pop();
        for (std::size_t i = 0; i < adj[u].size(); ++i)
          if (adj[u][i].cap > 0 && parent[adj[u][i].to].first < 0) {
            parent[adj[u][i].to] = {u, static_cast<int>(i)};
            q.push(adj[u][i].to);
          }
      }
      if (parent[t].first < 0) return total;
      int bottleneck = 1 << 30;
      for (int v = t; v != s;) {
        auto [u, i] = parent[v];
        bottleneck = std::min(bottleneck, adj[u][i].cap);
        v = u;
      }
      for (int v = t; v != s;) {
        auto [u, i] = parent[v];
        adj[u][i].cap -= bottleneck;
        adj[adj[u][i].to][adj[u][i].rev].cap += bottleneck;
        v = u;
      }
      total += bottleneck;
    }
  }
};

// Hakimi assignment with non-uniform vertex capacities: every edge goes to
// one of its endpoints, vertex v absorbs at most caps[v].
inline bool assignable(const Graph& g, const std::vector<int>& caps) {
  int m = g.m(), n = g.n();
  Flow f(2 + m + n);
  int src = 0, sink = 1;
  int idx = 0;
  for (auto [i, j] : g.edge_indices()) {
    f.add(src, 2 + idx, 1);
    f.add(2 + idx, 2 + m + i, 1);
    f.add(2 + idx, 2 + m + j, 1);
    ++idx;
  }
  for (int v = 0; v < n; ++v) f.add(2 + m + v, sink, caps[v]);
  return f.run(src, sink) == m;
}

}  // namespace detail

// Maxwell (3,6)-sparsity: every subgraph on at least three vertices has at
// most 3|V| - 6 edges. A violating set contains an edge (i,j) plus a third
// vertex z; charging capacity 1 instead of 3 at those three anchors turns
// the count into plain 3-assignability, so the scan over (edge, z) triples
// is sound and complete.
inline bool maxwell_sparse(const Graph& g) {
  const int n = g.n();
  if (n < 3) return true;
  std::vector<int> caps(n, 3);
  for (auto [i, j] : g.edge_indices()) {
    caps[i] = caps[j] = 1;
    for (int z = 0; z < n; ++z) {
      if (z == i || z == j) continue;
      caps[z] = 1;
      bool ok = detail::assignable(g, caps);
      caps[z] = 3;
      if (!ok) return false;
    }
    caps[i] = caps[j] = 3;
  }
  return true;
}

inline bool maxwell_tight(const Graph& g) {
  return g.m() == 3 * g.n() - 6 && maxwell_sparse(g);
}

}  // namespace rigidity
