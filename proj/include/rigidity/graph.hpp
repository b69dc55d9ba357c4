#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/rng.hpp"

namespace rigidity {

// Validation failure with a machine-checkable kind tag.
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg) : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

using Label = std::string;

// Unordered pair of distinct vertex labels, stored with u < v.
struct Pair {
  Label u, v;
  Pair() = default;
  Pair(Label a, Label b) {
    if (a == b) throw Error("loop-edge", "pair endpoints must be distinct: " + a);
    if (b < a) std::swap(a, b);
    u = std::move(a);
    v = std::move(b);
  }
  friend bool operator==(const Pair& x, const Pair& y) { return x.u == y.u && x.v == y.v; }
  friend bool operator<(const Pair& x, const Pair& y) { return x.u != y.u ? x.u < y.u : x.v < y.v; }
};

// Immutable labeled simple undirected graph. Vertices are kept sorted, edges
// are index pairs (i < j) in lexicographic order, so two equal graphs have
// identical internal representation and identical serialized form.
class Graph {
 public:
  Graph() = default;

  static Graph build(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i] == vertices[i - 1]) throw Error("duplicate-label", vertices[i]);
    g.verts_ = std::move(vertices);
    std::set<std::pair<int, int>> es;
    for (const auto& [a, b] : edges) {
      if (a == b) throw Error("loop-edge", a);
      int i = g.index_checked(a, "dangling-endpoint");
      int j = g.index_checked(b, "dangling-endpoint");
      if (i > j) std::swap(i, j);
      if (!es.insert({i, j}).second) throw Error("duplicate-edge", a + "-" + b);
    }
    g.edges_.assign(es.begin(), es.end());
    g.build_adjacency();
    return g;
  }

  int n() const { return static_cast<int>(verts_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Label>& vertices() const { return verts_; }
  const std::vector<std::pair<int, int>>& edge_indices() const { return edges_; }
  const Label& label(int i) const { return verts_[i]; }

  bool has_vertex(const Label& a) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), a);
    return it != verts_.end() && *it == a;
  }
  int index_of(const Label& a) const { return index_checked(a, "unknown-vertex"); }

  bool has_edge(const Label& a, const Label& b) const {
    if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
    int i = index_of(a), j = index_of(b);
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
  }

  std::vector<Pair> edges() const {
    std::vector<Pair> out;
    out.reserve(edges_.size());
    for (auto [i, j] : edges_) out.emplace_back(verts_[i], verts_[j]);
    return out;
  }

  const std::vector<int>& neighbor_indices(int i) const { return adj_[i]; }
  std::vector<Label> neighbors(const Label& a) const {
    std::vector<Label> out;
    for (int j : adj_[index_of(a)]) out.push_back(verts_[j]);
    return out;
  }
  int degree(const Label& a) const { return static_cast<int>(adj_[index_of(a)].size()); }

  // Stable content hash over the canonical representation.
  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& v : verts_) h = fnv1a(v + "|", h);
    h = fnv1a("#", h);
    for (auto [i, j] : edges_) h = fnv1a(verts_[i] + "-" + verts_[j] + "|", h);
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.verts_ == b.verts_ && a.edges_ == b.edges_;
  }

 private:
  int index_checked(const Label& a, const char* err) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), a);
    if (it == verts_.end() || *it != a) throw Error(err, a);
    return static_cast<int>(it - verts_.begin());
  }
  void build_adjacency() {
    adj_.assign(verts_.size(), {});
    for (auto [i, j] : edges_) {
      adj_[i].push_back(j);
      adj_[j].push_back(i);
    }
    for (auto& v : adj_) std::sort(v.begin(), v.end());
  }

  std::vector<Label> verts_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph induced_subgraph(const Graph& g, const std::vector<Label>& s) {
  std::set<Label> keep;
  for (const auto& v : s) {
    if (!g.has_vertex(v)) throw Error("unknown-vertex", v);
    keep.insert(v);
  }
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : g.edges())
    if (keep.count(e.u) && keep.count(e.v)) es.emplace_back(e.u, e.v);
  return Graph::build(std::vector<Label>(keep.begin(), keep.end()), es);
}

inline std::vector<Pair> nonedges(const Graph& g) {
  std::vector<Pair> out;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
  return out;
}

// Merges each class to a single vertex labeled by its lexicographically least
// member. Parallel edges collapse; an edge inside one class is an error.
inline Graph identify_vertices(const Graph& g, const std::vector<std::vector<Label>>& classes) {
  std::map<Label, Label> rep;
  for (const auto& cls : classes) {
    if (cls.empty()) throw Error("empty-class", "identification class is empty");
    Label r = *std::min_element(cls.begin(), cls.end());
    for (const auto& v : cls) {
      if (!g.has_vertex(v)) throw Error("unknown-vertex", v);
      if (rep.count(v)) throw Error("not-a-partition", v + " appears in two classes");
      rep[v] = r;
    }
  }
  for (const auto& v : g.vertices())
    if (!rep.count(v)) throw Error("not-a-partition", "vertex missing from classes: " + v);

  std::set<Label> vs;
  for (auto& [v, r] : rep) vs.insert(r);
  std::set<std::pair<Label, Label>> es;
  for (const auto& e : g.edges()) {
    Label a = rep[e.u], b = rep[e.v];
    if (a == b) throw Error("identification-loop", e.u + "-" + e.v + " collapses to a loop");
    if (b < a) std::swap(a, b);
    es.insert({a, b});
  }
  return Graph::build(std::vector<Label>(vs.begin(), vs.end()),
                      std::vector<std::pair<Label, Label>>(es.begin(), es.end()));
}

// True iff some 4-vertex superset of s induces a K4 in g.
inline bool k4_through(const Graph& g, const std::vector<Label>& s) {
  std::set<Label> base(s.begin(), s.end());
  if (base.size() > 4) throw Error("set-too-large", "k4_through takes at most 4 vertices");
  for (const auto& v : base)
    if (!g.has_vertex(v)) throw Error("unknown-vertex", v);

  std::vector<int> fixed;
  for (const auto& v : base) fixed.push_back(g.index_of(v));
  const int n = g.n();
  auto clique = [&](const std::vector<int>& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j)
        if (!g.has_edge(g.label(q[i]), g.label(q[j]))) return false;
    return true;
  };
  // extend `fixed` by all (4 - |fixed|)-subsets of the remaining vertices
  int need = 4 - static_cast<int>(fixed.size());
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (std::find(fixed.begin(), fixed.end(), i) == fixed.end()) rest.push_back(i);
  std::vector<int> pick(need);
  auto rec = [&](auto&& self, int start, int depth) -> bool {
    if (depth == need) {
      std::vector<int> q = fixed;
      q.insert(q.end(), pick.begin(), pick.end());
      return clique(q);
    }
    for (int i = start; i < static_cast<int>(rest.size()); ++i) {
      pick[depth] = rest[i];
      if (self(self, i + 1, depth + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

// Convenience: g plus extra pairs as edges (already-present pairs are fine).
inline Graph with_pairs(const Graph& g, const std::vector<Pair>& extra) {
  std::set<std::pair<Label, Label>> es;
  for (const auto& e : g.edges()) es.insert({e.u, e.v});
  for (const auto& p : extra) {
    if (!g.has_vertex(p.u) || !g.has_vertex(p.v)) throw Error("unknown-vertex", p.u + "," + p.v);
    es.insert({p.u, p.v});
  }
  return Graph::build(g.vertices(), std::vector<std::pair<Label, Label>>(es.begin(), es.end()));
}

inline Graph without_edge(const Graph& g, const Pair& e) {
  if (!g.has_edge(e.u, e.v)) throw Error("unknown-edge", e.u + "-" + e.v);
  std::vector<std::pair<Label, Label>> es;
  for (const auto& f : g.edges())
    if (!(f == e)) es.emplace_back(f.u, f.v);
  return Graph::build(g.vertices(), es);
}

}  // namespace rigidity
