#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rigidity/cover.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

using nlohmann::json;

// Every construction returns the new graph plus a provenance record, so a
// pipeline can be replayed or audited.
struct Constructed {
  Graph graph;
  json provenance;
};

namespace detail {
inline Label fresh_label(const Graph& g, const Label& base, int counter) {
  Label l = base + "#" + std::to_string(counter);
  if (g.has_vertex(l)) throw Error("label-collision", l);
  return l;
}
inline json pair_json(const Pair& p) { return json::array({p.u, p.v}); }
}  // namespace detail

// New vertex joined to three existing vertices.
inline Constructed henneberg1(const Graph& g, const std::vector<Label>& base) {
  if (base.size() != 3 || std::set<Label>(base.begin(), base.end()).size() != 3)
    throw Error("bad-base", "henneberg1 needs 3 distinct vertices");
  for (const auto& v : base)
    if (!g.has_vertex(v)) throw Error("unknown-vertex", v);
  Label nv = detail::fresh_label(g, base[0], 1);
  auto vs = g.vertices();
  vs.push_back(nv);
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : g.edges()) es.emplace_back(e.u, e.v);
  for (const auto& v : base) es.emplace_back(nv, v);
  return {Graph::build(vs, es), json{{"op", "henneberg1"}, {"base", base}, {"fresh", nv}}};
}

// Delete an edge inside the 4-vertex base, add a new vertex joined to all four.
inline Constructed henneberg2(const Graph& g, const std::vector<Label>& base, const Pair& del) {
  if (base.size() != 4 || std::set<Label>(base.begin(), base.end()).size() != 4)
    throw Error("bad-base", "henneberg2 needs 4 distinct vertices");
  std::set<Label> bs(base.begin(), base.end());
  if (!bs.count(del.u) || !bs.count(del.v) || !g.has_edge(del.u, del.v))
    throw Error("edge-not-in-base", del.u + "-" + del.v);
  Label nv = detail::fresh_label(g, base[0], 1);
  auto vs = g.vertices();
  vs.push_back(nv);
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : g.edges())
    if (!(e == del)) es.emplace_back(e.u, e.v);
  for (const auto& v : base) es.emplace_back(nv, v);
  return {Graph::build(vs, es),
          json{{"op", "henneberg2"}, {"base", base}, {"deleted", detail::pair_json(del)}, {"fresh", nv}}};
}

// Disjoint union with two k-cliques identified; parallel edges collapse.
inline Constructed k_sum(const Graph& g, const Graph& h, const std::vector<std::pair<Label, Label>>& ident) {
  if (ident.size() > 4) throw Error("bad-base", "k-sum supports k <= 4");
  for (const auto& v : h.vertices())
    if (g.has_vertex(v)) throw Error("label-collision", v);
  std::vector<Label> gside, hside;
  for (const auto& [gv, hv] : ident) {
    gside.push_back(gv);
    hside.push_back(hv);
  }
  auto complete = [](const Graph& gr, const std::vector<Label>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!gr.has_edge(s[i], s[j])) return false;
    return true;
  };
  if (!complete(g, gside) || !complete(h, hside))
    throw Error("base-not-clique", "k-sum base sets must induce complete subgraphs");

  std::vector<Label> vs = g.vertices();
  vs.insert(vs.end(), h.vertices().begin(), h.vertices().end());
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : g.edges()) es.emplace_back(e.u, e.v);
  for (const auto& e : h.edges()) es.emplace_back(e.u, e.v);
  Graph uni = Graph::build(vs, es);

  std::vector<std::vector<Label>> classes;
  std::set<Label> used;
  for (const auto& [gv, hv] : ident) {
    classes.push_back({gv, hv});
    used.insert(gv);
    used.insert(hv);
  }
  for (const auto& v : uni.vertices())
    if (!used.count(v)) classes.push_back({v});
  Graph out = identify_vertices(uni, classes);
  json prov{{"op", "k_sum"}, {"k", ident.size()}};
  for (const auto& [gv, hv] : ident) prov["identified"].push_back(json::array({gv, hv}));
  return {out, prov};
}

// Splits v into v and a fresh vertex: non-kept neighbors move to the fresh
// vertex, the first k kept neighbors become common, and edge (v, v') is added.
inline Constructed k_vertex_split(const Graph& g, const Label& v, const std::vector<Label>& kept, int k) {
  if (k < 0 || k > 2) throw Error("bad-k", "k-vertex split needs k in {0,1,2}");
  if (k > static_cast<int>(kept.size())) throw Error("bad-k", "fewer kept neighbors than k");
  std::set<Label> nb;
  for (const auto& w : g.neighbors(v)) nb.insert(w);
  std::set<Label> keep(kept.begin(), kept.end());
  for (const auto& w : keep)
    if (!nb.count(w)) throw Error("not-a-neighbor", w);
  Label nv = detail::fresh_label(g, v, 1);
  std::vector<Label> vs = g.vertices();
  vs.push_back(nv);
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : g.edges()) {
    bool at_v = e.u == v || e.v == v;
    if (!at_v) {
      es.emplace_back(e.u, e.v);
      continue;
    }
    Label w = e.u == v ? e.v : e.u;
    if (keep.count(w))
      es.emplace_back(v, w);  // stays (and may be duplicated to nv below)
    else
      es.emplace_back(nv, w);  // moves
  }
  for (int i = 0; i < k; ++i) es.emplace_back(nv, kept[i]);
  es.emplace_back(v, nv);
  return {Graph::build(vs, es),
          json{{"op", "k_vertex_split"}, {"vertex", v}, {"kept", kept}, {"k", k}, {"fresh", nv}}};
}

// Partition of the two neighborhoods in a nonedge-split.
struct SplitSpec {
  Label a, b;
  std::vector<Label> a1_nbrs, a2_nbrs, b1_nbrs, b2_nbrs;

  static SplitSpec trivial(const Graph& g, const Label& a, const Label& b) {
    return {a, b, g.neighbors(a), {}, g.neighbors(b), {}};
  }
  Label a1() const { return a + "#1"; }
  Label a2() const { return a + "#2"; }
  Label b1() const { return b + "#1"; }
  Label b2() const { return b + "#2"; }

  void validate(const Graph& g) const {
    if (g.has_edge(a, b)) throw Error("not-a-nonedge", a + "-" + b);
    if (!g.has_vertex(a) || !g.has_vertex(b)) throw Error("unknown-vertex", a + "," + b);
    auto check = [&](const Label& x, const std::vector<Label>& p1, const std::vector<Label>& p2) {
      std::set<Label> want;
      for (const auto& w : g.neighbors(x)) want.insert(w);
      std::set<Label> got;
      for (const auto& w : p1)
        if (!got.insert(w).second) throw Error("partition-overlap", w);
      for (const auto& w : p2)
        if (!got.insert(w).second) throw Error("partition-overlap", w);
      if (got != want) throw Error("partition-mismatch", "split parts must partition N(" + x + ")");
    };
    check(a, a1_nbrs, a2_nbrs);
    check(b, b1_nbrs, b2_nbrs);
  }
};

// Replaces a and b by a1,a2 and b1,b2 carrying the partitioned neighborhoods.
// Vertex count rises by two, edge count is preserved.
inline Constructed nonedge_split(const Graph& g, const SplitSpec& spec) {
  spec.validate(g);
  for (const auto& l : {spec.a1(), spec.a2(), spec.b1(), spec.b2()})
    if (g.has_vertex(l)) throw Error("label-collision", l);
  std::vector<Label> vs;
  for (const auto& v : g.vertices())
    if (v != spec.a && v != spec.b) vs.push_back(v);
  vs.insert(vs.end(), {spec.a1(), spec.a2(), spec.b1(), spec.b2()});
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : g.edges())
    if (e.u != spec.a && e.v != spec.a && e.u != spec.b && e.v != spec.b) es.emplace_back(e.u, e.v);
  for (const auto& w : spec.a1_nbrs) es.emplace_back(spec.a1(), w);
  for (const auto& w : spec.a2_nbrs) es.emplace_back(spec.a2(), w);
  for (const auto& w : spec.b1_nbrs) es.emplace_back(spec.b1(), w);
  for (const auto& w : spec.b2_nbrs) es.emplace_back(spec.b2(), w);
  return {Graph::build(vs, es),
          json{{"op", "nonedge_split"},
               {"a", spec.a},
               {"b", spec.b},
               {"a1_nbrs", spec.a1_nbrs},
               {"a2_nbrs", spec.a2_nbrs},
               {"b1_nbrs", spec.b1_nbrs},
               {"b2_nbrs", spec.b2_nbrs},
               {"fresh", {spec.a1(), spec.a2(), spec.b1(), spec.b2()}}}};
}

// Identifies gluing vertices of vertex-disjoint graphs; parallel edges collapse.
inline Constructed glue(const Graph& g, const Graph& h, const std::vector<std::pair<Label, Label>>& ident) {
  for (const auto& v : h.vertices())
    if (g.has_vertex(v)) throw Error("label-collision", v);
  std::set<Label> gs, hs;
  for (const auto& [gv, hv] : ident) {
    if (!g.has_vertex(gv) || !h.has_vertex(hv)) throw Error("unknown-vertex", gv + "," + hv);
    if (!gs.insert(gv).second || !hs.insert(hv).second)
      throw Error("not-injective", gv + "," + hv);
  }
  std::vector<Label> vs = g.vertices();
  vs.insert(vs.end(), h.vertices().begin(), h.vertices().end());
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : g.edges()) es.emplace_back(e.u, e.v);
  for (const auto& e : h.edges()) es.emplace_back(e.u, e.v);
  Graph uni = Graph::build(vs, es);
  std::vector<std::vector<Label>> classes;
  std::set<Label> used;
  json merged = json::object();
  for (const auto& [gv, hv] : ident) {
    classes.push_back({gv, hv});
    used.insert(gv);
    used.insert(hv);
    merged[hv] = std::min(gv, hv);
    merged[gv] = std::min(gv, hv);
  }
  for (const auto& v : uni.vertices())
    if (!used.count(v)) classes.push_back({v});
  return {identify_vertices(uni, classes), json{{"op", "glue"}, {"merged", merged}}};
}

// Nonedge-split followed by a glue whose base-side gluing vertices all come
// from the split.
inline Constructed split_and_glue(const Graph& g, const SplitSpec& spec, const Graph& ear,
                                  const std::vector<std::pair<Label, Label>>& ident) {
  Constructed s = nonedge_split(g, spec);
  std::set<Label> split_verts{spec.a1(), spec.a2(), spec.b1(), spec.b2()};
  for (const auto& [gv, hv] : ident)
    if (!split_verts.count(gv))
      throw Error("bad-gluing-vertex", gv + " was not created by the nonedge-split");
  Constructed out = glue(s.graph, ear, ident);
  out.provenance =
      json{{"op", "split_and_glue"}, {"split", s.provenance}, {"glue", out.provenance}};
  return out;
}

// The double-butterfly ear on fresh labels: two butterflies sharing the
// nonedge (u,v), gluing vertices a1,a2,b1,b2.
inline Graph double_butterfly_ear(const std::string& prefix) {
  auto L = [&](const char* s) { return prefix + s; };
  std::vector<Label> vs{L("a1"), L("a2"), L("b1"), L("b2"), L("u"), L("v"), L("c"), L("cp")};
  std::vector<std::pair<Label, Label>> es;
  for (const char* x : {"a1", "a2", "b1", "b2"}) {
    es.emplace_back(L(x), L("u"));
    es.emplace_back(L(x), L("v"));
  }
  for (const char* x : {"a1", "b1", "u", "v"}) es.emplace_back(L("c"), L(x));
  for (const char* x : {"a2", "b2", "u", "v"}) es.emplace_back(L("cp"), L(x));
  return Graph::build(vs, es);
}

// wiring: split vertex -> ear slot ("a1" | "a2" | "b1" | "b2"); must be a
// bijection of the four split vertices onto the four ear gluing vertices.
inline Constructed double_butterfly_sg(const Graph& g, const SplitSpec& spec,
                                       const std::vector<std::pair<Label, std::string>>& wiring) {
  std::set<Label> split_verts{spec.a1(), spec.a2(), spec.b1(), spec.b2()};
  std::set<std::string> slots;
  if (wiring.size() != 4) throw Error("bad-wiring", "wiring must map all four split vertices");
  std::string prefix = "ear#";
  Graph ear = double_butterfly_ear(prefix);
  std::vector<std::pair<Label, Label>> ident;
  for (const auto& [sv, slot] : wiring) {
    if (!split_verts.count(sv)) throw Error("bad-wiring", sv);
    if (slot != "a1" && slot != "a2" && slot != "b1" && slot != "b2") throw Error("bad-wiring", slot);
    if (!slots.insert(slot).second) throw Error("bad-wiring", "slot used twice: " + slot);
    ident.emplace_back(sv, prefix + slot);
  }
  Constructed out = split_and_glue(g, spec, ear, ident);
  out.provenance = json{{"op", "double_butterfly_sg"}, {"inner", out.provenance}};
  return out;
}

inline Constructed double_butterfly_sg(const Graph& g, const SplitSpec& spec) {
  return double_butterfly_sg(
      g, spec, {{spec.a1(), "a1"}, {spec.a2(), "a2"}, {spec.b1(), "b1"}, {spec.b2(), "b2"}});
}

// ---------------------------------------------------------------------------
// Rings and chains.
// ---------------------------------------------------------------------------

// Ordered hinge pairs of one link; identification matches first components to
// first components.
struct HingeSpec {
  std::pair<Label, Label> first;   // (a_i, b_i)
  std::pair<Label, Label> second;  // (c_i, d_i)
};

namespace detail {

inline void check_links(const std::vector<Graph>& links, const std::vector<HingeSpec>& hinges) {
  if (links.size() != hinges.size()) throw Error("bad-hinges", "one hinge spec per link");
  std::set<Label> all;
  for (std::size_t i = 0; i < links.size(); ++i) {
    for (const auto& v : links[i].vertices())
      if (!all.insert(v).second) throw Error("label-collision", v);
    const auto& h = hinges[i];
    std::set<Label> hv{h.first.first, h.first.second, h.second.first, h.second.second};
    if (hv.size() != 4) throw Error("hinge-collision", "hinge vertices of one link must be distinct");
    for (const auto& v : hv)
      if (!links[i].has_vertex(v)) throw Error("unknown-vertex", v);
  }
}

inline Graph disjoint_union(const std::vector<Graph>& links) {
  std::vector<Label> vs;
  std::vector<std::pair<Label, Label>> es;
  for (const auto& l : links) {
    vs.insert(vs.end(), l.vertices().begin(), l.vertices().end());
    for (const auto& e : l.edges()) es.emplace_back(e.u, e.v);
  }
  // parallel hinge edges collapse after identification; duplicates cannot
  // occur here because the links are vertex-disjoint
  return Graph::build(vs, es);
}

struct Merge {
  std::map<Label, Label> parent;
  Label find(Label x) {
    while (parent.count(x)) x = parent.at(x);
    return x;
  }
  void unite(const Label& x, const Label& y) {
    Label a = find(x), b = find(y);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

inline Constructed identified(const Graph& uni, Merge& mg, const char* op, std::size_t m) {
  std::map<Label, std::vector<Label>> classes;
  for (const auto& v : uni.vertices()) classes[mg.find(v)].push_back(v);
  std::vector<std::vector<Label>> cls;
  for (auto& [r, members] : classes) cls.push_back(members);
  Graph out = identify_vertices(uni, cls);
  return {out, json{{"op", op}, {"links", m}}};
}

}  // namespace detail

// Cyclic identification: (c_i, d_i) with (a_{i+1}, b_{i+1}), wrapping around.
inline Constructed ring(const std::vector<Graph>& links, const std::vector<HingeSpec>& hinges) {
  if (links.size() < 3) throw Error("too-few-links", "ring needs at least 3 links");
  detail::check_links(links, hinges);
  const std::size_t m = links.size();
  detail::Merge mg;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& nxt = hinges[(i + 1) % m];
    mg.unite(hinges[i].second.first, nxt.first.first);
    mg.unite(hinges[i].second.second, nxt.first.second);
  }
  return detail::identified(detail::disjoint_union(links), mg, "ring", m);
}

// Merged hinge pairs of a ring built by ring() from these specs.
inline std::vector<Pair> ring_hinges(const std::vector<Graph>& links, const std::vector<HingeSpec>& hinges,
                                     const Graph& rg) {
  const std::size_t m = links.size();
  detail::Merge mg;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& nxt = hinges[(i + 1) % m];
    mg.unite(hinges[i].second.first, nxt.first.first);
    mg.unite(hinges[i].second.second, nxt.first.second);
  }
  std::vector<Pair> out;
  for (std::size_t i = 0; i < m; ++i)
    out.emplace_back(mg.find(hinges[i].first.first), mg.find(hinges[i].first.second));
  for (const auto& p : out)
    if (!rg.has_vertex(p.u) || !rg.has_vertex(p.v)) throw Error("internal", "hinge lookup failed");
  return out;
}

// Merged vertex sets of the links inside the assembled ring.
inline std::vector<std::vector<Label>> ring_link_sets(const std::vector<Graph>& links,
                                                      const std::vector<HingeSpec>& hinges) {
  const std::size_t m = links.size();
  detail::Merge mg;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& nxt = hinges[(i + 1) % m];
    mg.unite(hinges[i].second.first, nxt.first.first);
    mg.unite(hinges[i].second.second, nxt.first.second);
  }
  std::vector<std::vector<Label>> out;
  for (const auto& l : links) {
    std::set<Label> s;
    for (const auto& v : l.vertices()) s.insert(mg.find(v));
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

// Linear identification plus the two end edges (p,q) in the first link and
// (r,s) in the last.
inline Constructed chain(const std::vector<Graph>& links, const std::vector<HingeSpec>& hinges,
                         const Pair& end1, const Pair& end2) {
  if (links.size() < 2) throw Error("too-few-links", "chain needs at least 2 links");
  detail::check_links(links, hinges);
  const std::size_t m = links.size();
  detail::Merge mg;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    mg.unite(hinges[i].second.first, hinges[i + 1].first.first);
    mg.unite(hinges[i].second.second, hinges[i + 1].first.second);
  }
  Constructed c = detail::identified(detail::disjoint_union(links), mg, "chain", m);
  Pair e1(mg.find(end1.u), mg.find(end1.v)), e2(mg.find(end2.u), mg.find(end2.v));
  c.graph = with_pairs(c.graph, {e1, e2});
  c.provenance["end_edges"] = json::array({detail::pair_json(e1), detail::pair_json(e2)});
  return c;
}

// Ring whose hinges are all edges, then one Henneberg-II extension per link:
// base = the link's hinge vertices, deleted edge = its second hinge. Every
// ring hinge is deleted exactly once, so all hinges of the result are
// nonedges.
inline Constructed henneberg2_ring(const std::vector<Graph>& links, const std::vector<HingeSpec>& hinges) {
  if (links.size() < 7) throw Error("too-few-links", "henneberg2_ring needs at least 7 links");
  for (std::size_t i = 0; i < links.size(); ++i) {
    for (auto h : {hinges[i].first, hinges[i].second})
      if (!links[i].has_edge(h.first, h.second))
        throw Error("hinge-not-an-edge", h.first + "-" + h.second);
  }
  Constructed r = ring(links, hinges);
  const std::size_t m = links.size();
  detail::Merge mg;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& nxt = hinges[(i + 1) % m];
    mg.unite(hinges[i].second.first, nxt.first.first);
    mg.unite(hinges[i].second.second, nxt.first.second);
  }
  Graph g = r.graph;
  json steps = json::array();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Label> base{mg.find(hinges[i].first.first), mg.find(hinges[i].first.second),
                            mg.find(hinges[i].second.first), mg.find(hinges[i].second.second)};
    Pair del(mg.find(hinges[i].second.first), mg.find(hinges[i].second.second));
    Constructed step = henneberg2(g, base, del);
    g = step.graph;
    steps.push_back(step.provenance);
  }
  return {g, json{{"op", "henneberg2_ring"}, {"ring", r.provenance}, {"extensions", steps}}};
}

// Union of edge-disjoint graphs sharing the endpoints of a common nonedge.
inline Constructed hinge_union(const Graph& g1, const Graph& g2, const Pair& f) {
  for (const Graph* g : {&g1, &g2}) {
    if (!g->has_vertex(f.u) || !g->has_vertex(f.v)) throw Error("unknown-vertex", f.u + "," + f.v);
    if (g->has_edge(f.u, f.v)) throw Error("not-a-nonedge", f.u + "-" + f.v);
  }
  std::set<Pair> e1set;
  for (const auto& e : g1.edges()) e1set.insert(e);
  for (const auto& e : g2.edges())
    if (e1set.count(e)) throw Error("edge-overlap", e.u + "-" + e.v);
  std::set<Label> vs(g1.vertices().begin(), g1.vertices().end());
  vs.insert(g2.vertices().begin(), g2.vertices().end());
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : g1.edges()) es.emplace_back(e.u, e.v);
  for (const auto& e : g2.edges()) es.emplace_back(e.u, e.v);
  return {Graph::build(std::vector<Label>(vs.begin(), vs.end()), es),
          json{{"op", "hinge_union"}, {"shared_nonedge", detail::pair_json(f)}}};
}

// ---------------------------------------------------------------------------
// Safe nonedge-split and safe split-and-glue.
// ---------------------------------------------------------------------------

struct SafeSplitResult {
  Graph graph;
  TwoThinCover cover;           // the safe split cover
  std::vector<Pair> key_pairs;  // pairs of split vertices inside some cluster
  json provenance;
};

// Checks the two safety conditions, then derives the safe split cover:
// clusters whose image contains neither {a1,a2} nor {b1,b2} are retained;
// edges inside a dropped or undersized image that no retained cluster covers
// become two-vertex clusters.
inline SafeSplitResult safe_nonedge_split(const Graph& g, const TwoThinCover& x, const SplitSpec& spec) {
  require_valid(g, x);
  spec.validate(g);
  Pair ab(spec.a, spec.b);
  auto s = shared_set(x);
  if (std::find(s.begin(), s.end(), ab) == s.end())
    throw Error("pair-not-shared", "split nonedge must lie in the shared set");
  std::set<Pair> shared_nonedges;
  for (const auto& p : s)
    if (!g.has_edge(p.u, p.v)) shared_nonedges.insert(p);

  Constructed split = nonedge_split(g, spec);
  const Graph& gs = split.graph;
  const Label a1 = spec.a1(), a2 = spec.a2(), b1 = spec.b1(), b2 = spec.b2();

  // A cluster's image keeps its non-split vertices; a cluster that contained
  // a (resp. b) additionally gains each replacement vertex with a neighbor
  // inside the image. Clusters away from a and b are untouched.
  auto image = [&](const std::vector<Label>& cluster) {
    std::set<Label> img;
    for (const auto& v : cluster)
      if (v != spec.a && v != spec.b) img.insert(v);
    bool had_a = std::binary_search(cluster.begin(), cluster.end(), spec.a);
    bool had_b = std::binary_search(cluster.begin(), cluster.end(), spec.b);
    auto touch = [&](const Label& sv) {
      for (const auto& w : gs.neighbors(sv))
        if (img.count(w)) return true;
      return false;
    };
    if (had_a) {
      if (touch(a1)) img.insert(a1);
      if (touch(a2)) img.insert(a2);
    }
    if (had_b) {
      if (touch(b1)) img.insert(b1);
      if (touch(b2)) img.insert(b2);
    }
    return img;
  };

  std::vector<std::set<Label>> images;
  for (const auto& c : x.clusters) images.push_back(image(c));

  // condition (i)
  for (std::size_t i = 0; i < x.clusters.size(); ++i) {
    bool has_shared_nonedge = false;
    for (const auto& p : shared_nonedges)
      if (std::binary_search(x.clusters[i].begin(), x.clusters[i].end(), p.u) &&
          std::binary_search(x.clusters[i].begin(), x.clusters[i].end(), p.v))
        has_shared_nonedge = true;
    if (!has_shared_nonedge) continue;
    if ((images[i].count(a1) && images[i].count(a2)) || (images[i].count(b1) && images[i].count(b2)))
      throw Error("unsafe-split", "condition (i) fails on a cluster with a shared nonedge");
  }
  // condition (ii)
  for (std::size_t i = 0; i < x.clusters.size(); ++i)
    for (std::size_t j = i + 1; j < x.clusters.size(); ++j) {
      std::vector<Label> inter;
      std::set_intersection(x.clusters[i].begin(), x.clusters[i].end(), x.clusters[j].begin(),
                            x.clusters[j].end(), std::back_inserter(inter));
      if (inter.size() != 2) continue;
      Pair p(inter[0], inter[1]);
      if (!shared_nonedges.count(p)) continue;
      for (const auto& [hub, s1, s2] :
           {std::tuple{spec.a, a1, a2}, std::tuple{spec.b, b1, b2}}) {
        if ((p.u == hub || p.v == hub) && !(p == ab)) {
          auto part = [&](const std::set<Label>& img) {
            std::set<Label> t;
            if (img.count(s1)) t.insert(s1);
            if (img.count(s2)) t.insert(s2);
            return t;
          };
          if (part(images[i]) != part(images[j]))
            throw Error("unsafe-split", "condition (ii) fails at shared pair " + p.u + "-" + p.v);
        }
      }
    }

  // derive the cover
  std::vector<std::vector<Label>> kept;
  std::vector<std::size_t> dropped;
  for (std::size_t i = 0; i < images.size(); ++i) {
    bool bad = (images[i].count(a1) && images[i].count(a2)) || (images[i].count(b1) && images[i].count(b2));
    if (!bad && images[i].size() > 2)
      kept.emplace_back(images[i].begin(), images[i].end());
    else
      dropped.push_back(i);
  }
  auto covered_by_kept = [&](const Pair& e) {
    for (const auto& c : kept)
      if (std::binary_search(c.begin(), c.end(), e.u) && std::binary_search(c.begin(), c.end(), e.v))
        return true;
    return false;
  };
  std::set<std::vector<Label>> edge_clusters;
  for (std::size_t i : dropped) {
    for (const auto& e : gs.edges()) {
      if (!images[i].count(e.u) || !images[i].count(e.v)) continue;
      if (covered_by_kept(e)) continue;
      edge_clusters.insert({e.u, e.v});
    }
  }
  for (auto& c : edge_clusters) kept.push_back(c);
  TwoThinCover xs = TwoThinCover::of(kept);
  CoverReport rep = validate_two_thin(gs, xs);
  if (!rep.valid)
    throw Error("unsafe-split", "derived cover is not 2-thin: " + rep.violations.front().condition);

  SafeSplitResult out;
  out.graph = gs;
  out.cover = xs;
  out.key_pairs = key_gluing_pairs(xs, {a1, a2, b1, b2});
  if (out.key_pairs.empty()) throw Error("unsafe-split", "no key gluing pair exists");
  out.provenance = json{{"op", "safe_nonedge_split"}, {"split", split.provenance}};
  return out;
}

struct SafeGlueResult {
  Graph graph;
  TwoThinCover cover;  // induced cover of the glued graph
  std::vector<Pair> identified_key_pairs;
  bool split_cover_independent = false;
  bool induced_cover_independent = false;
  json provenance;
};

// pairing entries are ((p,q),(p',q')) meaning p~p' and q~q'; the induced map
// over all entries must be a consistent injection of base gluing vertices
// onto ear gluing vertices.
inline SafeGlueResult safe_split_and_glue(const SafeBaseCertificate& base, const SplitSpec& spec,
                                          const SafeEarCertificate& ear,
                                          const std::vector<std::pair<std::pair<Label, Label>, std::pair<Label, Label>>>& pairing,
                                          Model model, const RankOptions& opt = {}) {
  if (!base.valid()) throw Error("invalid-certificate", "base certificate does not validate");
  if (!ear.valid()) throw Error("invalid-certificate", "ear certificate does not validate");
  SafeSplitResult split = safe_nonedge_split(base.graph, base.cover, spec);

  std::set<Pair> base_keys(split.key_pairs.begin(), split.key_pairs.end());
  std::set<Pair> ear_keys(ear.key_pairs.begin(), ear.key_pairs.end());
  if (pairing.size() != base_keys.size() || pairing.size() != ear_keys.size())
    throw Error("pairing-mismatch", "pairing must biject the key gluing pairs");
  std::map<Label, Label> vmap;  // base -> ear
  std::set<Label> ear_used;
  for (const auto& [bp, ep] : pairing) {
    if (!base_keys.count(Pair(bp.first, bp.second)))
      throw Error("pairing-mismatch", "not a base key pair: " + bp.first + "-" + bp.second);
    if (!ear_keys.count(Pair(ep.first, ep.second)))
      throw Error("pairing-mismatch", "not an ear key pair: " + ep.first + "-" + ep.second);
    for (auto [bv, ev] : {std::pair{bp.first, ep.first}, std::pair{bp.second, ep.second}}) {
      auto it = vmap.find(bv);
      if (it != vmap.end() && it->second != ev)
        throw Error("pairing-mismatch", "inconsistent identification at " + bv);
      vmap[bv] = ev;
    }
  }
  for (auto& [bv, ev] : vmap)
    if (!ear_used.insert(ev).second) throw Error("pairing-mismatch", "ear vertex reused: " + ev);

  std::vector<std::pair<Label, Label>> ident(vmap.begin(), vmap.end());
  Constructed glued = glue(split.graph, ear.graph, ident);

  // rename labels through the merge and assemble the induced cover
  std::map<Label, Label> rep;
  for (auto& [bv, ev] : vmap) {
    rep[bv] = std::min(bv, ev);
    rep[ev] = std::min(bv, ev);
  }
  auto mapped = [&](const std::vector<Label>& cluster) {
    std::set<Label> c;
    for (const auto& v : cluster) c.insert(rep.count(v) ? rep.at(v) : v);
    return std::vector<Label>(c.begin(), c.end());
  };
  std::vector<std::vector<Label>> clusters;
  for (const auto& c : split.cover.clusters) clusters.push_back(mapped(c));
  for (const auto& c : ear.cover.clusters) clusters.push_back(mapped(c));
  // keep only maximal clusters
  std::vector<std::vector<Label>> maximal;
  for (const auto& c : clusters) {
    bool inside = false;
    for (const auto& d : clusters)
      if (c != d && c.size() <= d.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        inside = true;
        break;
      }
    if (!inside) maximal.push_back(c);
  }
  TwoThinCover induced = TwoThinCover::of(maximal);
  CoverReport rep2 = validate_two_thin(glued.graph, induced);
  if (!rep2.valid)
    throw Error("invalid-cover", "induced cover fails validation: " + rep2.violations.front().condition);

  SafeGlueResult out;
  out.graph = glued.graph;
  out.cover = induced;
  for (const auto& [bp, ep] : pairing) {
    Label pu = rep.at(bp.first), pv = rep.at(bp.second);
    out.identified_key_pairs.emplace_back(pu, pv);
  }
  out.split_cover_independent =
      cover_independent(split.graph, split.cover, model, {derive_seed(opt.seed, "ssg-split-cover", 0), opt.trials})
          .independent;
  out.induced_cover_independent =
      cover_independent(glued.graph, induced, model, {derive_seed(opt.seed, "ssg-induced-cover", 0), opt.trials})
          .independent;
  out.provenance = json{{"op", "safe_split_and_glue"}, {"split", split.provenance}, {"glue", glued.provenance}};
  return out;
}

// ---------------------------------------------------------------------------
// Cover extensions used when growing safe base graphs.
// ---------------------------------------------------------------------------

// After a k-sum with an independent graph h: the base cover plus one
// two-vertex cluster per edge of h outside the identified clique.
inline TwoThinCover extend_cover_after_k_sum(const TwoThinCover& x, const Graph& h,
                                             const std::vector<std::pair<Label, Label>>& ident,
                                             const std::map<Label, Label>& merged_names) {
  std::set<Label> clique;
  for (const auto& [gv, hv] : ident) clique.insert(hv);
  auto name = [&](const Label& v) { return merged_names.count(v) ? merged_names.at(v) : v; };
  std::vector<std::vector<Label>> cs = x.clusters;
  for (const auto& e : h.edges()) {
    if (clique.count(e.u) && clique.count(e.v)) continue;
    cs.push_back({name(e.u), name(e.v)});
  }
  return TwoThinCover::of(cs);
}

// After a Henneberg-I extension with new vertex u on base W: add u to the
// first cluster (in canonical order) containing all of W, else add the
// two-vertex cluster {u, w} for each w in W.
inline TwoThinCover extend_cover_after_henneberg1(const TwoThinCover& x, const Label& u,
                                                  const std::vector<Label>& base) {
  std::vector<std::vector<Label>> cs = x.clusters;
  for (auto& c : cs) {
    bool all = true;
    for (const auto& w : base)
      if (!std::binary_search(c.begin(), c.end(), w)) all = false;
    if (all) {
      c.push_back(u);
      return TwoThinCover::of(cs);
    }
  }
  for (const auto& w : base) cs.push_back({u, w});
  return TwoThinCover::of(cs);
}

}  // namespace rigidity
