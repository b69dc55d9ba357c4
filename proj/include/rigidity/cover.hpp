#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/oracle.hpp"

namespace rigidity {

// Family of vertex clusters over a host graph; canonical form keeps each
// cluster sorted and the cluster list sorted.
struct TwoThinCover {
  std::vector<std::vector<Label>> clusters;

  static TwoThinCover of(std::vector<std::vector<Label>> cs) {
    for (auto& c : cs) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return {std::move(cs)};
  }
};

struct CoverViolation {
  std::string condition;  // "cluster-size" | "thinness" | "containment" | "coverage"
  std::string witness;
};

struct CoverReport {
  bool valid = false;
  std::vector<CoverViolation> violations;
};

inline CoverReport validate_two_thin(const Graph& g, const TwoThinCover& x) {
  CoverReport rep;
  for (const auto& c : x.clusters)
    for (const auto& v : c)
      if (!g.has_vertex(v)) throw Error("unknown-vertex", v);
  const auto& cs = x.clusters;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].size() < 2) rep.violations.push_back({"cluster-size", cs[i].empty() ? "(empty)" : cs[i][0]});
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      std::vector<Label> inter;
      std::set_intersection(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(), std::back_inserter(inter));
      if (i < j && inter.size() > 2) {
        std::string w;
        for (const auto& v : inter) w += v + " ";
        rep.violations.push_back({"thinness", w});
      }
      if (inter.size() == cs[i].size() && cs[i].size() < cs[j].size())
        rep.violations.push_back({"containment", cs[i][0] + "... inside a larger cluster"});
    }
  }
  for (const auto& e : g.edges()) {
    bool covered = false;
    for (const auto& c : cs)
      if (std::binary_search(c.begin(), c.end(), e.u) && std::binary_search(c.begin(), c.end(), e.v)) {
        covered = true;
        break;
      }
    if (!covered) rep.violations.push_back({"coverage", e.u + "-" + e.v});
  }
  rep.valid = rep.violations.empty();
  return rep;
}

// Exactly the 2-element pairwise cluster intersections.
inline std::vector<Pair> shared_set(const TwoThinCover& x) {
  std::set<Pair> s;
  const auto& cs = x.clusters;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      std::vector<Label> inter;
      std::set_intersection(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(), std::back_inserter(inter));
      if (inter.size() == 2) s.insert(Pair(inter[0], inter[1]));
    }
  return std::vector<Pair>(s.begin(), s.end());
}

// Number of clusters containing both endpoints of the pair.
inline int pair_multiplicity(const TwoThinCover& x, const Pair& e) {
  int d = 0;
  for (const auto& c : x.clusters)
    if (std::binary_search(c.begin(), c.end(), e.u) && std::binary_search(c.begin(), c.end(), e.v)) ++d;
  return d;
}

inline Graph pairs_graph(const std::vector<Pair>& pairs) {
  std::set<Label> vs;
  std::vector<std::pair<Label, Label>> es;
  for (const auto& p : pairs) {
    vs.insert(p.u);
    vs.insert(p.v);
    es.emplace_back(p.u, p.v);
  }
  return Graph::build(std::vector<Label>(vs.begin(), vs.end()), es);
}

inline void require_valid(const Graph& g, const TwoThinCover& x) {
  CoverReport rep = validate_two_thin(g, x);
  if (!rep.valid) throw Error("invalid-cover", rep.violations.front().condition + " " + rep.violations.front().witness);
}

// The cover is independent iff the shared-set graph is independent.
inline IndependenceResult cover_independent(const Graph& g, const TwoThinCover& x, Model model,
                                            const RankOptions& opt = {}) {
  require_valid(g, x);
  auto s = shared_set(x);
  if (s.empty()) {
    IndependenceResult r;
    r.independent = true;
    r.certificate.exact_witness = true;
    r.certificate.model = model;
    return r;
  }
  return independence(pairs_graph(s), model, opt);
}

// Max possible rank of a sub-framework whose edge support touches s vertices.
inline int dof_bound(int support) { return support <= 1 ? 0 : (support == 2 ? 1 : 3 * support - 6); }

struct ClusterTerm {
  std::vector<Label> cluster;
  int rank = 0;
  int upper_bound = 0;
  bool pinned = false;  // rank provably exact: witness reached the upper bound
};

struct IeResult {
  long long value = 0;
  bool deterministic = false;  // all cluster ranks pinned
  std::vector<ClusterTerm> terms;
  long long multiplicity_correction = 0;
};

namespace detail {

inline IeResult ie_with_extra(const Graph& g, const TwoThinCover& x, const std::vector<Pair>& extra,
                              Model model, const RankOptions& opt) {
  require_valid(g, x);
  std::set<Pair> aug(extra.begin(), extra.end());
  for (const auto& p : shared_set(x)) aug.insert(p);
  Graph gs = with_pairs(g, std::vector<Pair>(aug.begin(), aug.end()));

  IeResult out;
  out.deterministic = true;
  long long total = 0;
  int idx = 0;
  for (const auto& c : x.clusters) {
    Graph sub = induced_subgraph(gs, c);
    int support = 0;
    for (const auto& v : sub.vertices())
      if (sub.degree(v) > 0) ++support;
    int bound = std::min(sub.m(), dof_bound(support));
    RankCertificate cert = generic_rank(sub, model, {derive_seed(opt.seed, "ie-cluster", idx), opt.trials});
    ClusterTerm term{c, cert.rank, bound, cert.rank == bound};
    out.deterministic = out.deterministic && term.pinned;
    total += term.rank;
    out.terms.push_back(std::move(term));
    ++idx;
  }
  long long corr = 0;
  for (const auto& p : aug) corr += std::max(0, pair_multiplicity(x, p) - 1);
  out.multiplicity_correction = corr;
  out.value = total - corr;
  return out;
}

}  // namespace detail

// Inclusion-exclusion rank count IE(G, X): cluster ranks of G augmented with
// the shared pairs, minus the multiplicity correction over shared pairs.
inline IeResult ie_count(const Graph& g, const TwoThinCover& x, Model model, const RankOptions& opt = {}) {
  return detail::ie_with_extra(g, x, {}, model, opt);
}

// Pairs of distinct gluing vertices lying inside some cluster.
inline std::vector<Pair> key_gluing_pairs(const TwoThinCover& x, const std::vector<Label>& gluing) {
  std::set<Pair> keys;
  for (std::size_t i = 0; i < gluing.size(); ++i)
    for (std::size_t j = i + 1; j < gluing.size(); ++j) {
      Pair p(gluing[i], gluing[j]);
      if (pair_multiplicity(x, p) > 0) keys.insert(p);
    }
  return std::vector<Pair>(keys.begin(), keys.end());
}

// IE'(G, X): IE with all key gluing pairs added to the shared set in both
// summations.
inline IeResult ie_prime(const Graph& g, const TwoThinCover& x, const std::vector<Label>& gluing,
                         Model model, const RankOptions& opt = {}) {
  for (const auto& v : gluing)
    if (!g.has_vertex(v)) throw Error("unknown-vertex", v);
  return detail::ie_with_extra(g, x, key_gluing_pairs(x, gluing), model, opt);
}

// ---------------------------------------------------------------------------
// Rank-sandwich implication and the safe-base / safe-ear validations.
// ---------------------------------------------------------------------------

struct SandwichResult {
  bool implied = false;
  bool deterministic = false;
  long long ie = 0;
  int edges = 0;
  IndependenceResult graph_independent;
  IndependenceResult cover_ind;
  IeResult ie_detail;
};

// Strong form of the rank-sandwich: if G is independent and IE(G,X) = |E(G)|
// for an independent cover X, then rank(G u f) is pinched at rank(G) for
// every f in S(X). With exact-witness independence and pinned cluster ranks
// the resulting implication certificate is deterministic.
inline SandwichResult rank_sandwich_implied(const Graph& g, const TwoThinCover& x, const Pair& f,
                                            Model model, const RankOptions& opt = {}) {
  require_valid(g, x);
  if (g.has_edge(f.u, f.v)) throw Error("not-a-nonedge", f.u + "-" + f.v);
  auto s = shared_set(x);
  if (std::find(s.begin(), s.end(), f) == s.end())
    throw Error("pair-not-shared", f.u + "-" + f.v + " is not a shared pair of the cover");
  SandwichResult r;
  r.cover_ind = cover_independent(g, x, model, {derive_seed(opt.seed, "sandwich-cover", 0), opt.trials});
  if (!r.cover_ind.independent) throw Error("cover-not-independent", "rank-sandwich hypothesis unmet");
  r.graph_independent = independence(g, model, {derive_seed(opt.seed, "sandwich-ind", 0), opt.trials});
  r.ie_detail = ie_count(g, x, model, {derive_seed(opt.seed, "sandwich-ie", 0), opt.trials});
  r.ie = r.ie_detail.value;
  r.edges = g.m();
  r.implied = r.graph_independent.independent && r.ie == r.edges;
  r.deterministic = r.implied && r.graph_independent.certificate.exact_witness && r.ie_detail.deterministic &&
                    r.cover_ind.certificate.exact_witness;
  return r;
}

struct SafeBaseCertificate {
  Graph graph;
  TwoThinCover cover;
  Pair split_nonedge;
  bool independent = false;
  bool cover_independent = false;
  bool rank_eq_ie = false;
  bool safe_split_exists = false;
  long long ie = 0;
  int rank = 0;
  IeResult ie_detail;
  bool valid() const { return independent && cover_independent && rank_eq_ie && safe_split_exists; }
};

inline SafeBaseCertificate validate_safe_base(const Graph& g, const TwoThinCover& x, const Pair& ab,
                                              Model model, const RankOptions& opt = {}) {
  require_valid(g, x);
  SafeBaseCertificate cert;
  cert.graph = g;
  cert.cover = x;
  cert.split_nonedge = ab;
  auto ind = independence(g, model, {derive_seed(opt.seed, "safebase-ind", 0), opt.trials});
  cert.independent = ind.independent;
  cert.rank = ind.certificate.rank;
  cert.cover_independent =
      cover_independent(g, x, model, {derive_seed(opt.seed, "safebase-cover", 0), opt.trials}).independent;
  cert.ie_detail = ie_count(g, x, model, {derive_seed(opt.seed, "safebase-ie", 0), opt.trials});
  cert.ie = cert.ie_detail.value;
  cert.rank_eq_ie = cert.ie == cert.rank;
  // A split assigning all edges to a1 and b1 is always safe, so a safe split
  // exists whenever (a,b) is a shared nonedge of the cover.
  auto s = shared_set(x);
  cert.safe_split_exists =
      !g.has_edge(ab.u, ab.v) && std::find(s.begin(), s.end(), ab) != s.end();
  return cert;
}

struct SafeEarCertificate {
  Graph graph;
  TwoThinCover cover;
  std::vector<Label> gluing;
  std::vector<Pair> key_pairs;
  bool cond_cluster_gluing = false;  // (i) each cluster holds <= 2 gluing vertices
  bool cond_shared_independent = false;  // (ii) S(X^H) u F independent
  bool cond_rank = false;                // (iii) rank(H) = IE'(H, X^H) - 1
  long long ie_prime = 0;
  int rank = 0;
  bool valid() const { return cond_cluster_gluing && cond_shared_independent && cond_rank; }
};

inline SafeEarCertificate validate_safe_ear(const Graph& h, const TwoThinCover& xh,
                                            const std::vector<Label>& gluing, Model model,
                                            const RankOptions& opt = {}) {
  require_valid(h, xh);
  SafeEarCertificate cert;
  cert.graph = h;
  cert.cover = xh;
  cert.gluing = gluing;
  cert.key_pairs = key_gluing_pairs(xh, gluing);

  cert.cond_cluster_gluing = true;
  for (const auto& c : xh.clusters) {
    int cnt = 0;
    for (const auto& v : gluing)
      if (std::binary_search(c.begin(), c.end(), v)) ++cnt;
    if (cnt > 2) cert.cond_cluster_gluing = false;
  }

  std::vector<Pair> shared = shared_set(xh);
  std::set<Pair> sf(shared.begin(), shared.end());
  for (std::size_t i = 0; i < gluing.size(); ++i)
    for (std::size_t j = i + 1; j < gluing.size(); ++j) sf.insert(Pair(gluing[i], gluing[j]));
  cert.cond_shared_independent =
      sf.empty() || independence(pairs_graph(std::vector<Pair>(sf.begin(), sf.end())), model,
                                 {derive_seed(opt.seed, "safeear-shared", 0), opt.trials})
                        .independent;

  auto iep = ie_prime(h, xh, gluing, model, {derive_seed(opt.seed, "safeear-ie", 0), opt.trials});
  cert.ie_prime = iep.value;
  cert.rank = rank_value(h, model, {derive_seed(opt.seed, "safeear-rank", 0), opt.trials});
  cert.cond_rank = cert.rank == cert.ie_prime - 1;
  return cert;
}

}  // namespace rigidity
