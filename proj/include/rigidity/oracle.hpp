#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rigidity/framework.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/rng.hpp"

namespace rigidity {

enum class Model { Generic3d, Cofactor };

inline const char* model_name(Model m) { return m == Model::Generic3d ? "generic3d" : "cofactor"; }
inline int model_dim(Model m) { return m == Model::Generic3d ? 3 : 2; }

struct RankOptions {
  std::uint64_t seed = kDefaultSeed;
  int trials = 2;
};

// Evidence for a rank value. Randomized evidence is one-sided: the reported
// rank never exceeds the generic rank and equals it except with probability
// at most error_bound. Exact-witness evidence pins rank = |E| via a concrete
// integer-coordinate framework: full row rank of its matrix mod p forces full
// exact rational rank at that point, which lower-bounds the generic rank.
struct RankCertificate {
  std::uint64_t graph_hash = 0;
  Model model = Model::Generic3d;
  int rank = 0;
  bool exact_witness = false;
  std::uint64_t prime = kPrime;
  std::uint64_t seed = 0;
  int trials = 0;
  mpq_class error_bound = 0;                     // randomized evidence only
  std::map<Label, std::vector<mpq_class>> witness;  // exact evidence only
};

namespace detail {

inline std::vector<std::vector<Fp>> sample_points(const Graph& g, Model model, std::uint64_t seed) {
  Rng rng(seed);
  int d = model_dim(model);
  std::vector<std::vector<Fp>> pts(g.n(), std::vector<Fp>(d));
  for (int i = 0; i < g.n(); ++i)
    for (int ax = 0; ax < d; ++ax) pts[i][ax] = rng.field_element();
  return pts;
}

inline Mat<Fp> model_matrix_fp(const Graph& g, Model model, const std::vector<std::vector<Fp>>& pts) {
  return model == Model::Generic3d ? rigidity_matrix_fp(g, pts) : cofactor_matrix_fp(g, pts);
}

// Schwartz-Zippel degree bound for one full-rank minor: matrix entries are
// linear in the coordinates for the rigidity matrix and quadratic for the
// cofactor matrix.
inline mpq_class error_bound(const Graph& g, Model model, int trials) {
  long deg = static_cast<long>(g.m()) * (model == Model::Generic3d ? 1 : 2);
  mpq_class per(deg, 1);
  per /= mpq_class(mpz_class(kPrime));
  if (per > 1) per = 1;
  mpq_class out = 1;
  for (int t = 0; t < trials; ++t) out *= per;
  return out;
}

// Max rank over the trial samples and the winning sample's points.
inline std::pair<int, std::vector<std::vector<Fp>>> best_rank(const Graph& g, Model model,
                                                              const RankOptions& opt) {
  int best = -1;
  std::vector<std::vector<Fp>> best_pts;
  for (int t = 0; t < opt.trials; ++t) {
    auto pts = sample_points(g, model, derive_seed(opt.seed, "rank-trial", t));
    int r = rank_fp(model_matrix_fp(g, model, pts));
    if (r > best) {
      best = r;
      best_pts = std::move(pts);
    }
    if (best == g.m()) break;  // cannot do better
  }
  return {best, best_pts};
}

}  // namespace detail

// Randomized generic rank, max over trials, deterministic for a fixed seed.
inline RankCertificate generic_rank(const Graph& g, Model model, const RankOptions& opt = {}) {
  RankCertificate c;
  c.graph_hash = g.hash();
  c.model = model;
  c.seed = opt.seed;
  c.trials = opt.trials;
  if (g.m() == 0) {
    c.exact_witness = true;  // rank 0 is exact
    return c;
  }
  auto [r, pts] = detail::best_rank(g, model, opt);
  c.rank = r;
  if (r == g.m()) {
    // The winning sample is itself a deterministic independence certificate.
    c.exact_witness = true;
    for (int i = 0; i < g.n(); ++i) {
      std::vector<mpq_class> p;
      for (const auto& x : pts[i]) p.emplace_back(mpz_class(x.v));
      c.witness[g.label(i)] = std::move(p);
    }
  } else {
    c.error_bound = detail::error_bound(g, model, opt.trials);
  }
  return c;
}

// Replays an exact-witness certificate: rebuilds the matrix at the witness
// coordinates and checks full row rank mod p.
inline bool verify_witness(const Graph& g, const RankCertificate& c) {
  if (!c.exact_witness) return false;
  if (g.m() == 0) return true;
  std::vector<std::vector<Fp>> pts(g.n());
  for (int i = 0; i < g.n(); ++i) {
    auto it = c.witness.find(g.label(i));
    if (it == c.witness.end()) return false;
    for (const auto& q : it->second) {
      if (q.get_den() != 1 || q < 0) return false;
      pts[i].push_back(Fp(mpz_class(q.get_num()).get_ui()));
    }
    if (static_cast<int>(pts[i].size()) != model_dim(c.model)) return false;
  }
  return rank_fp(detail::model_matrix_fp(g, c.model, pts)) == g.m();
}

struct IndependenceResult {
  bool independent = false;
  RankCertificate certificate;
};

inline IndependenceResult independence(const Graph& g, Model model, const RankOptions& opt = {}) {
  RankCertificate c = generic_rank(g, model, opt);
  return {c.rank == g.m(), c};
}

inline int rank_value(const Graph& g, Model model, const RankOptions& opt = {}) {
  return generic_rank(g, model, opt).rank;
}

// Total: single points and bars count as rigid.
inline bool is_rigid(const Graph& g, Model model, const RankOptions& opt = {}) {
  if (g.n() < 3) return true;
  return rank_value(g, model, opt) == 3 * g.n() - 6;
}

inline int flex_dim(const Graph& g, Model model, const RankOptions& opt = {}) {
  if (g.n() < 3) throw Error("too-few-vertices", "flex_dim needs at least 3 vertices");
  return 3 * g.n() - 6 - rank_value(g, model, opt);
}

// ---------------------------------------------------------------------------
// Closure and implied nonedges.
// ---------------------------------------------------------------------------

// rank(G u f) for every candidate pair, sharing one elimination per trial:
// a pair is rank-neutral in a trial iff its row reduces to zero against the
// eliminated edge rows.
inline std::map<Pair, int> rank_with_pairs(const Graph& g, const std::vector<Pair>& pairs, Model model,
                                           const RankOptions& opt, int* base_rank_out = nullptr) {
  std::map<Pair, int> best;
  int base_best = 0;
  bool cof = model == Model::Cofactor;
  for (int t = 0; t < opt.trials; ++t) {
    auto pts = detail::sample_points(g, model, derive_seed(opt.seed, "closure-trial", t));
    Mat<Fp> m = detail::model_matrix_fp(g, model, pts);
    FpEliminator elim(m.cols);
    std::vector<Fp> row(m.cols);
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j) row[j] = m(i, j);
      elim.absorb(std::move(row));
      row.assign(m.cols, Fp());
    }
    int r = elim.rank();
    base_best = std::max(base_best, r);
    for (const auto& p : pairs) {
      auto pr = pair_row_fp(g, pts, g.index_of(p.u), g.index_of(p.v), cof);
      int with = r + (elim.reduce(pr) ? 0 : 1);
      auto it = best.find(p);
      if (it == best.end() || with > it->second) best[p] = with;
    }
  }
  if (base_rank_out) *base_rank_out = base_best;
  return best;
}

// All pairs f with rank(G u f) = rank(G); contains E(G).
inline std::vector<Pair> closure(const Graph& g, Model model, const RankOptions& opt = {}) {
  std::vector<Pair> out = g.edges();
  int base = 0;
  auto ranks = rank_with_pairs(g, nonedges(g), model, opt, &base);
  for (const auto& [p, r] : ranks)
    if (r == base) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_implied(const Graph& g, const Pair& f, Model model, const RankOptions& opt = {}) {
  if (g.has_edge(f.u, f.v)) throw Error("not-a-nonedge", f.u + "-" + f.v);
  if (!g.has_vertex(f.u) || !g.has_vertex(f.v)) throw Error("unknown-vertex", f.u + "," + f.v);
  int base = 0;
  auto ranks = rank_with_pairs(g, {f}, model, opt, &base);
  return ranks.at(f) == base;
}

inline bool is_circuit(const Graph& g, Model model, const RankOptions& opt = {}) {
  if (g.m() == 0) throw Error("empty-edge-set", "circuit test needs at least one edge");
  int r = rank_value(g, model, opt);
  if (r == g.m()) return false;  // independent
  int k = 0;
  for (const auto& e : g.edges()) {
    Graph h = without_edge(g, e);
    if (rank_value(h, model, {derive_seed(opt.seed, "circuit-del", k++), opt.trials}) != h.m()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Nucleations: inclusion-minimal rigid vertex sets with at least 5 vertices.
// ---------------------------------------------------------------------------

namespace detail {

// rank of the sub-framework induced by subset (global sample restricted).
inline int subset_rank(const Graph& g, const std::vector<int>& subset,
                       const std::vector<std::vector<std::vector<Fp>>>& trial_pts, Model model, int want) {
  std::vector<int> colmap(g.n(), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) colmap[subset[k]] = static_cast<int>(k);
  int best = 0;
  bool cof = model == Model::Cofactor;
  for (const auto& pts : trial_pts) {
    FpEliminator elim(3 * static_cast<int>(subset.size()));
    for (auto [i, j] : g.edge_indices()) {
      if (colmap[i] < 0 || colmap[j] < 0) continue;
      std::vector<Fp> row(3 * subset.size());
      if (cof) {
        Fp dx = pts[i][0] - pts[j][0], dy = pts[i][1] - pts[j][1];
        Fp mono[3] = {dx * dx, dx * dy, dy * dy};
        for (int ax = 0; ax < 3; ++ax) {
          row[3 * colmap[i] + ax] = mono[ax];
          row[3 * colmap[j] + ax] = -mono[ax];
        }
      } else {
        for (int ax = 0; ax < 3; ++ax) {
          Fp d = pts[i][ax] - pts[j][ax];
          row[3 * colmap[i] + ax] = d;
          row[3 * colmap[j] + ax] = -d;
        }
      }
      elim.absorb(std::move(row));
    }
    best = std::max(best, elim.rank());
    if (best >= want) break;
  }
  return best;
}

}  // namespace detail

struct NucleationOptions {
  RankOptions rank;
  bool include_nonminimal = false;
};

// Search space: a rigid induced subgraph places all its internal pairs in the
// closure, so candidates are cliques of size >= 5 in the closure graph,
// further filtered by |E(G[S])| >= 3|S| - 6 and minimum degree 3 inside S.
// Graphs with at most 16 vertices are scanned exhaustively instead.
inline std::vector<std::vector<Label>> nucleations(const Graph& g, Model model,
                                                   const NucleationOptions& opt = {}) {
  const int n = g.n();
  std::vector<std::vector<std::vector<Fp>>> trial_pts;
  for (int t = 0; t < opt.rank.trials; ++t)
    trial_pts.push_back(detail::sample_points(g, model, derive_seed(opt.rank.seed, "nucleation-trial", t)));

  // adjacency bitmasks of g itself (for the count filters)
  std::vector<std::uint64_t> adj;
  bool can_mask = n <= 64;
  if (can_mask) {
    adj.assign(n, 0);
    for (auto [i, j] : g.edge_indices()) {
      adj[i] |= 1ull << j;
      adj[j] |= 1ull << i;
    }
  }

  // candidate vertex pools: whole graph if small, else maximal closure cliques
  std::vector<std::vector<int>> pools;
  if (n <= 16) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    pools.push_back(all);
  } else {
    Graph cl = with_pairs(g, closure(g, model, opt.rank));
    std::vector<std::vector<int>> cl_adj(n);
    for (auto [i, j] : cl.edge_indices()) {
      int a = g.index_of(cl.label(i)), b = g.index_of(cl.label(j));
      cl_adj[a].push_back(b);
      cl_adj[b].push_back(a);
    }
    // Bron-Kerbosch with pivoting over the closure graph
    std::vector<std::set<int>> nb(n);
    for (int i = 0; i < n; ++i) nb[i] = std::set<int>(cl_adj[i].begin(), cl_adj[i].end());
    std::vector<int> R;
    std::function<void(std::set<int>, std::set<int>)> bk = [&](std::set<int> P, std::set<int> X) {
      if (P.empty() && X.empty()) {
        if (R.size() >= 5) pools.push_back(R);
        return;
      }
      int pivot = -1;
      std::size_t bestdeg = 0;
      for (int u : P)
        if (pivot < 0 || nb[u].size() >= bestdeg) {
          pivot = u;
          bestdeg = nb[u].size();
        }
      for (int u : X)
        if (nb[u].size() >= bestdeg) {
          pivot = u;
          bestdeg = nb[u].size();
        }
      std::vector<int> cand;
      for (int u : P)
        if (pivot < 0 || !nb[pivot].count(u)) cand.push_back(u);
      for (int u : cand) {
        std::set<int> P2, X2;
        for (int w : P)
          if (nb[u].count(w)) P2.insert(w);
        for (int w : X)
          if (nb[u].count(w)) X2.insert(w);
        R.push_back(u);
        bk(P2, X2);
        R.pop_back();
        P.erase(u);
        X.insert(u);
      }
    };
    std::set<int> P0;
    for (int i = 0; i < n; ++i) P0.insert(i);
    bk(P0, {});
  }

  // enumerate filtered subsets of each pool, sizes ascending for minimality
  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, int>> candidates;  // (subset, popcount)
  for (const auto& pool : pools) {
    int k = static_cast<int>(pool.size());
    if (k < 5) continue;
    if (k > 26) throw Error("search-too-large", "nucleation candidate pool exceeds 2^26 subsets");
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      int pc = __builtin_popcount(mask);
      if (pc < 5) continue;
      std::vector<int> s;
      std::uint64_t smask = 0;
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) {
          s.push_back(pool[b]);
          if (can_mask) smask |= 1ull << pool[b];
        }
      // count filters
      int edges = 0;
      bool mindeg_ok = true;
      if (can_mask) {
        for (int v : s) {
          int d = __builtin_popcountll(adj[v] & smask);
          if (d < 3) {
            mindeg_ok = false;
            break;
          }
          edges += d;
        }
        edges /= 2;
      } else {
        std::set<int> ss(s.begin(), s.end());
        std::vector<int> deg(n, 0);
        for (auto [i, j] : g.edge_indices())
          if (ss.count(i) && ss.count(j)) {
            ++edges;
            ++deg[i];
            ++deg[j];
          }
        for (int v : s)
          if (deg[v] < 3) mindeg_ok = false;
      }
      if (!mindeg_ok || edges < 3 * pc - 6) continue;
      std::sort(s.begin(), s.end());
      if (seen.insert(s).second) candidates.emplace_back(std::move(s), pc);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });

  std::vector<std::vector<int>> accepted;
  std::vector<std::vector<Label>> out;
  for (auto& [s, pc] : candidates) {
    if (!opt.include_nonminimal) {
      bool contains_accepted = false;
      for (const auto& a : accepted)
        if (std::includes(s.begin(), s.end(), a.begin(), a.end())) {
          contains_accepted = true;
          break;
        }
      if (contains_accepted) continue;
    }
    int want = 3 * pc - 6;
    if (detail::subset_rank(g, s, trial_pts, model, want) == want) {
      accepted.push_back(s);
      std::vector<Label> labels;
      for (int v : s) labels.push_back(g.label(v));
      out.push_back(std::move(labels));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool nucleation_free(const Graph& g, Model model, const RankOptions& opt = {}) {
  return nucleations(g, model, {opt, false}).empty();
}

// ---------------------------------------------------------------------------
// Exact stresses, flexes, and flex-sign classification.
// ---------------------------------------------------------------------------

struct Stress {
  std::uint64_t framework_hash = 0;
  std::vector<mpq_class> per_edge;  // indexed like graph.edge_indices()

  const mpq_class& on(const Framework& fw, const Pair& e) const {
    const Graph& g = fw.graph;
    int i = g.index_of(e.u), j = g.index_of(e.v);
    if (i > j) std::swap(i, j);
    auto& es = g.edge_indices();
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(i, j));
    if (it == es.end() || *it != std::make_pair(i, j)) throw Error("unknown-edge", e.u + "-" + e.v);
    return per_edge[it - es.begin()];
  }
};

struct Flex {
  std::uint64_t framework_hash = 0;
  std::vector<mpq_class> per_vertex_axis;  // 3 entries per vertex, graph order
};

inline std::vector<Stress> stress_basis(const Framework& fw) {
  if (fw.dim != 3) throw Error("bad-dimension", "stress basis needs a dim-3 framework");
  auto basis = nullspace_left(rigidity_matrix(fw));
  std::vector<Stress> out;
  for (auto& v : basis) out.push_back({fw.hash(), std::move(v)});
  return out;
}

inline std::vector<Flex> flex_basis(const Framework& fw) {
  if (fw.dim != 3) throw Error("bad-dimension", "flex basis needs a dim-3 framework");
  auto basis = nullspace_right(rigidity_matrix(fw));
  std::vector<Flex> out;
  for (auto& v : basis) out.push_back({fw.hash(), std::move(v)});
  return out;
}

// First-order length rate of the pair under the flex: (u_i - u_j).(p_i - p_j).
// Positive = the flex expands the pair, negative = contracts.
inline mpq_class pair_rate(const Framework& fw, const Flex& flex, const Pair& f) {
  if (flex.framework_hash != fw.hash()) throw Error("flex-mismatch", "flex does not belong to framework");
  const Graph& g = fw.graph;
  int i = g.index_of(f.u), j = g.index_of(f.v);
  const auto& pi = fw.coords.at(f.u);
  const auto& pj = fw.coords.at(f.v);
  mpq_class r = 0;
  for (int ax = 0; ax < 3; ++ax)
    r += (flex.per_vertex_axis[3 * i + ax] - flex.per_vertex_axis[3 * j + ax]) * (pi[ax] - pj[ax]);
  return r;
}

enum class TripleSign { Positive, Negative, Mixed, Degenerate };

inline const char* triple_sign_name(TripleSign s) {
  switch (s) {
    case TripleSign::Positive: return "positive";
    case TripleSign::Negative: return "negative";
    case TripleSign::Mixed: return "mixed";
    default: return "degenerate";
  }
}

// Compares the two rate functionals on the whole flex space of fw.
inline TripleSign classify_triple(const Framework& fw, const Pair& f1, const Pair& f2) {
  for (const Pair& f : {f1, f2})
    if (fw.graph.has_edge(f.u, f.v)) throw Error("not-a-nonedge", f.u + "-" + f.v);
  auto basis = flex_basis(fw);
  std::vector<mpq_class> r1, r2;
  for (const auto& fx : basis) {
    r1.push_back(pair_rate(fw, fx, f1));
    r2.push_back(pair_rate(fw, fx, f2));
  }
  bool z1 = std::all_of(r1.begin(), r1.end(), [](const mpq_class& q) { return q == 0; });
  bool z2 = std::all_of(r2.begin(), r2.end(), [](const mpq_class& q) { return q == 0; });
  if (z1 && z2) return TripleSign::Degenerate;
  if (z1 || z2) return TripleSign::Mixed;
  std::optional<mpq_class> lambda;
  for (std::size_t k = 0; k < r1.size(); ++k) {
    if (r1[k] == 0) {
      if (r2[k] != 0) return TripleSign::Mixed;
      continue;
    }
    mpq_class l = r2[k] / r1[k];
    if (!lambda)
      lambda = l;
    else if (*lambda != l)
      return TripleSign::Mixed;
  }
  if (!lambda || *lambda == 0) return TripleSign::Mixed;
  return *lambda > 0 ? TripleSign::Positive : TripleSign::Negative;
}

}  // namespace rigidity
