#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rigidity/catalog.hpp"
#include "rigidity/construct.hpp"
#include "rigidity/cover.hpp"
#include "rigidity/io.hpp"
#include "rigidity/oracle.hpp"

namespace rigidity {

// The verification suite behind the acceptance binary and the CLI's
// `verify`: one named check per verified claim. Randomized verdicts run
// enough trials for a one-sided error below 2^-40 (a single trial of the
// oracle is already below 2^-50 at this prime; the default two trials are
// kept throughout).

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  json data = json::object();
  double wall_ms = 0;
};

namespace accept_detail {

struct Checker {
  bool pass = true;
  std::ostringstream log;
  json data = json::object();

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      log << "FAIL[" << what << "] ";
    }
  }
  void attach(const RankCertificate& c) { data["certificate"] = certificate_to_json(c); }
  void attach_exact(const char* what) { data["certificate"] = json{{"type", what}}; }

  template <class T, class U>
  void expect_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == static_cast<T>(want))) {
      pass = false;
      log << "FAIL[" << what << ": got " << got << ", want " << want << "] ";
    }
  }
};

inline Graph relabel(const Graph& g, const std::string& prefix) {
  std::vector<Label> vs;
  for (const auto& v : g.vertices()) vs.push_back(prefix + v);
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : g.edges()) es.emplace_back(prefix + e.u, prefix + e.v);
  return Graph::build(vs, es);
}

inline Graph bowtie() {
  return Graph::build({"p", "q", "r", "s", "t"},
                      {{"p", "q"}, {"q", "r"}, {"p", "r"}, {"r", "s"}, {"s", "t"}, {"r", "t"}});
}

// Shared builder for criterion 7/8: the double-butterfly split-and-glue over
// a ring of butterflies with one trivially split hinge, plus its hinged
// framework.
struct DdbInstance {
  CatalogEntry base;
  SplitSpec spec;
  Graph graph;
  Framework framework;
  std::vector<Pair> other_hinges;
};

inline DdbInstance build_ddb(std::uint64_t seed) {
  DdbInstance inst;
  inst.base = named_graph("ring_of_butterflies", {7, seed, "", ""});
  Pair h = inst.base.hinges.front();
  inst.spec = SplitSpec::trivial(inst.base.graph, h.u, h.v);
  inst.graph = double_butterfly_sg(inst.base.graph, inst.spec).graph;
  inst.framework = hinged_double_butterfly_framework(inst.graph, inst.spec, seed);
  for (std::size_t i = 1; i < inst.base.hinges.size(); ++i) inst.other_hinges.push_back(inst.base.hinges[i]);
  return inst;
}

}  // namespace accept_detail

using accept_detail::Checker;

// 1. Rings of butterflies: counts, dependence threshold, flexes, implied
//    hinges, nucleation-freeness exactly for m >= 7.
inline CheckResult check_rings_of_butterflies(Model model, std::uint64_t seed) {
  Checker c;
  for (int m = 3; m <= 9; ++m) {
    CatalogEntry e = named_graph("ring_of_butterflies", {m, seed, "", ""});
    std::string tag = "m=" + std::to_string(m);
    c.expect_eq(e.graph.n(), 3 * m, tag + " |V|");
    c.expect_eq(e.graph.m(), 8 * m, tag + " |E|");
    RankOptions opt{derive_seed(seed, "c1", m), 2};
    RankCertificate rc = generic_rank(e.graph, model, opt);
    if (m <= 5) c.expect(rc.rank < e.graph.m(), tag + " dependent");
    if (m >= 6) {
      c.expect_eq(rc.rank, e.graph.m(), tag + " independent");
      c.expect_eq(flex_dim(e.graph, model, opt), m - 6, tag + " flex_dim");
    }
    if (m == 7) {
      c.expect_eq(rc.rank, 56, "rank(R7)");
      c.attach(rc);
    }
    for (const auto& h : e.hinges) c.expect(is_implied(e.graph, h, model, opt), tag + " hinge implied");
    bool nf = nucleation_free(e.graph, model, opt);
    c.expect_eq(nf, m >= 7, tag + " nucleation-free iff m>=7");
    c.data[tag] = json{{"rank", rc.rank}, {"nucleation_free", nf}};
  }
  return {"rings-of-butterflies", c.pass, c.log.str(), c.data, 0};
}

// 2. Rank-sandwich on the link cover of R7: valid independent cover,
//    IE = 56 = |E|, and a deterministic implication certificate per hinge.
inline CheckResult check_rank_sandwich(Model model, std::uint64_t seed) {
  Checker c;
  CatalogEntry e = named_graph("ring_of_butterflies", {7, seed, "", ""});
  RankOptions opt{derive_seed(seed, "c2", 0), 2};
  CoverReport rep = validate_two_thin(e.graph, *e.cover);
  c.expect(rep.valid, "link cover valid");
  c.expect(cover_independent(e.graph, *e.cover, model, opt).independent, "link cover independent");
  IeResult ie = ie_count(e.graph, *e.cover, model, opt);
  c.expect_eq(ie.value, 56LL, "IE(R7,X)");
  c.expect_eq(static_cast<long long>(e.graph.m()), ie.value, "IE equals |E|");
  for (const auto& h : e.hinges) {
    SandwichResult sw = rank_sandwich_implied(e.graph, *e.cover, h, model, opt);
    c.expect(sw.implied, "sandwich implied " + h.u + "-" + h.v);
    c.expect(sw.deterministic, "deterministic certificate " + h.u + "-" + h.v);
    c.attach(sw.graph_independent.certificate);
  }
  c.data["ie"] = ie.value;
  return {"rank-sandwich-r7", c.pass, c.log.str(), c.data, 0};
}

// 3. Flex-sign classes of the three butterfly frameworks, and degeneracy on a
//    rigid framework.
inline CheckResult check_flex_sign(std::uint64_t seed) {
  Checker c;
  auto cls = [&](const std::string& variant) {
    Framework fw = butterfly_framework(variant, seed);
    return classify_triple(fw, Pair("a1", "b1"), Pair("u", "v"));
  };
  c.expect(cls("convex") == TripleSign::Negative, "convex butterfly negative");
  c.expect(cls("crossing") == TripleSign::Negative, "crossing butterfly negative");
  c.expect(cls("pseudo") == TripleSign::Positive, "pseudo-triangular butterfly positive");

  CatalogEntry oct = named_graph("octahedron", {0, seed, "", ""});
  Framework fw;
  fw.graph = oct.graph;
  fw.dim = 3;
  Rng rng(derive_seed(seed, "c3-rigid", 0));
  for (const auto& v : fw.graph.vertices())
    fw.coords[v] = {mpq_class(rng.range(-500, 500)), mpq_class(rng.range(-500, 500)),
                    mpq_class(rng.range(-500, 500))};
  c.expect(classify_triple(fw, Pair("c1", "c2"), Pair("a1", "b2")) == TripleSign::Degenerate,
           "rigid framework degenerate");
  c.attach_exact("exact_rational_flex_space");
  return {"flex-sign-triples", c.pass, c.log.str(), c.data, 0};
}

// 4. Rings of K4's: |E| = 5m, rigid iff m <= 6, flexes m - 6 beyond that.
inline CheckResult check_ring_of_k4(std::uint64_t seed) {
  Checker c;
  for (int m = 3; m <= 9; ++m) {
    CatalogEntry e = named_graph("ring_of_k4", {m, seed, "", ""});
    std::string tag = "m=" + std::to_string(m);
    c.expect_eq(e.graph.m(), 5 * m, tag + " |E|");
    RankOptions opt{derive_seed(seed, "c4", m), 2};
    bool rigid = is_rigid(e.graph, Model::Generic3d, opt);
    c.expect_eq(rigid, m <= 6, tag + " rigid iff m<=6");
    if (m >= 6) c.expect_eq(flex_dim(e.graph, Model::Generic3d, opt), m - 6, tag + " flex_dim");
    if (m == 7) c.attach(generic_rank(e.graph, Model::Generic3d, opt));
  }
  return {"ring-of-k4", c.pass, c.log.str(), c.data, 0};
}

// 5. Randomized battery over the standard constructions, verifying that
//    independence, nucleation-freeness, and the declared implied sets carry
//    over. Implied sets are declared per the construction: both operands'
//    hinges for k-sums, the base's hinges for Henneberg-I, the base's hinges
//    for Henneberg-II when the deleted edge is implied in the result, and
//    nothing for vertex splits.
inline CheckResult check_standard_constructions(std::uint64_t seed) {
  Checker c;
  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, seed, "", ""});
  Graph bow = accept_detail::bowtie();
  int applications = 0;
  for (int i = 0; i < 20; ++i) {
    RankOptions opt{derive_seed(seed, "c5", i), 2};
    Rng rng(derive_seed(seed, "c5-pick", i));
    std::string tag = "app" + std::to_string(i);
    Graph result;
    std::vector<Pair> declared = r7.hinges;
    // identification merges a pair to the lexicographically least label, so
    // declared nonedges must be mapped through it
    auto map_through = [](std::vector<Pair>& pairs, const std::vector<std::pair<Label, Label>>& ident) {
      auto one = [&](const Label& l) {
        for (const auto& [gv, hv] : ident)
          if (l == gv || l == hv) return std::min(gv, hv);
        return l;
      };
      for (auto& p : pairs) p = Pair(one(p.u), one(p.v));
    };
    int kind = i % 4;
    if (kind == 0) {
      int k = 1 + static_cast<int>(rng.next() % 3);
      std::vector<std::pair<Label, Label>> ident;
      if (k <= 2) {
        Graph other = accept_detail::relabel(bow, "B.");
        std::vector<Label> gs{"L00_a1", "L00_u"};
        std::vector<Label> hs{"B.r", "B.q"};  // adjacent in the bowtie
        for (int t = 0; t < k; ++t) ident.emplace_back(gs[t], hs[t]);
        if (k == 2) c.expect(r7.graph.has_edge(gs[0], gs[1]), tag + " base edge");
        result = k_sum(r7.graph, other, ident).graph;
      } else {
        Graph other = accept_detail::relabel(r7.graph, "B.");
        std::vector<Label> tri{"L00_a1", "L00_u", "L00_c"};  // a triangle of the ring
        c.expect(!k4_through(r7.graph, tri), tag + " base triangle not in a K4");
        for (int t = 0; t < 3; ++t) ident.emplace_back(tri[t], "B." + tri[t]);
        result = k_sum(r7.graph, other, ident).graph;
        for (const auto& h : r7.hinges) declared.emplace_back("B." + h.u, "B." + h.v);
      }
      map_through(declared, ident);
    } else if (kind == 1) {
      const auto& vs = r7.graph.vertices();
      std::set<Label> base;
      while (base.size() < 3) base.insert(vs[rng.next() % vs.size()]);
      result = henneberg1(r7.graph, std::vector<Label>(base.begin(), base.end())).graph;
    } else if (kind == 2) {
      // base = one link's four non-apex vertices; delete an edge inside
      std::vector<Label> base{"L01_u", "L01_v", "L02_u", "L02_v"};
      Pair del("L01_u", "L02_u");
      c.expect(!k4_through(r7.graph, base), tag + " base not in K4");
      result = henneberg2(r7.graph, base, del).graph;
      if (!is_implied(result, del, Model::Generic3d, opt)) declared.clear();
    } else {
      const auto& vs = r7.graph.vertices();
      Label v = vs[rng.next() % vs.size()];
      auto nbrs = r7.graph.neighbors(v);
      int k = static_cast<int>(rng.next() % 3);
      std::vector<Label> kept;
      for (std::size_t t = 0; t < nbrs.size(); ++t)
        if (static_cast<int>(t) < k || (rng.next() & 1)) kept.push_back(nbrs[t]);
      while (static_cast<int>(kept.size()) < k) kept.push_back(nbrs[kept.size()]);
      result = k_vertex_split(r7.graph, v, kept, k).graph;
      declared.clear();
      // splitting a hinge vertex can move hinge pairs; nothing is declared
    }
    ++applications;
    IndependenceResult app_ind = independence(result, Model::Generic3d, opt);
    c.attach(app_ind.certificate);
    c.expect(app_ind.independent, tag + " independent");
    c.expect(nucleation_free(result, Model::Generic3d, opt), tag + " nucleation-free");
    for (const auto& h : declared)
      c.expect(is_implied(result, h, Model::Generic3d, opt), tag + " implied " + h.u + "-" + h.v);
  }
  c.expect_eq(applications, 20, "application count");
  return {"standard-constructions", c.pass, c.log.str(), c.data, 0};
}

// 6. Henneberg-II ring over 7 octahedra with hinge edges: hypotheses checked,
//    then independence, nucleation-freeness, and implied hinges of the result.
inline CheckResult check_henneberg2_ring(std::uint64_t seed) {
  Checker c;
  RankOptions opt{derive_seed(seed, "c6", 0), 2};
  std::vector<Graph> links;
  std::vector<HingeSpec> hinges;
  for (int i = 0; i < 7; ++i) {
    std::string p = cat::link_prefix(i);
    links.push_back(cat::octahedron(p));
    hinges.push_back({{p + "a1", p + "b1"}, {p + "a2", p + "b2"}});
  }
  Constructed r = ring(links, hinges);
  c.expect_eq(r.graph.m(), 77, "ring |E| (12*7 - 7 duplicated hinge edges)");
  c.expect(independence(r.graph, Model::Generic3d, opt).independent, "hypothesis: ring independent");
  Graph oct = cat::octahedron("");
  c.expect(is_rigid(oct, Model::Generic3d, opt), "hypothesis: link rigid");
  Graph stripped = cat::drop_pairs(oct, {Pair("a1", "b1"), Pair("a2", "b2")});
  c.expect(nucleation_free(stripped, Model::Generic3d, opt), "hypothesis: hinge-deleted link nucleation-free");

  Constructed rr = henneberg2_ring(links, hinges);
  c.expect_eq(rr.graph.m(), 98, "result |E|");
  IndependenceResult rr_ind = independence(rr.graph, Model::Generic3d, opt);
  c.attach(rr_ind.certificate);
  c.expect(rr_ind.independent, "result independent");
  c.expect(nucleation_free(rr.graph, Model::Generic3d, opt), "result nucleation-free");
  for (const auto& h : ring_hinges(links, hinges, r.graph))
    c.expect(is_implied(rr.graph, h, Model::Generic3d, opt), "hinge implied " + h.u + "-" + h.v);
  return {"henneberg2-ring-octahedra", c.pass, c.log.str(), c.data, 0};
}

// 7. Double-butterfly split-and-glue over R7: exact rational full-row-rank
//    witness at the hinged framework, independence, nucleation-freeness, an
//    implied nonedge, and rank exactly 72.
inline CheckResult check_double_butterfly_sg(std::uint64_t seed) {
  Checker c;
  RankOptions opt{derive_seed(seed, "c7", 0), 2};
  accept_detail::DdbInstance inst = accept_detail::build_ddb(seed);
  c.expect_eq(inst.graph.m(), 72, "|E| = |E(R7)| + 16");
  Mat<mpq_class> m = rigidity_matrix(inst.framework);
  c.expect_eq(rank_rational(m), 72, "exact rational rank at hinged framework");
  RankCertificate rc = generic_rank(inst.graph, Model::Generic3d, opt);
  c.expect_eq(rc.rank, 72, "generic rank");
  c.attach(rc);
  c.data["exact_rational_rank_at_hinged_framework"] = 72;
  c.expect(nucleation_free(inst.graph, Model::Generic3d, opt), "nucleation-free");
  c.expect(is_implied(inst.graph, Pair("ear#u", "ear#v"), Model::Generic3d, opt), "(u,v) implied");
  return {"double-butterfly-sg", c.pass, c.log.str(), c.data, 0};
}

// 8. Stress identities at the hinged framework, on the graph augmented by one
//    implied ring hinge so the stress space is exactly one-dimensional.
inline CheckResult check_stress_identities(std::uint64_t seed) {
  Checker c;
  accept_detail::DdbInstance inst = accept_detail::build_ddb(seed);
  Pair extra = inst.other_hinges[2];
  Framework fw = inst.framework;
  fw.graph = with_pairs(inst.graph, {extra});
  std::vector<Stress> basis = stress_basis(fw);
  c.expect_eq(basis.size(), std::size_t{1}, "stress space dimension");
  if (basis.size() == 1) {
    const Stress& s = basis[0];
    bool nonzero = false;
    for (const auto& q : s.per_edge)
      if (q != 0) nonzero = true;
    c.expect(nonzero, "stress nonzero");
    Label a1 = inst.spec.a1(), a2 = inst.spec.a2(), b1 = inst.spec.b1();
    mpq_class s_ca1 = s.on(fw, Pair("ear#c", a1));
    mpq_class s_cv = s.on(fw, Pair("ear#c", "ear#v"));
    mpq_class s_cb1 = s.on(fw, Pair("ear#c", b1));
    mpq_class s_cu = s.on(fw, Pair("ear#c", "ear#u"));
    c.expect(s_ca1 == s_cv, "s_ca1 = s_cv");
    c.expect(s_cb1 == s_cu, "s_cb1 = s_cu");
    c.expect(s_ca1 == -s_cb1, "s_ca1 = -s_cb1");
    // aggregated balance over the ear edges at a1 and a2
    std::vector<mpq_class> tot(3, 0);
    std::vector<std::pair<Label, Label>> ear_edges_at_a = {
        {a1, "ear#u"}, {a1, "ear#v"}, {a1, "ear#c"}, {a2, "ear#u"}, {a2, "ear#v"}, {a2, "ear#cp"}};
    for (const auto& [x, y] : ear_edges_at_a) {
      mpq_class sv = s.on(fw, Pair(x, y));
      for (int ax = 0; ax < 3; ++ax) tot[ax] += sv * (fw.coords.at(x)[ax] - fw.coords.at(y)[ax]);
    }
    c.expect(tot[0] == 0 && tot[1] == 0 && tot[2] == 0, "aggregate balance at a1/a2");
  }
  c.attach_exact("exact_rational_stress_basis");
  return {"stress-identities", c.pass, c.log.str(), c.data, 0};
}

// 9. Safe split-and-glue bookkeeping on two pipelines: the R7 trivial-split
//    instance and a four-cluster instance with a non-trivial split whose
//    dropped cluster contributes one edge cluster and whose key pairs share
//    a vertex. Checks the induced covers and the IE / rank identities.
inline CheckResult check_safe_sg(std::uint64_t seed) {
  Checker c;
  RankOptions opt{derive_seed(seed, "c9", 0), 2};
  Model model = Model::Generic3d;

  {  // R7 with a trivially split hinge, double-butterfly ear glued at one key pair
    CatalogEntry r7 = named_graph("ring_of_butterflies", {7, seed, "", ""});
    Pair h = r7.hinges.front();
    SafeBaseCertificate base = validate_safe_base(r7.graph, *r7.cover, h, model, opt);
    c.expect(base.valid(), "r7 safe base");
    SplitSpec spec = SplitSpec::trivial(r7.graph, h.u, h.v);
    Graph ear = double_butterfly_ear("E.");
    TwoThinCover ear_cover = TwoThinCover::of(
        {{"E.a1", "E.b1", "E.u", "E.v", "E.c"}, {"E.a2", "E.b2", "E.u", "E.v", "E.cp"}});
    SafeEarCertificate ecert = validate_safe_ear(ear, ear_cover, {"E.a1", "E.b1"}, model, opt);
    c.expect(ecert.valid(), "double-butterfly safe ear (2 gluing vertices)");
    c.expect_eq(ecert.key_pairs.size(), std::size_t{1}, "one ear key pair");
    SafeSplitResult split = safe_nonedge_split(r7.graph, *r7.cover, spec);
    c.expect_eq(split.key_pairs.size(), std::size_t{1}, "one base key pair");
    SafeGlueResult glued = safe_split_and_glue(
        base, spec, ecert, {{{spec.a1(), spec.b1()}, {"E.a1", "E.b1"}}}, model, opt);
    c.expect(glued.split_cover_independent, "split cover independent");
    c.expect(glued.induced_cover_independent, "induced cover independent");
    long long iep_s = ie_prime(split.graph, split.cover, {spec.a1(), spec.a2(), spec.b1(), spec.b2()},
                               model, opt)
                          .value;
    long long iep_h = ecert.ie_prime;
    IeResult ie_glued = ie_count(glued.graph, glued.cover, model, opt);
    c.expect_eq(iep_s, 56LL, "IE'(G^s, X^s)");
    c.expect_eq(iep_h, 17LL, "IE'(H, X^H)");
    c.expect_eq(ie_glued.value, iep_s + iep_h - 1, "IE(G^s:H, X') = IE' + IE' - |F|");
    IndependenceResult ind = independence(glued.graph, model, opt);
    c.attach(ind.certificate);
    c.expect(ind.independent, "glued graph independent");
    if (ind.independent) c.expect_eq(static_cast<long long>(ind.certificate.rank), ie_glued.value, "rank = IE");
    for (const auto& kp : glued.identified_key_pairs)
      c.expect(is_implied(glued.graph, kp, model, opt), "key pair implied");
  }

  {  // four-cluster instance: pendant vertex w off a hinge endpoint; clusters
     // are one link, two links, four links, and the triangle-shaped {a,w,apex}
    CatalogEntry r7 = named_graph("ring_of_butterflies", {7, seed, "", ""});
    Pair h = r7.hinges[1];  // hinge between links 0 and 1
    Label a = h.u, b = h.v, apex = "L00_c", w = "w";
    std::vector<Label> vs = r7.graph.vertices();
    vs.push_back(w);
    std::vector<std::pair<Label, Label>> es;
    for (const auto& e : r7.graph.edges()) es.emplace_back(e.u, e.v);
    es.emplace_back(a, w);
    Graph g = Graph::build(vs, es);

    // link vertex sets, located by each link's apex label
    std::vector<std::vector<Label>> lsets = r7.cover->clusters;
    auto set_of = [&](std::initializer_list<int> ids) {
      std::set<Label> s;
      for (int i : ids) {
        // clusters are sorted lexicographically; link i's set is the one
        // containing the apex label of link i
        Label ap = cat::link_prefix(i) + "c";
        for (const auto& cl : lsets)
          if (std::binary_search(cl.begin(), cl.end(), ap))
            for (const auto& v : cl) s.insert(v);
      }
      return std::vector<Label>(s.begin(), s.end());
    };
    TwoThinCover x = TwoThinCover::of(
        {set_of({0}), set_of({1, 2}), set_of({3, 4, 5, 6}), {a, w, apex}});
    SafeBaseCertificate base = validate_safe_base(g, x, Pair(a, b), model, opt);
    c.expect(base.independent, "pipeline base independent");
    c.expect(base.cover_independent, "pipeline cover independent");
    c.expect_eq(base.ie, 57LL, "pipeline IE");
    c.expect(base.rank_eq_ie, "pipeline rank = IE");
    c.expect(base.valid(), "pipeline safe base");

    // non-trivial split: a's link-0 neighbors stay with a1, the rest (and w)
    // move to a2; b keeps everything on b1
    SplitSpec spec;
    spec.a = a;
    spec.b = b;
    std::vector<Label> link0 = set_of({0});
    for (const auto& nb : g.neighbors(a)) {
      if (nb == w) {
        spec.a2_nbrs.push_back(nb);
        continue;
      }
      bool in_l0 = std::binary_search(link0.begin(), link0.end(), nb);
      (in_l0 ? spec.a1_nbrs : spec.a2_nbrs).push_back(nb);
    }
    spec.b1_nbrs = g.neighbors(b);
    SafeSplitResult split = safe_nonedge_split(g, x, spec);
    c.expect_eq(split.key_pairs.size(), std::size_t{2}, "two key pairs");
    std::set<Pair> kp(split.key_pairs.begin(), split.key_pairs.end());
    c.expect(kp.count(Pair(spec.a1(), spec.b1())) == 1, "key pair (a1,b1)");
    c.expect(kp.count(Pair(spec.a2(), spec.b1())) == 1, "key pair (a2,b1)");
    bool has_edge_cluster = false;
    for (const auto& cl : split.cover.clusters)
      if (cl.size() == 2 && cl == std::vector<Label>{std::min(spec.a2(), w), std::max(spec.a2(), w)})
        has_edge_cluster = true;
    c.expect(has_edge_cluster, "dropped cluster leaves the single edge cluster {a2,w}");

    // the ear: two K5-minus-two-incident-edges sharing the nonedge (b',z)
    auto k5_minus_incident = [&](const std::string& p, const std::string& hub) {
      Graph k5 = cat::complete({p + "a", "Z.b", "Z.z", p + "s", p + "c"});
      (void)hub;
      return cat::drop_pairs(k5, {Pair(p + "a", "Z.b"), Pair("Z.b", "Z.z")});
    };
    Graph e1 = k5_minus_incident("E1.", "");
    Graph e2 = k5_minus_incident("E2.", "");
    // union over the shared pair {Z.b, Z.z}
    std::set<Label> evs(e1.vertices().begin(), e1.vertices().end());
    for (const auto& v : e2.vertices()) evs.insert(v);
    std::vector<std::pair<Label, Label>> ees;
    for (const auto& e : e1.edges()) ees.emplace_back(e.u, e.v);
    for (const auto& e : e2.edges()) ees.emplace_back(e.u, e.v);
    Graph ear = Graph::build(std::vector<Label>(evs.begin(), evs.end()), ees);
    c.expect_eq(ear.m(), 16, "ear |E|");
    TwoThinCover ear_cover = TwoThinCover::of({{"E1.a", "Z.b", "Z.z", "E1.s", "E1.c"},
                                               {"E2.a", "Z.b", "Z.z", "E2.s", "E2.c"}});
    SafeEarCertificate ecert = validate_safe_ear(ear, ear_cover, {"E1.a", "E2.a", "Z.b"}, model, opt);
    c.expect(ecert.cond_cluster_gluing, "ear condition (i)");
    c.expect(ecert.cond_shared_independent, "ear condition (ii)");
    c.expect_eq(ecert.ie_prime, 17LL, "ear IE'");
    c.expect_eq(ecert.rank, 16, "ear rank");
    c.expect(ecert.valid(), "ear condition (iii) and validity");

    SafeGlueResult glued = safe_split_and_glue(base, spec, ecert,
                                               {{{spec.a1(), spec.b1()}, {"E1.a", "Z.b"}},
                                                {{spec.a2(), spec.b1()}, {"E2.a", "Z.b"}}},
                                               model, opt);
    c.expect(glued.split_cover_independent, "pipeline split cover independent");
    c.expect(glued.induced_cover_independent, "pipeline induced cover independent");
    long long iep_s =
        ie_prime(split.graph, split.cover, {spec.a1(), spec.a2(), spec.b1(), spec.b2()}, model, opt).value;
    IeResult ie_glued = ie_count(glued.graph, glued.cover, model, opt);
    c.expect_eq(iep_s, 58LL, "pipeline IE'(G^s,X^s)");
    c.expect_eq(ie_glued.value, iep_s + ecert.ie_prime - 2, "pipeline IE identity, |F| = 2");
    IndependenceResult ind = independence(glued.graph, model, opt);
    c.data["pipeline_independent"] = ind.independent;
    if (ind.independent)
      c.expect_eq(static_cast<long long>(ind.certificate.rank), ie_glued.value, "pipeline rank = IE");
    for (const auto& kpair : glued.identified_key_pairs)
      c.expect(is_implied(glued.graph, kpair, model, opt), "pipeline key pair implied");
  }
  return {"safe-split-and-glue", c.pass, c.log.str(), c.data, 0};
}

// 10. Dependent unions: the double banana is a circuit with (a,b) implied;
//     two R7's sharing a hinge are dependent and nucleation-free.
inline CheckResult check_dependent_unions(Model model, std::uint64_t seed) {
  Checker c;
  RankOptions opt{derive_seed(seed, "c10", 0), 2};
  CatalogEntry db = named_graph("double_banana", {0, seed, "", ""});
  c.expect_eq(db.graph.m(), 18, "double banana |E|");
  RankCertificate db_rc = generic_rank(db.graph, model, opt);
  c.expect_eq(db_rc.rank, 17, "double banana rank");
  c.attach(db_rc);
  c.expect(is_circuit(db.graph, model, opt), "double banana circuit");
  c.expect(is_implied(db.graph, Pair("a", "b"), model, opt), "(a,b) implied");

  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, seed, "", ""});
  Pair h = r7.hinges.front();
  Graph other = accept_detail::relabel(r7.graph, "B.");
  // second ring rewired so that its first hinge carries the same labels
  Graph g2 = [&] {
    std::map<Label, Label> m;
    m["B." + h.u] = h.u;
    m["B." + h.v] = h.v;
    std::vector<Label> vs;
    for (const auto& v : other.vertices()) vs.push_back(m.count(v) ? m[v] : v);
    std::vector<std::pair<Label, Label>> es;
    for (const auto& e : other.edges())
      es.emplace_back(m.count(e.u) ? m[e.u] : e.u, m.count(e.v) ? m[e.v] : e.v);
    return Graph::build(vs, es);
  }();
  Constructed uni = hinge_union(r7.graph, g2, h);
  c.expect_eq(uni.graph.m(), 112, "two rings |E|");
  c.expect(generic_rank(uni.graph, model, opt).rank < 112, "two rings dependent");
  c.expect(nucleation_free(uni.graph, model, opt), "two rings nucleation-free");
  return {"dependent-unions", c.pass, c.log.str(), c.data, 0};
}

// 11. Safe-ear conditions for the double-butterfly with its two-cluster cover
//     and all four gluing vertices.
inline CheckResult check_safe_ear(std::uint64_t seed) {
  Checker c;
  RankOptions opt{derive_seed(seed, "c11", 0), 2};
  CatalogEntry ddb = named_graph("double_butterfly", {0, seed, "", ""});
  c.attach(independence(ddb.graph, Model::Generic3d, opt).certificate);
  SafeEarCertificate cert =
      validate_safe_ear(ddb.graph, *ddb.cover, {"a1", "a2", "b1", "b2"}, Model::Generic3d, opt);
  c.expect(cert.cond_cluster_gluing, "condition (i)");
  c.expect(cert.cond_shared_independent, "condition (ii)");
  c.expect_eq(cert.rank, 16, "rank(H) = 16");
  c.expect_eq(cert.ie_prime, 17LL, "IE' = 17");
  c.expect(cert.cond_rank, "condition (iii): rank = IE' - 1");
  c.expect(cert.valid(), "all conditions");
  std::set<Pair> keys(cert.key_pairs.begin(), cert.key_pairs.end());
  c.expect(keys.count(Pair("a1", "b1")) == 1 && keys.count(Pair("a2", "b2")) == 1, "key pairs");
  return {"safe-ear-double-butterfly", c.pass, c.log.str(), c.data, 0};
}

// 12. Seed graphs: quoted icosahedral link counts are asserted; per-entry
//     verdicts (independence, cover independence, rank = IE) are recorded as
//     data, with the modified octahedral discrepancy noted rather than failed.
inline CheckResult check_seed_graphs(std::uint64_t seed) {
  Checker c;
  RankOptions opt{derive_seed(seed, "c12", 0), 2};
  Model model = Model::Generic3d;

  Graph ico = cat::icosahedron("");
  Graph one = cat::drop_pairs(ico, {Pair("v01", "v02")});
  Graph three = cat::drop_pairs(ico, {Pair("v01", "v02"), Pair("v03", "v04"), Pair("v05", "v06")});
  c.expect_eq(one.m(), 29, "one-deleted link |E|");
  c.expect_eq(flex_dim(one, model, opt), 1, "one-deleted link flex_dim");
  c.expect_eq(three.m(), 27, "three-deleted link |E|");
  c.expect_eq(flex_dim(three, model, opt), 3, "three-deleted link flex_dim");

  for (const std::string name : {"modified_octahedral_ring", "modified_icosahedral_ring",
                                 "two_icosahedral_sharing_rings", "four_icosahedral_sharing_rings"}) {
    CatalogEntry e = named_graph(name, {0, seed, "", ""});
    RankOptions eo{derive_seed(seed, "c12-" + name, 0), 2};
    IndependenceResult ind = independence(e.graph, model, eo);
    bool cov_ind = cover_independent(e.graph, *e.cover, model, eo).independent;
    IeResult ie = ie_count(e.graph, *e.cover, model, eo);
    bool rank_eq = ie.value == ind.certificate.rank;
    if (name == "four_icosahedral_sharing_rings") c.attach(ind.certificate);
    c.data[name] = json{{"V", e.graph.n()},
                        {"E", e.graph.m()},
                        {"rank", ind.certificate.rank},
                        {"independent", ind.independent},
                        {"cover_independent", cov_ind},
                        {"ie", ie.value},
                        {"rank_eq_ie", rank_eq}};
    c.expect(ind.independent, name + " independent");
    c.expect(cov_ind, name + " cover independent");
    if (name == "modified_octahedral_ring") {
      // recorded as data: the link cover over-counts (IE = 11m vs |E| = 10m)
      c.expect_eq(ie.value, 77LL, name + " IE value recorded");
      c.expect(!rank_eq, name + " expected discrepancy rank != IE");
    } else {
      c.expect(rank_eq, name + " rank = IE");
    }
  }
  return {"seed-graphs", c.pass, c.log.str(), c.data, 0};
}

// 13. Tay chain frameworks: all self-stresses of the collapsed chain vanish
//     on the end edge; on the symmetric chain the two end-edge stresses
//     cancel, across five positions of the movable hinge vertex.
inline CheckResult check_tay_chains(std::uint64_t seed) {
  Checker c;
  {
    TayChain tc = tay_chain("collapsed", 3, seed);
    std::vector<Stress> basis = stress_basis(tc.framework);
    c.expect(!basis.empty(), "collapsed chain carries self-stresses");
    for (const auto& s : basis) {
      c.expect(s.on(tc.framework, tc.pq) == 0, "collapsed s_pq = 0");
      c.expect(s.on(tc.framework, tc.rs) == 0, "collapsed s_rs = 0");
    }
    c.data["collapsed_stress_dim"] = basis.size();
    c.attach_exact("exact_rational_stress_basis");
  }
  int positions = 0;
  for (const std::string t : {"2", "3", "1/2", "5/3", "7/2"}) {
    TayChain tc = tay_chain("symmetric", 4, seed, t);
    std::vector<Stress> basis = stress_basis(tc.framework);
    c.expect(!basis.empty(), "symmetric chain t=" + t + " carries self-stresses");
    for (const auto& s : basis)
      c.expect(s.on(tc.framework, tc.pq) + s.on(tc.framework, tc.rs) == 0,
               "symmetric cancellation t=" + t);
    ++positions;
  }
  c.expect_eq(positions, 5, "sampled positions");
  return {"tay-chain-stresses", c.pass, c.log.str(), c.data, 0};
}

// 14. Model-independence: K_n ranks and the K5 circuit in both models, and
//     criteria 1, 2, 10 re-run under the cofactor model.
inline CheckResult check_cofactor_model(std::uint64_t seed) {
  Checker c;
  for (Model model : {Model::Generic3d, Model::Cofactor}) {
    for (int n = 3; n <= 8; ++n) {
      std::vector<Label> vs;
      for (int i = 0; i < n; ++i) vs.push_back("k" + std::to_string(i));
      Graph kn = cat::complete(vs);
      RankOptions opt{derive_seed(seed, "c14-kn", n * 2 + (model == Model::Cofactor)), 2};
      RankCertificate kn_rc = generic_rank(kn, model, opt);
      c.expect_eq(kn_rc.rank, 3 * n - 6,
                  std::string(model_name(model)) + " rank K" + std::to_string(n));
      if (n == 5) c.expect(is_circuit(kn, model, opt), std::string(model_name(model)) + " K5 circuit");
      if (n == 8 && model == Model::Cofactor) c.attach(kn_rc);
    }
  }
  CheckResult r1 = check_rings_of_butterflies(Model::Cofactor, derive_seed(seed, "c14-r1", 0));
  c.expect(r1.pass, "butterfly rings under cofactor: " + r1.detail);
  CheckResult r2 = check_rank_sandwich(Model::Cofactor, derive_seed(seed, "c14-r2", 0));
  c.expect(r2.pass, "rank-sandwich under cofactor: " + r2.detail);
  CheckResult r10 = check_dependent_unions(Model::Cofactor, derive_seed(seed, "c14-r10", 0));
  c.expect(r10.pass, "dependent unions under cofactor: " + r10.detail);
  return {"cofactor-model", c.pass, c.log.str(), c.data, 0};
}

inline std::vector<CheckResult> run_acceptance(std::uint64_t seed, const std::string& filter = "") {
  std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
      {"01-rings-of-butterflies", [&] { return check_rings_of_butterflies(Model::Generic3d, seed); }},
      {"02-rank-sandwich-r7", [&] { return check_rank_sandwich(Model::Generic3d, seed); }},
      {"03-flex-sign-triples", [&] { return check_flex_sign(seed); }},
      {"04-ring-of-k4", [&] { return check_ring_of_k4(seed); }},
      {"05-standard-constructions", [&] { return check_standard_constructions(seed); }},
      {"06-henneberg2-ring-octahedra", [&] { return check_henneberg2_ring(seed); }},
      {"07-double-butterfly-sg", [&] { return check_double_butterfly_sg(seed); }},
      {"08-stress-identities", [&] { return check_stress_identities(seed); }},
      {"09-safe-split-and-glue", [&] { return check_safe_sg(seed); }},
      {"10-dependent-unions", [&] { return check_dependent_unions(Model::Generic3d, seed); }},
      {"11-safe-ear-double-butterfly", [&] { return check_safe_ear(seed); }},
      {"12-seed-graphs", [&] { return check_seed_graphs(seed); }},
      {"13-tay-chain-stresses", [&] { return check_tay_chains(seed); }},
      {"14-cofactor-model", [&] { return check_cofactor_model(seed); }},
  };
  std::vector<CheckResult> out;
  for (auto& [name, fn] : checks) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r = fn();
    auto t1 = std::chrono::steady_clock::now();
    r.name = name;
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rigidity
