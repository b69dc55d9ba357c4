#include <catch2/catch_amalgamated.hpp>

#include "rigidity/catalog.hpp"
#include "rigidity/cover.hpp"

using namespace rigidity;

namespace {

Graph random_graph(Rng& rng, int n, int percent) {
  std::vector<Label> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<std::pair<Label, Label>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng.next() % 100) < percent) es.emplace_back(vs[i], vs[j]);
  return Graph::build(vs, es);
}

// random cover attempt: a few random clusters plus one 2-cluster per
// uncovered edge; may fail validation, caller filters
TwoThinCover random_cover(Rng& rng, const Graph& g) {
  std::vector<std::vector<Label>> cs;
  int k = 1 + static_cast<int>(rng.next() % 3);
  for (int i = 0; i < k; ++i) {
    std::set<Label> c;
    while (c.size() < 3 + rng.next() % 3) c.insert(g.label(static_cast<int>(rng.next() % g.n())));
    cs.emplace_back(c.begin(), c.end());
  }
  for (const auto& e : g.edges()) {
    bool covered = false;
    for (const auto& c : cs)
      if (std::binary_search(c.begin(), c.end(), e.u) && std::binary_search(c.begin(), c.end(), e.v))
        covered = true;
    if (!covered) cs.push_back({e.u, e.v});
  }
  return TwoThinCover::of(cs);
}

}  // namespace

TEST_CASE("two-thin validation") {
  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 60, "", ""});
  CHECK(validate_two_thin(r7.graph, *r7.cover).valid);

  // two clusters sharing three vertices
  Graph g = cat::complete({"a", "b", "c", "d", "e"});
  TwoThinCover fat = TwoThinCover::of({{"a", "b", "c", "d"}, {"a", "b", "c", "e"}});
  CoverReport rep = validate_two_thin(g, fat);
  CHECK_FALSE(rep.valid);
  bool saw_thinness = false;
  for (const auto& v : rep.violations) saw_thinness = saw_thinness || v.condition == "thinness";
  CHECK(saw_thinness);

  // a cover missing one edge
  TwoThinCover missing = TwoThinCover::of({{"a", "b", "c"}, {"c", "d"}, {"d", "e"}, {"b", "d"}, {"c", "e"},
                                           {"a", "d"}, {"b", "e"}});
  CoverReport rep2 = validate_two_thin(g, missing);
  CHECK_FALSE(rep2.valid);
  bool saw_coverage = false;
  for (const auto& v : rep2.violations) saw_coverage = saw_coverage || v.condition == "coverage";
  CHECK(saw_coverage);

  CHECK_THROWS_AS(validate_two_thin(g, TwoThinCover::of({{"a", "nope"}})), Error);
}

TEST_CASE("shared sets") {
  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 61, "", ""});
  auto s = shared_set(*r7.cover);
  CHECK(s.size() == 7);
  std::set<Pair> hinge_set(r7.hinges.begin(), r7.hinges.end());
  for (const auto& p : s) CHECK(hinge_set.count(p) == 1);

  TwoThinCover disjoint = TwoThinCover::of({{"a", "b"}, {"c", "d"}});
  CHECK(shared_set(disjoint).empty());

  CatalogEntry ddb = named_graph("double_butterfly", {0, 61, "", ""});
  auto s2 = shared_set(*ddb.cover);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == Pair("u", "v"));
}

TEST_CASE("cover independence") {
  RankOptions opt{62, 2};
  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 62, "", ""});
  CHECK(cover_independent(r7.graph, *r7.cover, Model::Generic3d, opt).independent);

  // shared pairs forming a K5 make the cover dependent
  std::vector<Label> host{"p1", "p2", "p3", "p4", "p5"};
  std::vector<std::vector<Label>> cs;
  int aux = 0;
  for (std::size_t i = 0; i < host.size(); ++i)
    for (std::size_t j = i + 1; j < host.size(); ++j) {
      cs.push_back({host[i], host[j], "x" + std::to_string(aux)});
      cs.push_back({host[i], host[j], "y" + std::to_string(aux)});
      ++aux;
    }
  std::vector<Label> vs = host;
  for (int t = 0; t < aux; ++t) {
    vs.push_back("x" + std::to_string(t));
    vs.push_back("y" + std::to_string(t));
  }
  Graph edgeless = Graph::build(vs, {});
  TwoThinCover k5cover = TwoThinCover::of(cs);
  REQUIRE(validate_two_thin(edgeless, k5cover).valid);
  CHECK(shared_set(k5cover).size() == 10);
  CHECK_FALSE(cover_independent(edgeless, k5cover, Model::Generic3d, opt).independent);

  TwoThinCover empty_shared = TwoThinCover::of({{"p1", "p2"}, {"p3", "p4"}});
  CHECK(cover_independent(Graph::build({"p1", "p2", "p3", "p4"}, {}), empty_shared, Model::Generic3d, opt)
            .independent);
}

TEST_CASE("inclusion-exclusion counts") {
  RankOptions opt{63, 2};
  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 63, "", ""});
  IeResult ie = ie_count(r7.graph, *r7.cover, Model::Generic3d, opt);
  CHECK(ie.value == 56);
  CHECK(ie.deterministic);

  // single cluster covering everything: IE = rank(G)
  CatalogEntry db = named_graph("double_banana", {0, 63, "", ""});
  TwoThinCover whole = TwoThinCover::of({db.graph.vertices()});
  CHECK(ie_count(db.graph, whole, Model::Generic3d, opt).value == 17);

  CatalogEntry moct = named_graph("modified_octahedral_ring", {7, 63, "", ""});
  IeResult ie2 = ie_count(moct.graph, *moct.cover, Model::Generic3d, opt);
  CHECK(ie2.value == 77);  // 7*12 - 7, exceeding |E| = 70
  CHECK(moct.graph.m() == 70);
}

TEST_CASE("ie_prime") {
  RankOptions opt{64, 2};
  CatalogEntry ddb = named_graph("double_butterfly", {0, 64, "", ""});
  IeResult iep = ie_prime(ddb.graph, *ddb.cover, {"a1", "a2", "b1", "b2"}, Model::Generic3d, opt);
  CHECK(iep.value == 17);
  CHECK(generic_rank(ddb.graph, Model::Generic3d, opt).rank == 16);

  // no gluing vertices: equals ie_count
  IeResult plain = ie_count(ddb.graph, *ddb.cover, Model::Generic3d, opt);
  CHECK(ie_prime(ddb.graph, *ddb.cover, {}, Model::Generic3d, opt).value == plain.value);

  // a gluing pair already in the shared set changes nothing
  CHECK(ie_prime(ddb.graph, *ddb.cover, {"u", "v"}, Model::Generic3d, opt).value == plain.value);
}

TEST_CASE("rank-sandwich implication") {
  RankOptions opt{65, 2};
  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 65, "", ""});
  SandwichResult sw = rank_sandwich_implied(r7.graph, *r7.cover, r7.hinges[0], Model::Generic3d, opt);
  CHECK(sw.implied);
  CHECK(sw.deterministic);

  // hinge edges are not shared nonedges: precondition filter
  CatalogEntry rk4 = named_graph("ring_of_k4", {7, 65, "", ""});
  CHECK_THROWS_AS(rank_sandwich_implied(rk4.graph, *rk4.cover, rk4.hinges[0], Model::Generic3d, opt),
                  Error);

  // independent graph whose IE exceeds |E|: the sandwich does not close
  CatalogEntry moct = named_graph("modified_octahedral_ring", {7, 65, "", ""});
  SandwichResult sw2 = rank_sandwich_implied(moct.graph, *moct.cover, moct.hinges[0], Model::Generic3d, opt);
  CHECK(sw2.graph_independent.independent);
  CHECK_FALSE(sw2.implied);
}

TEST_CASE("rank is bounded by IE for independent covers") {
  // IE upper-bounds the rank, on 30 random valid independent cover instances
  Rng rng(66);
  int instances = 0;
  int attempts = 0;
  while (instances < 30 && attempts < 4000) {
    ++attempts;
    Graph g = random_graph(rng, 5 + static_cast<int>(rng.next() % 5), 45);
    if (g.m() == 0) continue;
    TwoThinCover x = random_cover(rng, g);
    if (!validate_two_thin(g, x).valid) continue;
    RankOptions opt{derive_seed(66, "ie-bound", instances), 2};
    if (!cover_independent(g, x, Model::Generic3d, opt).independent) continue;
    IeResult ie = ie_count(g, x, Model::Generic3d, opt);
    int rank = generic_rank(g, Model::Generic3d, opt).rank;
    CHECK(rank <= ie.value);
    CHECK(ie_prime(g, x, {}, Model::Generic3d, opt).value == ie.value);
    ++instances;
  }
  CHECK(instances == 30);
}

TEST_CASE("safe base and safe ear validation") {
  RankOptions opt{67, 2};
  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 67, "", ""});
  SafeBaseCertificate base = validate_safe_base(r7.graph, *r7.cover, r7.hinges[0], Model::Generic3d, opt);
  CHECK(base.valid());
  CHECK(base.ie == 56);
  CHECK(base.rank == 56);

  CatalogEntry ddb = named_graph("double_butterfly", {0, 67, "", ""});
  SafeEarCertificate ear =
      validate_safe_ear(ddb.graph, *ddb.cover, {"a1", "a2", "b1", "b2"}, Model::Generic3d, opt);
  CHECK(ear.valid());

  // a failing ear: five gluing vertices spread over three clusters force a
  // dependent shared-with-gluing graph (K5 on the gluing set)
  Graph h = Graph::build({"g1", "g2", "g3", "g4", "g5", "x", "y"},
                         {{"g1", "g2"}, {"g3", "x"}, {"g4", "x"}, {"g5", "y"}});
  TwoThinCover cov = TwoThinCover::of({{"g1", "g2", "y"}, {"g3", "g4", "x"}, {"g5", "y", "x"}});
  REQUIRE(validate_two_thin(h, cov).valid);
  SafeEarCertificate bad = validate_safe_ear(h, cov, {"g1", "g2", "g3", "g4", "g5"}, Model::Generic3d, opt);
  CHECK(bad.cond_cluster_gluing);          // (i) still holds: at most 2 per cluster
  CHECK_FALSE(bad.cond_shared_independent);  // (ii) fails: F contains a K5
  CHECK_FALSE(bad.valid());
}
