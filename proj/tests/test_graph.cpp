#include <catch2/catch_amalgamated.hpp>

#include "rigidity/catalog.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/rng.hpp"

using namespace rigidity;

namespace {

// brute-force reference for k4_through: scan all 4-subsets
bool k4_through_ref(const Graph& g, const std::vector<Label>& s) {
  const auto& vs = g.vertices();
  int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::set<Label> t{vs[a], vs[b], vs[c], vs[d]};
          bool contains = true;
          for (const auto& x : s) contains = contains && t.count(x);
          if (!contains) continue;
          std::vector<Label> q(t.begin(), t.end());
          bool clique = true;
          for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = i + 1; j < q.size(); ++j)
              clique = clique && g.has_edge(q[i], q[j]);
          if (clique) return true;
        }
  return false;
}

Graph random_graph(Rng& rng, int n, int percent) {
  std::vector<Label> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<std::pair<Label, Label>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng.next() % 100) < percent) es.emplace_back(vs[i], vs[j]);
  return Graph::build(vs, es);
}

}  // namespace

TEST_CASE("graph build and validation errors") {
  Graph tri = Graph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(tri.n() == 3);
  CHECK(tri.m() == 3);

  Graph k5 = cat::complete({"1", "2", "3", "4", "5"});
  CHECK(k5.n() == 5);
  CHECK(k5.m() == 10);

  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind;
    }
    return std::string("no-error");
  };
  CHECK(kind_of([] { Graph::build({"a", "b"}, {{"a", "a"}}); }) == "loop-edge");
  CHECK(kind_of([] { Graph::build({"a", "a"}, {}); }) == "duplicate-label");
  CHECK(kind_of([] { Graph::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == "duplicate-edge");
  CHECK(kind_of([] { Graph::build({"a", "b"}, {{"a", "c"}}); }) == "dangling-endpoint");
}

TEST_CASE("induced subgraphs") {
  Graph k5 = cat::complete({"1", "2", "3", "4", "5"});
  Graph k4 = induced_subgraph(k5, {"1", "2", "3", "4"});
  CHECK(k4.m() == 6);

  Graph bf = cat::butterfly();
  Graph cyc = induced_subgraph(bf, {"a1", "b1", "u", "v"});
  CHECK(cyc.m() == 4);  // the 4-cycle a1-u-b1-v
  CHECK(cyc.has_edge("a1", "u"));
  CHECK(cyc.has_edge("a1", "v"));
  CHECK(cyc.has_edge("b1", "u"));
  CHECK(cyc.has_edge("b1", "v"));
  CHECK_FALSE(cyc.has_edge("a1", "b1"));
  CHECK_FALSE(cyc.has_edge("u", "v"));

  Graph empty = induced_subgraph(k5, {});
  CHECK(empty.n() == 0);
  CHECK_THROWS_AS(induced_subgraph(k5, {"zz"}), Error);

  // restriction property on random graphs
  Rng rng(7);
  for (int it = 0; it < 10; ++it) {
    Graph g = random_graph(rng, 8, 40);
    std::vector<Label> s;
    for (const auto& v : g.vertices())
      if (rng.next() & 1) s.push_back(v);
    Graph sub = induced_subgraph(g, s);
    for (const auto& e : sub.edges()) CHECK(g.has_edge(e.u, e.v));
    int expect = 0;
    std::set<Label> ss(s.begin(), s.end());
    for (const auto& e : g.edges())
      if (ss.count(e.u) && ss.count(e.v)) ++expect;
    CHECK(sub.m() == expect);
  }
}

TEST_CASE("nonedges partition the pair set") {
  Graph bf = cat::butterfly();
  auto ne = nonedges(bf);
  REQUIRE(ne.size() == 2);
  CHECK(ne[0] == Pair("a1", "b1"));
  CHECK(ne[1] == Pair("u", "v"));

  Graph k5 = cat::complete({"1", "2", "3", "4", "5"});
  CHECK(nonedges(k5).empty());
  Graph edgeless = Graph::build({"x", "y", "z"}, {});
  CHECK(nonedges(edgeless).size() == 3);

  Rng rng(11);
  for (int it = 0; it < 10; ++it) {
    Graph g = random_graph(rng, 9, 35);
    CHECK(static_cast<int>(nonedges(g).size()) + g.m() == g.n() * (g.n() - 1) / 2);
  }
}

TEST_CASE("identify_vertices") {
  Graph t1 = Graph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  Graph t2 = Graph::build({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  std::vector<Label> vs = t1.vertices();
  vs.insert(vs.end(), t2.vertices().begin(), t2.vertices().end());
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : t1.edges()) es.emplace_back(e.u, e.v);
  for (const auto& e : t2.edges()) es.emplace_back(e.u, e.v);
  Graph uni = Graph::build(vs, es);
  Graph bow = identify_vertices(uni, {{"a", "x"}, {"b"}, {"c"}, {"y"}, {"z"}});
  CHECK(bow.n() == 5);
  CHECK(bow.m() == 6);
  CHECK(bow.has_vertex("a"));  // representative is the lexicographic least

  // trivial partition is the identity
  std::vector<std::vector<Label>> singletons;
  for (const auto& v : uni.vertices()) singletons.push_back({v});
  CHECK(identify_vertices(uni, singletons) == uni);

  // loop detection
  CHECK_THROWS_AS(identify_vertices(t1, {{"a", "b"}, {"c"}}), Error);

  // never increases |V| + |E|
  Rng rng(13);
  for (int it = 0; it < 10; ++it) {
    Graph g = random_graph(rng, 8, 30);
    std::vector<std::vector<Label>> classes;
    std::map<int, std::vector<Label>> buckets;
    for (const auto& v : g.vertices()) buckets[static_cast<int>(rng.next() % 5)].push_back(v);
    for (auto& [k, b] : buckets) classes.push_back(b);
    try {
      Graph h = identify_vertices(g, classes);
      CHECK(h.n() + h.m() <= g.n() + g.m());
    } catch (const Error& e) {
      CHECK(e.kind == "identification-loop");
    }
  }
}

TEST_CASE("k4_through matches the exhaustive scan") {
  Graph k5 = cat::complete({"1", "2", "3", "4", "5"});
  CHECK(k4_through(k5, {"1", "2", "3"}));

  Graph bf = cat::butterfly();
  CHECK_FALSE(k4_through(bf, {"a1", "b1", "u"}));
  CHECK(k4_through(bf, {"a1", "u"}) == k4_through_ref(bf, {"a1", "u"}));

  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 1, "", ""});
  Pair h = r7.hinges.front();
  std::vector<Label> probe{h.u, h.v, r7.graph.neighbors(h.u).front()};
  CHECK_FALSE(k4_through(r7.graph, probe));

  CHECK_THROWS_AS(k4_through(k5, {"1", "2", "3", "4", "5"}), Error);

  Rng rng(17);
  for (int it = 0; it < 12; ++it) {
    Graph g = random_graph(rng, 7, 55);
    std::vector<Label> s;
    for (const auto& v : g.vertices())
      if (s.size() < 2 && (rng.next() & 1)) s.push_back(v);
    CHECK(k4_through(g, s) == k4_through_ref(g, s));
  }
}
