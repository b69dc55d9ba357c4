#include <catch2/catch_amalgamated.hpp>

#include "rigidity/catalog.hpp"
#include "rigidity/io.hpp"

using namespace rigidity;

TEST_CASE("catalog graph entries") {
  CatalogEntry bf = named_graph("butterfly");
  CHECK(bf.graph.n() == 5);
  CHECK(bf.graph.m() == 8);
  CHECK(bf.hinges.size() == 2);

  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 1, "", ""});
  CHECK(r7.graph.n() == 21);
  CHECK(r7.graph.m() == 56);
  CHECK(r7.hinges.size() == 7);
  CHECK(r7.cover->clusters.size() == 7);

  CatalogEntry db = named_graph("double_banana");
  CHECK(db.graph.n() == 8);
  CHECK(db.graph.m() == 18);

  RankOptions opt{90, 2};
  CatalogEntry oct = named_graph("octahedron");
  CHECK(oct.graph.n() == 6);
  CHECK(oct.graph.m() == 12);
  CHECK(generic_rank(oct.graph, Model::Generic3d, opt).rank == 12);

  CatalogEntry ico = named_graph("icosahedron");
  CHECK(ico.graph.n() == 12);
  CHECK(ico.graph.m() == 30);
  CHECK(generic_rank(ico.graph, Model::Generic3d, opt).rank == 30);
  // every vertex of the icosahedron has five neighbors
  for (const auto& v : ico.graph.vertices()) CHECK(ico.graph.degree(v) == 5);
  // the annotated dashed pairs are nonedges, the double-dashed ones edges
  for (const auto& d : ico.metadata.at("dashed"))
    CHECK_FALSE(ico.graph.has_edge(d.at(0).get<Label>(), d.at(1).get<Label>()));
  for (const auto& d : ico.metadata.at("double_dashed"))
    CHECK(ico.graph.has_edge(d.at(0).get<Label>(), d.at(1).get<Label>()));

  CatalogEntry tir = named_graph("two_icosahedral_sharing_rings", {0, 1, "", ""});
  CHECK(tir.graph.n() == 118);
  CHECK(tir.graph.m() == 347);
  CHECK(validate_two_thin(tir.graph, *tir.cover).valid);

  CatalogEntry fir = named_graph("four_icosahedral_sharing_rings", {0, 1, "", ""});
  CHECK(fir.graph.n() == 104);
  CHECK(fir.graph.m() == 304);
  CHECK(validate_two_thin(fir.graph, *fir.cover).valid);

  CHECK_THROWS_AS(named_graph("modified_octahedral_ring", {5, 1, "", ""}), Error);
  CHECK_THROWS_AS(named_graph("ring_of_butterflies", {2, 1, "", ""}), Error);
  CHECK_THROWS_AS(named_graph("no_such_entry"), Error);
}

TEST_CASE("entries regenerate bit-identically") {
  for (const auto& name : catalog_graph_names()) {
    CatalogParams p{0, 7, "", ""};
    json a = entry_to_json(named_graph(name, p));
    json b = entry_to_json(named_graph(name, p));
    CHECK(a.dump() == b.dump());
  }
  json fa = framework_to_json(named_framework("butterfly_framework", {0, 7, "pseudo", ""}));
  json fb = framework_to_json(named_framework("butterfly_framework", {0, 7, "pseudo", ""}));
  CHECK(fa.dump() == fb.dump());
}

TEST_CASE("butterfly frameworks verify their sign class before returning") {
  Framework conv = butterfly_framework("convex", 5);
  CHECK(classify_triple(conv, Pair("a1", "b1"), Pair("u", "v")) == TripleSign::Negative);
  Framework cross = butterfly_framework("crossing", 5);
  CHECK(classify_triple(cross, Pair("a1", "b1"), Pair("u", "v")) == TripleSign::Negative);
  Framework pseudo = butterfly_framework("pseudo", 5);
  CHECK(classify_triple(pseudo, Pair("a1", "b1"), Pair("u", "v")) == TripleSign::Positive);
  CHECK_THROWS_AS(butterfly_framework("nope", 5), Error);
}

TEST_CASE("hinged double-butterfly framework geometry") {
  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 9, "", ""});
  Pair h = r7.hinges.front();
  SplitSpec spec = SplitSpec::trivial(r7.graph, h.u, h.v);
  Constructed sg = double_butterfly_sg(r7.graph, spec);
  Framework fw = hinged_double_butterfly_framework(sg.graph, spec, 9);
  fw.validate();
  CHECK(fw.coords.at(spec.a1()) == fw.coords.at(spec.a2()));
  CHECK(fw.coords.at(spec.b1()) == fw.coords.at(spec.b2()));
  // the two crossing segments meet at the square center
  auto mid = [&](const Label& x, const Label& y, int ax) -> mpq_class {
    return (fw.coords.at(x)[ax] + fw.coords.at(y)[ax]) / 2;
  };
  for (int ax = 0; ax < 3; ++ax) CHECK(mid(spec.a1(), "ear#v", ax) == mid(spec.b1(), "ear#u", ax));
  // c and c' sit over that center at opposite heights
  CHECK(fw.coords.at("ear#c")[0] == mpq_class(1, 2));
  CHECK(fw.coords.at("ear#c")[2] == -fw.coords.at("ear#cp")[2]);
}

TEST_CASE("tay chains") {
  TayChain col = tay_chain("collapsed", 3, 9);
  col.framework.validate();
  // all neighbors of each end pair sit at one point
  const Graph& g = col.framework.graph;
  std::set<Label> nb;
  for (const auto& w : g.neighbors(col.pq.u)) nb.insert(w);
  for (const auto& w : g.neighbors(col.pq.v)) nb.insert(w);
  nb.erase(col.pq.u);
  nb.erase(col.pq.v);
  std::vector<mpq_class> at;
  for (const auto& w : nb) {
    if (at.empty()) at = col.framework.coords.at(w);
    CHECK(col.framework.coords.at(w) == at);
  }

  TayChain sym = tay_chain("symmetric", 4, 9, "5/3");
  sym.framework.validate();
  CHECK(sym.framework.coords.at(sym.axis.u)[2] == mpq_class(5, 3));
  CHECK_THROWS_AS(tay_chain("symmetric", 3, 9), Error);  // symmetric needs an even link count
  CHECK_THROWS_AS(tay_chain("weird", 4, 9), Error);
}

TEST_CASE("named_framework dispatch") {
  Framework fw = named_framework("tay_chain_framework", {4, 3, "symmetric", "2"});
  fw.validate();
  Framework hdb = named_framework("hinged_double_butterfly", {7, 3, "", ""});
  hdb.validate();
  CHECK(hdb.graph.m() == 72);
  CHECK_THROWS_AS(named_framework("nope"), Error);
}
