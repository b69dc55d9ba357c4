#include <catch2/catch_amalgamated.hpp>

#include "rigidity/catalog.hpp"
#include "rigidity/io.hpp"

using namespace rigidity;

TEST_CASE("graph JSON round trip is canonical and preserves labels verbatim") {
  Graph g = Graph::build({"b 2", "Alpha", "a#1", "z"}, {{"z", "Alpha"}, {"a#1", "b 2"}});
  json j = graph_to_json(g);
  Graph back = graph_from_json(j);
  CHECK(back == g);
  CHECK(j.dump() == graph_to_json(back).dump());

  // vertices sorted, edges sorted with sorted endpoints
  CHECK(j.at("vertices").front().get<std::string>() == "Alpha");
  for (const auto& e : j.at("edges")) CHECK(e.at(0).get<std::string>() < e.at(1).get<std::string>());

  // entry JSON is accepted wherever a graph is expected
  CatalogEntry r7 = named_graph("ring_of_butterflies", {7, 2, "", ""});
  json entry = entry_to_json(r7);
  CHECK(graph_from_json(entry) == r7.graph);
}

TEST_CASE("framework JSON round trip keeps rationals exact") {
  Framework fw;
  fw.graph = Graph::build({"a", "b"}, {{"a", "b"}});
  fw.dim = 3;
  fw.coords["a"] = {mpq_class(1, 3), mpq_class(-7, 2), mpq_class(0)};
  fw.coords["b"] = {mpq_class(22), mpq_class(1, 1099511627776), mpq_class(-5)};
  json j = framework_to_json(fw);
  CHECK(j.at("coords").at("a").at(0).get<std::string>() == "1/3");
  Framework back = framework_from_json(j);
  CHECK(back.coords.at("a") == fw.coords.at("a"));
  CHECK(back.coords.at("b") == fw.coords.at("b"));
  CHECK(framework_to_json(back).dump() == j.dump());
}

TEST_CASE("cover JSON canonicalizes cluster order") {
  json j;
  j["clusters"] = json::array({json::array({"c", "b"}), json::array({"a", "b"})});
  TwoThinCover x = cover_from_json(j);
  CHECK(x.clusters.front() == std::vector<Label>{"a", "b"});
  CHECK(x.clusters.back() == std::vector<Label>{"b", "c"});
  CHECK(cover_to_json(x).dump() == cover_to_json(cover_from_json(cover_to_json(x))).dump());
}

TEST_CASE("certificates serialize their evidence") {
  RankOptions opt{3, 2};
  CatalogEntry r6 = named_graph("ring_of_butterflies", {6, 3, "", ""});
  RankCertificate exact = independence(r6.graph, Model::Generic3d, opt).certificate;
  json je = certificate_to_json(exact);
  CHECK(je.at("evidence").at("type") == "exact_witness");
  CHECK(je.at("rank").get<int>() == 48);
  CHECK(je.at("model") == "generic3d");

  CatalogEntry db = named_graph("double_banana", {0, 3, "", ""});
  RankCertificate prob = generic_rank(db.graph, Model::Generic3d, opt);
  json jp = certificate_to_json(prob);
  CHECK(jp.at("evidence").at("type") == "randomized");
  CHECK(jp.at("evidence").at("trials").get<int>() == 2);
  CHECK(jp.at("evidence").at("prime") == std::to_string(kPrime));
  // the recorded bound is an exact rational below 2^-40
  mpq_class eps = rat_parse(jp.at("evidence").at("error_bound").get<std::string>());
  CHECK(eps > 0);
  CHECK(eps < mpq_class(1, 1099511627776));
}

TEST_CASE("DOT export dashes the requested pairs") {
  CatalogEntry bf = named_graph("butterfly");
  std::string dot = to_dot(bf.graph, bf.hinges);
  CHECK(dot.find("\"a1\" -- \"b1\" [style=dashed];") != std::string::npos);
  CHECK(dot.find("\"a1\" -- \"u\";") != std::string::npos);
  CHECK(dot.rfind("graph G {", 0) == 0);
}
