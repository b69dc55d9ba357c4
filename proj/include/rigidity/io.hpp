#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rigidity/catalog.hpp"
#include "rigidity/cover.hpp"
#include "rigidity/framework.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/oracle.hpp"

namespace rigidity {

// Canonical JSON: object keys are sorted by nlohmann::json's std::map
// backing, vertex and edge lists are emitted in the graph's sorted order, so
// equal values serialize byte-identically.

inline json graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertices();
  json es = json::array();
  for (const auto& e : g.edges()) es.push_back(json::array({e.u, e.v}));
  j["edges"] = es;
  return j;
}

inline Graph graph_from_json(const json& j) {
  const json& src = j.contains("graph") ? j.at("graph") : j;  // accept catalog entries too
  std::vector<Label> vs = src.at("vertices").get<std::vector<Label>>();
  std::vector<std::pair<Label, Label>> es;
  for (const auto& e : src.at("edges")) es.emplace_back(e.at(0).get<Label>(), e.at(1).get<Label>());
  return Graph::build(vs, es);
}

inline json framework_to_json(const Framework& fw) {
  json j;
  j["dim"] = fw.dim;
  j["graph"] = graph_to_json(fw.graph);
  json coords = json::object();
  for (const auto& [v, p] : fw.coords) {
    json arr = json::array();
    for (const auto& q : p) arr.push_back(rat_str(q));
    coords[v] = arr;
  }
  j["coords"] = coords;
  return j;
}

inline Framework framework_from_json(const json& j) {
  Framework fw;
  fw.dim = j.at("dim").get<int>();
  fw.graph = graph_from_json(j.at("graph"));
  for (const auto& [v, arr] : j.at("coords").items()) {
    std::vector<mpq_class> p;
    for (const auto& s : arr) p.push_back(rat_parse(s.get<std::string>()));
    fw.coords[v] = std::move(p);
  }
  fw.validate();
  return fw;
}

inline json cover_to_json(const TwoThinCover& x) {
  json j;
  j["clusters"] = x.clusters;
  return j;
}

inline TwoThinCover cover_from_json(const json& j) {
  const json& src = j.contains("cover") ? j.at("cover") : j;
  return TwoThinCover::of(src.at("clusters").get<std::vector<std::vector<Label>>>());
}

inline std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline json certificate_to_json(const RankCertificate& c) {
  json j;
  j["graph_hash"] = hash_hex(c.graph_hash);
  j["model"] = model_name(c.model);
  j["rank"] = c.rank;
  json ev;
  if (c.exact_witness) {
    ev["type"] = "exact_witness";
    ev["prime"] = std::to_string(c.prime);
    ev["seed"] = c.seed;
    json coords = json::object();
    for (const auto& [v, p] : c.witness) {
      json arr = json::array();
      for (const auto& q : p) arr.push_back(rat_str(q));
      coords[v] = arr;
    }
    ev["witness_coords"] = coords;
  } else {
    ev["type"] = "randomized";
    ev["prime"] = std::to_string(c.prime);
    ev["seed"] = c.seed;
    ev["trials"] = c.trials;
    ev["error_bound"] = rat_str(c.error_bound);
  }
  j["evidence"] = ev;
  return j;
}

inline json entry_to_json(const CatalogEntry& e) {
  json j;
  j["name"] = e.name;
  j["params"] = e.params;
  j["graph"] = graph_to_json(e.graph);
  if (e.cover) j["cover"] = cover_to_json(*e.cover);
  if (!e.hinges.empty()) {
    json hs = json::array();
    for (const auto& h : e.hinges) hs.push_back(json::array({h.u, h.v}));
    j["hinges"] = hs;
  }
  if (!e.metadata.is_null()) j["metadata"] = e.metadata;
  return j;
}

// DOT export; the listed pairs (hinges, implied nonedges) are drawn dashed.
inline std::string to_dot(const Graph& g, const std::vector<Pair>& dashed = {}) {
  std::set<Pair> dset(dashed.begin(), dashed.end());
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (const auto& e : g.edges()) out << "  \"" << e.u << "\" -- \"" << e.v << "\";\n";
  for (const auto& p : dset)
    if (!g.has_edge(p.u, p.v)) out << "  \"" << p.u << "\" -- \"" << p.v << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path);
  out << text;
}

}  // namespace rigidity
