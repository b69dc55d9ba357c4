// Command-line workbench: catalog generation, rank/independence checks,
// cover calculus, construction scripts, framework analysis, DOT export, and
// the verification suite.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "rigidity/accept.hpp"
#include "rigidity/catalog.hpp"
#include "rigidity/construct.hpp"
#include "rigidity/cover.hpp"
#include "rigidity/io.hpp"
#include "rigidity/oracle.hpp"

using namespace rigidity;

namespace {

std::uint64_t resolve_seed(std::int64_t flag_seed) {
  if (flag_seed >= 0) return static_cast<std::uint64_t>(flag_seed);
  if (const char* env = std::getenv("RIGID_SEED")) return std::strtoull(env, nullptr, 10);
  return kDefaultSeed;
}

Model parse_model(const std::string& s) {
  if (s == "generic3" || s == "generic3d") return Model::Generic3d;
  if (s == "cofactor") return Model::Cofactor;
  throw Error("bad-model", s);
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

Pair pair_arg(const std::vector<std::string>& pr) {
  if (pr.size() != 2) throw Error("usage", "expected two vertex labels");
  return Pair(pr[0], pr[1]);
}

// ---------------------------------------------------------------------------
// Construction scripts: named inputs, an ordered list of {op, args} steps,
// and the set of graphs to write out.
// ---------------------------------------------------------------------------

struct ScriptRun {
  std::map<std::string, Graph> graphs;
  json log = json::array();

  const Graph& get(const json& args, const char* key) {
    std::string name = args.at(key).get<std::string>();
    auto it = graphs.find(name);
    if (it == graphs.end()) throw Error("unknown-input", name);
    return it->second;
  }

  static std::vector<std::pair<Label, Label>> label_pairs(const json& arr) {
    std::vector<std::pair<Label, Label>> out;
    for (const auto& e : arr) out.emplace_back(e.at(0).get<Label>(), e.at(1).get<Label>());
    return out;
  }

  static SplitSpec split_spec(const Graph& g, const json& args) {
    if (!args.contains("a1_nbrs"))
      return SplitSpec::trivial(g, args.at("a").get<Label>(), args.at("b").get<Label>());
    SplitSpec s;
    s.a = args.at("a").get<Label>();
    s.b = args.at("b").get<Label>();
    s.a1_nbrs = args.at("a1_nbrs").get<std::vector<Label>>();
    s.a2_nbrs = args.at("a2_nbrs").get<std::vector<Label>>();
    s.b1_nbrs = args.at("b1_nbrs").get<std::vector<Label>>();
    s.b2_nbrs = args.at("b2_nbrs").get<std::vector<Label>>();
    return s;
  }

  static void link_args(const json& args, ScriptRun& run, std::vector<Graph>& links,
                        std::vector<HingeSpec>& hinges) {
    for (const auto& n : args.at("links")) links.push_back(run.graphs.at(n.get<std::string>()));
    for (const auto& h : args.at("hinges")) {
      HingeSpec spec;
      spec.first = {h.at(0).at(0).get<Label>(), h.at(0).at(1).get<Label>()};
      spec.second = {h.at(1).at(0).get<Label>(), h.at(1).at(1).get<Label>()};
      hinges.push_back(spec);
    }
  }

  void step(const json& s, std::uint64_t seed) {
    std::string op = s.at("op").get<std::string>();
    std::string save = s.value("save", "out");
    Constructed made;
    if (op == "catalog") {
      CatalogParams p;
      p.m = s.value("m", 0);
      p.seed = seed;
      CatalogEntry e = named_graph(s.at("name").get<std::string>(), p);
      made = {e.graph, json{{"op", "catalog"}, {"name", e.name}, {"params", e.params}}};
    } else if (op == "build") {
      made = {graph_from_json(s), json{{"op", "build"}}};
    } else if (op == "henneberg1") {
      made = henneberg1(get(s, "graph"), s.at("base").get<std::vector<Label>>());
    } else if (op == "henneberg2") {
      made = henneberg2(get(s, "graph"), s.at("base").get<std::vector<Label>>(),
                        pair_arg(s.at("delete").get<std::vector<std::string>>()));
    } else if (op == "k_sum") {
      made = k_sum(get(s, "graph"), get(s, "other"), label_pairs(s.at("identify")));
    } else if (op == "k_vertex_split") {
      made = k_vertex_split(get(s, "graph"), s.at("vertex").get<Label>(),
                            s.at("kept").get<std::vector<Label>>(), s.at("k").get<int>());
    } else if (op == "nonedge_split") {
      made = nonedge_split(get(s, "graph"), split_spec(get(s, "graph"), s));
    } else if (op == "glue") {
      made = glue(get(s, "graph"), get(s, "other"), label_pairs(s.at("identify")));
    } else if (op == "split_and_glue") {
      made = split_and_glue(get(s, "graph"), split_spec(get(s, "graph"), s), get(s, "other"),
                            label_pairs(s.at("identify")));
    } else if (op == "double_butterfly_sg") {
      made = double_butterfly_sg(get(s, "graph"), split_spec(get(s, "graph"), s));
    } else if (op == "ring" || op == "chain" || op == "henneberg2_ring") {
      std::vector<Graph> links;
      std::vector<HingeSpec> hinges;
      link_args(s, *this, links, hinges);
      if (op == "ring")
        made = ring(links, hinges);
      else if (op == "henneberg2_ring")
        made = henneberg2_ring(links, hinges);
      else
        made = chain(links, hinges, pair_arg(s.at("end1").get<std::vector<std::string>>()),
                     pair_arg(s.at("end2").get<std::vector<std::string>>()));
    } else if (op == "hinge_union") {
      made = hinge_union(get(s, "graph"), get(s, "other"),
                         pair_arg(s.at("pair").get<std::vector<std::string>>()));
    } else {
      throw Error("unknown-op", op);
    }
    graphs[save] = made.graph;
    json entry = made.provenance;
    entry["save"] = save;
    log.push_back(entry);
  }
};

int run_construct(const std::string& script_path, const std::string& out_prefix, std::uint64_t seed) {
  json script = load_json_file(script_path);
  ScriptRun run;
  if (script.contains("inputs"))
    for (const auto& [name, val] : script.at("inputs").items())
      run.graphs[name] = val.contains("file") ? graph_from_json(load_json_file(val.at("file"))) : graph_from_json(val);
  std::string last = "out";
  for (const auto& s : script.at("steps")) {
    run.step(s, seed);
    last = s.value("save", "out");
  }
  std::vector<std::string> emit_names = script.value("emit", std::vector<std::string>{last});
  for (const auto& name : emit_names) {
    json g = graph_to_json(run.graphs.at(name));
    emit(g, out_prefix.empty() ? "" : out_prefix + name + ".graph.json");
  }
  json log{{"seed", seed}, {"steps", run.log}};
  if (!out_prefix.empty()) write_text_file(out_prefix + "log.json", log.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-dimensional rigidity matroid workbench"};
  app.require_subcommand(1);
  std::int64_t seed_flag = -1;
  app.add_option("--seed", seed_flag, "root seed (default: RIGID_SEED env or built-in)");

  std::string model_str = "generic3";
  int trials = 2;
  std::string out_path, in_path, cover_path, name, variant, t_param, filter, mode, dashed_arg;
  int m_param = 0;
  std::vector<std::string> pair_opt, pair1_opt, pair2_opt, gluing_opt;
  bool implied_flag = false, check_flag = false;

  auto* cat_cmd = app.add_subcommand("catalog", "named graphs and frameworks");
  auto* cat_list = cat_cmd->add_subcommand("list", "list entries");
  auto* cat_gen = cat_cmd->add_subcommand("gen", "generate an entry");
  cat_gen->add_option("name", name)->required();
  cat_gen->add_option("--m", m_param, "link count");
  cat_gen->add_option("--variant", variant, "framework variant");
  cat_gen->add_option("--t", t_param, "axis position (symmetric tay chain)");
  cat_gen->add_option("-o,--out", out_path);
  cat_gen->add_flag("--check", check_flag, "attach oracle verdicts to the entry");

  auto* rank_cmd = app.add_subcommand("rank", "generic rank with certificate");
  rank_cmd->add_option("graph", in_path)->required();
  rank_cmd->add_option("--model", model_str);
  rank_cmd->add_option("--trials", trials);
  rank_cmd->add_option("-o,--out", out_path);

  auto* check_cmd = app.add_subcommand("check", "boolean property checks");
  check_cmd->add_option("property", mode, "independent|rigid|circuit|nucleation-free")->required();
  check_cmd->add_option("graph", in_path)->required();
  check_cmd->add_option("--model", model_str);
  check_cmd->add_option("--trials", trials);

  auto* closure_cmd = app.add_subcommand("closure", "all pairs in the closure");
  closure_cmd->add_option("graph", in_path)->required();
  closure_cmd->add_option("--model", model_str);
  closure_cmd->add_option("--trials", trials);
  closure_cmd->add_option("-o,--out", out_path);

  auto* implied_cmd = app.add_subcommand("implied", "implied nonedges");
  implied_cmd->add_option("graph", in_path)->required();
  implied_cmd->add_option("--pair", pair_opt, "a single pair to test")->expected(2);
  implied_cmd->add_option("--model", model_str);
  implied_cmd->add_option("--trials", trials);

  auto* cover_cmd = app.add_subcommand("cover", "2-thin cover calculus");
  cover_cmd->add_option("mode", mode, "validate|ie|ieprime|sandwich|safe-base|safe-ear")->required();
  cover_cmd->add_option("graph", in_path)->required();
  cover_cmd->add_option("cover", cover_path)->required();
  cover_cmd->add_option("--pair", pair_opt, "nonedge for sandwich / safe-base")->expected(2);
  cover_cmd->add_option("--gluing", gluing_opt, "gluing vertices for ieprime / safe-ear");
  cover_cmd->add_option("--model", model_str);
  cover_cmd->add_option("--trials", trials);
  cover_cmd->add_option("-o,--out", out_path);

  auto* construct_cmd = app.add_subcommand("construct", "run a construction script");
  construct_cmd->add_option("script", in_path)->required();
  construct_cmd->add_option("-o,--out-prefix", out_path, "write <prefix><name>.graph.json and <prefix>log.json");

  auto* fw_cmd = app.add_subcommand("framework", "stress/flex analysis of a framework");
  fw_cmd->add_option("mode", mode, "stress|flex|triple")->required();
  fw_cmd->add_option("framework", in_path)->required();
  fw_cmd->add_option("--pair1", pair1_opt)->expected(2);
  fw_cmd->add_option("--pair2", pair2_opt)->expected(2);
  fw_cmd->add_option("-o,--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--filter", filter);
  verify_cmd->add_option("-o,--out", out_path, "write the verification report");

  auto* export_cmd = app.add_subcommand("export", "export formats");
  auto* export_dot = export_cmd->add_subcommand("dot", "GraphViz DOT");
  export_dot->add_option("graph", in_path)->required();
  export_dot->add_option("--dashed", dashed_arg, "semicolon-separated pairs u,v to draw dashed");
  export_dot->add_flag("--implied", implied_flag, "dash all implied nonedges (oracle)");
  export_dot->add_option("--model", model_str);
  export_dot->add_option("-o,--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    std::uint64_t seed = resolve_seed(seed_flag);
    Model model = parse_model(model_str);
    RankOptions opt{seed, trials};

    if (cat_list->parsed()) {
      json j;
      j["graphs"] = catalog_graph_names();
      j["frameworks"] = catalog_framework_names();
      emit(j, "");
      return 0;
    }
    if (cat_gen->parsed()) {
      CatalogParams p{m_param, seed, variant, t_param};
      json j;
      bool is_fw = false;
      for (const auto& fn : catalog_framework_names()) is_fw = is_fw || fn == name;
      if (is_fw) {
        j = framework_to_json(named_framework(name, p));
        j["name"] = name;
      } else {
        CatalogEntry e = named_graph(name, p);
        if (check_flag) {
          IndependenceResult ind = independence(e.graph, model, opt);
          e.metadata["verdicts"] =
              json{{"independent", ind.independent}, {"rank", ind.certificate.rank}};
          if (e.cover) {
            e.metadata["verdicts"]["cover_independent"] =
                cover_independent(e.graph, *e.cover, model, opt).independent;
            IeResult ie = ie_count(e.graph, *e.cover, model, opt);
            e.metadata["verdicts"]["ie"] = ie.value;
            e.metadata["verdicts"]["rank_eq_ie"] = ie.value == ind.certificate.rank;
          }
        }
        j = entry_to_json(e);
      }
      j["seed"] = seed;
      emit(j, out_path);
      return 0;
    }
    if (rank_cmd->parsed()) {
      Graph g = graph_from_json(load_json_file(in_path));
      RankCertificate cert = generic_rank(g, model, opt);
      emit(certificate_to_json(cert), out_path);
      return 0;
    }
    if (check_cmd->parsed()) {
      Graph g = graph_from_json(load_json_file(in_path));
      bool verdict;
      json j;
      if (mode == "independent") {
        IndependenceResult r = independence(g, model, opt);
        verdict = r.independent;
        j["certificate"] = certificate_to_json(r.certificate);
      } else if (mode == "rigid") {
        verdict = is_rigid(g, model, opt);
      } else if (mode == "circuit") {
        verdict = is_circuit(g, model, opt);
      } else if (mode == "nucleation-free") {
        auto nucs = nucleations(g, model, {opt, false});
        verdict = nucs.empty();
        j["nucleations"] = nucs;
      } else {
        throw Error("usage", "unknown property " + mode);
      }
      j["property"] = mode;
      j["verdict"] = verdict;
      j["seed"] = seed;
      emit(j, "");
      return verdict ? 0 : 1;
    }
    if (closure_cmd->parsed()) {
      Graph g = graph_from_json(load_json_file(in_path));
      json pairs = json::array();
      for (const auto& p : closure(g, model, opt)) pairs.push_back(json::array({p.u, p.v}));
      json j{{"closure", pairs}, {"seed", seed}};
      emit(j, out_path);
      return 0;
    }
    if (implied_cmd->parsed()) {
      Graph g = graph_from_json(load_json_file(in_path));
      if (!pair_opt.empty()) {
        Pair f = pair_arg(pair_opt);
        bool v = is_implied(g, f, model, opt);
        emit(json{{"pair", {f.u, f.v}}, {"implied", v}, {"seed", seed}}, "");
        return v ? 0 : 1;
      }
      json pairs = json::array();
      std::set<Pair> es;
      for (const auto& e : g.edges()) es.insert(e);
      for (const auto& p : closure(g, model, opt))
        if (!es.count(p)) pairs.push_back(json::array({p.u, p.v}));
      emit(json{{"implied_nonedges", pairs}, {"seed", seed}}, "");
      return 0;
    }
    if (cover_cmd->parsed()) {
      Graph g = graph_from_json(load_json_file(in_path));
      TwoThinCover x = cover_from_json(load_json_file(cover_path));
      json j;
      int exit_code = 0;
      if (mode == "validate") {
        CoverReport rep = validate_two_thin(g, x);
        j["valid"] = rep.valid;
        for (const auto& v : rep.violations)
          j["violations"].push_back(json{{"condition", v.condition}, {"witness", v.witness}});
        j["independent"] = rep.valid && cover_independent(g, x, model, opt).independent;
        json ss = json::array();
        if (rep.valid)
          for (const auto& p : shared_set(x)) ss.push_back(json::array({p.u, p.v}));
        j["shared_set"] = ss;
        exit_code = rep.valid ? 0 : 1;
      } else if (mode == "ie") {
        IeResult ie = ie_count(g, x, model, opt);
        j["ie"] = ie.value;
        j["deterministic"] = ie.deterministic;
      } else if (mode == "ieprime") {
        IeResult ie = ie_prime(g, x, std::vector<Label>(gluing_opt.begin(), gluing_opt.end()), model, opt);
        j["ie_prime"] = ie.value;
        j["deterministic"] = ie.deterministic;
      } else if (mode == "sandwich") {
        SandwichResult r = rank_sandwich_implied(g, x, pair_arg(pair_opt), model, opt);
        j["implied"] = r.implied;
        j["deterministic"] = r.deterministic;
        j["ie"] = r.ie;
        j["edges"] = r.edges;
        exit_code = r.implied ? 0 : 1;
      } else if (mode == "safe-base") {
        SafeBaseCertificate cert = validate_safe_base(g, x, pair_arg(pair_opt), model, opt);
        j = json{{"valid", cert.valid()},
                 {"independent", cert.independent},
                 {"cover_independent", cert.cover_independent},
                 {"rank", cert.rank},
                 {"ie", cert.ie},
                 {"rank_eq_ie", cert.rank_eq_ie},
                 {"safe_split_exists", cert.safe_split_exists}};
        exit_code = cert.valid() ? 0 : 1;
      } else if (mode == "safe-ear") {
        SafeEarCertificate cert =
            validate_safe_ear(g, x, std::vector<Label>(gluing_opt.begin(), gluing_opt.end()), model, opt);
        json keys = json::array();
        for (const auto& p : cert.key_pairs) keys.push_back(json::array({p.u, p.v}));
        j = json{{"valid", cert.valid()},
                 {"cluster_gluing_ok", cert.cond_cluster_gluing},
                 {"shared_with_gluing_independent", cert.cond_shared_independent},
                 {"rank", cert.rank},
                 {"ie_prime", cert.ie_prime},
                 {"rank_eq_ie_prime_minus_1", cert.cond_rank},
                 {"key_gluing_pairs", keys}};
        exit_code = cert.valid() ? 0 : 1;
      } else {
        throw Error("usage", "unknown cover mode " + mode);
      }
      j["seed"] = seed;
      emit(j, out_path);
      return exit_code;
    }
    if (construct_cmd->parsed()) return run_construct(in_path, out_path, seed);
    if (fw_cmd->parsed()) {
      Framework fw = framework_from_json(load_json_file(in_path));
      json j;
      if (mode == "stress" || mode == "flex") {
        json basis = json::array();
        if (mode == "stress") {
          for (const auto& s : stress_basis(fw)) {
            json vec = json::array();
            for (const auto& q : s.per_edge) vec.push_back(rat_str(q));
            basis.push_back(vec);
          }
          json es = json::array();
          for (const auto& e : fw.graph.edges()) es.push_back(json::array({e.u, e.v}));
          j["edge_order"] = es;
        } else {
          for (const auto& f : flex_basis(fw)) {
            json vec = json::array();
            for (const auto& q : f.per_vertex_axis) vec.push_back(rat_str(q));
            basis.push_back(vec);
          }
          j["vertex_order"] = fw.graph.vertices();
        }
        j["basis"] = basis;
        j["dimension"] = basis.size();
      } else if (mode == "triple") {
        TripleSign sign = classify_triple(fw, pair_arg(pair1_opt), pair_arg(pair2_opt));
        j["classification"] = triple_sign_name(sign);
      } else {
        throw Error("usage", "unknown framework mode " + mode);
      }
      emit(j, out_path);
      return 0;
    }
    if (verify_cmd->parsed()) {
      auto results = run_acceptance(seed, filter);
      json report;
      report["suite"] = "verification";
      report["seed"] = seed;
      bool all = true;
      json arr = json::array();
      for (const auto& r : results) {
        std::printf("%s  %s  (%.1f ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.wall_ms,
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
        arr.push_back(json{{"name", r.name},
                           {"verdict", r.pass ? "pass" : "fail"},
                           {"detail", r.detail},
                           {"data", r.data},
                           {"wall_ms", r.wall_ms}});
        all = all && r.pass;
      }
      report["results"] = arr;
      report["all_pass"] = all;
      if (!out_path.empty()) write_text_file(out_path, report.dump(2) + "\n");
      return all ? 0 : 1;
    }
    if (export_dot->parsed()) {
      Graph g = graph_from_json(load_json_file(in_path));
      std::vector<Pair> dashed;
      json src = load_json_file(in_path);
      if (src.contains("hinges"))
        for (const auto& h : src.at("hinges")) dashed.emplace_back(h.at(0).get<Label>(), h.at(1).get<Label>());
      if (!dashed_arg.empty()) {
        std::stringstream ss(dashed_arg);
        std::string item;
        while (std::getline(ss, item, ';')) {
          auto comma = item.find(',');
          if (comma == std::string::npos) throw Error("usage", "bad --dashed pair " + item);
          dashed.emplace_back(item.substr(0, comma), item.substr(comma + 1));
        }
      }
      if (implied_flag) {
        std::set<Pair> es;
        for (const auto& e : g.edges()) es.insert(e);
        for (const auto& p : closure(g, model, opt))
          if (!es.count(p)) dashed.push_back(p);
      }
      std::string dot = to_dot(g, dashed);
      if (out_path.empty())
        std::cout << dot;
      else
        write_text_file(out_path, dot);
      return 0;
    }
    throw Error("usage", "no subcommand");
  } catch (const Error& e) {
    json err{{"error", e.kind}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
}
