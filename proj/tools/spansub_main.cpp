#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spansub/connectivity.hpp"
#include "spansub/cut_improver.hpp"
#include "spansub/degree_partition.hpp"
#include "spansub/ear_decomposition.hpp"
#include "spansub/gallery.hpp"
#include "spansub/graph_io.hpp"
#include "spansub/mader.hpp"
#include "spansub/oracle.hpp"
#include "spansub/tournament.hpp"
#include "spansub/tree_packing.hpp"
#include "spansub/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spansub;

ordered_json json_partition(const Partition& p) {
  ordered_json j;
  j["part_count"] = p.part_count;
  j["part_of"] = p.part_of;
  return j;
}

ordered_json json_witness(const CutWitness& w) {
  ordered_json j;
  j["value"] = w.value;
  j["side_x"] = w.side_x;
  j["crossing"] = w.crossing;
  return j;
}

ordered_json json_graph(const Graph& g) { return nlohmann::json::parse(to_json(g)); }
ordered_json json_graph(const Digraph& d) { return nlohmann::json::parse(to_json(d)); }

Graph load_graph(const std::string& path) {
  AnyGraph any = load_graph_file(path);
  require(std::holds_alternative<Graph>(any), ErrKind::BadParameters,
          "expected an undirected graph in " + path);
  return std::get<Graph>(any);
}

Digraph load_digraph(const std::string& path) {
  AnyGraph any = load_graph_file(path);
  require(std::holds_alternative<Digraph>(any), ErrKind::BadParameters,
          "expected a digraph in " + path);
  return std::get<Digraph>(any);
}

void emit(const ordered_json& report, const std::string& summary) {
  std::cout << report.dump() << "\n";
  std::cerr << summary << "\n";
}

void write_output(const AnyGraph& g, const std::string& out, const std::string& format) {
  if (out.empty()) return;
  std::ofstream file(out);
  require(static_cast<bool>(file), ErrKind::BadParameters, "cannot write " + out);
  if (format == "dot")
    std::visit([&](const auto& x) { file << to_dot(x); }, g);
  else
    std::visit([&](const auto& x) { file << to_json(x) << "\n"; }, g);
}

Rational parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  std::string s = v.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
  return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)),
                  boost::multiprecision::cpp_int(s.substr(slash + 1)));
}

WeightMatrix load_matrix(const std::string& path, int t_override) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrKind::BadParameters, "cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  int n = j.at("n").get<int>();
  std::vector<std::vector<Rational>> entries(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) entries[i][jj] = parse_rational(j.at("entries").at(i).at(jj));
  std::vector<Rational> weights;
  if (j.contains("weights"))
    for (const auto& w : j.at("weights")) weights.push_back(parse_rational(w));
  else {
    require(t_override >= 1, ErrKind::BadParameters, "matrix file has no weights; pass --t");
    weights.assign(t_override, Rational(1, t_override));
  }
  return WeightMatrix(std::move(entries), std::move(weights));
}

int run(int argc, char** argv) {
  CLI::App app{"spanning low-chromatic subgraph toolkit"};
  app.require_subcommand(1);

  std::string file, out, format = "json", name, level = "desk", start, avoid, partition_file,
              host_file, what;
  int k = 0, t = 0, r = 0, n = 0, m = 0, k_strong = 0;
  std::vector<int> pair_uv;
  std::uint64_t seed = 0;
  long long budget = -1;
  bool essential = false, force = false, trace = false, fast = false, simplify = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "deterministic seed (default 0)");
    cmd->add_option("--budget", budget, "search budget");
    cmd->add_option("--format", format, "json|dot|summary");
    cmd->add_option("--out", out, "write the produced graph to this file");
  };

  CLI::App* c_lambda = app.add_subcommand("lambda", "edge-/arc-connectivity with witness");
  c_lambda->add_option("file", file)->required();
  c_lambda->add_flag("--essential", essential);
  c_lambda->add_option("--pair", pair_uv, "vertex pair u v for a local value")->expected(2);
  c_lambda->add_option("--k-strong", k_strong, "test k-strongness instead");
  add_common(c_lambda);

  CLI::App* c_ec = app.add_subcommand("kpartite-ec", "spanning k-partite subgraph keeping connectivity");
  c_ec->add_option("file", file)->required();
  c_ec->add_option("--k", k)->required();
  c_ec->add_flag("--trace", trace);
  add_common(c_ec);

  CLI::App* c_pack = app.add_subcommand("tree-pack", "k edge-disjoint spanning trees");
  c_pack->add_option("file", file)->required();
  c_pack->add_option("--k", k)->required();
  add_common(c_pack);

  CLI::App* c_2t = app.add_subcommand("bip-2t", "spanning bipartite 2T-subgraph");
  c_2t->add_option("file", file)->required();
  c_2t->add_flag("--force", force);
  add_common(c_2t);

  CLI::App* c_kt = app.add_subcommand("kpartite-kt", "spanning (k+1)-partite kT-subgraph");
  c_kt->add_option("file", file)->required();
  c_kt->add_option("--k", k)->required();
  c_kt->add_flag("--force", force);
  add_common(c_kt);

  CLI::App* c_3p = app.add_subcommand("strong-3partite", "spanning strong 3-partite subdigraph");
  c_3p->add_option("file", file)->required();
  add_common(c_3p);

  CLI::App* c_ear = app.add_subcommand("ear-decomp", "ear decomposition of a strong digraph");
  c_ear->add_option("file", file)->required();
  c_ear->add_option("--start", start, "comma-separated start cycle");
  add_common(c_ear);

  CLI::App* c_sb = app.add_subcommand("strong-bipartite", "spanning strong bipartite subdigraph");
  c_sb->add_option("file", file)->required();
  add_common(c_sb);

  CLI::App* c_ham = app.add_subcommand("ham-cycle", "hamiltonian cycle of a semicomplete digraph");
  c_ham->add_option("file", file)->required();
  c_ham->add_option("--avoid", avoid, "semicolon-separated arcs u,v to avoid");
  add_common(c_ham);

  CLI::App* c_kac = app.add_subcommand("kac-partite", "spanning k-arc-connected (2k+1)-partite subdigraph");
  c_kac->add_option("file", file)->required();
  c_kac->add_option("--k", k)->required();
  c_kac->add_flag("--fast", fast, "admissibility only on complete pairings");
  c_kac->add_flag("--simplify", simplify, "collapse parallel arcs after verification");
  c_kac->add_flag("--trace", trace);
  add_common(c_kac);

  CLI::App* c_maj = app.add_subcommand("majority4", "majority 4-colouring");
  c_maj->add_option("file", file)->required();
  add_common(c_maj);

  CLI::App* c_alon = app.add_subcommand("alon-partition", "matrix partition with row-sum bounds");
  c_alon->add_option("file", file)->required();
  c_alon->add_option("--t", t, "number of parts when the file has no weights");
  add_common(c_alon);

  CLI::App* c_semi = app.add_subcommand("semidegree", "spanning k-partite subdigraph keeping semi-degrees");
  c_semi->add_option("file", file)->required();
  c_semi->add_option("--k", k)->required();
  add_common(c_semi);

  CLI::App* c_dec = app.add_subcommand("decide-2kpartite", "decide 2k-partite min-out-degree k");
  c_dec->add_option("file", file)->required();
  c_dec->add_option("--k", k)->required();
  add_common(c_dec);

  CLI::App* c_gen = app.add_subcommand("generate", "gallery constructions");
  c_gen->add_option("what", what,
                    "r-tournament|dkr|exceptional|class-d|es6ec|no-bip2t|odd-wheel|walecki|kt2k")
      ->required();
  c_gen->add_option("--k", k);
  c_gen->add_option("--r", r);
  c_gen->add_option("--n", n);
  c_gen->add_option("--m", m);
  c_gen->add_option("--name", name);
  c_gen->add_option("--host", host_file);
  add_common(c_gen);

  CLI::App* c_ref = app.add_subcommand("refute", "violating vertex for a partition");
  c_ref->add_option("what", what, "dkr|class-d")->required();
  c_ref->add_option("partition", partition_file)->required();
  c_ref->add_option("--k", k)->required();
  c_ref->add_option("--r", r);
  add_common(c_ref);

  CLI::App* c_oracle = app.add_subcommand("oracle", "exhaustive brute-force verifiers");
  c_oracle->add_option("what", what, "strong-bip|three-strong|chi|max-kcut|partition-exists")
      ->required();
  c_oracle->add_option("file", file)->required();
  c_oracle->add_option("--k", k);
  c_oracle->add_option("--t", t);
  c_oracle->add_option("--bound", m);
  c_oracle->add_option("--pred", name, "semi|out|majority");
  c_oracle->add_option("--cap", n, "enumeration cap");
  add_common(c_oracle);

  CLI::App* c_ver = app.add_subcommand("verify-suite", "acceptance battery");
  c_ver->add_option("--level", level, "smoke|desk|exhaustive-5");
  add_common(c_ver);

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  std::string cmd = sub->get_name();

  ordered_json report;
  report["command"] = cmd;
  ordered_json config;
  if (!file.empty()) config["file"] = file;
  if (k) config["k"] = k;
  if (t) config["t"] = t;
  if (r) config["r"] = r;
  if (n) config["n"] = n;
  config["seed"] = seed;
  if (budget >= 0) config["budget"] = budget;
  report["config"] = config;

  if (cmd == "lambda") {
    AnyGraph any = load_graph_file(file);
    if (k_strong > 0) {
      bool ok = is_k_strong(std::get<Digraph>(any), k_strong);
      report["k_strong"] = k_strong;
      report["result"] = ok;
      emit(report, ok ? "k-strong: yes" : "k-strong: no");
      return 0;
    }
    if (essential) {
      auto [value, witness] = essential_lambda(std::get<Graph>(any));
      report["essential_lambda"] = value;
      if (witness) report["witness"] = json_witness(*witness);
      emit(report, "essential lambda = " + std::to_string(value));
      return 0;
    }
    if (pair_uv.size() == 2) {
      auto probe = [&](const auto& g) {
        auto [value, witness] = local_lambda(g, pair_uv[0], pair_uv[1]);
        report["lambda_pair"] = value;
        report["witness"] = json_witness(witness);
        emit(report, "lambda(u,v) = " + std::to_string(value));
      };
      std::visit(probe, any);
      return 0;
    }
    auto probe = [&](const auto& g) {
      auto [value, witness] = global_lambda(g);
      report["lambda"] = value;
      report["witness"] = json_witness(witness);
      emit(report, "lambda = " + std::to_string(value));
    };
    std::visit(probe, any);
    return 0;
  }

  if (cmd == "kpartite-ec") {
    Graph g = load_graph(file);
    std::vector<EcTraceStep> steps;
    KPartiteEcResult res = spanning_kpartite_ec(g, k, seed, trace ? &steps : nullptr);
    long long lambda_h = global_lambda(res.subgraph).first;
    long long lambda_g = global_lambda(g).first;
    report["lambda_g"] = lambda_g;
    report["target"] = kpartite_ec_target(lambda_g, k);
    report["lambda_h"] = lambda_h;
    report["iterations"] = res.iterations;
    report["partition"] = json_partition(res.partition);
    report["subgraph"] = json_graph(res.subgraph);
    if (trace) {
      ordered_json trace_json = ordered_json::array();
      for (const EcTraceStep& step : steps) {
        ordered_json item;
        item["witness"] = json_witness(step.witness);
        item["scores"] = step.scores;
        item["chosen_q"] = step.chosen_q;
        trace_json.push_back(item);
      }
      report["trace"] = trace_json;
    }
    write_output(res.subgraph, out, format);
    emit(report, "lambda(H) = " + std::to_string(lambda_h));
    return 0;
  }

  if (cmd == "tree-pack") {
    Graph g = load_graph(file);
    TreePacking packing = tree_pack(g, k);
    report["trees"] = packing.trees;
    emit(report, std::to_string(k) + " disjoint spanning trees found");
    return 0;
  }

  if (cmd == "bip-2t" || cmd == "kpartite-kt") {
    Graph g = load_graph(file);
    if (cmd == "bip-2t") k = 2;
    int trees = (cmd == "bip-2t") ? 2 : k;
    int parts = (cmd == "bip-2t") ? 2 : k + 1;
    auto fill = [&](const Partition& p, const Graph& h, const TreePacking& packing) {
      report["parts"] = parts;
      report["partition"] = json_partition(p);
      report["subgraph"] = json_graph(h);
      report["trees"] = packing.trees;
      write_output(h, out, format);
    };
    if (cmd == "bip-2t") {
      Bipartite2TResult res = bipartite_2t(g, force, seed);
      fill(res.partition, res.subgraph, res.packing);
    } else {
      KPartiteKTResult res = kpartite_kt(g, trees, force, seed);
      fill(res.partition, res.subgraph, res.packing);
    }
    emit(report, "packing of " + std::to_string(trees) + " trees inside " +
                     std::to_string(parts) + " parts");
    return 0;
  }

  if (cmd == "strong-3partite") {
    Digraph d = load_digraph(file);
    Strong3PartiteResult res = strong_3partite(d);
    report["parts"] = res.partition.part_count;
    report["partition"] = json_partition(res.partition);
    report["subdigraph"] = json_graph(res.subdigraph);
    write_output(res.subdigraph, out, format);
    emit(report, "strong subdigraph with " + std::to_string(res.partition.part_count) + " parts");
    return 0;
  }

  if (cmd == "ear-decomp") {
    Digraph d = load_digraph(file);
    std::optional<std::vector<int>> cycle;
    if (!start.empty()) {
      std::vector<int> vs;
      std::stringstream ss(start);
      std::string tok;
      while (std::getline(ss, tok, ',')) vs.push_back(std::stoi(tok));
      cycle = vs;
    }
    EarDecomposition ed = ear_decomposition(d, cycle);
    ordered_json ears = ordered_json::array();
    for (const Ear& ear : ed.ears) {
      ordered_json e;
      e["vertices"] = ear.vertices;
      e["arcs"] = ear.arcs;
      e["trivial"] = ear.trivial();
      ears.push_back(e);
    }
    report["ears"] = ears;
    emit(report, std::to_string(ed.ears.size()) + " ears");
    return 0;
  }

  if (cmd == "strong-bipartite") {
    Digraph d = load_digraph(file);
    Partition p = strong_bipartite_semicomplete(d);
    report["partition"] = json_partition(p);
    emit(report, "strong bipartition found");
    return 0;
  }

  if (cmd == "ham-cycle") {
    Digraph d = load_digraph(file);
    HamCycle cycle;
    if (avoid.empty()) {
      cycle = hamiltonian_cycle(d);
    } else {
      std::vector<std::pair<int, int>> forbidden;
      std::stringstream ss(avoid);
      std::string tok;
      while (std::getline(ss, tok, ';')) {
        auto comma = tok.find(',');
        forbidden.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
      }
      cycle = hamiltonian_cycle_avoiding(d, forbidden, budget < 0 ? 1000000 : budget);
    }
    report["cycle"] = cycle;
    emit(report, "hamiltonian cycle found");
    return 0;
  }

  if (cmd == "kac-partite") {
    Digraph d = load_digraph(file);
    KacPartiteResult res = spanning_kac_partite(d, k, fast);
    if (simplify) res.subdigraph = collapse_parallel_arcs(res.subdigraph);
    report["parts"] = res.partition.part_count;
    report["partition"] = json_partition(res.partition);
    report["subdigraph"] = json_graph(res.subdigraph);
    if (trace) {
      ordered_json steps = ordered_json::array();
      for (const SplitRecord& rec : res.trace) {
        ordered_json s;
        s["vertex"] = rec.vertex;
        s["pairs"] = rec.pairs;
        steps.push_back(s);
      }
      report["trace"] = steps;
    }
    write_output(res.subdigraph, out, format);
    emit(report, "k-arc-connected subdigraph with " + std::to_string(res.partition.part_count) +
                     " parts");
    return 0;
  }

  if (cmd == "majority4") {
    Digraph d = load_digraph(file);
    std::vector<int> colour = majority_4_colouring(d);
    report["colours"] = colour;
    emit(report, "majority 4-colouring found");
    return 0;
  }

  if (cmd == "alon-partition") {
    WeightMatrix matrix = load_matrix(file, t);
    Partition p = alon_partition(matrix, budget, seed);
    report["partition"] = json_partition(p);
    emit(report, "matrix partition found");
    return 0;
  }

  if (cmd == "semidegree") {
    Digraph d = load_digraph(file);
    DegreePartitionResult res = kpartite_semidegree(d, k, budget, seed);
    report["partition"] = json_partition(res.partition);
    report["subdigraph"] = json_graph(res.subdigraph);
    write_output(res.subdigraph, out, format);
    emit(report, "semi-degree preserving partition found");
    return 0;
  }

  if (cmd == "decide-2kpartite") {
    Digraph d = load_digraph(file);
    MinDegDecision decision = decide_2k_partite_mindeg(d, k);
    report["possible"] = decision.possible;
    if (!decision.possible) report["offending_component"] = decision.offending_component;
    emit(report, decision.possible ? "possible" : "impossible");
    return 0;
  }

  if (cmd == "generate") {
    AnyGraph result;
    if (what == "r-tournament") {
      result = rotative_tournament(k);
    } else if (what == "dkr") {
      result = dkr(k, r);
    } else if (what == "exceptional") {
      result = exceptional(name);
      report["labels"] = exceptional_labels(name);
    } else if (what == "class-d") {
      ClassDResult res = class_d(k);
      ordered_json sizes;
      sizes["v1"] = res.layout.v1.size();
      sizes["v2"] = res.layout.v2.size();
      sizes["v3"] = res.layout.v3.size();
      sizes["v4"] = res.layout.v4.size();
      report["strata"] = sizes;
      result = res.digraph;
    } else if (what == "es6ec") {
      result = essentially_6ec_bipartite(n);
    } else if (what == "no-bip2t") {
      NoBip2TResult res = no_bip2t_example(n);
      report["triangles"] = res.triangles;
      report["k5_cliques"] = res.k5_cliques;
      report["cut_bound"] = res.cut_bound;
      result = res.graph;
    } else if (what == "odd-wheel") {
      result = odd_wheel(m);
    } else if (what == "walecki") {
      report["paths"] = walecki_paths(r);
      Graph complete(2 * r);
      for (int u = 0; u < 2 * r; ++u)
        for (int v = u + 1; v < 2 * r; ++v) complete.add_edge(u, v);
      result = complete;
    } else if (what == "kt2k") {
      result = kt_chromatic_2k(k, load_graph(host_file));
    } else {
      fail(ErrKind::UnknownName, "unknown generator " + what);
    }
    std::visit([&](const auto& g) { report["graph"] = json_graph(g); }, result);
    write_output(result, out, format);
    emit(report, "generated " + what);
    return 0;
  }

  if (cmd == "refute") {
    Partition p = load_partition_file(partition_file);
    int vertex = -1;
    if (what == "dkr") {
      vertex = dkr_refuter(k, r, p);
    } else if (what == "class-d") {
      ClassDResult res = class_d(k);
      vertex = class_d_refuter(res.layout, p);
    } else {
      fail(ErrKind::UnknownName, "unknown refuter " + what);
    }
    report["violating_vertex"] = vertex;
    emit(report, "violating vertex " + std::to_string(vertex));
    return 0;
  }

  if (cmd == "oracle") {
    int cap = n > 0 ? n : 0;
    if (what == "chi") {
      Graph g = load_graph(file);
      int chi = chromatic_number(g, cap > 0 ? cap : 20);
      report["chromatic_number"] = chi;
      emit(report, "chi = " + std::to_string(chi));
      return 0;
    }
    if (what == "max-kcut") {
      Graph g = load_graph(file);
      auto [p, value] = exact_max_kcut(g, k, cap > 0 ? cap : 16);
      report["value"] = value;
      report["partition"] = json_partition(p);
      emit(report, "max cut value = " + std::to_string(value));
      return 0;
    }
    Digraph d = load_digraph(file);
    SearchReport sr;
    if (what == "strong-bip") {
      sr = exists_strong_bipartite(d, cap > 0 ? cap : 24);
    } else if (what == "three-strong") {
      sr = exists_three_strong_bipartition(d, cap > 0 ? cap : 20);
    } else if (what == "partition-exists") {
      DegreePredicate pred = DegreePredicate::MinSemiDegree;
      if (name == "out") pred = DegreePredicate::MinOutDegree;
      if (name == "majority") pred = DegreePredicate::Majority;
      sr = exists_partition_with(d, t, pred, m, cap > 0 ? cap : 12);
    } else {
      fail(ErrKind::UnknownName, "unknown oracle " + what);
    }
    report["found"] = sr.found;
    report["examined"] = sr.examined;
    if (sr.certificate) report["certificate"] = json_partition(*sr.certificate);
    emit(report, sr.found ? "found" : "exhausted-none");
    return 0;
  }

  if (cmd == "verify-suite") {
    std::vector<CriterionResult> results = run_verify_suite(level);
    ordered_json items = ordered_json::array();
    bool all_pass = true;
    for (const CriterionResult& res : results) {
      ordered_json item;
      item["id"] = res.id;
      item["name"] = res.name;
      item["pass"] = res.pass;
      if (!res.details.empty()) item["details"] = res.details;
      items.push_back(item);
      std::fprintf(stderr, "[%s] criterion %2d: %s (%.1fs)\n", res.pass ? "PASS" : "FAIL", res.id,
                   res.name.c_str(), res.seconds);
      all_pass = all_pass && res.pass;
    }
    report["level"] = level;
    report["criteria"] = items;
    report["all_pass"] = all_pass;
    std::cout << report.dump() << "\n";
    return all_pass ? 0 : 1;
  }

  fail(ErrKind::BadParameters, "unhandled subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NoPackingError& e) {
    ordered_json report;
    report["error"] = "NoPacking";
    ordered_json certificate;
    certificate["part_count"] = e.part_count();
    certificate["part_of"] = e.part_of();
    report["certificate"] = certificate;
    std::cout << report.dump() << "\n";
    std::cerr << "no packing; certifying partition attached\n";
    return 1;
  } catch (const ExceptionalError& e) {
    ordered_json report;
    report["error"] = "Exceptional";
    report["name"] = e.name();
    std::cout << report.dump() << "\n";
    std::cerr << "exceptional digraph: " << e.name() << "\n";
    return 1;
  } catch (const Error& e) {
    ordered_json report;
    report["error"] = to_string(e.kind());
    report["message"] = e.what();
    std::cout << report.dump() << "\n";
    std::cerr << e.what() << "\n";
    return e.kind() == ErrKind::BudgetExhausted ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
