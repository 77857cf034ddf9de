#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stardecomp/colorize.hpp"
#include "stardecomp/config.hpp"
#include "stardecomp/decompose.hpp"
#include "stardecomp/density.hpp"
#include "stardecomp/discharge.hpp"
#include "stardecomp/gen.hpp"
#include "stardecomp/graph.hpp"
#include "stardecomp/rational.hpp"
#include "stardecomp/star.hpp"

using nlohmann::json;
using namespace stardecomp;

namespace {

// negative result or property violation: exit 1 (usage problems exit 2)
struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Graph load_graph(const std::string& path) {
  return parse_graph(read_input(path), GraphFormat::Auto);
}

int worker_cap() {
  const char* env = std::getenv("STARDECOMP_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  if (v < 1) return 1;
  return std::min(v, 64);
}

void emit(const json& record) { std::cout << record.dump(2) << "\n"; }

json coloring_json(const Graph& g, const Coloring& c) {
  json out = json::object();
  for (int v : g.alive_vertices()) out[std::to_string(v)] = c.colors[v];
  return out;
}

json partition_json(const Partition& p) {
  json out = json::object();
  for (const auto& name : scheme_classes(p.scheme)) {
    auto it = p.classes.find(name);
    out[name] = it == p.classes.end() ? std::vector<int>{} : it->second;
  }
  return out;
}

// ---- mad ----

struct MadOpts {
  std::string input;
  bool brute = false;
  bool witness = false;
  bool as_json = false;
};

int run_mad(const MadOpts& o) {
  Graph g = load_graph(o.input);
  MadResult r = o.brute ? mad_bruteforce(g) : mad_exact(g);
  if (o.as_json) {
    json rec{{"command", "mad"},
             {"mad", r.value.str()},
             {"n", g.alive_count()},
             {"m", g.edge_count()},
             {"oracle", o.brute}};
    if (o.witness) rec["witness"] = r.witness;
    emit(rec);
    return 0;
  }
  std::cout << r.value.str() << "\n";
  if (o.witness) {
    std::cout << "witness";
    for (int v : r.witness) std::cout << " " << v;
    std::cout << "\n";
  }
  return 0;
}

// ---- color ----

struct ColorOpts {
  std::string input;
  std::string route = "auto";
  bool verify = false;
  bool partition = false;
  bool as_json = false;
};

ColoringCertificate run_route(const Graph& g, const std::string& route) {
  ColoringCertificate cert;
  if (route == "auto") {
    try {
      return star_color(g, true);
    } catch (const NotCoveredError& e) {
      throw CommandError(e.what());
    }
  }
  if (route == "exact") {
    Coloring witness;
    auto k = exact_star_chromatic(g, std::max(g.alive_count(), 1), &witness);
    if (!k) throw CommandError("exact solver found no coloring");
    cert.coloring = witness;
    cert.route = Route::exact_solver;
    cert.verdict = verify_star(g, cert.coloring);
    return cert;
  }
  if (route == "forest-3") {
    if (!is_forest(g))
      throw CommandError("route forest-3 does not apply: graph has a cycle");
    cert.coloring = star_color_forest(g);
    cert.route = Route::forest3;
    cert.verdict = verify_star(g, cert.coloring);
    return cert;
  }
  Scheme scheme = Scheme::FI;
  if (route == "density-4") {
    scheme = Scheme::FI;
    cert.route = Route::density4;
  } else if (route == "density-girth-5") {
    scheme = Scheme::FI1I2;
    cert.route = Route::girth5;
  } else {
    scheme = Scheme::FI1I2I3;
    cert.route = Route::girth6;
  }
  try {
    switch (scheme) {
      case Scheme::FI: cert.partition = decompose_FI(g).first; break;
      case Scheme::FI1I2: cert.partition = decompose_FI1I2(g).first; break;
      case Scheme::FI1I2I3: cert.partition = decompose_FI1I2I3(g).first; break;
    }
  } catch (const std::invalid_argument& e) {
    throw CommandError("route " + route + " does not apply: " + e.what());
  } catch (const DecomposeError& e) {
    throw CommandError(e.what());
  }
  cert.coloring = color_from_partition(g, *cert.partition);
  cert.verdict = verify_star(g, cert.coloring);
  return cert;
}

int run_color(const ColorOpts& o) {
  Graph g = load_graph(o.input);
  ColoringCertificate cert = run_route(g, o.route);
  StarVerdict check = verify_star(g, cert.coloring);
  if (o.verify && !check.ok) throw CommandError("emitted coloring failed verification");
  if (o.as_json) {
    json rec{{"command", "color"},
             {"route", route_name(cert.route)},
             {"colors", cert.coloring.palette_size},
             {"verified", check.ok}};
    rec["coloring"] = coloring_json(g, cert.coloring);
    rec["partition"] = cert.partition ? partition_json(*cert.partition) : json();
    emit(rec);
    return 0;
  }
  if (o.partition) {
    if (!cert.partition)
      throw CommandError("route " + std::string(route_name(cert.route)) +
                         " carries no partition");
    std::cout << partition_to_string(*cert.partition);
    return 0;
  }
  std::cout << "# route " << route_name(cert.route) << "\n";
  std::cout << "# colors " << cert.coloring.palette_size << "\n";
  std::cout << "# verified " << (check.ok ? "true" : "false") << "\n";
  std::cout << coloring_to_string(g, cert.coloring);
  return 0;
}

// ---- detect ----

struct DetectOpts {
  std::string input;
  std::string family;
  bool as_json = false;
};

json match_json(const ConfigurationMatch& m) {
  json roles = json::object();
  for (const auto& [name, v] : m.roles) roles[name] = v;
  return json{{"family", family_name(m.family)},
              {"kind", m.kind},
              {"roles", roles},
              {"delete", m.deletion_set}};
}

int run_detect(const DetectOpts& o) {
  Graph g = load_graph(o.input);
  Family fam = *family_from_string(o.family);
  auto m = detect(g, fam);
  if (o.as_json) {
    emit(json{{"command", "detect"},
              {"family", o.family},
              {"match", m ? match_json(*m) : json()}});
  } else {
    std::cout << (m ? match_to_string(*m) : "none") << "\n";
  }
  return m ? 0 : 1;
}

// ---- discharge ----

struct DischargeOpts {
  std::string input;
  std::string family;
  bool as_json = false;
};

int run_discharge(const DischargeOpts& o) {
  Graph g = load_graph(o.input);
  Family fam = *family_from_string(o.family);
  DischargeReport rep = audit_discharging(g, fam);
  if (o.as_json) {
    json transfers = json::array();
    for (const Transfer& t : rep.ledger.transfers)
      transfers.push_back(json{{"from", t.from},
                               {"to", t.to},
                               {"amount", t.amount.str()},
                               {"rule", t.rule}});
    emit(json{{"command", "discharge"},
              {"family", o.family},
              {"threshold", rep.threshold.str()},
              {"vacuous", rep.vacuous},
              {"conservation", rep.conservation_ok},
              {"bank", rep.ledger.bank.str()},
              {"bank_ok", rep.bank_ok},
              {"min_charge", rep.min_charge.str()},
              {"min_vertex", rep.min_vertex},
              {"transfers", transfers},
              {"pass", rep.pass},
              {"detail", rep.detail}});
    return rep.pass ? 0 : 1;
  }
  std::cout << "family " << family_name(fam) << " threshold "
            << rep.threshold.str() << "\n";
  if (rep.vacuous && rep.found)
    std::cout << "vacuous: reducible " << match_to_string(*rep.found) << "\n";
  std::cout << "conservation " << (rep.conservation_ok ? "ok" : "FAIL") << "\n";
  if (fam == Family::L2)
    std::cout << "bank " << rep.ledger.bank.str() << " "
              << (rep.bank_ok ? "ok" : "FAIL") << "\n";
  if (rep.min_vertex >= 0)
    std::cout << "min charge " << rep.min_charge.str() << " at vertex "
              << rep.min_vertex << " " << (rep.min_ok ? "ok" : "FAIL") << "\n";
  std::cout << "transfers " << rep.ledger.transfers.size() << "\n";
  std::cout << "audit " << (rep.pass ? "pass" : "fail");
  if (!rep.detail.empty()) std::cout << " (" << rep.detail << ")";
  std::cout << "\n";
  return rep.pass ? 0 : 1;
}

// ---- verify ----

struct VerifyOpts {
  std::string graph_input;
  std::string coloring_input;
  std::string partition_input;
  bool as_json = false;
};

int run_verify(const VerifyOpts& o) {
  Graph g = load_graph(o.graph_input);
  if (!o.partition_input.empty()) {
    if (!o.coloring_input.empty())
      throw std::invalid_argument("give a coloring or --partition, not both");
    Partition p = parse_partition(read_input(o.partition_input));
    PartitionVerdict v = verify_partition(g, p);
    if (o.as_json) {
      emit(json{{"command", "verify"},
                {"kind", "partition"},
                {"scheme", scheme_name(p.scheme)},
                {"ok", v.ok},
                {"reason", v.reason},
                {"witness", v.witness}});
    } else if (v.ok) {
      std::cout << "ok\n";
    } else {
      std::cout << v.reason;
      for (int x : v.witness) std::cout << " " << x;
      std::cout << "\n";
    }
    return v.ok ? 0 : 1;
  }
  if (o.coloring_input.empty())
    throw std::invalid_argument("verify needs a coloring file or --partition");
  Coloring c = parse_coloring(g, read_input(o.coloring_input));
  StarVerdict v = verify_star(g, c);
  if (o.as_json) {
    json rec{{"command", "verify"}, {"kind", "coloring"}, {"ok", v.ok}};
    rec["bad_edge"] =
        v.bad_edge ? json{v.bad_edge->first, v.bad_edge->second} : json();
    rec["bad_path"] = v.bad_path ? json(std::vector<int>(v.bad_path->begin(),
                                                         v.bad_path->end()))
                                 : json();
    emit(rec);
  } else if (v.ok) {
    std::cout << "ok\n";
  } else if (v.bad_edge) {
    std::cout << "bad-edge " << v.bad_edge->first << " " << v.bad_edge->second
              << "\n";
  } else if (v.bad_path) {
    std::cout << "bad-path " << (*v.bad_path)[0] << " " << (*v.bad_path)[1]
              << " " << (*v.bad_path)[2] << " " << (*v.bad_path)[3] << "\n";
  }
  return v.ok ? 0 : 1;
}

// ---- search ----

struct SearchOpts {
  int target = 3;
  std::string stream;
  int max_n = 8;
  int cap = 0;
  bool as_json = false;
};

std::vector<ExtremalRecord> search_stream(const std::string& text, int target,
                                          int cap) {
  int workers = worker_cap();
  if (workers <= 1) {
    std::istringstream in(text);
    return extremal_search(0, target, &in, cap);
  }
  // fan out whole lines round-robin; the final sort keys are a function of
  // the record set, so chunking never changes the output
  std::vector<std::string> chunks(workers);
  {
    std::istringstream in(text);
    std::string line;
    int at = 0;
    while (std::getline(in, line)) {
      chunks[at % workers] += line;
      chunks[at % workers] += "\n";
      ++at;
    }
  }
  std::vector<std::vector<ExtremalRecord>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        std::istringstream in(chunks[w]);
        parts[w] = extremal_search(0, target, &in, cap);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<ExtremalRecord> all;
  for (auto& p : parts)
    for (auto& r : p) all.push_back(std::move(r));
  std::vector<std::string> keys(all.size());
  for (size_t i = 0; i < all.size(); ++i) keys[i] = to_graph6(all[i].graph);
  std::vector<size_t> ord(all.size());
  for (size_t i = 0; i < ord.size(); ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) {
    if (all[a].mad != all[b].mad) return all[a].mad < all[b].mad;
    int na = all[a].graph.alive_count(), nb = all[b].graph.alive_count();
    if (na != nb) return na < nb;
    return keys[a] < keys[b];
  });
  std::vector<ExtremalRecord> sorted;
  sorted.reserve(all.size());
  for (size_t i : ord) sorted.push_back(std::move(all[i]));
  return sorted;
}

int run_search(const SearchOpts& o) {
  std::vector<ExtremalRecord> recs;
  if (!o.stream.empty())
    recs = search_stream(read_input(o.stream), o.target, o.cap);
  else
    recs = extremal_search(o.max_n, o.target, nullptr, o.cap);
  if (o.as_json) {
    json arr = json::array();
    for (const ExtremalRecord& r : recs)
      arr.push_back(json{{"graph6", to_graph6(r.graph)},
                         {"mad", r.mad.str()},
                         {"chi", r.star_chromatic},
                         {"exact", r.exact}});
    emit(json{{"command", "search"}, {"target", o.target}, {"records", arr}});
  } else {
    std::cout << extremal_records_to_tsv(recs);
  }
  return recs.empty() ? 1 : 0;
}

// ---- gen ----

struct GenOpts {
  std::string name;
  bool random = false;
  int forest = -1;
  int n = 20;
  std::string mad_bound = "26/11";
  int girth = 3;
  std::uint64_t seed = 0;
  std::string method = "rejection";
  bool as_json = false;
};

int run_gen(const GenOpts& o) {
  int sources = (!o.name.empty() ? 1 : 0) + (o.random ? 1 : 0) +
                (o.forest >= 0 ? 1 : 0);
  if (sources != 1)
    throw std::invalid_argument(
        "give exactly one of: a catalog name, --random, --forest");
  Graph g;
  if (!o.name.empty()) {
    g = named(o.name);
  } else if (o.forest >= 0) {
    g = random_forest(o.forest, o.seed);
  } else {
    GeneratorSpec spec;
    spec.n = o.n;
    spec.mad_bound = Rational::parse(o.mad_bound);
    spec.girth_min = o.girth;
    spec.seed = o.seed;
    if (o.method == "subdivision")
      spec.method = GeneratorSpec::Method::subdivision;
    else if (o.method == "thread-graft")
      spec.method = GeneratorSpec::Method::thread_graft;
    else
      spec.method = GeneratorSpec::Method::rejection;
    try {
      g = random_sparse(spec);
    } catch (const std::runtime_error& e) {
      throw CommandError(e.what());
    }
  }
  if (o.as_json) {
    auto c = girth(g);
    json rec{{"command", "gen"},
             {"graph6", to_graph6(g)},
             {"n", g.alive_count()},
             {"m", g.edge_count()}};
    rec["mad"] = g.alive_count() > 0 ? mad_exact(g).value.str() : "0/1";
    rec["girth"] = c ? json(*c) : json();
    emit(rec);
    return 0;
  }
  std::cout << to_graph6(g) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star coloring toolkit for sparse graphs"};
  app.require_subcommand(1);
  int code = 0;

  MadOpts mad_o;
  auto* mad_cmd = app.add_subcommand("mad", "exact maximum average degree");
  mad_cmd->add_option("input", mad_o.input, "graph file or - for stdin")
      ->required();
  mad_cmd->add_flag("--brute", mad_o.brute, "use the exhaustive oracle");
  mad_cmd->add_flag("--witness", mad_o.witness, "print the densest vertex set");
  mad_cmd->add_flag("--json", mad_o.as_json, "structured output");
  mad_cmd->callback([&] { code = run_mad(mad_o); });

  ColorOpts color_o;
  auto* color_cmd = app.add_subcommand("color", "star color the graph");
  color_cmd->add_option("input", color_o.input, "graph file or - for stdin")
      ->required();
  color_cmd
      ->add_option("--route", color_o.route,
                   "auto, forest-3, density-4, density-girth-5, "
                   "density-girth-6, exact")
      ->check(CLI::IsMember({"auto", "forest-3", "density-4",
                             "density-girth-5", "density-girth-6", "exact"}));
  color_cmd->add_flag("--verify", color_o.verify,
                      "fail unless the coloring re-verifies");
  color_cmd->add_flag("--partition", color_o.partition,
                      "print the decomposition instead of the coloring");
  color_cmd->add_flag("--json", color_o.as_json, "structured output");
  color_cmd->callback([&] { code = run_color(color_o); });

  DetectOpts detect_o;
  auto* detect_cmd =
      app.add_subcommand("detect", "find a reducible configuration");
  detect_cmd->add_option("input", detect_o.input, "graph file or - for stdin")
      ->required();
  detect_cmd->add_option("--family", detect_o.family, "L2, L3 or L5")
      ->required()
      ->check(CLI::IsMember({"L2", "L3", "L5"}));
  detect_cmd->add_flag("--json", detect_o.as_json, "structured output");
  detect_cmd->callback([&] { code = run_detect(detect_o); });

  DischargeOpts discharge_o;
  auto* discharge_cmd =
      app.add_subcommand("discharge", "audit the charge redistribution");
  discharge_cmd
      ->add_option("input", discharge_o.input, "graph file or - for stdin")
      ->required();
  discharge_cmd->add_option("--family", discharge_o.family, "L2, L3 or L5")
      ->required()
      ->check(CLI::IsMember({"L2", "L3", "L5"}));
  discharge_cmd->add_flag("--json", discharge_o.as_json, "structured output");
  discharge_cmd->callback([&] { code = run_discharge(discharge_o); });

  VerifyOpts verify_o;
  auto* verify_cmd =
      app.add_subcommand("verify", "check a coloring or a decomposition");
  verify_cmd
      ->add_option("graph", verify_o.graph_input, "graph file or - for stdin")
      ->required();
  verify_cmd->add_option("coloring", verify_o.coloring_input,
                         "coloring file (colors=k header plus vertex lines)");
  verify_cmd->add_option("--partition", verify_o.partition_input,
                         "partition file (one class per line)");
  verify_cmd->add_flag("--json", verify_o.as_json, "structured output");
  verify_cmd->callback([&] { code = run_verify(verify_o); });

  SearchOpts search_o;
  auto* search_cmd =
      app.add_subcommand("search", "extremal graphs above a color target");
  search_cmd->add_option("--target", search_o.target, "color count to exceed")
      ->required();
  search_cmd->add_option("--stream", search_o.stream,
                         "graph6 lines, file or - for stdin");
  search_cmd->add_option("--max-n", search_o.max_n,
                         "internal enumeration size limit (1..9)");
  search_cmd->add_option("--cap", search_o.cap,
                         "cap the per-record exact solver (0 = unlimited)");
  search_cmd->add_flag("--json", search_o.as_json, "structured output");
  search_cmd->callback([&] { code = run_search(search_o); });

  GenOpts gen_o;
  auto* gen_cmd = app.add_subcommand("gen", "emit a catalog or random graph");
  gen_cmd->add_option("name", gen_o.name,
                      "catalog name, e.g. C5, P4, K3,3, petersen, "
                      "spider(2,3), sub(K4,2)");
  gen_cmd->add_flag("--random", gen_o.random, "seeded sparse instance");
  gen_cmd->add_option("--forest", gen_o.forest, "seeded forest on n vertices");
  gen_cmd->add_option("--n", gen_o.n, "approximate vertex target");
  gen_cmd->add_option("--mad-bound", gen_o.mad_bound,
                      "density bound as p/q (emitted graph stays below it)");
  gen_cmd->add_option("--girth", gen_o.girth, "minimum girth");
  gen_cmd->add_option("--seed", gen_o.seed, "generator seed");
  gen_cmd->add_option("--method", gen_o.method,
                      "subdivision, rejection or thread-graft")
      ->check(CLI::IsMember({"subdivision", "rejection", "thread-graft"}));
  gen_cmd->add_flag("--json", gen_o.as_json, "structured output");
  gen_cmd->callback([&] { code = run_gen(gen_o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : 2;
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DecomposeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const stardecomp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
