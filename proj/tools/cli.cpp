#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "gammoid/ac_detector.hpp"
#include "gammoid/chain.hpp"
#include "gammoid/diagnostics.hpp"
#include "gammoid/error.hpp"
#include "gammoid/exact_sets.hpp"
#include "gammoid/families.hpp"
#include "gammoid/graph_io.hpp"
#include "gammoid/json.hpp"
#include "gammoid/matroid.hpp"

namespace gammoid::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string graph;
  std::string family;
  int depth = 0;
  std::string mode;
};

struct Loaded {
  LinkageProblem problem;
  GraphPresentation presentation;
  std::string label;
};

void add_input(CLI::App* sub, Input& in, bool with_mode = true) {
  auto* graph = sub->add_option("--graph", in.graph, "Graph file in the line format");
  auto* family = sub->add_option("--family", in.family, "Built-in family")->check(CLI::IsMember(family_names()));
  graph->excludes(family);
  sub->add_option("--depth", in.depth, "Truncation depth for --family")->check(CLI::PositiveNumber);
  if (with_mode) {
    sub->add_option("--mode", in.mode, "directed-edge | directed-vertex | undirected-edge | undirected-vertex");
  }
}

Loaded load(const Input& in) {
  if (in.graph.empty() == in.family.empty()) throw UsageError("give exactly one of --graph or --family");
  if (!in.graph.empty()) {
    LinkageProblem problem = read_graph_file(in.graph);
    if (!in.mode.empty()) problem.mode = parse_mode(in.mode);
    return {problem, static_presentation(problem), in.graph};
  }
  if (in.depth < 1) throw UsageError("--family needs --depth");
  GraphPresentation p = generate_family(in.family, in.depth);
  const Mode mode = in.mode.empty() ? Mode::DirectedEdge : parse_mode(in.mode);
  return {p.truncation(in.depth).problem(mode), p, in.family + "(" + std::to_string(in.depth) + ")"};
}

std::vector<VertexId> parse_vertices(const Digraph& g, const std::string& list) {
  std::vector<VertexId> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) out.push_back(g.at(name));
  }
  return normalized(std::move(out));
}

Json edge_json(const Digraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  return Json{{"id", e}, {"tail", g.name(edge.tail)}, {"head", g.name(edge.head)}};
}

Json edges_json(const Digraph& g, std::span<const EdgeId> edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back(edge_json(g, e));
  return out;
}

Json routes(const Digraph& g, std::span<const Path> paths) {
  Json out = Json::array();
  for (const Path& p : paths) out.push_back(vertex_names(g, p.vertices));
  return out;
}

Json set_json(const Digraph& g, std::span<const VertexId> vs) { return vertex_names(g, vs); }

// -- commands -----------------------------------------------------------------

Json cmd_gen(const Input& in) {
  if (in.family.empty() || in.depth < 1) throw UsageError("gen needs --family and --depth");
  const Loaded l = load(in);
  Json j{{"command", "gen"}, {"family", in.family}, {"depth", in.depth}, {"mode", to_string(l.problem.mode)}};
  j["graph"] = l.problem.graph;
  j["B"] = set_json(l.problem.graph, l.problem.sink_set);
  j["I"] = set_json(l.problem.graph, l.problem.sources);
  j["b"] = l.problem.sink ? Json(l.problem.graph.name(*l.problem.sink)) : Json(nullptr);
  return j;
}

LinkageProblem problem_from_gen(const Json& j) {
  LinkageProblem p;
  p.graph = j.at("graph").get<Digraph>();
  p.mode = parse_mode(j.at("mode").get<std::string>());
  for (const auto& n : j.at("B")) p.sink_set.push_back(p.graph.at(n.get<std::string>()));
  for (const auto& n : j.at("I")) p.sources.push_back(p.graph.at(n.get<std::string>()));
  if (!j.at("b").is_null()) p.sink = p.graph.at(j.at("b").get<std::string>());
  return p;
}

struct LinkArgs {
  std::string sources;
  std::string sinks;
  bool one_per_source = false;
  bool shared_sinks = false;
};

Json cmd_link(const Input& in, const LinkArgs& a) {
  const Loaded l = load(in);
  const Digraph& g = l.problem.graph;
  const auto sources = a.sources.empty() ? l.problem.sources : parse_vertices(g, a.sources);
  const auto sinks = a.sinks.empty() ? l.problem.sinks() : parse_vertices(g, a.sinks);
  LinkageOptions options;
  options.one_path_per_source = a.one_per_source;
  options.shared_sinks = a.shared_sinks;
  const MengerResult r = max_linkage(g, sources, sinks, l.problem.mode, options);
  Json j{{"command", "link"}, {"input", l.label}, {"mode", to_string(l.problem.mode)}, {"value", r.value()}};
  j["sources"] = set_json(g, sources);
  j["sinks"] = set_json(g, sinks);
  j["linkage"] = r.linkage;
  j["routes"] = routes(g, r.linkage.paths);
  j["separator"] = r.separator;
  j["separator_edges"] = edges_json(g, r.separator.edges);
  j["separator_vertices"] = set_json(g, r.separator.vertices);
  return j;
}

Json cmd_exact(const Input& in, const std::string& set, const std::string& sources_arg) {
  const Loaded l = load(in);
  const Digraph& g = l.problem.graph;
  if (!l.problem.sink) throw PreconditionError("the graph declares no single sink b");
  const VertexId b = *l.problem.sink;
  const auto d = parse_vertices(g, set);
  const auto sources = sources_arg.empty() ? l.problem.sources : parse_vertices(g, sources_arg);
  const ExactSet s = analyze(g, d, sources, b);
  Json j{{"command", "exact"}, {"input", l.label}, {"exact", s.exact}, {"order", s.order()}};
  j["set"] = set_json(g, s.members);
  j["crossing"] = edges_json(g, s.crossing);
  j["hull"] = std::find(d.begin(), d.end(), b) == d.end() ? set_json(g, s.hull) : Json(nullptr);
  return j;
}

struct ConstructArgs {
  int steps = 10;
  int window = 3;
  int max_depth = 256;
  int initial_depth = 2;
  std::string sources;
};

Json cmd_construct(const Input& in, const ConstructArgs& a) {
  const Loaded l = load(in);
  const bool wrap = !l.presentation.truncation(std::max(in.depth, 1)).sink;
  const GraphPresentation p = wrap ? sink_reduced(l.presentation) : l.presentation;
  ChainOptions options;
  options.steps = a.steps;
  options.max_depth = a.max_depth;
  options.initial_depth = a.initial_depth;
  if (!a.sources.empty()) {
    // Names resolve against a deep truncation so later vertices can be chosen.
    options.sources = parse_vertices(p.truncation(std::max(a.max_depth, 1)).graph, a.sources);
  }
  const Chain chain = build_chain(p, options);
  const Digraph& g = chain.graph;
  Json j{{"command", "construct"}, {"input", l.label}, {"sink", g.name(chain.sink)}, {"depth", chain.depth}};
  j["sink_added"] = wrap;
  Json steps = Json::array();
  for (const ChainState& s : chain.states) {
    Json prefixes = Json::array();
    for (const auto& [v, path] : s.prefixes) prefixes.push_back({{"source", g.name(v)}, {"route", vertex_names(g, path.vertices)}});
    steps.push_back({{"step", s.step},
                     {"depth", s.depth},
                     {"vertex", s.vertex ? Json(g.name(*s.vertex)) : Json(nullptr)},
                     {"covered", s.covered},
                     {"D", set_json(g, s.d)},
                     {"crossing", s.crossing},
                     {"linkage", s.linkage},
                     {"prefixes", std::move(prefixes)}});
  }
  j["steps"] = std::move(steps);
  j["uncovered"] = set_json(g, chain.uncovered);
  ClassifyOptions co;
  co.window = a.window;
  Json paths = Json::array();
  for (const ClassifiedPath& c : stabilized_paths(p, chain, co)) {
    paths.push_back({{"source", g.name(c.source)},
                     {"verdict", to_string(c.verdict)},
                     {"route", vertex_names(g, c.path.vertices)},
                     {"edges", c.path.edges},
                     {"witness_depths", c.witness_depths},
                     {"witness_counts", c.witness_counts},
                     {"diagnostic", c.diagnostic}});
  }
  j["paths"] = std::move(paths);
  j["violations"] = verify_chain(chain);
  return j;
}

struct MatroidArgs {
  std::string oracle = "flow";
  std::size_t circuits = 3;
};

Json cmd_matroid(const Input& in, const MatroidArgs& a) {
  const Loaded l = load(in);
  const auto sinks = l.problem.sinks();
  const SetSystem m = gammoid(l.problem.graph, sinks, l.problem.mode, parse_oracle(a.oracle));
  Json j{{"command", "matroid"}, {"input", l.label}, {"provenance", m.provenance()}, {"rank", m.rank()}};
  j["ground"] = m.ground();
  j["B"] = set_json(l.problem.graph, sinks);
  j["independent_sets"] = m.independent_sets().size();
  Json circ = Json::array();
  for (Subset c : circuits(m, a.circuits)) {
    Json names = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (c >> i & 1) names.push_back(m.ground()[i]);
    }
    circ.push_back(std::move(names));
  }
  j["circuits"] = std::move(circ);
  j["circuit_max_size"] = a.circuits;
  j["finitary"] = finitarize(m) == m;
  if (m.size() <= 14) {
    Json axioms = Json::array();
    for (const AxiomCheck& c : check_axioms(m).checks) {
      axioms.push_back({{"axiom", c.axiom}, {"holds", c.holds}, {"counterexample", c.counterexample}});
    }
    j["axioms"] = std::move(axioms);
  } else {
    j["axioms"] = nullptr;
  }
  return j;
}

Json cmd_detect_ac(const Input& in, int k, std::uint64_t budget) {
  const Loaded l = load(in);
  const Digraph& g = l.problem.graph;
  const auto sinks = l.problem.sink_set.empty() ? l.problem.sinks() : l.problem.sink_set;
  const AcResult r = find_ac_prefix(g, sinks, k, budget);
  Json j{{"command", "detect-ac"}, {"input", l.label}, {"k", k}, {"status", to_string(r.status)}, {"nodes", r.nodes}};
  if (r.embedding) {
    const AcEmbedding& e = *r.embedding;
    j["embedding"] = {{"b", set_json(g, e.b)},          {"v1", vertex_names(g, e.v1)},
                      {"v2", vertex_names(g, e.v2)},       {"pendant", routes(g, e.pendant)},
                      {"down", routes(g, e.down)},          {"across", routes(g, e.across)}};
  } else {
    j["embedding"] = nullptr;
  }
  return j;
}

std::vector<int> parse_depths(const std::string& text) {
  std::vector<int> out;
  try {
    if (auto dots = text.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int d = lo; d <= hi; ++d) out.push_back(d);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::logic_error&) {
    throw UsageError("--depths expects a list like 10,20,30 or a range like 10..30");
  }
  if (out.empty()) throw UsageError("--depths is empty");
  return out;
}

Json cmd_diagnose(const Input& in, const std::string& depths_arg, bool no_chain) {
  Input probe = in;
  const auto depths = parse_depths(depths_arg);
  if (!probe.family.empty() && probe.depth < 1) probe.depth = *std::max_element(depths.begin(), depths.end());
  const Loaded l = load(probe);
  DiagnosticOptions options;
  options.mode = l.problem.mode;
  options.run_chain = !no_chain;
  const DominationReport r = domination_diagnostics(l.presentation, depths, options);
  Json j{{"command", "diagnose"}, {"input", l.label}, {"mode", to_string(r.mode)}, {"depths", r.depths}};
  j["flagged_per_depth"] = r.flagged_per_depth;
  j["ray_candidates_per_depth"] = r.ray_candidates_per_depth;
  Json flagged = Json::array();
  std::vector<std::size_t> max_kappa(r.depths.size(), 0);
  for (const VertexKappa& v : r.vertices) {
    for (std::size_t i = 0; i < v.kappa.size(); ++i) max_kappa[i] = std::max(max_kappa[i], v.kappa[i]);
    if (v.flagged) flagged.push_back({{"vertex", v.name}, {"kappa", v.kappa}});
  }
  j["max_kappa_per_depth"] = max_kappa;
  j["flagged"] = std::move(flagged);
  j["chain_note"] = r.chain_note;
  j["verdict"] = to_string(nearly_finitary_verdict(r));
  return j;
}

// -- human rendering (a function of the JSON report only) ----------------------

std::string join(const Json& names, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i].is_string() ? names[i].get<std::string>() : names[i].dump();
  }
  return out;
}

std::string braces(const Json& names) { return "{" + join(names, ",") + "}"; }

void render_human(const Json& j, std::ostream& out) {
  const auto cmd = j.at("command").get<std::string>();
  if (cmd == "gen") {
    out << write_graph(problem_from_gen(j));
  } else if (cmd == "link") {
    out << "value " << j["value"] << " (" << j["mode"].get<std::string>() << ")\n";
    for (const auto& r : j["routes"]) out << "  path " << join(r, " -> ") << "\n";
    out << "separator:";
    for (const auto& e : j["separator_edges"]) out << " " << e["tail"].get<std::string>() << "->" << e["head"].get<std::string>();
    for (const auto& v : j["separator_vertices"]) out << " " << v.get<std::string>();
    out << "\n";
  } else if (cmd == "exact") {
    out << (j["exact"].get<bool>() ? "exact" : "not exact") << ", order " << j["order"];
    out << ", hull " << (j["hull"].is_null() ? std::string("undefined (b in D)") : braces(j["hull"])) << "\n";
    out << "crossing edges:";
    for (const auto& e : j["crossing"]) out << " " << e["tail"].get<std::string>() << "->" << e["head"].get<std::string>();
    out << "\n";
  } else if (cmd == "construct") {
    for (const auto& s : j["steps"]) {
      out << "step " << s["step"] << " depth " << s["depth"] << " |D| " << s["D"].size();
      if (!s["vertex"].is_null()) out << " v " << s["vertex"].get<std::string>() << (s["covered"].get<bool>() ? "" : " (uncovered)");
      out << " paths " << s["linkage"]["paths"].size() << "\n";
    }
    for (const auto& p : j["paths"]) {
      out << p["source"].get<std::string>() << ": " << p["verdict"].get<std::string>() << "  " << join(p["route"], " -> ");
      if (!p["witness_counts"].empty()) out << "  witnesses " << join(p["witness_counts"], ",");
      if (!p["diagnostic"].get<std::string>().empty()) out << "  (" << p["diagnostic"].get<std::string>() << ")";
      out << "\n";
    }
    if (!j["uncovered"].empty()) out << "uncovered: " << braces(j["uncovered"]) << "\n";
    for (const auto& v : j["violations"]) out << "violation: " << v.get<std::string>() << "\n";
  } else if (cmd == "matroid") {
    out << j["provenance"].get<std::string>() << " on " << braces(j["ground"]) << "\n";
    out << "rank " << j["rank"] << ", " << j["independent_sets"] << " independent sets\n";
    out << "circuits up to size " << j["circuit_max_size"] << ":";
    for (const auto& c : j["circuits"]) out << " " << braces(c);
    out << "\n";
    if (j["axioms"].is_null()) {
      out << "axioms: skipped (ground set too large)\n";
    } else {
      for (const auto& a : j["axioms"]) {
        out << "(" << a["axiom"].get<std::string>() << ") " << (a["holds"].get<bool>() ? "holds" : "fails");
        if (!a["holds"].get<bool>()) out << ": " << a["counterexample"].get<std::string>();
        out << "\n";
      }
    }
    out << "finitarization " << (j["finitary"].get<bool>() ? "unchanged" : "differs") << "\n";
  } else if (cmd == "detect-ac") {
    out << "AC depth " << j["k"] << ": " << j["status"].get<std::string>() << " (" << j["nodes"] << " nodes)\n";
    if (!j["embedding"].is_null()) {
      const auto& e = j["embedding"];
      for (std::size_t i = 0; i < e["v1"].size(); ++i) {
        out << "  j=" << i << " v1 " << e["v1"][i].get<std::string>() << " v2 " << e["v2"][i].get<std::string>() << " b "
            << e["b"][i].get<std::string>() << "\n";
        out << "    pendant " << join(e["pendant"][i], " -> ") << "\n";
        out << "    down    " << join(e["down"][i], " -> ") << "\n";
        if (i < e["across"].size()) out << "    across  " << join(e["across"][i], " -> ") << "\n";
      }
    }
  } else if (cmd == "diagnose") {
    out << "depths " << join(j["depths"], ",") << "\n";
    out << "max kappa per depth: " << join(j["max_kappa_per_depth"], ",") << "\n";
    out << "flagged vertices per depth: " << join(j["flagged_per_depth"], ",") << "\n";
    for (const auto& f : j["flagged"]) out << "  " << f["vertex"].get<std::string>() << " kappa " << join(f["kappa"], ",") << "\n";
    out << "ray candidates per depth: " << join(j["ray_candidates_per_depth"], ",") << "\n";
    if (!j["chain_note"].get<std::string>().empty()) out << "note: " << j["chain_note"].get<std::string>() << "\n";
    out << "nearly finitary: " << j["verdict"].get<std::string>() << " (evidence from finite truncations)\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linkages, exact sets and gammoids on finite and truncated digraphs", "gammoid"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  std::uint64_t budget = 2'000'000;
  app.add_option("--format", format, "human | json")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--budget", budget, "Search budget for detect-ac");

  Input in;
  std::string output;
  auto* gen = app.add_subcommand("gen", "Write a family truncation in the graph format");
  add_input(gen, in);
  gen->add_option("--output", output, "Write the graph file here instead of stdout");

  LinkArgs link_args;
  auto* link = app.add_subcommand("link", "Maximum linkage and minimum separator");
  add_input(link, in);
  link->add_option("--sources", link_args.sources, "Comma-separated source names (default: I)");
  link->add_option("--sinks", link_args.sinks, "Comma-separated sink names (default: b or B)");
  link->add_flag("--one-per-source", link_args.one_per_source, "At most one path per source");
  link->add_flag("--shared-sinks", link_args.shared_sinks, "Vertex modes: paths may share their sink");

  std::string set;
  std::string exact_sources;
  auto* exact = app.add_subcommand("exact", "Order, crossing edges, exactness and hull of a vertex set");
  add_input(exact, in);
  exact->add_option("--set", set, "Comma-separated vertex names")->required();
  exact->add_option("--sources", exact_sources, "Override I");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Nested exact hulls with compatible linkages");
  add_input(construct, in, false);
  construct->add_option("--steps", construct_args.steps)->check(CLI::NonNegativeNumber);
  construct->add_option("--window", construct_args.window)->check(CLI::PositiveNumber);
  construct->add_option("--max-depth", construct_args.max_depth)->check(CLI::PositiveNumber);
  construct->add_option("--initial-depth", construct_args.initial_depth)->check(CLI::PositiveNumber);
  construct->add_option("--sources", construct_args.sources, "Override I");

  MatroidArgs matroid_args;
  auto* matroid = app.add_subcommand("matroid", "Rank, circuits and axiom report of the gammoid");
  add_input(matroid, in);
  matroid->add_option("--oracle", matroid_args.oracle, "flow | brute")->check(CLI::IsMember({"flow", "brute"}));
  matroid->add_option("--circuits", matroid_args.circuits, "Largest circuit size to list");

  int k = 1;
  auto* detect = app.add_subcommand("detect-ac", "Search for a depth-k alternating comb prefix");
  add_input(detect, in, false);
  detect->add_option("--k", k, "Depth of the prefix")->required()->check(CLI::PositiveNumber);

  std::string depths;
  bool no_chain = false;
  auto* diagnose = app.add_subcommand("diagnose", "Domination evidence and nearly-finitary verdict");
  add_input(diagnose, in);
  diagnose->add_option("--depths", depths, "List 10,20,30 or range 10..30")->required();
  diagnose->add_flag("--no-chain", no_chain, "Skip the constructor runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Json report;
    if (*gen) {
      report = cmd_gen(in);
      if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw Error("cannot write " + output);
        file << write_graph(problem_from_gen(report));
      }
    } else if (*link) {
      report = cmd_link(in, link_args);
    } else if (*exact) {
      report = cmd_exact(in, set, exact_sources);
    } else if (*construct) {
      report = cmd_construct(in, construct_args);
    } else if (*matroid) {
      report = cmd_matroid(in, matroid_args);
    } else if (*detect) {
      report = cmd_detect_ac(in, k, budget);
    } else if (*diagnose) {
      report = cmd_diagnose(in, depths, no_chain);
    }
    if (format == "json") {
      out << report.dump(2) << "\n";
    } else {
      render_human(report, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gammoid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gammoid::cli
