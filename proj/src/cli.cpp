#include "ccdim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccdim/cc_dimension.hpp"
#include "ccdim/cliques.hpp"
#include "ccdim/errors.hpp"
#include "ccdim/families.hpp"
#include "ccdim/io.hpp"
#include "ccdim/oracles.hpp"
#include "ccdim/racg.hpp"
#include "ccdim/separators.hpp"

namespace ccdim {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kVersion = "0.1.0";

struct Options {
  std::string input;
  std::string family;
  std::vector<long long> params;
  long long seed = 1;
  std::string input_format = "auto";
  std::string format = "text";
  std::string out_path;
  int budget = kDefaultBudget;
  bool optimize = false;
  int max_n = 5;
};

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "graph file (edge list or DOT); '-' reads standard input");
  cmd->add_option("--family", o.family, "generate a named family instead of reading a file");
  cmd->add_option("--params", o.params, "family parameters, comma separated")->delimiter(',');
  cmd->add_option("--seed", o.seed, "seed for the random family");
  cmd->add_option("--input-format", o.input_format, "edgelist, dot, or auto (by extension)")
      ->check(CLI::IsMember({"auto", "edgelist", "dot"}));
}

void add_report_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out_path, "write the report to a file instead of standard output");
}

void add_budget_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget, "vertex limit for the exact exponential scans");
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const Options& o) {
  const bool has_file = !o.input.empty();
  const bool has_family = !o.family.empty();
  if (has_file && has_family) {
    fail(ErrorKind::BadParams, "provide either an input file or --family, not both");
  }
  if (!has_file && !has_family) {
    fail(ErrorKind::BadParams, "no input: pass a file (or '-') or --family");
  }
  if (has_family) {
    std::vector<long long> params = o.params;
    if (o.family == "random" && params.size() == 2) params.push_back(o.seed);
    return gen_family(o.family, params);
  }
  const std::string text = read_input(o.input);
  std::string fmt = o.input_format;
  if (fmt == "auto") {
    fmt = ends_with(o.input, ".dot") || ends_with(o.input, ".gv") ? "dot" : "edgelist";
  }
  return fmt == "dot" ? parse_dot_subset(text) : parse_edgelist(text);
}

// Vertex sets are serialized in label order so reports do not depend on the
// internal vertex numbering.
ordered_json label_array(const Graph& g, const VertexSet& s) {
  return ordered_json(sorted_labels_of(g, s));
}

ordered_json label_matrix(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(sets.size());
  for (const VertexSet& s : sets) rows.push_back(sorted_labels_of(g, s));
  std::sort(rows.begin(), rows.end());
  return ordered_json(rows);
}

ordered_json graph_json(const Graph& g) {
  ordered_json j;
  j["vertices"] = g.labels();
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["connected"] = is_connected(g);
  return j;
}

ordered_json separator_json(const Graph& g, const Separator& sep) {
  ordered_json j;
  j["cut"] = label_array(g, sep.cut);
  ordered_json comps = ordered_json::array();
  for (const VertexSet& c : sep.components) comps.push_back(label_array(g, c));
  j["components"] = std::move(comps);
  return j;
}

ordered_json tree_json(const Graph& g, const DecompNode& node) {
  ordered_json j;
  j["kind"] = std::string(to_string(node.kind));
  j["support"] = label_array(g, node.support);
  if (node.kind == DecompKind::CliqueLeaf) j["order"] = node.leaf_order();
  if (node.cut) j["cut"] = label_array(g, node.cut->cut);
  if (!node.children.empty()) {
    ordered_json kids = ordered_json::array();
    for (const DecompNode& c : node.children) kids.push_back(tree_json(g, c));
    j["children"] = std::move(kids);
  }
  return j;
}

std::string set_text(const ordered_json& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ',';
    s += labels[i].get<std::string>();
  }
  return s + "}";
}

bool is_label_array(const ordered_json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v) {
    if (!e.is_string()) return false;
  }
  return true;
}

void render_tree_text(std::ostream& os, const ordered_json& node, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << node["kind"].get<std::string>()
     << ' ' << set_text(node["support"]);
  if (node.contains("cut")) os << " cut=" << set_text(node["cut"]);
  if (node.contains("order")) os << " order=" << node["order"];
  os << '\n';
  if (node.contains("children")) {
    for (const auto& c : node["children"]) render_tree_text(os, c, depth + 1);
  }
}

// Text reports print the same keys and values as the json results object, one
// "key: value" line per scalar, so the two formats never disagree.
void render_results_text(std::ostream& os, const ordered_json& results) {
  for (const auto& [key, value] : results.items()) {
    if (key == "subcommand") continue;
    if (key == "tree") {
      os << "tree:\n";
      render_tree_text(os, value, 1);
    } else if (key == "cuts") {
      for (const auto& sep : value) {
        os << "cut: " << set_text(sep["cut"]) << " components:";
        for (const auto& comp : sep["components"]) os << ' ' << set_text(comp);
        os << '\n';
      }
    } else if (key == "failures") {
      for (const auto& f : value) {
        os << "failure: n=" << f["n"] << " edge_mask=" << f["edge_mask"] << " ["
           << f["edges"].get<std::string>() << "] " << f["property"].get<std::string>()
           << ": expected " << f["expected"].get<std::string>() << ", got "
           << f["actual"].get<std::string>() << '\n';
      }
    } else if (is_label_array(value)) {
      os << key << ": " << set_text(value) << '\n';
    } else if (value.is_array()) {
      for (const auto& entry : value) os << key << ": " << set_text(entry) << '\n';
    } else if (value.is_string()) {
      os << key << ": " << value.get<std::string>() << '\n';
    } else {
      os << key << ": " << value << '\n';
    }
  }
}

struct Report {
  ordered_json results;
  ordered_json witnesses;
  const Graph* graph = nullptr;
  bool raw_text = false;   // text mode prints results["edgelist"] verbatim
  int exit_code = 0;
};

void write_report(const Report& r, const Options& o, std::ostream& out, std::ostream& err) {
  std::ostringstream body;
  if (o.format == "json") {
    ordered_json doc;
    doc["version"] = kVersion;
    if (r.graph) doc["graph"] = graph_json(*r.graph);
    doc["results"] = r.results;
    if (!r.witnesses.empty()) doc["witnesses"] = r.witnesses;
    body << doc.dump(2) << '\n';
  } else if (r.raw_text) {
    body << r.results.at("edgelist").get<std::string>();
  } else {
    render_results_text(body, r.results);
    for (const auto& [key, value] : r.witnesses.items()) {
      body << key << ": " << set_text(value) << '\n';
    }
  }
  if (o.out_path.empty()) {
    out << body.str();
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) fail(ErrorKind::BadParams, "cannot write " + o.out_path);
  file << body.str();
  if (!file.good()) fail(ErrorKind::BadParams, "cannot write " + o.out_path);
  (void)err;
}

Report run_cliques(const Graph& g) {
  Report r;
  const CliqueTwin twin = maximal_cliques(g);
  r.results["subcommand"] = "cliques";
  r.results["m_c"] = twin.size();
  r.results["cliques"] = label_matrix(g, twin.cliques);
  return r;
}

Report run_cuts(const Graph& g) {
  Report r;
  std::vector<Separator> cuts = vertex_cuts(g);
  std::sort(cuts.begin(), cuts.end(), [&](const Separator& a, const Separator& b) {
    return sorted_labels_of(g, a.cut) < sorted_labels_of(g, b.cut);
  });
  r.results["subcommand"] = "cuts";
  r.results["count"] = cuts.size();
  ordered_json list = ordered_json::array();
  for (const Separator& sep : cuts) list.push_back(separator_json(g, sep));
  r.results["cuts"] = std::move(list);
  return r;
}

Report run_cc(const Graph& g) {
  Report r;
  const CcResult res = cc(g);
  r.results["subcommand"] = "cc";
  r.results["value"] = res.value;
  if (res.witness_cut) {
    r.witnesses["cut"] = label_array(g, res.witness_cut->cut);
    r.results["cut_components"] = label_matrix(g, res.witness_cut->components);
  }
  if (res.witness_component) r.witnesses["component"] = label_array(g, *res.witness_component);
  return r;
}

Report run_dimcc(const Graph& g, const Options& o) {
  Report r;
  const DimCcResult res = dim_cc(g, o.budget);
  r.results["subcommand"] = "dimcc";
  r.results["value"] = res.value;
  r.witnesses["subgraph"] = label_array(g, res.witness_subgraph);
  if (res.witness_cut) {
    r.witnesses["cut"] = label_array(g, res.witness_cut->cut);
    r.results["cut_components"] = label_matrix(g, res.witness_cut->components);
  }
  return r;
}

Report run_bound(const Graph& g, const Options& o) {
  Report r;
  r.results["subcommand"] = "bound";
  r.results["value"] = recursive_bound(g, o.optimize, o.budget);
  r.results["optimize"] = o.optimize;
  return r;
}

Report run_davis(const Graph& g) {
  Report r;
  r.results["subcommand"] = "davis";
  r.results["value"] = davis_dimension(g);
  return r;
}

Report run_decompose(const Graph& g, const Options& o) {
  Report r;
  const DecompNode tree = decompose(g, o.budget);
  r.results["subcommand"] = "decompose";
  r.results["leaf_count"] = tree.leaf_count();
  r.results["depth"] = tree.depth();
  r.results["tree"] = tree_json(g, tree);
  return r;
}

Report run_classify(const Graph& g, const Options& o) {
  Report r;
  const AnalysisReport a = analyze(g, o.budget);
  r.results["subcommand"] = "classify";
  r.results["classification"] = std::string(to_string(a.classification));
  r.results["dim_cc"] = a.dim_cc.value;
  r.results["asdim_lower_bound"] = a.asdim_lower_bound;
  r.results["combined_upper_bound"] = a.combined_upper_bound;
  if (a.asdim_exact) r.results["asdim_exact"] = *a.asdim_exact;
  return r;
}

Report run_analyze(const Graph& g, const Options& o) {
  Report r;
  const AnalysisReport a = analyze(g, o.budget);
  r.results["subcommand"] = "analyze";
  r.results["vertex_count"] = a.vertex_count;
  r.results["edge_count"] = a.edge_count;
  r.results["connected"] = a.connected;
  r.results["m_c"] = a.m_c;
  r.results["cc"] = a.cc.value;
  r.results["dim_cc"] = a.dim_cc.value;
  r.results["davis_dimension"] = a.davis_dimension;
  r.results["recursive_bound"] = a.recursive_bound;
  r.results["combined_upper_bound"] = a.combined_upper_bound;
  r.results["asdim_lower_bound"] = a.asdim_lower_bound;
  if (a.asdim_exact) r.results["asdim_exact"] = *a.asdim_exact;
  r.results["classification"] = std::string(to_string(a.classification));
  if (a.cc.witness_cut) r.witnesses["cc_cut"] = label_array(g, a.cc.witness_cut->cut);
  if (a.cc.witness_component) {
    r.witnesses["cc_component"] = label_array(g, *a.cc.witness_component);
  }
  r.witnesses["dim_subgraph"] = label_array(g, a.dim_cc.witness_subgraph);
  if (a.dim_cc.witness_cut) r.witnesses["dim_cut"] = label_array(g, a.dim_cc.witness_cut->cut);
  if (a.long_cycle) r.witnesses["long_cycle"] = label_array(g, *a.long_cycle);
  return r;
}

Report run_witness(const Graph& g) {
  Report r;
  const auto cycle = find_induced_long_cycle(g);
  r.results["subcommand"] = "witness";
  r.results["chordal"] = !cycle.has_value();
  if (cycle) r.witnesses["long_cycle"] = label_array(g, *cycle);
  return r;
}

Report run_gen(const Graph& g, const Options& o) {
  Report r;
  r.results["subcommand"] = "gen";
  r.results["family"] = o.family;
  r.results["edgelist"] = to_edgelist(g);
  r.raw_text = true;
  return r;
}

Report run_selftest(const Options& o) {
  Report r;
  const CheckReport report = run_lemma_suite(o.max_n);
  r.results["subcommand"] = "selftest";
  r.results["suite"] = report.suite;
  r.results["max_n"] = o.max_n;
  r.results["instances"] = report.instances;
  r.results["failure_count"] = report.failures.size();
  ordered_json failures = ordered_json::array();
  for (const CheckFailure& f : report.failures) {
    ordered_json j;
    j["n"] = f.n;
    j["edge_mask"] = f.edge_mask;
    j["edges"] = f.edges;
    j["property"] = f.property;
    j["expected"] = f.expected;
    j["actual"] = f.actual;
    failures.push_back(std::move(j));
  }
  r.results["failures"] = std::move(failures);
  r.exit_code = report.passed() ? 0 : 1;
  return r;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotConnected:
    case ErrorKind::BudgetExceeded:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"clique-connected dimension toolkit for right-angled Coxeter groups"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  const std::vector<std::string> graph_cmds = {
      "cliques", "cuts", "cc", "dimcc", "bound", "davis", "decompose", "classify", "analyze",
      "witness"};
  for (const std::string& name : graph_cmds) {
    CLI::App* cmd = app.add_subcommand(name);
    add_input_options(cmd, o);
    add_report_options(cmd, o);
  }
  app.get_subcommand("cliques")->description("maximal cliques and m_c");
  app.get_subcommand("cuts")->description("inclusion-minimal vertex cuts");
  app.get_subcommand("cc")->description("clique-connectedness CC");
  app.get_subcommand("dimcc")->description("clique-connected dimension dim_cc");
  app.get_subcommand("bound")->description("recursive asymptotic-dimension bound");
  app.get_subcommand("davis")->description("Davis-complex dimension (largest clique)");
  app.get_subcommand("decompose")->description("amalgam decomposition tree");
  app.get_subcommand("classify")->description("group classification from the bounds");
  app.get_subcommand("analyze")->description("full report: invariants, bounds, classification");
  app.get_subcommand("witness")->description("induced long cycle, or chordal");
  for (const char* name : {"dimcc", "bound", "decompose", "classify", "analyze"}) {
    add_budget_option(app.get_subcommand(name), o);
  }
  app.get_subcommand("bound")->add_flag("--optimize", o.optimize,
                                        "minimize the bound over all cuts at every level");

  CLI::App* gen = app.add_subcommand("gen", "emit a generated family as an edge list");
  gen->add_option("--family", o.family, "family name")->required();
  gen->add_option("--params", o.params, "family parameters, comma separated")->delimiter(',');
  gen->add_option("--seed", o.seed, "seed for the random family");
  add_report_options(gen, o);

  CLI::App* selftest = app.add_subcommand("selftest", "run the exhaustive property suites");
  selftest->add_option("--max-n", o.max_n, "largest vertex count to enumerate");
  add_report_options(selftest, o);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  if (o.budget > 20) {
    err << "warning: --budget " << o.budget
        << " drives scans over 2^" << o.budget << " subgraphs; expect a very long run\n";
  }

  try {
    Report report;
    std::optional<Graph> g;
    if (sub == "selftest") {
      report = run_selftest(o);
    } else {
      g = load_graph(o);
      if (sub == "cliques") report = run_cliques(*g);
      else if (sub == "cuts") report = run_cuts(*g);
      else if (sub == "cc") report = run_cc(*g);
      else if (sub == "dimcc") report = run_dimcc(*g, o);
      else if (sub == "bound") report = run_bound(*g, o);
      else if (sub == "davis") report = run_davis(*g);
      else if (sub == "decompose") report = run_decompose(*g, o);
      else if (sub == "classify") report = run_classify(*g, o);
      else if (sub == "analyze") report = run_analyze(*g, o);
      else if (sub == "witness") report = run_witness(*g);
      else if (sub == "gen") report = run_gen(*g, o);
      report.graph = &*g;
    }
    write_report(report, o, out, err);
    return report.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    if (o.format == "json") {
      ordered_json doc;
      doc["version"] = kVersion;
      doc["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      (out << doc.dump(2) << '\n').flush();
    }
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ccdim
