#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coeven/bounds.hpp"
#include "coeven/closed_forms.hpp"
#include "coeven/graph.hpp"
#include "coeven/small_graphs.hpp"
#include "coeven/solver.hpp"
#include "coeven/transforms.hpp"
#include "json.hpp"

namespace {

using namespace coeven;

struct InputOptions {
  std::string input_file;
  std::vector<std::string> family_args;  // KIND N [M]
  int subdivide = 1;
  int cap = 24;
  unsigned seed = 1;  // reserved for randomized corpus modes
  std::string format = "text";
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool with_transform) {
  cmd->add_option("--input", in.input_file, "graph file (edge-list text: \"n m\" then edges)");
  cmd->add_option("--family", in.family_args, "family spec: KIND N [M]")->expected(2, 3);
  if (with_transform)
    cmd->add_option("--subdivide", in.subdivide, "apply a k-subdivision to the input first");
  cmd->add_option("--cap", in.cap, "enumeration cap (vertices)")->capture_default_str();
  cmd->add_option("--seed", in.seed, "seed for randomized corpus modes")->capture_default_str();
  cmd->add_option("--format", in.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

Graph load_graph(const InputOptions& in, std::string& description) {
  std::optional<Graph> g;
  if (!in.input_file.empty()) {
    std::ifstream f(in.input_file);
    if (!f) throw Error(Error::Kind::parse_error, "cannot open " + in.input_file);
    std::stringstream buf;
    buf << f.rdbuf();
    g = parse_edge_list(buf.str());
    description = in.input_file;
  }
  if (!in.family_args.empty()) {
    if (g) throw Error(Error::Kind::bad_parameter, "--input and --family are exclusive");
    Family f = family_from_string(in.family_args[0]);
    int n = std::stoi(in.family_args[1]);
    int m = in.family_args.size() > 2 ? std::stoi(in.family_args[2]) : 0;
    g = family_graph(f, n, m);
    description = in.family_args[0] + " " + in.family_args[1];
    if (in.family_args.size() > 2) description += " " + in.family_args[2];
  }
  if (!g) throw Error(Error::Kind::bad_parameter, "need --input FILE or --family KIND N [M]");
  if (in.subdivide != 1) {
    g = subdivide(*g, in.subdivide).graph;
    description += " ^(1/" + std::to_string(in.subdivide) + ")";
  }
  return *g;
}

int cmd_invariants(const InputOptions& in) {
  std::string desc;
  Graph g = load_graph(in, desc);
  SolverOptions opts{in.cap};
  auto gamma = domination_number(g, opts);
  auto coe = coeven_domination_number(g, opts);

  if (in.format == "structured") {
    nlohmann::json j;
    j["graph"] = desc;
    j["signature"] = g.signature();
    j["n"] = g.n();
    j["m"] = g.m();
    j["gamma"] = gamma.value;
    j["gamma_witness"] = nlohmann::json::array();
    for (int v : gamma.witness) j["gamma_witness"].push_back(g.label(v).str());
    j["gamma_coe"] = coe.value;
    j["gamma_coe_witness"] = nlohmann::json::array();
    for (int v : coe.witness) j["gamma_coe_witness"].push_back(g.label(v).str());
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "graph = " << desc << "\n";
  std::cout << "n = " << g.n() << "\n";
  std::cout << "m = " << g.m() << "\n";
  std::cout << "gamma = " << gamma.value << "\n";
  std::cout << "gamma_witness = " << vertex_set_to_string(g, gamma.witness) << "\n";
  std::cout << "gamma_coe = " << coe.value << "\n";
  std::cout << "gamma_coe_witness = " << vertex_set_to_string(g, coe.witness) << "\n";
  return 0;
}

int cmd_polynomial(const InputOptions& in, const std::string& kind) {
  std::string desc;
  Graph g = load_graph(in, desc);
  SolverOptions opts{in.cap};
  auto counts = kind == "dom" ? count_dominating_sets(g, opts)
                              : count_coeven_dominating_sets(g, opts);
  auto coeff = generating_function(counts);

  if (in.format == "structured") {
    nlohmann::json j;
    j["graph"] = desc;
    j["signature"] = g.signature();
    j["kind"] = kind;
    j["cap"] = in.cap;
    j["coefficients"] = nlohmann::json::array();
    for (const auto& c : coeff) j["coefficients"].push_back(c.str());
    j["polynomial"] = polynomial_to_string(coeff);
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "graph = " << desc << "\n";
  std::cout << "kind = " << kind << "\n";
  std::cout << "coefficients =";
  for (const auto& c : coeff) std::cout << " " << c;
  std::cout << "\n";
  std::cout << "polynomial = " << polynomial_to_string(coeff) << "\n";
  return 0;
}

int cmd_transform(const InputOptions& in, int odot_vertex, int subdivide_k) {
  std::string desc;
  Graph g = load_graph(in, desc);
  if ((odot_vertex >= 0) == (subdivide_k >= 1))
    throw Error(Error::Kind::bad_parameter, "pick exactly one of --odot V or --subdivide-k K");

  if (odot_vertex >= 0) {
    Graph h = odot(g, odot_vertex);
    if (in.format == "structured")
      std::cout << graph_to_json(h) << "\n";
    else
      std::cout << serialize_edge_list(h);
    return 0;
  }
  auto sub = subdivide(g, subdivide_k);
  if (in.format == "structured") {
    nlohmann::json j = nlohmann::json::parse(graph_to_json(sub.graph));
    j["subdivision"] = nlohmann::json::parse(subdivision_map_to_json(sub.graph, sub.map));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << serialize_edge_list(sub.graph);
  }
  return 0;
}

int cmd_table1(const InputOptions& in, int n_max, bool oracle) {
  if (in.format == "structured") {
    auto rows = oracle ? std::vector<std::vector<BigInt>>() : coe_path_table(n_max);
    nlohmann::json j;
    j["n_max"] = n_max;
    j["mode"] = oracle ? "oracle" : "published";
    j["rows"] = nlohmann::json::array();
    for (int n = 1; n <= n_max; ++n) {
      nlohmann::json row = nlohmann::json::array();
      if (oracle) {
        auto counts = count_coeven_dominating_sets(path_graph(n), SolverOptions{in.cap});
        for (int i = 1; i <= n; ++i) row.push_back(counts.coeff[i].str());
      } else {
        for (int i = 1; i <= n; ++i) row.push_back(rows[n][i].str());
      }
      j["rows"].push_back(row);
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << path_table_tsv(n_max, oracle);
  return 0;
}

int cmd_verify(const InputOptions& in, const std::string& scope, int max_n, int k) {
  SolverOptions opts{in.cap};
  bool structured = in.format == "structured";

  if (scope == "odot") {
    if (max_n <= 0) max_n = 6;
    auto s = run_odot_sweep(max_n, opts);
    if (structured) {
      nlohmann::json j;
      j["scope"] = "odot";
      j["max_n"] = max_n;
      j["graphs"] = s.graphs;
      j["pairs"] = s.pairs;
      j["violations"] = s.violations;
      j["degree_zero_findings"] = s.degree_zero_findings;
      j["degree_zero_transfer_invalid"] = s.degree_zero_transfer_invalid;
      j["transfer_failures"] = s.transfer_failures;
      j["upper_tight"] = s.upper_tight;
      j["lower_tight"] = s.lower_tight;
      j["lower_tight_nontrivial"] = s.lower_tight_nontrivial;
      j["violation_reports"] = nlohmann::json::array();
      for (const auto& r : s.violation_reports)
        j["violation_reports"].push_back(nlohmann::json::parse(bound_report_to_json(r)));
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "scope = odot (graphs up to " << max_n << " vertices)\n";
      std::cout << "graphs = " << s.graphs << "\n";
      std::cout << "pairs = " << s.pairs << "\n";
      std::cout << "violations (deg >= 1) = " << s.violations << "\n";
      std::cout << "findings: deg(v)=0 identity cases (bounds inapplicable) = "
                << s.degree_zero_findings << "\n";
      std::cout << "transfer failures (deg >= 1) = " << s.transfer_failures << "\n";
      std::cout << "upper-tight pairs = " << s.upper_tight << "\n";
      std::cout << "lower-tight pairs = " << s.lower_tight
                << " (deg >= 2: " << s.lower_tight_nontrivial << ")\n";
      for (const auto& r : s.violation_reports)
        std::cout << "VIOLATION " << r.graph_id << " " << r.parameter << "\n";
    }
    return (s.violations == 0 && s.transfer_failures == 0) ? 0 : 1;
  }

  if (scope == "subdivision") {
    if (max_n <= 0) max_n = 5;
    if (k <= 0) k = 3;
    auto s = run_subdivision_sweep(max_n, k, opts);
    if (structured) {
      nlohmann::json j;
      j["scope"] = "subdivision";
      j["max_n"] = max_n;
      j["k"] = k;
      j["graphs"] = s.graphs;
      j["exact_checked"] = s.exact_checked;
      j["construction_only"] = s.construction_only;
      j["upper_violations"] = s.upper_violations;
      j["equality_failures"] = s.equality_failures;
      j["construction_failures"] = s.construction_failures;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "scope = subdivision k=" << k << " (base graphs up to " << max_n
                << " vertices)\n";
      std::cout << "graphs = " << s.graphs << "\n";
      std::cout << "exact_checked = " << s.exact_checked << "\n";
      std::cout << "construction_only = " << s.construction_only << "\n";
      std::cout << "upper_violations = " << s.upper_violations << "\n";
      std::cout << "equality_failures = " << s.equality_failures << "\n";
      std::cout << "construction_failures = " << s.construction_failures << "\n";
      for (const auto& r : s.failing)
        std::cout << "FAILURE " << r.graph_id << " " << r.parameter << "\n";
    }
    return (s.upper_violations == 0 && s.equality_failures == 0 &&
            s.construction_failures == 0)
               ? 0
               : 1;
  }

  if (scope == "formulas") {
    CrossCheckLimits limits;
    if (max_n > 0) limits.path_n_max = max_n;
    auto records = cross_check_closed_forms(limits, opts);
    int mismatches = 0;
    for (const auto& r : records)
      if (!r.match) ++mismatches;
    if (structured) {
      nlohmann::json j;
      j["scope"] = "formulas";
      j["records"] = static_cast<int>(records.size());
      j["mismatches"] = nlohmann::json::array();
      for (const auto& r : records)
        if (!r.match) j["mismatches"].push_back(nlohmann::json::parse(discrepancy_to_json(r)));
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "scope = formulas\n";
      std::cout << "records = " << records.size() << "\n";
      std::cout << "mismatches = " << mismatches << "\n";
      for (const auto& r : records)
        if (!r.match)
          std::cout << "MISMATCH " << r.formula << " " << r.input << " published="
                    << r.published_value << " oracle=" << r.oracle_value << "\n";
    }
    // Formula mismatches are expected findings, not failures.
    return 0;
  }

  throw Error(Error::Kind::bad_parameter, "unknown scope: " + scope);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"co-even domination toolkit: exact invariants, counts, transforms and "
               "verification sweeps for small graphs"};
  app.require_subcommand(1);

  InputOptions in_inv, in_poly, in_tr, in_tab, in_ver;

  auto* inv = app.add_subcommand("invariants", "gamma and gamma_coe with witnesses");
  add_input_options(inv, in_inv, true);

  auto* poly = app.add_subcommand("polynomial", "counting polynomial coefficients");
  std::string kind = "coe";
  poly->add_option("--kind", kind, "coe|dom")
      ->check(CLI::IsMember({"coe", "dom"}))
      ->capture_default_str();
  add_input_options(poly, in_poly, true);

  auto* tr = app.add_subcommand("transform", "apply odot or a k-subdivision and print the graph");
  int odot_vertex = -1, subdivide_k = 0;
  tr->add_option("--odot", odot_vertex, "clear edges between neighbours of this vertex");
  tr->add_option("--subdivide-k", subdivide_k, "replace each edge by a path of length k");
  add_input_options(tr, in_tr, false);

  auto* tab = app.add_subcommand("table1", "co-even dominating-set counts of paths, TSV");
  int n_max = 12;
  bool oracle = false;
  tab->add_option("--n-max", n_max, "rows to print")->capture_default_str();
  tab->add_flag("--oracle", oracle, "cells from exhaustive enumeration instead of the published reduction");
  add_input_options(tab, in_tab, false);

  auto* ver = app.add_subcommand("verify", "bound sweeps and formula cross-checks");
  std::string scope;
  int ver_max_n = 0, ver_k = 0;
  ver->add_option("--scope", scope, "odot|subdivision|formulas")->required();
  ver->add_option("--max-n", ver_max_n, "corpus vertex limit");
  ver->add_option("--k", ver_k, "subdivision parameter");
  add_input_options(ver, in_ver, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return cmd_invariants(in_inv);
    if (poly->parsed()) return cmd_polynomial(in_poly, kind);
    if (tr->parsed()) return cmd_transform(in_tr, odot_vertex, subdivide_k);
    if (tab->parsed()) return cmd_table1(in_tab, n_max, oracle);
    if (ver->parsed()) return cmd_verify(in_ver, scope, ver_max_n, ver_k);
  } catch (const coeven::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
