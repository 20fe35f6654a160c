#ifndef COEVEN_BOUNDS_HPP
#define COEVEN_BOUNDS_HPP

#include <limits>
#include <string>
#include <vector>

#include "coeven/graph.hpp"
#include "coeven/solver.hpp"
#include "coeven/transforms.hpp"

namespace coeven {

// Machine-checkable verdict for one bound instance. Every verdict can be
// recomputed from the recorded values.
struct BoundReport {
  std::string graph_id;
  std::string parameter;       // "v=2 deg=3" or "k=3"
  int base_value = 0;          // odot: gamma_coe(G); subdivision: |V(G)|
  int transformed_value = -1;  // exact gamma_coe of the transformed graph, -1 if not solved
  int lower_bound = 0;
  int upper_bound = 0;
  int degree = -1;             // odot only
  bool exact = true;           // transformed_value was solved exactly
  bool lower_holds = false;
  bool upper_holds = false;
  bool lower_tight = false;
  bool upper_tight = false;
  bool construction_valid = false;  // constructive certificate passed the predicate
  int construction_size = -1;
  std::string note;
  VertexSet witness;  // optimal set on the transformed graph when solved exactly
};

std::string bound_report_to_json(const BoundReport& r);

// gamma_coe(G) - deg(v) + 1 <= gamma_coe(G odot v) <= gamma_coe(G) + deg(v) - 1.
// Evaluated with exact values on both graphs. For deg(v) = 0 the transform is
// the identity and both inequalities are necessarily violated; the report says
// so rather than skipping the case.
BoundReport check_odot_bounds(const Graph& g, int v, const SolverOptions& opts = {});

// For odd deg(v): some neighbour w of v is adjacent to an even number of
// vertices of N(v) (parity of the induced subgraph on N(v)). Returns the first
// such w in vertex order; its absence would be an internal failure.
int find_even_internal_neighbor(const Graph& g, int v);

// Constructive set transfers between G and G odot v. The input must be a
// co-even dominating set of the source graph; the output follows the
// case analysis on membership of v and parity of deg(v) and has size at most
// |D| + deg(v) - 1.
VertexSet transfer_coe_set_to_odot(const Graph& g, int v, const VertexSet& d);
VertexSet transfer_coe_set_from_odot(const Graph& g, int v, const VertexSet& d_odot);

// Constructive co-even dominating set on G^{1/k} for k >= 4: all of V(G) plus,
// per superedge, a minimum dominating set of the inner path on
// x_2..x_{k-2}. Size is exactly |V| + gamma_path(k-3) * |E|.
struct SubdivisionConstruction {
  Subdivision sub;
  VertexSet set;           // vertices of sub.graph
  int expected_size = 0;
};
SubdivisionConstruction construct_subdivision_coe_set(const Graph& g, int k);

// k = 2: gamma_coe(G^{1/2}) <= |V|.  k = 3: equality.  k >= 4:
// gamma_coe(G^{1/k}) <= |V| + gamma_path(k-3)|E|. When the subdivided graph
// exceeds the solver cap, only the constructive upper bound is certified and
// the report says so.
BoundReport check_subdivision_bounds(const Graph& g, int k, const SolverOptions& opts = {});

struct DiscrepancyRecord {
  std::string formula;  // which published value was compared
  std::string input;
  std::string published_value;
  std::string oracle_value;
  bool match = true;
};

std::string discrepancy_to_json(const DiscrepancyRecord& r);

struct CrossCheckLimits {
  int path_n_max = 12;
  int gamma_path_n_max = 14;
  int complete_n_max = 8;
  int bipartite_max = 3;
  int cycle_n_max = 12;
};

// Compares every published formula against the enumeration oracle over the
// requested ranges. Deterministic: identical limits give the identical list.
std::vector<DiscrepancyRecord> cross_check_closed_forms(const CrossCheckLimits& limits = {},
                                                        const SolverOptions& opts = {});

struct WitnessSearchConfig {
  int max_vertices = 4;
  int max_edges = std::numeric_limits<int>::max();
  enum class Mode { exhaustive_canonical, random };
  Mode mode = Mode::exhaustive_canonical;
  enum class Target { odot_upper_sharp, odot_lower_sharp, subdivision_upper_sharp };
  Target target = Target::odot_upper_sharp;
  int subdivision_k = 6;
  unsigned seed = 1;       // random mode
  int random_samples = 200;
  double edge_prob = 0.5;
  SolverOptions solver;
};

struct SharpnessWitness {
  Graph graph;
  std::string parameter;
  BoundReport report;
};

// All instances in the generated corpus where the targeted bound holds with
// equality, in deterministic corpus order.
std::vector<SharpnessWitness> search_sharpness_witnesses(const WitnessSearchConfig& config);

struct OdotSweepSummary {
  int graphs = 0;
  int pairs = 0;
  int violations = 0;             // deg(v) >= 1 instances failing a bound
  int degree_zero_findings = 0;   // deg(v) = 0 instances (identity transform, bounds fail)
  int transfer_failures = 0;      // deg(v) >= 1 transfer outputs failing the predicate
  int degree_zero_transfer_invalid = 0;
  int upper_tight = 0;
  int lower_tight = 0;
  int lower_tight_nontrivial = 0;  // deg(v) >= 2
  int upper_tight_nontrivial = 0;
  std::vector<BoundReport> violation_reports;  // deg(v) >= 1 only
};

// Exhaustive check of the sandwich bounds and both transfers over every
// isomorphism class with at most max_n vertices and every vertex choice.
OdotSweepSummary run_odot_sweep(int max_n, const SolverOptions& opts = {});

struct SubdivisionSweepSummary {
  int k = 0;
  int graphs = 0;
  int exact_checked = 0;       // subdivided graph fit the solver cap
  int construction_only = 0;
  int upper_violations = 0;
  int equality_failures = 0;   // k = 3 only
  int construction_failures = 0;
  std::vector<BoundReport> failing;
};

SubdivisionSweepSummary run_subdivision_sweep(int max_base_n, int k,
                                              const SolverOptions& opts = {});

}  // namespace coeven

#endif
