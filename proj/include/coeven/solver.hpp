#ifndef COEVEN_SOLVER_HPP
#define COEVEN_SOLVER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "coeven/graph.hpp"

namespace coeven {

using BigInt = boost::multiprecision::cpp_int;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<int>;

struct SolveResult {
  int value = 0;
  VertexSet witness;  // lexicographically least optimal set, in vertex order
};

// coeff[i] = number of qualifying sets of cardinality i, i = 0..n.
struct CountsByCardinality {
  std::vector<BigInt> coeff;
  int min_nonzero() const;  // -1 if all zero
};

struct SolverOptions {
  int cap = 24;  // largest vertex count the exhaustive routines accept
};

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_coeven_dominating(const Graph& g, const VertexSet& d);

// Vertices of odd or zero degree; every co-even dominating set contains them.
VertexSet forced_vertices(const Graph& g);

SolveResult domination_number(const Graph& g, const SolverOptions& opts = {});
SolveResult coeven_domination_number(const Graph& g, const SolverOptions& opts = {});

CountsByCardinality count_dominating_sets(const Graph& g, const SolverOptions& opts = {});
CountsByCardinality count_coeven_dominating_sets(const Graph& g,
                                                 const SolverOptions& opts = {});

// Coefficient list of the generating function, ascending powers, zeros kept.
std::vector<BigInt> generating_function(const CountsByCardinality& counts);

// "x^2 + 2x^3 + x^4"; "0" when every coefficient vanishes.
std::string polynomial_to_string(const std::vector<BigInt>& coeff);

// Structured record for counts: {"graph": ..., "cap": ..., "coefficients": [...]}.
std::string counts_to_json(const Graph& g, const CountsByCardinality& counts, int cap);

std::string vertex_set_to_string(const Graph& g, const VertexSet& d);

}  // namespace coeven

#endif
