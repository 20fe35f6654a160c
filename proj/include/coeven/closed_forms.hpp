#ifndef COEVEN_CLOSED_FORMS_HPP
#define COEVEN_CLOSED_FORMS_HPP

#include <string>
#include <vector>

#include "coeven/solver.hpp"

namespace coeven {

// Printed formulas and recurrences, as published. They are deliberately kept
// apart from the enumeration oracle: where a formula is wrong, the
// cross-checks in bounds.hpp surface the disagreement instead of absorbing it.

int gamma_path(int n);      // ceil(n/3)
int gamma_coe_path(int n);  // 2 + ceil((n-4)/3); equals 1 at n = 1

enum class PathRecurrence {
  as_printed,  // d(P_n,i) = d(P_{n-1},i-1) + d(P_{n-1},i-2) + d(P_{n-1},i-3)
  corrected,   // d(P_n,i) = d(P_{n-1},i-1) + d(P_{n-2},i-1) + d(P_{n-3},i-1)
};

// d(P_n, i) for 1 <= n <= n_max; rows n <= 3 are seeded from the enumeration
// oracle, later rows follow the selected recurrence.
struct PathCountTable {
  PathRecurrence mode = PathRecurrence::corrected;
  std::vector<std::vector<BigInt>> rows;  // rows[n][i], i = 0..n; rows[0] unused

  // 0 outside the populated range (i < 0, i > n).
  BigInt at(int n, int i) const;
};

PathCountTable path_domination_table(int n_max, PathRecurrence mode);

// Published count of co-even dominating sets of P_n with cardinality i:
// d(P_{n-2}, i-2) from the corrected table for n >= 5. For n in {3, 4} the
// published table's rows are the plain small-case counts, which the n-2
// reduction does not reproduce; those rows are seeded directly.
BigInt coe_path_count(int n, int i);  // requires n >= 3

// Rows n = 1..n_max of the published path table (row n has entries j = 1..n).
std::vector<std::vector<BigInt>> coe_path_table(int n_max);

// Published per-parity counts for complete bipartite and complete graphs.
CountsByCardinality coe_bipartite_counts(int n, int m);
CountsByCardinality coe_complete_counts(int n);

enum class Family { path, cycle, complete, complete_bipartite, star };
Family family_from_string(const std::string& s);
Graph family_graph(Family f, int n, int m);

// Closed-form generating-function coefficients (ascending powers) for the
// families with published formulas: complete and complete bipartite graphs.
std::vector<BigInt> family_generating_function(Family f, int n, int m);

// Tab-separated rendering of the path table, rows n, columns j. When
// oracle_counts is set the cells come from exhaustive enumeration instead of
// the published reduction.
std::string path_table_tsv(int n_max, bool oracle_counts);

}  // namespace coeven

#endif
