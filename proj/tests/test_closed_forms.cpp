#include "coeven/closed_forms.hpp"

#include <sstream>

#include "coeven/solver.hpp"
#include "doctest.h"
#include "table1_data.hpp"

using namespace coeven;

TEST_CASE("gamma_path") {
  CHECK(gamma_path(3) == 1);
  CHECK(gamma_path(1) == 1);
  CHECK(gamma_path(7) == 3);
  CHECK_THROWS_AS(gamma_path(0), Error);
}

TEST_CASE("gamma_coe_path") {
  CHECK(gamma_coe_path(4) == 2);
  CHECK(gamma_coe_path(1) == 1);
  CHECK(gamma_coe_path(2) == 2);
  CHECK(gamma_coe_path(6) == 3);
  CHECK_THROWS_AS(gamma_coe_path(0), Error);
}

TEST_CASE("gamma formulas agree with the oracle for n = 1..14") {
  for (int n = 1; n <= 14; ++n) {
    CHECK(gamma_path(n) == domination_number(path_graph(n)).value);
    CHECK(gamma_coe_path(n) == coeven_domination_number(path_graph(n)).value);
  }
}

TEST_CASE("corrected path recurrence") {
  auto t = path_domination_table(14, PathRecurrence::corrected);
  CHECK(t.at(4, 2) == 4);  // d(P_3,1) + d(P_2,1) + d(P_1,1) = 1 + 2 + 1
  CHECK(t.at(5, 3) == 8);
  // full agreement with the enumeration oracle
  for (int n = 1; n <= 14; ++n) {
    auto oracle = count_dominating_sets(path_graph(n));
    for (int i = 0; i <= n; ++i) CHECK(t.at(n, i) == oracle.coeff[i]);
  }
}

TEST_CASE("printed path recurrence, mechanical application") {
  auto t = path_domination_table(6, PathRecurrence::as_printed);
  // d(P_4,2) = d(P_3,1) + d(P_3,0) + d(P_3,-1) = 1; disagrees with the oracle (4)
  CHECK(t.at(4, 2) == 1);
  CHECK(count_dominating_sets(path_graph(4)).coeff[2] == 4);
}

TEST_CASE("coe_path_count") {
  CHECK(coe_path_count(6, 4) == 4);   // d(P_4,2)
  CHECK(coe_path_count(6, 3) == 0);   // d(P_4,1); the oracle says 2
  CHECK(coe_path_count(12, 6) == 13); // d(P_10,4)
  CHECK_THROWS_AS(coe_path_count(2, 1), Error);
}

TEST_CASE("published path table is reproduced cell for cell") {
  auto rows = coe_path_table(12);
  int cells = 0;
  for (int n = 1; n <= 12; ++n) {
    REQUIRE(kPublishedPathTable[n - 1].size() == static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
      CHECK(rows[n][j] == kPublishedPathTable[n - 1][j - 1]);
      ++cells;
    }
  }
  CHECK(cells == 78);
}

TEST_CASE("coe_bipartite_counts per parity case") {
  auto k33 = coe_bipartite_counts(3, 3);
  CHECK(k33.coeff == std::vector<BigInt>{0, 0, 0, 0, 0, 0, 1});

  auto k32 = coe_bipartite_counts(3, 2);
  CHECK(k32.coeff == std::vector<BigInt>{0, 0, 0, 3, 3, 1});

  auto k22 = coe_bipartite_counts(2, 2);
  CHECK(k22.coeff[1] == 0);
  CHECK(k22.coeff[2] == 4);  // published value; the oracle counts 6
  CHECK(k22.coeff[3] == 4);
  CHECK(k22.coeff[4] == 1);

  // symmetric argument order
  CHECK(coe_bipartite_counts(2, 3).coeff == k32.coeff);
}

TEST_CASE("coe_complete_counts") {
  auto k4 = coe_complete_counts(4);
  CHECK(k4.coeff == std::vector<BigInt>{0, 0, 0, 0, 1});
  CHECK(coe_complete_counts(5).coeff[2] == 10);
  CHECK(coe_complete_counts(1).coeff == std::vector<BigInt>{0, 1});
}

TEST_CASE("complete counts match the oracle for n <= 8") {
  for (int n = 1; n <= 8; ++n)
    CHECK(coe_complete_counts(n).coeff ==
          count_coeven_dominating_sets(complete_graph(n)).coeff);
}

TEST_CASE("both-odd bipartite counts match the oracle") {
  for (int n : {1, 3})
    for (int m : {1, 3})
      CHECK(coe_bipartite_counts(n, m).coeff ==
            count_coeven_dominating_sets(complete_bipartite_graph(n, m)).coeff);
}

TEST_CASE("family generating functions") {
  CHECK(polynomial_to_string(family_generating_function(Family::complete_bipartite, 3, 3)) ==
        "x^6");
  CHECK(polynomial_to_string(family_generating_function(Family::complete, 4, 0)) == "x^4");
  CHECK(polynomial_to_string(family_generating_function(Family::complete, 3, 0)) ==
        "3x + 3x^2 + x^3");
  CHECK_THROWS_AS(family_generating_function(Family::cycle, 5, 0), Error);
}

TEST_CASE("tsv rendering") {
  std::string one = path_table_tsv(1, false);
  CHECK(one == "n\\j\t1\n1\t1\n");

  // oracle mode differs from the published table at row 6, column 3
  std::string published = path_table_tsv(6, false);
  std::string oracle = path_table_tsv(6, true);
  CHECK(published != oracle);
  CHECK(published.find("\t0\t0\t0\t4\t4\t1") != std::string::npos);
}
