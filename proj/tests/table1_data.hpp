#ifndef COEVEN_TESTS_TABLE1_DATA_HPP
#define COEVEN_TESTS_TABLE1_DATA_HPP

#include <vector>

// Published table of co-even dominating-set counts of paths P_n,
// rows n = 1..12, entries j = 1..n. 78 populated cells.
inline const std::vector<std::vector<long long>> kPublishedPathTable = {
    {1},
    {0, 1},
    {0, 1, 1},
    {0, 1, 2, 1},
    {0, 0, 1, 3, 1},
    {0, 0, 0, 4, 4, 1},
    {0, 0, 0, 3, 8, 5, 1},
    {0, 0, 0, 1, 10, 13, 6, 1},
    {0, 0, 0, 0, 8, 22, 19, 7, 1},
    {0, 0, 0, 0, 4, 26, 40, 26, 8, 1},
    {0, 0, 0, 0, 1, 22, 61, 65, 34, 9, 1},
    {0, 0, 0, 0, 0, 13, 70, 120, 98, 43, 10, 1},
};

#endif
