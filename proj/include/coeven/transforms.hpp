#ifndef COEVEN_TRANSFORMS_HPP
#define COEVEN_TRANSFORMS_HPP

#include <string>
#include <vector>

#include "coeven/graph.hpp"

namespace coeven {

// G (.) v: delete every edge joining two neighbours of v; v itself stays.
Graph odot(const Graph& g, int v);

// Bookkeeping for a k-subdivision: one record per base edge, oriented from
// the endpoint with the (string-)lexicographically smaller label. walk holds
// k+1 vertex indices of the subdivided graph: [end_lo, x_1, ..., x_{k-1}, end_hi].
struct SubdivisionMap {
  struct Superedge {
    int base_u, base_v;      // base-graph indices, as stored in the base edge list
    std::vector<int> walk;   // indices in the subdivided graph
  };
  int k = 1;
  std::vector<Superedge> superedges;  // in base edge order

  const Superedge* find(int base_u, int base_v) const;
};

struct Subdivision {
  Graph graph;
  SubdivisionMap map;
};

// Replace every edge by a path of length k. k = 1 leaves the graph as is.
// The result has |V| + (k-1)|E| vertices and k|E| edges.
Subdivision subdivide(const Graph& g, int k);

// Full walk from base_u to base_v (reversing the stored orientation if
// needed). Errors if (base_u, base_v) was not a base edge.
std::vector<int> superedge_walk(const SubdivisionMap& map, int base_u, int base_v);

std::string subdivision_map_to_json(const Graph& subdivided, const SubdivisionMap& map);

}  // namespace coeven

#endif
