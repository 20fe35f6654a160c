#ifndef COEVEN_SMALL_GRAPHS_HPP
#define COEVEN_SMALL_GRAPHS_HPP

#include <random>
#include <vector>

#include "coeven/graph.hpp"

namespace coeven {

// Exact isomorphism test for small graphs (refinement-pruned backtracking).
// Intended for n up to ~10.
bool isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class, deterministic order. Built by
// augmenting the (n-1)-vertex representatives with every possible
// neighborhood of a new vertex and deduplicating.
std::vector<Graph> nonisomorphic_graphs(int n);

// Classes on 1..max_n vertices, concatenated by vertex count.
std::vector<Graph> nonisomorphic_graphs_up_to(int max_n);

// G(n, p) with the given generator; deterministic for a fixed seed.
Graph random_graph(int n, double edge_prob, std::mt19937_64& rng);

}  // namespace coeven

#endif
