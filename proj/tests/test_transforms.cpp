#include <random>
#include <set>

#include "coeven/graph.hpp"
#include "coeven/small_graphs.hpp"
#include "coeven/transforms.hpp"
#include "doctest.h"

using namespace coeven;

TEST_CASE("odot on a star leaves it unchanged") {
  Graph s = star_graph(4);
  CHECK(odot(s, 0) == s);
  CHECK_THROWS_AS(odot(s, 9), Error);
}

TEST_CASE("odot removes exactly the edges inside N(v)") {
  Graph k3 = complete_graph(3);
  Graph h = odot(k3, 0);
  // edge 1-2 removed, path 1-0-2 remains
  CHECK(h.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

  Graph k4 = complete_graph(4);
  Graph star = odot(k4, 0);
  CHECK(star.m() == 3);
  CHECK(star.degree(0) == 3);
  for (int v = 1; v < 4; ++v) CHECK(star.degree(v) == 1);

  // edge-set difference is exactly the pairs inside N(v)
  std::set<std::pair<int, int>> removed;
  for (auto e : k4.edges())
    if (!star.has_edge(e.first, e.second)) removed.insert(e);
  CHECK(removed == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("odot is idempotent and never raises a degree") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
    int v = static_cast<int>(rng() % g.n());
    Graph once = odot(g, v);
    CHECK(odot(once, v) == once);
    CHECK(once.degree(v) == g.degree(v));
    for (int u = 0; u < g.n(); ++u) CHECK(once.degree(u) <= g.degree(u));
  }
}

TEST_CASE("subdivision with k=1 is the identity") {
  Graph g = complete_graph(4);
  auto sub = subdivide(g, 1);
  CHECK(sub.graph == g);
  CHECK(sub.map.superedges.size() == static_cast<std::size_t>(g.m()));
}

TEST_CASE("subdividing one edge gives a path") {
  auto sub = subdivide(path_graph(2), 3);
  CHECK(sub.graph.n() == 4);
  CHECK(sub.graph.m() == 3);
  CHECK(isomorphic(sub.graph, path_graph(4)));

  auto walk = superedge_walk(sub.map, 0, 1);
  CHECK(walk.size() == 4);
  CHECK(walk.front() == 0);
  CHECK(walk.back() == 1);
  CHECK(sub.graph.label(walk[1]).str() == "x_1^{0,1}");
  CHECK(sub.graph.label(walk[2]).str() == "x_2^{0,1}");

  auto rev = superedge_walk(sub.map, 1, 0);
  CHECK(rev.front() == 1);
  CHECK(rev.back() == 0);

  CHECK_THROWS_AS(superedge_walk(sub.map, 0, 3), Error);
}

TEST_CASE("subdividing a triangle with k=2 gives a 6-cycle") {
  auto sub = subdivide(complete_graph(3), 2);
  CHECK(sub.graph.n() == 6);
  CHECK(sub.graph.m() == 6);
  CHECK(isomorphic(sub.graph, cycle_graph(6)));
  for (const auto& se : sub.map.superedges) CHECK(se.walk.size() == 3);
}

TEST_CASE("subdivision size counts hold on a corpus") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
    for (int k = 2; k <= 6; ++k) {
      auto sub = subdivide(g, k);
      CHECK(sub.graph.n() == g.n() + (k - 1) * g.m());
      CHECK(sub.graph.m() == k * g.m());
      // internal vertices all have degree 2
      for (int v = g.n(); v < sub.graph.n(); ++v) CHECK(sub.graph.degree(v) == 2);
      // each superedge has exactly k-1 internal vertices, owned by it alone
      std::set<int> seen;
      for (const auto& se : sub.map.superedges) {
        CHECK(se.walk.size() == static_cast<std::size_t>(k + 1));
        for (std::size_t i = 1; i + 1 < se.walk.size(); ++i)
          CHECK(seen.insert(se.walk[i]).second);
      }
      CHECK(seen.size() == static_cast<std::size_t>((k - 1) * g.m()));
    }
  }
  CHECK_THROWS_AS(subdivide(path_graph(2), 0), Error);
}

TEST_CASE("6-vertex 9-edge graph subdivided with k=6") {
  // triangular prism: two triangles joined by a perfect matching
  Graph prism = Graph::build(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(prism.m() == 9);
  auto sub = subdivide(prism, 6);
  CHECK(sub.graph.n() == 6 + 5 * 9);
  CHECK(sub.graph.n() == 51);
  CHECK(sub.graph.m() == 54);
}

TEST_CASE("subdivision map serialization names internal vertices") {
  auto sub = subdivide(path_graph(2), 3);
  auto j = subdivision_map_to_json(sub.graph, sub.map);
  CHECK(j.find("\"k\":3") != std::string::npos);
  CHECK(j.find("[\"0\",\"x_1^{0,1}\",\"x_2^{0,1}\",\"1\"]") != std::string::npos);
}

TEST_CASE("isolated vertices survive subdivision untouched") {
  Graph g = Graph::build(3, {{0, 1}});
  auto sub = subdivide(g, 4);
  CHECK(sub.graph.n() == 3 + 3);
  CHECK(sub.graph.degree(2) == 0);
}
