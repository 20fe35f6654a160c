#include "coeven/transforms.hpp"

#include <algorithm>

#include "json.hpp"

namespace coeven {

Graph odot(const Graph& g, int v) {
  g.check_vertex(v);
  const auto& nb = g.neighbors(v);
  std::vector<std::pair<int, int>> kept;
  kept.reserve(g.edges().size());
  auto in_nb = [&](int x) { return std::binary_search(nb.begin(), nb.end(), x); };
  for (auto [a, b] : g.edges()) {
    if (in_nb(a) && in_nb(b)) continue;
    kept.emplace_back(a, b);
  }
  return Graph::build_labeled(g.labels(), kept);
}

const SubdivisionMap::Superedge* SubdivisionMap::find(int base_u, int base_v) const {
  for (const auto& se : superedges) {
    if ((se.base_u == base_u && se.base_v == base_v) ||
        (se.base_u == base_v && se.base_v == base_u))
      return &se;
  }
  return nullptr;
}

Subdivision subdivide(const Graph& g, int k) {
  if (k < 1) throw Error(Error::Kind::bad_parameter, "subdivision needs k >= 1");

  Subdivision out;
  out.map.k = k;

  if (k == 1) {
    out.graph = g;
    for (auto [u, v] : g.edges())
      out.map.superedges.push_back({u, v, {u, v}});
    return out;
  }

  std::vector<VertexLabel> labels = g.labels();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(k) * g.edges().size());

  for (auto [u, v] : g.edges()) {
    // Orient the superedge from the lexicographically smaller endpoint label.
    int lo = u, hi = v;
    if (g.label(hi).str() < g.label(lo).str()) std::swap(lo, hi);

    SubdivisionMap::Superedge se;
    se.base_u = u;
    se.base_v = v;
    se.walk.push_back(lo);
    for (int l = 1; l <= k - 1; ++l) {
      int idx = static_cast<int>(labels.size());
      labels.push_back(VertexLabel::internal(g.label(lo).str(), g.label(hi).str(), l));
      se.walk.push_back(idx);
    }
    se.walk.push_back(hi);
    for (std::size_t i = 0; i + 1 < se.walk.size(); ++i)
      edges.emplace_back(se.walk[i], se.walk[i + 1]);
    out.map.superedges.push_back(std::move(se));
  }

  out.graph = Graph::build_labeled(std::move(labels), edges);
  return out;
}

std::vector<int> superedge_walk(const SubdivisionMap& map, int base_u, int base_v) {
  const auto* se = map.find(base_u, base_v);
  if (se == nullptr)
    throw Error(Error::Kind::not_a_base_edge,
                "(" + std::to_string(base_u) + "," + std::to_string(base_v) +
                    ") is not a base edge");
  // Base vertices keep their indices in the subdivided graph, so the stored
  // walk endpoints are base_u/base_v in some order.
  std::vector<int> walk = se->walk;
  if (walk.front() != base_u) std::reverse(walk.begin(), walk.end());
  if (walk.front() != base_u || walk.back() != base_v)
    throw Error(Error::Kind::internal_check, "superedge walk endpoints inconsistent");
  return walk;
}

std::string subdivision_map_to_json(const Graph& subdivided, const SubdivisionMap& map) {
  nlohmann::json j;
  j["k"] = map.k;
  j["superedges"] = nlohmann::json::array();
  for (const auto& se : map.superedges) {
    nlohmann::json e;
    e["walk"] = nlohmann::json::array();
    for (int idx : se.walk) e["walk"].push_back(subdivided.label(idx).str());
    j["superedges"].push_back(e);
  }
  return j.dump();
}

}  // namespace coeven
