#include "coeven/graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace coeven {

VertexLabel VertexLabel::internal(std::string lo, std::string hi, int offset) {
  if (lo >= hi)
    throw Error(Error::Kind::bad_parameter, "internal label endpoints must satisfy lo < hi");
  if (offset < 1)
    throw Error(Error::Kind::bad_parameter, "internal label offset must be positive");
  VertexLabel l;
  l.kind = Kind::internal;
  l.lo = std::move(lo);
  l.hi = std::move(hi);
  l.offset = offset;
  return l;
}

std::string VertexLabel::str() const {
  if (kind == Kind::base) return name;
  return "x_" + std::to_string(offset) + "^{" + lo + "," + hi + "}";
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 0) throw Error(Error::Kind::bad_parameter, "negative vertex count");
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(VertexLabel::base(std::to_string(i)));
  return build_labeled(std::move(labels), edge_list);
}

Graph Graph::build_labeled(std::vector<VertexLabel> labels,
                           const std::vector<std::pair<int, int>>& edge_list) {
  Graph g;
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        throw Error(Error::Kind::bad_parameter,
                    "duplicate vertex label: " + labels[i].str());
  g.labels_ = std::move(labels);
  g.adj_.assign(n, {});

  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Error::Kind::vertex_out_of_range,
                  "edge endpoint out of range: (" + std::to_string(u) + "," +
                      std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v)
      throw Error(Error::Kind::loop_edge, "loop edge at vertex " + std::to_string(u));
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error(Error::Kind::duplicate_edge,
                  "duplicate edge (" + std::to_string(edges[i].first) + "," +
                      std::to_string(edges[i].second) + ")");
  g.edges_ = std::move(edges);
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::index_of(const std::string& label_str) const {
  for (int i = 0; i < n(); ++i)
    if (labels_[i].str() == label_str) return i;
  return -1;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n())
    throw Error(Error::Kind::unknown_vertex, "unknown vertex index " + std::to_string(v));
}

std::string Graph::signature() const {
  std::ostringstream out;
  out << "n=" << n() << ";e=";
  bool first = true;
  for (auto [u, v] : edges_) {
    if (!first) out << ",";
    out << u << "-" << v;
    first = false;
  }
  return out.str();
}

Neighborhoods neighborhoods(const Graph& g, int v) {
  g.check_vertex(v);
  Neighborhoods nh;
  nh.open = g.neighbors(v);
  nh.closed = nh.open;
  nh.closed.insert(std::lower_bound(nh.closed.begin(), nh.closed.end(), v), v);
  return nh;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degree.resize(g.n());
  p.odd.resize(g.n());
  p.forced.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    p.degree[v] = g.degree(v);
    p.odd[v] = p.degree[v] % 2 == 1;
    p.forced[v] = p.odd[v] || p.degree[v] == 0;
  }
  return p;
}

Graph path_graph(int n) {
  if (n < 1) throw Error(Error::Kind::bad_parameter, "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Error::Kind::bad_parameter, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::build(n, e);
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(Error::Kind::bad_parameter, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::build(n, e);
}

Graph complete_bipartite_graph(int n, int m) {
  if (n < 1 || m < 1)
    throw Error(Error::Kind::bad_parameter, "complete bipartite graph needs n, m >= 1");
  std::vector<VertexLabel> labels;
  for (int i = 0; i < n; ++i) labels.push_back(VertexLabel::base("a" + std::to_string(i)));
  for (int j = 0; j < m; ++j) labels.push_back(VertexLabel::base("b" + std::to_string(j)));
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) e.emplace_back(i, n + j);
  return Graph::build_labeled(std::move(labels), e);
}

Graph star_graph(int n) {
  if (n < 2) throw Error(Error::Kind::bad_parameter, "star S_n needs n >= 2");
  return complete_bipartite_graph(1, n - 1);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw Error(Error::Kind::parse_error, "malformed header, expected \"n m\"");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v))
      throw Error(Error::Kind::parse_error,
                  "bad or missing edge token at edge " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string trailing;
  if (in >> trailing)
    throw Error(Error::Kind::parse_error, "unexpected trailing token: " + trailing);
  return Graph::build(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["vertices"] = nlohmann::json::array();
  for (const auto& l : g.labels()) j["vertices"].push_back(l.str());
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

namespace {

VertexLabel label_from_string(const std::string& s) {
  // Internal labels round-trip through their rendered form x_l^{lo,hi}. The
  // endpoints may themselves be internal labels, so the separating comma is
  // the one at brace depth 1.
  if (s.rfind("x_", 0) == 0 && s.back() == '}') {
    auto caret = s.find("^{");
    if (caret != std::string::npos) {
      std::size_t comma = std::string::npos;
      int depth = 0;
      for (std::size_t i = caret + 1; i + 1 < s.size(); ++i) {
        if (s[i] == '{') ++depth;
        else if (s[i] == '}') --depth;
        else if (s[i] == ',' && depth == 1) {
          comma = i;
          break;
        }
      }
      if (comma != std::string::npos) {
        int offset = std::stoi(s.substr(2, caret - 2));
        std::string lo = s.substr(caret + 2, comma - caret - 2);
        std::string hi = s.substr(comma + 1, s.size() - comma - 2);
        return VertexLabel::internal(lo, hi, offset);
      }
    }
  }
  return VertexLabel::base(s);
}

}  // namespace

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Error::Kind::parse_error, std::string("bad json: ") + e.what());
  }
  if (!j.contains("vertices") || !j.contains("edges"))
    throw Error(Error::Kind::parse_error, "json graph needs \"vertices\" and \"edges\"");
  std::vector<VertexLabel> labels;
  for (const auto& s : j["vertices"]) labels.push_back(label_from_string(s.get<std::string>()));
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph::build_labeled(std::move(labels), edges);
}

}  // namespace coeven
