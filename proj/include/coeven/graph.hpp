#ifndef COEVEN_GRAPH_HPP
#define COEVEN_GRAPH_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coeven {

// All recoverable failures (bad input, violated preconditions, exceeded caps)
// are reported through this type so callers can distinguish them.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    unknown_vertex,
    bad_parameter,
    parse_error,
    empty_graph,
    cap_exceeded,
    not_a_base_edge,
    precondition,
    internal_check,
  };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A vertex is either an original ("base") vertex or an internal vertex created
// by subdividing the base edge {lo, hi}; `offset` is its distance from `lo`,
// where lo < hi as strings.
struct VertexLabel {
  enum class Kind { base, internal };

  Kind kind = Kind::base;
  std::string name;      // base only
  std::string lo, hi;    // internal only, endpoint labels with lo < hi
  int offset = 0;        // internal only, 1..k-1

  static VertexLabel base(std::string n) {
    VertexLabel l;
    l.kind = Kind::base;
    l.name = std::move(n);
    return l;
  }

  static VertexLabel internal(std::string lo, std::string hi, int offset);

  // Rendering used everywhere a vertex is shown or ordered:
  // base "3" -> "3", internal -> "x_2^{0,1}".
  std::string str() const;

  bool operator==(const VertexLabel&) const = default;
};

class Graph {
 public:
  Graph() = default;

  // Vertices labelled "0".."n-1". Rejects loops, duplicates and bad indices.
  static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list);
  static Graph build_labeled(std::vector<VertexLabel> labels,
                             const std::vector<std::pair<int, int>>& edge_list);

  int n() const { return static_cast<int>(labels_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const VertexLabel& label(int v) const { return labels_.at(v); }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  // Sorted ascending.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

  // Normalized (u < v), sorted lexicographically. Stable across runs.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int index_of(const std::string& label_str) const;  // -1 if absent

  void check_vertex(int v) const;

  // Compact deterministic identifier, e.g. "n=3;e=0-1,0-2,1-2".
  std::string signature() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

struct Neighborhoods {
  std::vector<int> open;    // N(v)
  std::vector<int> closed;  // N[v]
};
Neighborhoods neighborhoods(const Graph& g, int v);

struct DegreeProfile {
  std::vector<int> degree;
  std::vector<bool> odd;
  std::vector<bool> forced;  // degree odd or zero
};
DegreeProfile degree_profile(const Graph& g);

// Named families. Star convention: star_graph(n) is K_{1,n-1}.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int n, int m);  // sides a0..a(n-1), b0..b(m-1)
Graph star_graph(int n);

// Text format: header "n m" then m lines "u v", 0-indexed.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// Structured format keeps the label strings, so subdivision-internal names
// survive a round trip.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace coeven

#endif
