#include "coeven/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "json.hpp"

namespace coeven {

namespace {

// Bitmask view of a graph, usable up to 63 vertices. The exhaustive searches
// additionally respect SolverOptions::cap.
struct MaskView {
  int n = 0;
  uint64_t all = 0;
  uint64_t odd = 0;  // odd-degree vertices
  std::vector<uint64_t> closed;

  explicit MaskView(const Graph& g) : n(g.n()) {
    all = (n == 64) ? ~0ull : ((1ull << n) - 1);
    closed.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      uint64_t m = 1ull << v;
      for (int u : g.neighbors(v)) m |= 1ull << u;
      closed[v] = m;
      if (g.degree(v) % 2 == 1) odd |= 1ull << v;
    }
  }

  bool dominating(uint64_t d) const {
    uint64_t covered = 0;
    uint64_t rest = d;
    while (rest != 0) {
      int v = std::countr_zero(rest);
      covered |= closed[v];
      rest &= rest - 1;
    }
    return covered == all;
  }

  bool coeven_dominating(uint64_t d) const {
    // Outside vertices must have even degree; zero-degree vertices outside d
    // already fail the domination test.
    if ((all & ~d & odd) != 0) return false;
    return dominating(d);
  }
};

uint64_t mask_of(const Graph& g, const VertexSet& d) {
  uint64_t m = 0;
  for (int v : d) {
    g.check_vertex(v);
    m |= 1ull << v;
  }
  return m;
}

VertexSet set_of(uint64_t mask) {
  VertexSet s;
  while (mask != 0) {
    s.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

void require_solvable(const Graph& g, const SolverOptions& opts) {
  if (g.n() == 0) throw Error(Error::Kind::empty_graph, "empty graph");
  if (g.n() > opts.cap)
    throw Error(Error::Kind::cap_exceeded,
                "graph has " + std::to_string(g.n()) + " vertices, cap is " +
                    std::to_string(opts.cap));
  if (g.n() > 63)
    throw Error(Error::Kind::cap_exceeded, "mask solver is limited to 63 vertices");
}

uint64_t forced_mask(const Graph& g) {
  uint64_t f = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) % 2 == 1 || g.degree(v) == 0) f |= 1ull << v;
  return f;
}

// Minimum-size superset of `forced` passing `pred`, scanning cardinalities
// upward and, within a cardinality, free-vertex combinations in lexicographic
// order. The first hit is the lexicographically least optimal set.
template <typename Pred>
SolveResult minimize(const Graph& g, uint64_t forced, Pred pred) {
  std::vector<int> free;
  for (int v = 0; v < g.n(); ++v)
    if ((forced & (1ull << v)) == 0) free.push_back(v);
  const int f = static_cast<int>(free.size());

  if (pred(forced)) return {static_cast<int>(std::popcount(forced)), set_of(forced)};

  for (int r = 1; r <= f; ++r) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      uint64_t d = forced;
      for (int i : idx) d |= 1ull << free[i];
      if (pred(d)) return {static_cast<int>(std::popcount(d)), set_of(d)};
      // next combination
      int i = r - 1;
      while (i >= 0 && idx[i] == f - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error(Error::Kind::internal_check, "no qualifying set found up to V itself");
}

template <typename Pred>
CountsByCardinality count_supersets(const Graph& g, uint64_t forced, Pred pred) {
  CountsByCardinality counts;
  counts.coeff.assign(g.n() + 1, 0);
  MaskView mv(g);
  uint64_t free = mv.all & ~forced;
  uint64_t sub = free;
  while (true) {
    uint64_t d = forced | sub;
    if (pred(d)) counts.coeff[std::popcount(d)] += 1;
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return counts;
}

}  // namespace

int CountsByCardinality::min_nonzero() const {
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (coeff[i] != 0) return static_cast<int>(i);
  return -1;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
  if (g.n() == 0) return true;
  if (g.n() > 63) {
    // Direct adjacency-list check for graphs beyond the mask width.
    std::vector<bool> in_d(g.n(), false);
    for (int v : d) {
      g.check_vertex(v);
      in_d[v] = true;
    }
    for (int v = 0; v < g.n(); ++v) {
      if (in_d[v]) continue;
      bool hit = false;
      for (int u : g.neighbors(v))
        if (in_d[u]) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  }
  MaskView mv(g);
  return mv.dominating(mask_of(g, d));
}

bool is_coeven_dominating(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) return false;
  std::vector<bool> in_d(g.n(), false);
  for (int v : d) in_d[v] = true;
  for (int v = 0; v < g.n(); ++v)
    if (!in_d[v] && g.degree(v) % 2 == 1) return false;
  return true;
}

VertexSet forced_vertices(const Graph& g) {
  VertexSet f;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) % 2 == 1 || g.degree(v) == 0) f.push_back(v);
  return f;
}

SolveResult domination_number(const Graph& g, const SolverOptions& opts) {
  require_solvable(g, opts);
  MaskView mv(g);
  return minimize(g, 0, [&](uint64_t d) { return mv.dominating(d); });
}

SolveResult coeven_domination_number(const Graph& g, const SolverOptions& opts) {
  require_solvable(g, opts);
  MaskView mv(g);
  // Odd- and zero-degree vertices belong to every co-even dominating set, so
  // only supersets of that seed need to be explored.
  return minimize(g, forced_mask(g), [&](uint64_t d) { return mv.coeven_dominating(d); });
}

CountsByCardinality count_dominating_sets(const Graph& g, const SolverOptions& opts) {
  require_solvable(g, opts);
  MaskView mv(g);
  return count_supersets(g, 0, [&](uint64_t d) { return mv.dominating(d); });
}

CountsByCardinality count_coeven_dominating_sets(const Graph& g, const SolverOptions& opts) {
  require_solvable(g, opts);
  MaskView mv(g);
  return count_supersets(g, forced_mask(g),
                         [&](uint64_t d) { return mv.coeven_dominating(d); });
}

std::vector<BigInt> generating_function(const CountsByCardinality& counts) {
  return counts.coeff;
}

std::string polynomial_to_string(const std::vector<BigInt>& coeff) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == 0) continue;
    if (!first) out << " + ";
    if (coeff[i] != 1 || i == 0) out << coeff[i];
    if (i == 1)
      out << "x";
    else if (i > 1)
      out << "x^" << i;
    first = false;
  }
  if (first) return "0";
  return out.str();
}

std::string counts_to_json(const Graph& g, const CountsByCardinality& counts, int cap) {
  nlohmann::json j;
  j["graph"] = g.signature();
  j["cap"] = cap;
  j["coefficients"] = nlohmann::json::array();
  for (const auto& c : counts.coeff) j["coefficients"].push_back(c.str());
  return j.dump();
}

std::string vertex_set_to_string(const Graph& g, const VertexSet& d) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out << ", ";
    out << g.label(d[i]).str();
  }
  out << "}";
  return out.str();
}

}  // namespace coeven
