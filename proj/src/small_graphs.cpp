#include "coeven/small_graphs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace coeven {

namespace {

constexpr int kMaxSmall = 10;

// Row-mask adjacency for graphs small enough to enumerate exhaustively.
struct SmallG {
  int n = 0;
  std::array<uint16_t, kMaxSmall> adj{};

  bool edge(int i, int j) const { return (adj[i] >> j) & 1u; }
  int deg(int i) const { return std::popcount(static_cast<unsigned>(adj[i])); }
};

SmallG from_graph(const Graph& g) {
  if (g.n() > kMaxSmall)
    throw Error(Error::Kind::cap_exceeded, "graph too large for small-graph routines");
  SmallG s;
  s.n = g.n();
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= static_cast<uint16_t>(1u << v);
    s.adj[v] |= static_cast<uint16_t>(1u << u);
  }
  return s;
}

Graph to_graph(const SmallG& s) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      if (s.edge(i, j)) edges.emplace_back(i, j);
  return Graph::build(s.n, edges);
}

// Per-round vertex signature: own color, then sorted neighbour colors,
// padded. Exact comparison, no allocation.
using Sig = std::array<int8_t, kMaxSmall + 2>;

// Iterated degree refinement. Isomorphic graphs produce identical sorted
// color multisets, and equal colors are a necessary condition for a vertex
// correspondence.
std::array<int8_t, kMaxSmall> refine_colors(const SmallG& g) {
  std::array<int8_t, kMaxSmall> col{};
  for (int v = 0; v < g.n; ++v) col[v] = static_cast<int8_t>(g.deg(v));

  std::array<Sig, kMaxSmall> sig{};
  std::array<int8_t, kMaxSmall> order{};
  std::array<int8_t, kMaxSmall> next{};

  for (int round = 0; round < g.n; ++round) {
    for (int v = 0; v < g.n; ++v) {
      Sig& s = sig[v];
      s.fill(-1);
      s[0] = col[v];
      int cnt = 1;
      unsigned rest = g.adj[v];
      while (rest != 0) {
        int u = std::countr_zero(rest);
        s[cnt++] = col[u];
        rest &= rest - 1;
      }
      std::sort(s.begin() + 1, s.begin() + cnt);
    }
    for (int v = 0; v < g.n; ++v) order[v] = static_cast<int8_t>(v);
    std::sort(order.begin(), order.begin() + g.n,
              [&](int8_t a, int8_t b) { return sig[a] < sig[b]; });
    int c = 0;
    for (int idx = 0; idx < g.n; ++idx) {
      if (idx > 0 && sig[order[idx]] != sig[order[idx - 1]]) ++c;
      next[order[idx]] = static_cast<int8_t>(c);
    }
    bool stable = true;
    for (int v = 0; v < g.n; ++v)
      if (next[v] != col[v]) stable = false;
    if (stable) break;
    col = next;
  }
  return col;
}

using Colors = std::array<int8_t, kMaxSmall>;

// Hash of the refined signature multiset (own color plus sorted neighbour
// colors per vertex). Isomorphism-invariant; collisions only cost an extra
// isomorphism test inside a bucket.
uint64_t fingerprint(const SmallG& g, const Colors& col) {
  std::array<Sig, kMaxSmall> sig{};
  for (int v = 0; v < g.n; ++v) {
    Sig& s = sig[v];
    s.fill(-1);
    s[0] = col[v];
    int cnt = 1;
    unsigned rest = g.adj[v];
    while (rest != 0) {
      int u = std::countr_zero(rest);
      s[cnt++] = col[u];
      rest &= rest - 1;
    }
    std::sort(s.begin() + 1, s.begin() + cnt);
  }
  std::sort(sig.begin(), sig.begin() + g.n);
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(g.n));
  for (int v = 0; v < g.n; ++v)
    for (int8_t c : sig[v]) mix(static_cast<uint64_t>(static_cast<uint8_t>(c)) + 1);
  return h;
}

bool isomorphic_refined(const SmallG& a, const Colors& ca, const SmallG& b, const Colors& cb) {
  if (a.n != b.n) return false;
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.begin() + a.n);
    std::sort(sb.begin(), sb.begin() + b.n);
    if (sa != sb) return false;
  }

  std::array<std::array<int8_t, kMaxSmall>, kMaxSmall> class_b{};
  std::array<int8_t, kMaxSmall> class_size{};
  for (int v = 0; v < b.n; ++v) class_b[cb[v]][class_size[cb[v]]++] = static_cast<int8_t>(v);

  std::array<int8_t, kMaxSmall> order{};
  for (int v = 0; v < a.n; ++v) order[v] = static_cast<int8_t>(v);
  std::sort(order.begin(), order.begin() + a.n, [&](int8_t u, int8_t v) {
    if (class_size[ca[u]] != class_size[ca[v]]) return class_size[ca[u]] < class_size[ca[v]];
    if (a.deg(u) != a.deg(v)) return a.deg(u) > a.deg(v);
    return u < v;
  });

  std::array<int8_t, kMaxSmall> map_a{};
  map_a.fill(-1);
  std::array<bool, kMaxSmall> used_b{};

  auto dfs = [&](auto&& self, int idx) -> bool {
    if (idx == a.n) return true;
    int v = order[idx];
    for (int wi = 0; wi < class_size[ca[v]]; ++wi) {
      int w = class_b[ca[v]][wi];
      if (used_b[w] || a.deg(v) != b.deg(w)) continue;
      bool ok = true;
      for (int j = 0; j < idx; ++j) {
        int u = order[j];
        if (a.edge(v, u) != b.edge(w, map_a[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_a[v] = static_cast<int8_t>(w);
      used_b[w] = true;
      if (self(self, idx + 1)) return true;
      used_b[w] = false;
      map_a[v] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

bool isomorphic_small(const SmallG& a, const SmallG& b) {
  return isomorphic_refined(a, refine_colors(a), b, refine_colors(b));
}

// Representatives per vertex count, grown lazily and cached: every graph on
// k+1 vertices restricts to some k-vertex class, so augmenting each
// representative with every neighborhood of a new vertex reaches every class.
class Corpus {
 public:
  struct Entry {
    SmallG g;
    Colors col;
  };

  const std::vector<Entry>& level(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(levels_.size()) <= n) grow();
    return levels_[n];
  }

 private:
  void grow() {
    if (levels_.empty()) {
      levels_.push_back({});  // no 0-vertex graphs
      SmallG one{1, {}};
      levels_.push_back({Entry{one, refine_colors(one)}});
      return;
    }
    const auto& prev = levels_.back();
    const int size = static_cast<int>(levels_.size());
    std::vector<Entry> next;
    std::unordered_map<uint64_t, std::vector<int>> buckets;
    for (const auto& parent : prev) {
      for (uint32_t mask = 0; mask < (1u << parent.g.n); ++mask) {
        SmallG cand;
        cand.n = size;
        cand.adj = parent.g.adj;
        cand.adj[size - 1] = static_cast<uint16_t>(mask);
        for (int v = 0; v < parent.g.n; ++v)
          if ((mask >> v) & 1u) cand.adj[v] |= static_cast<uint16_t>(1u << (size - 1));

        Colors col = refine_colors(cand);
        auto& bucket = buckets[fingerprint(cand, col)];
        bool seen = false;
        for (int idx : bucket) {
          if (isomorphic_refined(cand, col, next[idx].g, next[idx].col)) {
            seen = true;
            break;
          }
        }
        if (!seen) {
          bucket.push_back(static_cast<int>(next.size()));
          next.push_back(Entry{cand, col});
        }
      }
    }
    levels_.push_back(std::move(next));
  }

  std::mutex mu_;
  std::vector<std::vector<Entry>> levels_;
};

Corpus& corpus() {
  static Corpus c;
  return c;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return isomorphic_small(from_graph(a), from_graph(b));
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > kMaxSmall)
    throw Error(Error::Kind::bad_parameter, "exhaustive generation supports 1 <= n <= 10");
  const auto& reps = corpus().level(n);
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (const auto& e : reps) out.push_back(to_graph(e.g));
  return out;
}

std::vector<Graph> nonisomorphic_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = nonisomorphic_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
  if (n < 1) throw Error(Error::Kind::bad_parameter, "random graph needs n >= 1");
  std::bernoulli_distribution flip(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) edges.emplace_back(i, j);
  return Graph::build(n, edges);
}

}  // namespace coeven
