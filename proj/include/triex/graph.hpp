#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace triex {

// Hard cap: the single-byte graph6 size field covers 0..62 vertices, and
// nothing in this library ever needs more.
inline constexpr int kMaxVertices = 62;
inline constexpr int kMaxPairs = kMaxVertices * (kMaxVertices - 1) / 2;  // 1891

// Index of the unordered pair {i,j}, i < j, in the order
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... — the graph6 bit order.
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

struct VertexPair {
  int i, j;  // i < j
};

// Inverse of pair_index.
constexpr VertexPair pair_at(int index) {
  int j = 1;
  while ((j + 1) * j / 2 <= index) ++j;
  return {index - j * (j - 1) / 2, j};
}

// Simple loopless undirected graph on at most 62 vertices.
// Adjacency is one bit per unordered pair, stored in the graph6 bit order,
// so the same representation drives both the algorithms and the codec.
// Immutable after construction; all operations below are pure functions.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int vertex_count) : n_(check_vertex_count(vertex_count)) {}

  Graph(int vertex_count, std::span<const std::pair<int, int>> edge_list)
      : n_(check_vertex_count(vertex_count)) {
    for (const auto& [a, b] : edge_list) add_edge(a, b);
  }

  Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edge_list)
      : Graph(vertex_count, std::span<const std::pair<int, int>>(edge_list)) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(bits_.count()); }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return bits_[pair_index(u, v)];
  }

  // Bit u set iff {u,v} is an edge. Fits in one word since n <= 62.
  std::uint64_t neighbor_mask(int v) const {
    check_vertex(v);
    std::uint64_t m = 0;
    for (int u = 0; u < n_; ++u)
      if (u != v && bits_[u < v ? pair_index(u, v) : pair_index(v, u)])
        m |= std::uint64_t{1} << u;
    return m;
  }

  // All neighbor masks in one pass over the pair bits.
  std::array<std::uint64_t, kMaxVertices> adjacency_rows() const {
    std::array<std::uint64_t, kMaxVertices> rows{};
    int idx = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++idx)
        if (bits_[idx]) {
          rows[i] |= std::uint64_t{1} << j;
          rows[j] |= std::uint64_t{1} << i;
        }
    return rows;
  }

  // Edges in pair-index order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    int idx = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++idx)
        if (bits_[idx]) out.emplace_back(i, j);
    return out;
  }

  const std::bitset<kMaxPairs>& pair_bits() const { return bits_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_vertex_count(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (n > kMaxVertices)
      throw std::invalid_argument("Graph: at most " + std::to_string(kMaxVertices) +
                                  " vertices supported");
    return n;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range [0," +
                                  std::to_string(n_) + ")");
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    bits_.set(pair_index(u, v));
  }

  int n_ = 0;
  std::bitset<kMaxPairs> bits_;
};

// Number of vertex triples that are pairwise adjacent. Each triangle is seen
// once per edge, hence the division by 3. Exact integer arithmetic throughout.
inline long long triangle_count(const Graph& g) {
  const auto rows = g.adjacency_rows();
  long long incidences = 0;
  int idx = 0;
  const int n = g.vertex_count();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (g.pair_bits()[idx]) incidences += std::popcount(rows[i] & rows[j]);
  return incidences / 3;
}

// K_r. r = 0 gives the graph with no vertices.
inline Graph complete_graph(int r) {
  if (r < 0) throw std::invalid_argument("complete_graph: negative size");
  Graph g(r);
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<size_t>(r) * (r - 1) / 2);
  for (int j = 1; j < r; ++j)
    for (int i = 0; i < j; ++i) es.emplace_back(i, j);
  return Graph(r, es);
}

// Vertices of h are re-indexed by g.vertex_count().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int off = g.vertex_count();
  std::vector<std::pair<int, int>> es = g.edges();
  for (const auto& [a, b] : h.edges()) es.emplace_back(a + off, b + off);
  return Graph(off + h.vertex_count(), es);
}

// Adds one new vertex adjacent to exactly `targets`. Targets must be distinct
// existing vertices; the empty list adds an isolated vertex.
inline Graph attach_fan(const Graph& g, std::span<const int> targets) {
  const int v = g.vertex_count();
  std::uint64_t seen = 0;
  std::vector<std::pair<int, int>> es = g.edges();
  for (int t : targets) {
    if (t < 0 || t >= v)
      throw std::invalid_argument("attach_fan: target " + std::to_string(t) + " out of range");
    if (seen & (std::uint64_t{1} << t))
      throw std::invalid_argument("attach_fan: duplicate target " + std::to_string(t));
    seen |= std::uint64_t{1} << t;
    es.emplace_back(t, v);
  }
  return Graph(v + 1, es);
}

inline Graph attach_fan(const Graph& g, std::initializer_list<int> targets) {
  return attach_fan(g, std::span<const int>(targets));
}

// Replaces u and v by one vertex adjacent to every former neighbor of either.
// Any u-v edge vanishes and parallel edges collapse, so the edge count can
// drop. The merged vertex lands at min(u,v); vertices above max(u,v) shift
// down by one.
inline Graph contract_pair(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("contract_pair: vertices must be distinct");
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("contract_pair: vertex out of range");
  const int lo = u < v ? u : v;
  const int hi = u < v ? v : u;
  auto remap = [&](int w) { return w == hi ? lo : (w > hi ? w - 1 : w); };
  std::vector<std::pair<int, int>> es;
  for (const auto& [a, b] : g.edges()) {
    const int ma = remap(a), mb = remap(b);
    if (ma != mb) es.emplace_back(ma, mb);
  }
  return Graph(n - 1, es);
}

// A path x-y-z whose endpoints are not adjacent. Exists in every connected
// incomplete graph; the converse fails for disconnected graphs.
struct OpenTriple {
  int x, y, z;
};

// First open triple in lexicographic (y, x, z) order, y the center.
inline std::optional<OpenTriple> find_open_triple(const Graph& g) {
  const int n = g.vertex_count();
  const auto rows = g.adjacency_rows();
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (x == y || !(rows[y] >> x & 1)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == y || z == x) continue;
        if ((rows[y] >> z & 1) && !(rows[x] >> z & 1)) return OpenTriple{x, y, z};
      }
    }
  return std::nullopt;
}

inline int degree(const Graph& g, int v) { return std::popcount(g.neighbor_mask(v)); }

namespace detail {

// Component id per vertex, ids numbered by smallest contained vertex.
inline std::vector<int> component_labels(const Graph& g) {
  const int n = g.vertex_count();
  const auto rows = g.adjacency_rows();
  std::vector<int> label(static_cast<size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    std::uint64_t frontier = std::uint64_t{1} << s;
    std::uint64_t seen = frontier;
    while (frontier) {
      std::uint64_t nxt = 0;
      for (std::uint64_t f = frontier; f;) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        nxt |= rows[v];
      }
      frontier = nxt & ~seen;
      seen |= nxt;
    }
    for (int v = s; v < n; ++v)
      if (seen >> v & 1) label[v] = next;
    ++next;
  }
  return label;
}

}  // namespace detail

inline int component_count(const Graph& g) {
  const auto labels = detail::component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

inline bool is_complete(const Graph& g) {
  const int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

// Drops all degree-0 vertices, keeping the relative order of the rest.
// Edge and triangle counts are unchanged.
inline Graph strip_isolated(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> newid(static_cast<size_t>(n), -1);
  int kept = 0;
  for (int v = 0; v < n; ++v)
    if (g.neighbor_mask(v) != 0) newid[v] = kept++;
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<size_t>(g.edge_count()));
  for (const auto& [a, b] : g.edges()) es.emplace_back(newid[a], newid[b]);
  return Graph(kept, es);
}

// Relabels vertex v to perm[v]. perm must be a permutation of 0..n-1.
inline Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute: permutation size mismatch");
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[static_cast<size_t>(p)])
      throw std::invalid_argument("permute: not a permutation");
    hit[static_cast<size_t>(p)] = true;
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<size_t>(g.edge_count()));
  for (const auto& [a, b] : g.edges()) es.emplace_back(perm[a], perm[b]);
  return Graph(n, es);
}

inline Graph permute(const Graph& g, const std::vector<int>& perm) {
  return permute(g, std::span<const int>(perm));
}

}  // namespace triex
