#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "triex/graph.hpp"
#include "triex/graph6.hpp"

namespace triex {

// Canonical labeling is exponential in the worst case; this cap keeps every
// call in the regime the search handles instantly. Large enough for every
// maximizer this library enumerates.
inline constexpr int kCanonicalMaxVertices = 12;

// Isomorphism-invariant fingerprint: two graphs get the same form exactly
// when they are isomorphic after deleting isolated vertices.
struct CanonicalForm {
  int vertex_count = 0;  // vertices of positive degree
  std::string graph6;    // encoding of the canonical labeling
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// Iterated neighbor-color refinement. Colors are dense ids numbered by
// sorted signature, so equal ids across isomorphic graphs mean matched cells.
inline std::vector<int> refine_colors(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), 0);
  int distinct = 1;
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<size_t>(v)];
      s.push_back(color[static_cast<size_t>(v)]);
      for (int u = 0; u < n; ++u)
        if (g.has_edge(u, v)) s.push_back(color[static_cast<size_t>(u)]);
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<std::vector<int>> keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(keys.begin(), keys.end(), sig[static_cast<size_t>(v)]) - keys.begin());
    const int now = static_cast<int>(keys.size());
    if (now == distinct) return color;
    distinct = now;
  }
}

// Search for the lexicographically least adjacency bit string over all
// labelings that list each refinement cell's vertices consecutively. Placing
// vertex p fixes the contiguous bit range [C(p,2), C(p+1,2)), which drives
// the prefix pruning: a losing segment kills the whole subtree, a winning
// one overwrites best and resets its tail to the all-ones sentinel.
class MinLabelSearch {
 public:
  MinLabelSearch(const Graph& g, const std::vector<int>& color) : g_(g), n_(g.vertex_count()) {
    const int cells = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    cell_.resize(static_cast<size_t>(cells));
    for (int v = 0; v < n_; ++v) cell_[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
    for (const auto& c : cell_)
      for (size_t i = 0; i < c.size(); ++i) pos_cell_.push_back(&c - cell_.data());
    twin_.resize(static_cast<size_t>(cells));
    for (size_t c = 0; c < cell_.size(); ++c) twin_[c] = is_twin_cell(cell_[c]);
    const size_t bits = static_cast<size_t>(choose2(n_));
    cur_.assign(bits, 0);
    best_.assign(bits, 1);
    perm_.assign(static_cast<size_t>(n_), -1);
    used_.assign(static_cast<size_t>(n_), 0);
    place(0);
  }

  Graph result() const {
    Graph out(n_);
    std::vector<std::pair<int, int>> es;
    for (size_t idx = 0; idx < best_.size(); ++idx)
      if (best_[idx]) {
        const auto [i, j] = pair_at(static_cast<int>(idx));
        es.emplace_back(i, j);
      }
    return Graph(n_, std::span<const std::pair<int, int>>(es));
  }

 private:
  static constexpr long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

  // A cell whose vertices are pairwise interchangeable by automorphisms:
  // identical neighborhoods outside the cell and a uniform relation inside.
  // Within such a cell every placement order gives the same bit string, so
  // the search fixes one order and skips the factorial branching. This is
  // what keeps complete graphs and clique-heavy maximizers instant.
  bool is_twin_cell(const std::vector<int>& c) const {
    std::uint64_t inside = 0;
    for (int v : c) inside |= std::uint64_t{1} << v;
    const std::uint64_t out0 = g_.neighbor_mask(c[0]) & ~inside;
    for (size_t i = 1; i < c.size(); ++i) {
      if ((g_.neighbor_mask(c[i]) & ~inside) != out0) return false;
      if (g_.has_edge(c[0], c[i]) != g_.has_edge(c[0], c[1])) return false;
    }
    for (size_t i = 1; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (g_.has_edge(c[i], c[j]) != g_.has_edge(c[0], c[1])) return false;
    return true;
  }

  void place(int p) {
    if (p == n_) return;  // final column's compare already synced best_
    const auto& candidates = cell_[static_cast<size_t>(pos_cell_[static_cast<size_t>(p)])];
    const bool twin = twin_[static_cast<size_t>(pos_cell_[static_cast<size_t>(p)])];
    const size_t base = static_cast<size_t>(choose2(p));
    for (int v : candidates) {
      if (used_[static_cast<size_t>(v)]) continue;
      int cmp = 0;  // segment vs best: -1 below, 0 equal, +1 above
      for (int q = 0; q < p; ++q) {
        const unsigned char bit = g_.has_edge(perm_[static_cast<size_t>(q)], v) ? 1 : 0;
        cur_[base + static_cast<size_t>(q)] = bit;
        if (cmp == 0 && bit != best_[base + static_cast<size_t>(q)])
          cmp = bit < best_[base + static_cast<size_t>(q)] ? -1 : 1;
      }
      if (cmp > 0) {
        if (twin) break;
        continue;
      }
      if (cmp < 0) {
        std::copy(cur_.begin() + static_cast<long>(base),
                  cur_.begin() + static_cast<long>(base) + p, best_.begin() + static_cast<long>(base));
        std::fill(best_.begin() + static_cast<long>(base) + p, best_.end(), 1);
      }
      used_[static_cast<size_t>(v)] = 1;
      perm_[static_cast<size_t>(p)] = v;
      place(p + 1);
      used_[static_cast<size_t>(v)] = 0;
      if (twin) break;  // remaining cell mates would repeat this subtree
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> cell_;
  std::vector<long> pos_cell_;
  std::vector<char> twin_;
  std::vector<unsigned char> cur_, best_;
  std::vector<int> perm_;
  std::vector<unsigned char> used_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  const Graph core = strip_isolated(g);
  if (core.vertex_count() > kCanonicalMaxVertices)
    throw std::invalid_argument("canonical_form: more than " +
                                std::to_string(kCanonicalMaxVertices) +
                                " vertices of positive degree");
  if (core.vertex_count() == 0) return {0, graph6_encode(core)};
  detail::MinLabelSearch search(core, detail::refine_colors(core));
  const Graph canon = search.result();
  return {canon.vertex_count(), graph6_encode(canon)};
}

}  // namespace triex
