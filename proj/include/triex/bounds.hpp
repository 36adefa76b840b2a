#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "triex/graph.hpp"

namespace triex {

constexpr long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }
constexpr long long choose3(long long x) { return x < 3 ? 0 : x * (x - 1) / 2 * (x - 2) / 3; }

// n written as C(r,2) + t with C(r,2) <= n < C(r+1,2), so 0 <= t <= r-1.
// n = 0 decomposes as (r=1, t=0).
struct TriangularDecomposition {
  long long edges;
  long long r;
  long long t;
};

// Integer triangular root by binary search; no floating point involved.
inline TriangularDecomposition triangular_decompose(long long n) {
  if (n < 0) throw std::invalid_argument("triangular_decompose: negative edge count");
  long long lo = 1, hi = 2;
  while (choose2(hi) <= n) hi *= 2;  // choose2(hi) > n
  while (lo + 1 < hi) {
    const long long mid = lo + (hi - lo) / 2;
    (choose2(mid) <= n ? lo : hi) = mid;
  }
  return {n, lo, n - choose2(lo)};
}

// Sharp maximum triangle count over all graphs with n edges: C(r,3) + C(t,2).
inline long long max_triangles(long long n) {
  const auto [edges, r, t] = triangular_decompose(n);
  return choose3(r) + choose2(t);
}

// The classical E^{3/2} triangle bound ((V-2)/sqrt(V(V-1))) * (sqrt(2)/3) * E^{3/2}.
// For E = C(r,2) and V = r this equals C(r,3) exactly; V = 2 is accepted and
// gives 0, which keeps the t = 0 agreement sweep valid down to a single edge.
inline double rivin_bound(long long edge_count, long long vertex_count) {
  if (vertex_count < 2) throw std::invalid_argument("rivin_bound: need at least 2 vertices");
  if (edge_count < 0) throw std::invalid_argument("rivin_bound: negative edge count");
  const double v = static_cast<double>(vertex_count);
  const double e = static_cast<double>(edge_count);
  return (v - 2.0) / std::sqrt(v * (v - 1.0)) * (std::sqrt(2.0) / 3.0) * std::pow(e, 1.5);
}

// Outcome of comparing C(c,2)+C(d,2) against C(a,2)+C(b,2) under the
// hypotheses a+b = c+d = m and c >= a >= b. The inequality always holds and
// is an equality exactly when c = a.
enum class Choose2Relation { strict, equal, violated_precondition };

inline Choose2Relation choose2_inequality(long long a, long long b, long long c, long long d,
                                          long long m) {
  if (a < 0 || b < 0 || c < 0 || d < 0 || m < 0) return Choose2Relation::violated_precondition;
  if (a + b != m || c + d != m || c < a || a < b) return Choose2Relation::violated_precondition;
  const long long lhs = choose2(c) + choose2(d);
  const long long rhs = choose2(a) + choose2(b);
  if (lhs < rhs) throw std::logic_error("choose2_inequality: inequality falsified");
  return lhs == rhs ? Choose2Relation::equal : Choose2Relation::strict;
}

// The four families of triangle-maximal graphs with n = C(r,2) + t edges:
//   complete           K_r                                  (t = 0)
//   pendant_one        K_r plus a vertex joined by one edge (t = 1)
//   k2_union_complete  K_2 disjoint union K_r               (t = 1)
//   fan                K_r plus a vertex joined to t of it  (2 <= t <= r-1)
enum class ShapeKind { complete, pendant_one, k2_union_complete, fan };

struct ExtremalShape {
  ShapeKind kind;
  long long r;
  long long t;  // 0 for complete, 1 for the two pendant forms

  static ExtremalShape complete(long long r) {
    require(r >= 1, "complete: r >= 1 required");
    return {ShapeKind::complete, r, 0};
  }
  static ExtremalShape pendant_one(long long r) {
    require(r >= 1, "pendant_one: r >= 1 required");
    return {ShapeKind::pendant_one, r, 1};
  }
  static ExtremalShape k2_union_complete(long long r) {
    require(r >= 1, "k2_union_complete: r >= 1 required");
    return {ShapeKind::k2_union_complete, r, 1};
  }
  static ExtremalShape fan(long long r, long long t) {
    require(t >= 2 && t <= r - 1, "fan: 2 <= t <= r-1 required");
    return {ShapeKind::fan, r, t};
  }

  long long edge_count() const { return choose2(r) + t; }
  long long triangle_count() const { return choose3(r) + choose2(t); }

  std::string name() const {
    switch (kind) {
      case ShapeKind::complete:
        return "K_" + std::to_string(r);
      case ShapeKind::pendant_one:
        return "K_" + std::to_string(r) + "+pendant";
      case ShapeKind::k2_union_complete:
        return "K_2+K_" + std::to_string(r);
      case ShapeKind::fan:
        return "K_" + std::to_string(r) + "+fan(" + std::to_string(t) + ")";
    }
    return {};
  }

  friend bool operator==(const ExtremalShape&, const ExtremalShape&) = default;

 private:
  static void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  }
};

// Realizes a shape as a concrete graph. Fan targets are vertices 0..t-1 of
// K_r; every other choice is isomorphic, this one is the deterministic pick.
inline Graph build_extremal(const ExtremalShape& shape) {
  const int r = static_cast<int>(shape.r);
  switch (shape.kind) {
    case ShapeKind::complete:
      return complete_graph(r);
    case ShapeKind::pendant_one:
      return attach_fan(complete_graph(r), {0});
    case ShapeKind::k2_union_complete:
      return disjoint_union(complete_graph(2), complete_graph(r));
    case ShapeKind::fan: {
      std::vector<int> targets(static_cast<size_t>(shape.t));
      for (size_t i = 0; i < targets.size(); ++i) targets[i] = static_cast<int>(i);
      return attach_fan(complete_graph(r), targets);
    }
  }
  throw std::invalid_argument("build_extremal: invalid shape");
}

// Every triangle-maximal graph with n edges, up to isomorphism and isolated
// vertices: one shape unless t = 1, where a connected and a disconnected
// maximizer coexist.
inline std::vector<ExtremalShape> maximizer_catalogue(long long n) {
  if (n < 1) throw std::invalid_argument("maximizer_catalogue: n >= 1 required");
  const auto [edges, r, t] = triangular_decompose(n);
  if (t == 0) return {ExtremalShape::complete(r)};
  if (t == 1) return {ExtremalShape::pendant_one(r), ExtremalShape::k2_union_complete(r)};
  return {ExtremalShape::fan(r, t)};
}

}  // namespace triex
