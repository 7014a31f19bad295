#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace dichroma {

/// Edge subsets and element subsets are bitmasks over at most 32 items.
using Subset = std::uint32_t;

inline int popcount(Subset s) { return std::popcount(s); }

struct Edge {
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Union-find over vertex indices; used for component counts.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    --count_;
    return true;
  }
  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

/// Finite graph with loops and parallel edges allowed.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw OutOfRange("negative vertex count");
    for (const Edge& e : edges_)
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
        throw OutOfRange("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ") with " + std::to_string(n_) + " vertices");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  /// c((V, S)) for the spanning subgraph with edge set S.
  int components(Subset edge_subset) const {
    DisjointSets ds(n_);
    for (int i = 0; i < edge_count(); ++i)
      if (edge_subset >> i & 1u) ds.unite(edges_[i].u, edges_[i].v);
    return ds.count();
  }
  int components() const {
    DisjointSets ds(n_);
    for (const Edge& e : edges_) ds.unite(e.u, e.v);
    return ds.count();
  }
  bool is_connected() const { return components() <= 1; }

  int loop_count() const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                          [](const Edge& e) { return e.is_loop(); }));
  }

  /// Index of the first nonloop edge, or -1.
  int first_nonloop() const {
    for (int i = 0; i < edge_count(); ++i)
      if (!edges_[i].is_loop()) return i;
    return -1;
  }

  Multigraph delete_edge(int i) const {
    check_edge(i);
    std::vector<Edge> es = edges_;
    es.erase(es.begin() + i);
    return {n_, std::move(es)};
  }

  /// Identifies the endpoints of edge i; parallel edges become loops. The
  /// higher endpoint is removed and later vertices shift down by one.
  Multigraph contract_edge(int i) const {
    check_edge(i);
    const Edge c = edges_[i];
    if (c.is_loop()) return delete_edge(i);
    const int keep = std::min(c.u, c.v);
    const int gone = std::max(c.u, c.v);
    auto relabel = [&](int x) {
      if (x == gone) x = keep;
      return x > gone ? x - 1 : x;
    };
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (int j = 0; j < edge_count(); ++j)
      if (j != i) es.push_back({relabel(edges_[j].u), relabel(edges_[j].v)});
    return {n_ - 1, std::move(es)};
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void check_edge(int i) const {
    if (i < 0 || i >= edge_count()) throw OutOfRange("edge index out of range: " + std::to_string(i));
  }

  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Vertex-disjoint union; the vertices of h follow those of g.
inline Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
  std::vector<Edge> es = g.edges();
  const int shift = g.vertex_count();
  for (const Edge& e : h.edges()) es.push_back({e.u + shift, e.v + shift});
  return {g.vertex_count() + h.vertex_count(), std::move(es)};
}

/// One-point union: vertex gv of g is identified with vertex hv of h.
inline Multigraph wedge(const Multigraph& g, int gv, const Multigraph& h, int hv) {
  if (gv < 0 || gv >= g.vertex_count() || hv < 0 || hv >= h.vertex_count())
    throw OutOfRange("wedge vertex out of range");
  const int shift = g.vertex_count();
  auto map_h = [&](int x) {
    if (x == hv) return gv;
    return shift + (x < hv ? x : x - 1);
  };
  std::vector<Edge> es = g.edges();
  for (const Edge& e : h.edges()) es.push_back({map_h(e.u), map_h(e.v)});
  return {g.vertex_count() + h.vertex_count() - 1, std::move(es)};
}

namespace graphs {

inline Multigraph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return {n, std::move(es)};
}

inline Multigraph path(int edges) {
  std::vector<Edge> es;
  for (int i = 0; i < edges; ++i) es.push_back({i, i + 1});
  return {edges + 1, std::move(es)};
}

inline Multigraph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return {n, std::move(es)};
}

}  // namespace graphs

}  // namespace dichroma
