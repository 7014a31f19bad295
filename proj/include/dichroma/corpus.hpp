#pragma once

// Test corpora: connected multigraphs up to isomorphism, uniform matroids,
// duals and sums with a loop or a coloop; and the search for a graph whose
// dichromate table matches a target.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dichromate.hpp"
#include "matroid.hpp"
#include "multigraph.hpp"

namespace dichroma {

/// Vertices n and edges m of one generated graph family.
struct GraphCaps {
  int max_n = 5;
  int max_m = 7;
  bool loops = true;
};

namespace detail {

using EdgeCode = std::vector<std::uint8_t>;

inline std::uint8_t pair_code(int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint8_t>(u * 16 + v);
}

/// Lexicographically least sorted edge list over all vertex permutations.
inline EdgeCode canonical_code(int n, const std::vector<Edge>& edges) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  EdgeCode best;
  EdgeCode code(edges.size());
  do {
    for (std::size_t k = 0; k < edges.size(); ++k)
      code[k] = pair_code(perm[static_cast<std::size_t>(edges[k].u)], perm[static_cast<std::size_t>(edges[k].v)]);
    std::sort(code.begin(), code.end());
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<Edge> decode(const EdgeCode& code) {
  std::vector<Edge> edges;
  for (std::uint8_t c : code) edges.push_back({c / 16, c % 16});
  return edges;
}

}  // namespace detail

/// Canonical representative of the isomorphism class of g.
inline Multigraph canonical_form(const Multigraph& g) {
  if (g.vertex_count() > 8) throw SizeLimitExceeded("canonical forms are limited to 8 vertices");
  return Multigraph(g.vertex_count(), detail::decode(detail::canonical_code(g.vertex_count(), g.edges())));
}

/// All multigraphs on exactly n vertices with exactly m edges, one per
/// isomorphism class, in canonical form and sorted by code. Loops optional.
inline std::vector<Multigraph> multigraphs(int n, int m, bool loops) {
  if (n < 1 || n > 8 || m < 0) throw OutOfRange("multigraph enumeration needs 1 <= n <= 8 and m >= 0");
  std::vector<std::array<int, 2>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = loops ? u : u + 1; v < n; ++v) pairs.push_back({u, v});
  std::set<detail::EdgeCode> layer{detail::EdgeCode{}};
  for (int k = 0; k < m; ++k) {
    std::set<detail::EdgeCode> next;
    for (const auto& code : layer) {
      std::vector<Edge> edges = detail::decode(code);
      for (const auto& [u, v] : pairs) {
        edges.push_back({u, v});
        next.insert(detail::canonical_code(n, edges));
        edges.pop_back();
      }
    }
    layer = std::move(next);
  }
  std::vector<Multigraph> out;
  for (const auto& code : layer) out.emplace_back(n, detail::decode(code));
  return out;
}

/// Connected members of multigraphs(n, k, loops) for 1 <= n <= max_n and
/// 0 <= k <= max_m.
inline std::vector<Multigraph> connected_multigraphs(const GraphCaps& caps) {
  std::vector<Multigraph> out;
  for (int n = 1; n <= caps.max_n; ++n)
    for (int k = n - 1; k <= caps.max_m; ++k)
      for (Multigraph& g : multigraphs(n, k, caps.loops))
        if (g.is_connected()) out.push_back(std::move(g));
  return out;
}

struct CorpusEntry {
  std::string name;
  Matroid matroid;
  std::optional<Multigraph> graph;
};

struct CorpusCaps {
  GraphCaps graphs;
  int max_uniform_n = 6;
  bool duals = true;
  bool sums = true;
};

inline std::string graph_name(const Multigraph& g) {
  std::string s = "G(n=" + std::to_string(g.vertex_count()) + ";";
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    s += (k ? " " : "") + std::to_string(g.edges()[k].u) + "-" + std::to_string(g.edges()[k].v);
  return s + ")";
}

/// Graphic matroids of connected multigraphs, uniform matroids, then duals,
/// then direct sums with L and L*. Entries with an identical rank table
/// are kept once, under the first name seen.
inline std::vector<CorpusEntry> build_corpus(const CorpusCaps& caps) {
  std::vector<CorpusEntry> base;
  std::set<std::pair<int, std::vector<std::uint8_t>>> seen;
  auto add = [&](std::vector<CorpusEntry>& into, std::string name, Matroid m, std::optional<Multigraph> g) {
    if (seen.insert({m.size(), m.rank_table()}).second) into.push_back({std::move(name), std::move(m), std::move(g)});
  };
  for (const Multigraph& g : connected_multigraphs(caps.graphs)) add(base, graph_name(g), Matroid::from_graph(g), g);
  for (int n = 1; n <= caps.max_uniform_n; ++n)
    for (int r = 0; r <= n; ++r)
      add(base, "U(" + std::to_string(r) + "," + std::to_string(n) + ")", Matroid::uniform(r, n), std::nullopt);
  std::vector<CorpusEntry> out = base;
  if (caps.duals)
    for (const CorpusEntry& e : base) add(out, "dual " + e.name, dual(e.matroid), std::nullopt);
  if (caps.sums) {
    const std::size_t count = out.size();
    for (std::size_t k = 0; k < count; ++k) {
      const CorpusEntry e = out[k];
      if (e.matroid.size() >= kMaxGroundSize) continue;
      add(out, e.name + " + L", direct_sum(e.matroid, matroids::loop()), std::nullopt);
      add(out, e.name + " + L*", direct_sum(e.matroid, matroids::coloop()), std::nullopt);
    }
  }
  return out;
}

/// Every connected loopless multigraph with n vertices and m edges whose
/// Y(1-p, t) equals the target.
inline std::vector<Multigraph> search_by_dichromate(int n, int m, const Poly& target_y_p) {
  std::vector<Multigraph> found;
  for (const Multigraph& g : multigraphs(n, m, false)) {
    if (!g.is_connected()) continue;
    if (to_p_basis(y_subset_expansion(Matroid::from_graph(g))) == target_y_p) found.push_back(g);
  }
  return found;
}

/// Number of spanning trees, by counting bases.
inline std::int64_t spanning_tree_count(const Multigraph& g) {
  const Matroid m = Matroid::from_graph(g);
  std::int64_t count = 0;
  for (Subset s = 0;; ++s) {
    if (popcount(s) == m.rank() && m.rank(s) == m.rank()) ++count;
    if (s == m.ground()) break;
  }
  return count;
}

}  // namespace dichroma
