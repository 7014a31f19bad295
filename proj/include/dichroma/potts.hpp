#pragma once

// The Potts partition polynomial Z_G(q, t) of a multigraph, and the
// colouring and random-subgraph censuses it encodes.
//
// Polynomials in (q, t) keep q in the first slot and t in the second.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "multigraph.hpp"
#include "poly.hpp"

namespace dichroma {

inline constexpr int kMaxPartitionVertices = 10;
inline constexpr std::uint64_t kMaxColourings = 10'000'000;
inline constexpr int kMaxSubsetEdges = 24;

/// A set partition stored as a restricted growth string: block_of[0] = 0 and
/// block_of[v] <= 1 + max(block_of[0..v-1]).
class SetPartition {
 public:
  SetPartition() = default;

  static SetPartition from_growth_string(std::vector<int> rgs) {
    SetPartition p;
    int next = 0;
    for (std::size_t v = 0; v < rgs.size(); ++v) {
      if (rgs[v] < 0 || rgs[v] > next)
        throw OutOfRange("not a restricted growth string at position " + std::to_string(v));
      if (rgs[v] == next) ++next;
    }
    p.block_of_ = std::move(rgs);
    p.blocks_ = next;
    return p;
  }

  /// Blocks must be nonempty, disjoint and cover 0..n-1.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw OutOfRange("malformed partition: empty block");
      for (int v : blocks[b]) {
        if (v < 0 || v >= n) throw OutOfRange("malformed partition: vertex " + std::to_string(v) + " out of range");
        if (owner[v] != -1) throw OutOfRange("malformed partition: vertex " + std::to_string(v) + " in two blocks");
        owner[v] = static_cast<int>(b);
      }
    }
    // Renumber blocks by first appearance.
    std::vector<int> rename(blocks.size(), -1);
    std::vector<int> rgs(static_cast<std::size_t>(n));
    int next = 0;
    for (int v = 0; v < n; ++v) {
      if (owner[v] == -1) throw OutOfRange("malformed partition: vertex " + std::to_string(v) + " uncovered");
      if (rename[owner[v]] == -1) rename[owner[v]] = next++;
      rgs[v] = rename[owner[v]];
    }
    return from_growth_string(std::move(rgs));
  }

  int vertex_count() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int v) const { return block_of_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& growth_string() const { return block_of_; }

 private:
  std::vector<int> block_of_;
  int blocks_ = 0;
};

/// Visits every set partition of {0..n-1} in lexicographic order of growth strings.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  if (n == 0) {
    visit({}, 0);
    return;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);  // max of rgs[0..v]
  while (true) {
    visit(rgs, prefix_max[n - 1] + 1);
    int v = n - 1;
    while (v > 0 && rgs[v] > prefix_max[v - 1]) --v;
    if (v == 0) return;
    ++rgs[v];
    prefix_max[v] = std::max(prefix_max[v - 1], rgs[v]);
    for (int w = v + 1; w < n; ++w) {
      rgs[w] = 0;
      prefix_max[w] = prefix_max[w - 1];
    }
  }
}

/// Number of edges whose endpoints lie in different blocks; loops never cross.
inline int crossing_count(const Multigraph& g, const SetPartition& pi) {
  if (pi.vertex_count() != g.vertex_count())
    throw OutOfRange("malformed partition: covers " + std::to_string(pi.vertex_count()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  int crossing = 0;
  for (const Edge& e : g.edges()) crossing += pi.block_of(e.u) != pi.block_of(e.v);
  return crossing;
}

/// Z_G = sum over set partitions pi of q^<G:pi> t_(#pi).
inline Poly z_partition_sum(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > kMaxPartitionVertices)
    throw SizeLimitExceeded("partition sum limited to " + std::to_string(kMaxPartitionVertices) + " vertices");
  // count[(crossings, blocks)] accumulates before expanding falling factorials.
  std::map<std::pair<int, int>, std::uint64_t> counts;
  for_each_set_partition(n, [&](const std::vector<int>& rgs, int blocks) {
    int crossing = 0;
    for (const Edge& e : g.edges()) crossing += rgs[e.u] != rgs[e.v];
    ++counts[{crossing, blocks}];
  });
  Poly z;
  std::map<int, Poly> factorials;
  for (const auto& [key, count] : counts) {
    auto [crossing, blocks] = key;
    if (!factorials.contains(blocks)) factorials[blocks] = falling_factorial(static_cast<unsigned>(blocks));
    z += BigInt(count) * (Poly::monomial(1, static_cast<unsigned>(crossing), 0) * factorials[blocks]);
  }
  return z;
}

/// Z_G = q Z_{G\e} + (1-q) Z_{G/e} on the first nonloop edge; t^n when only
/// loops remain.
inline Poly z_deletion_contraction(const Multigraph& g) {
  const int e = g.first_nonloop();
  if (e < 0) return Poly::monomial(1, 0, static_cast<unsigned>(g.vertex_count()));
  const Poly q = Poly::first_var();
  return q * z_deletion_contraction(g.delete_edge(e)) + (Poly(1) - q) * z_deletion_contraction(g.contract_edge(e));
}

/// Y_G = Z_G / t^c(G).
inline Poly y_of_graph(const Multigraph& g) {
  return exact_div(z_deletion_contraction(g), Poly::monomial(1, 0, static_cast<unsigned>(g.components())));
}

/// census[k] = number of t-colourings with exactly k proper edges.
inline std::map<int, std::uint64_t> colouring_census(const Multigraph& g, int colours) {
  if (colours < 1) throw OutOfRange("colour count must be positive");
  const int n = g.vertex_count();
  std::uint64_t total = 1;
  for (int v = 0; v < n; ++v) {
    total *= static_cast<std::uint64_t>(colours);
    if (total > kMaxColourings)
      throw SizeLimitExceeded("t^n exceeds " + std::to_string(kMaxColourings) + " colourings");
  }
  std::map<int, std::uint64_t> census;
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t rest = c;
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(rest % static_cast<std::uint64_t>(colours));
      rest /= static_cast<std::uint64_t>(colours);
    }
    int proper = 0;
    for (const Edge& e : g.edges()) proper += colour[e.u] != colour[e.v];
    ++census[proper];
  }
  return census;
}

/// entry[k] = sum over edge sets S with c((V,S)) = k of q^(m-|S|) (1-q)^|S|,
/// as polynomials in q (first slot); indices run 0..n.
inline std::vector<Poly> component_distribution(const Multigraph& g) {
  const int m = g.edge_count();
  if (m > kMaxSubsetEdges) throw SizeLimitExceeded("edge-subset sweep limited to 2^" + std::to_string(kMaxSubsetEdges));
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(g.vertex_count() + 1),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(m + 1), 0));
  for (Subset s = 0; s < (Subset{1} << m); ++s) ++counts[g.components(s)][popcount(s)];
  std::vector<Poly> out;
  const Poly q = Poly::first_var();
  const Poly p = Poly(1) - q;
  for (const auto& row : counts) {
    Poly entry;
    for (int size = 0; size <= m; ++size)
      if (row[size] != 0)
        entry += BigInt(row[size]) * (q.pow(static_cast<unsigned>(m - size)) * p.pow(static_cast<unsigned>(size)));
    out.push_back(std::move(entry));
  }
  return out;
}

struct ReliabilityResult {
  Poly polynomial;  // in q, first slot
  std::optional<std::string> warning;
};

/// [t^1] Z_G(q, t): the probability that the random subgraph is connected.
inline ReliabilityResult reliability_polynomial(const Multigraph& g) {
  ReliabilityResult r{z_deletion_contraction(g).coefficient_of_second(1), std::nullopt};
  if (!g.is_connected()) r.warning = "graph is not connected; [t^1]Z is not a reliability polynomial";
  return r;
}

/// [q^m] Z_G(q, t), in the second slot.
inline Poly chromatic_polynomial(const Multigraph& g) {
  return z_deletion_contraction(g).coefficient_of_first(static_cast<unsigned>(g.edge_count()));
}

}  // namespace dichroma
