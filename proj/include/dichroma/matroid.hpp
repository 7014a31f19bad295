#pragma once

// Matroids given by a full rank table over all 2^m subsets.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "multigraph.hpp"

namespace dichroma {

/// Largest ground set whose rank table is materialized.
inline constexpr int kMaxGroundSize = 20;

enum class ElementType { Loop, Coloop, Link };

inline const char* to_string(ElementType t) {
  switch (t) {
    case ElementType::Loop:
      return "loop";
    case ElementType::Coloop:
      return "coloop";
    case ElementType::Link:
      return "link";
  }
  return "?";
}

enum class MinorOp { Delete, Contract };

inline std::string subset_to_string(Subset s) {
  std::string out = "{";
  for (int e = 0; s != 0; ++e, s >>= 1)
    if (s & 1u) out += (out.size() > 1 ? "," : "") + std::to_string(e);
  return out + "}";
}

class Matroid {
 public:
  /// The empty matroid.
  Matroid() = default;

  /// Validates the rank axioms: rank(empty) = 0, unit increase, and local
  /// submodularity r(S+e) + r(S+f) >= r(S+e+f) + r(S), which together are
  /// equivalent to full submodularity.
  static Matroid from_rank_table(int m, std::vector<int> table, std::vector<int> labels = {}) {
    if (m < 0 || m > kMaxGroundSize)
      throw SizeLimitExceeded("ground set size " + std::to_string(m) + " outside [0, " +
                              std::to_string(kMaxGroundSize) + "]");
    const std::size_t n = std::size_t{1} << m;
    if (table.size() != n)
      throw AxiomViolation("rank table has length " + std::to_string(table.size()) + ", expected 2^" +
                           std::to_string(m) + " = " + std::to_string(n));
    if (labels.empty()) {
      labels.resize(static_cast<std::size_t>(m));
      std::iota(labels.begin(), labels.end(), 0);
    }
    if (labels.size() != static_cast<std::size_t>(m)) throw OutOfRange("label vector has the wrong length");
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw OutOfRange("element labels must be strictly increasing");

    Matroid mat;
    mat.m_ = m;
    mat.rank_.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      if (table[s] < 0 || table[s] > m)
        throw AxiomViolation("rank of " + subset_to_string(static_cast<Subset>(s)) + " is " +
                             std::to_string(table[s]) + ", outside [0, |S|]");
      mat.rank_[s] = static_cast<std::uint8_t>(table[s]);
    }
    mat.labels_ = std::move(labels);
    mat.validate();
    return mat;
  }

  static Matroid uniform(int r, int n) {
    if (n < 0 || r < 0 || r > n)
      throw OutOfRange("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) +
                       " n=" + std::to_string(n));
    if (n > kMaxGroundSize) throw SizeLimitExceeded("uniform matroid too large");
    std::vector<int> table(std::size_t{1} << n);
    for (std::size_t s = 0; s < table.size(); ++s)
      table[s] = std::min(popcount(static_cast<Subset>(s)), r);
    return from_rank_table(n, std::move(table));
  }

  /// Graphic matroid: rank(S) = n(G) - c((V, S)).
  static Matroid from_graph(const Multigraph& g) {
    const int m = g.edge_count();
    if (m > kMaxGroundSize) throw SizeLimitExceeded("graph has too many edges for a rank table");
    std::vector<int> table(std::size_t{1} << m);
    for (std::size_t s = 0; s < table.size(); ++s)
      table[s] = g.vertex_count() - g.components(static_cast<Subset>(s));
    return from_rank_table(m, std::move(table));
  }

  /// rank(S) = max |S intersect B| over the given bases. Basis-exchange
  /// failures surface as rank-axiom violations.
  static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases) {
    if (n < 0 || n > kMaxGroundSize) throw SizeLimitExceeded("ground set too large");
    if (bases.empty()) throw AxiomViolation("a matroid needs at least one basis");
    std::vector<Subset> masks;
    for (const auto& b : bases) {
      Subset mask = 0;
      for (int e : b) {
        if (e < 0 || e >= n) throw OutOfRange("basis element out of range: " + std::to_string(e));
        mask |= Subset{1} << e;
      }
      masks.push_back(mask);
    }
    for (Subset b : masks)
      if (popcount(b) != popcount(masks.front()))
        throw AxiomViolation("bases " + subset_to_string(masks.front()) + " and " + subset_to_string(b) +
                             " have different sizes");
    std::vector<int> table(std::size_t{1} << n, 0);
    for (std::size_t s = 0; s < table.size(); ++s)
      for (Subset b : masks) table[s] = std::max(table[s], popcount(static_cast<Subset>(s) & b));
    return from_rank_table(n, std::move(table));
  }

  int size() const { return m_; }
  Subset ground() const { return m_ == 0 ? 0 : (Subset{1} << m_) - 1; }
  int rank() const { return rank_.back(); }
  int rank(Subset s) const { return rank_[s]; }
  int corank(Subset s) const { return popcount(s) - rank_[s]; }
  const std::vector<std::uint8_t>& rank_table() const { return rank_; }
  /// Origin labels; minors keep the labels of surviving elements.
  const std::vector<int>& labels() const { return labels_; }

  ElementType classify(int e) const {
    check_element(e);
    const Subset bit = Subset{1} << e;
    if (rank_[bit] == 0) return ElementType::Loop;
    if (rank_[ground() & ~bit] == rank() - 1) return ElementType::Coloop;
    return ElementType::Link;
  }

  /// b(M, e) = rank(E) - rank(E \ e).
  int coloop_indicator(int e) const {
    check_element(e);
    return rank() - rank_[ground() & ~(Subset{1} << e)];
  }

  int loop_count() const {
    int l = 0;
    for (int e = 0; e < m_; ++e) l += rank_[Subset{1} << e] == 0;
    return l;
  }
  Subset loops() const {
    Subset s = 0;
    for (int e = 0; e < m_; ++e)
      if (rank_[Subset{1} << e] == 0) s |= Subset{1} << e;
    return s;
  }

  bool is_independent(Subset s) const { return corank(s) == 0; }

  /// Largest superset of s with the same rank.
  Subset closure(Subset s) const {
    Subset c = s;
    for (int e = 0; e < m_; ++e)
      if (rank_[s | Subset{1} << e] == rank_[s]) c |= Subset{1} << e;
    return c;
  }
  bool is_closed(Subset s) const { return closure(s) == s; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.m_ == b.m_ && a.rank_ == b.rank_;
  }

  void check_element(int e) const {
    if (e < 0 || e >= m_)
      throw OutOfRange("element " + std::to_string(e) + " outside ground set of size " + std::to_string(m_));
  }

 private:
  void validate() const {
    if (rank_[0] != 0) throw AxiomViolation("normalization: rank of the empty set is " + std::to_string(rank_[0]));
    const Subset n = Subset{1} << m_;
    for (Subset s = 0; s < n; ++s)
      for (int e = 0; e < m_; ++e) {
        const Subset be = Subset{1} << e;
        if (s & be) continue;
        const int delta = rank_[s | be] - rank_[s];
        if (delta < 0 || delta > 1)
          throw AxiomViolation("unit increase: rank(" + subset_to_string(s | be) + ") - rank(" +
                               subset_to_string(s) + ") = " + std::to_string(delta));
        for (int f = e + 1; f < m_; ++f) {
          const Subset bf = Subset{1} << f;
          if (s & bf) continue;
          if (rank_[s | be] + rank_[s | bf] < rank_[s | be | bf] + rank_[s])
            throw AxiomViolation("submodularity fails for S=" + subset_to_string(s | be) + ", T=" +
                                 subset_to_string(s | bf));
        }
      }
  }

  int m_ = 0;
  std::vector<std::uint8_t> rank_{0};
  std::vector<int> labels_;
};

namespace detail {

/// Packs the bits of s that lie outside `removed` into a dense mask.
inline Subset compress(Subset s, Subset removed, int m) {
  Subset out = 0;
  int pos = 0;
  for (int e = 0; e < m; ++e) {
    if (removed >> e & 1u) continue;
    if (s >> e & 1u) out |= Subset{1} << pos;
    ++pos;
  }
  return out;
}

/// Inverse of compress: spreads a dense mask over the elements not removed.
inline Subset expand(Subset dense, Subset removed, int m) {
  Subset out = 0;
  int pos = 0;
  for (int e = 0; e < m; ++e) {
    if (removed >> e & 1u) continue;
    if (dense >> pos & 1u) out |= Subset{1} << e;
    ++pos;
  }
  return out;
}

}  // namespace detail

/// Deletes the elements of `deleted` and contracts those of `contracted`;
/// survivors are relabeled densely in increasing order.
inline Matroid minor(const Matroid& m, Subset deleted, Subset contracted) {
  if ((deleted & contracted) != 0) throw OutOfRange("an element cannot be both deleted and contracted");
  if (((deleted | contracted) & ~m.ground()) != 0) throw OutOfRange("minor set outside ground set");
  const Subset removed = deleted | contracted;
  const int k = m.size() - popcount(removed);
  std::vector<int> table(std::size_t{1} << k);
  const int rc = m.rank(contracted);
  for (Subset d = 0; d < static_cast<Subset>(table.size()); ++d)
    table[d] = m.rank(detail::expand(d, removed, m.size()) | contracted) - rc;
  std::vector<int> labels;
  for (int e = 0; e < m.size(); ++e)
    if (!(removed >> e & 1u)) labels.push_back(m.labels()[static_cast<std::size_t>(e)]);
  return Matroid::from_rank_table(k, std::move(table), std::move(labels));
}

inline Matroid minor(const Matroid& m, MinorOp op, int e) {
  m.check_element(e);
  const Subset bit = Subset{1} << e;
  return op == MinorOp::Delete ? minor(m, bit, 0) : minor(m, 0, bit);
}

inline Matroid delete_element(const Matroid& m, int e) { return minor(m, MinorOp::Delete, e); }
inline Matroid contract_element(const Matroid& m, int e) { return minor(m, MinorOp::Contract, e); }

/// M|S = M \ (E \ S).
inline Matroid restriction(const Matroid& m, Subset s) {
  if ((s & ~m.ground()) != 0) throw OutOfRange("restriction set outside ground set");
  return minor(m, m.ground() & ~s, 0);
}

/// rank*(S) = |S| - rank(E) + rank(E \ S).
inline Matroid dual(const Matroid& m) {
  std::vector<int> table(std::size_t{1} << m.size());
  for (Subset s = 0; s < static_cast<Subset>(table.size()); ++s)
    table[s] = popcount(s) - m.rank() + m.rank(m.ground() & ~s);
  return Matroid::from_rank_table(m.size(), std::move(table), m.labels());
}

/// rank_i(S) = min(rank(S), d - i), for 0 <= i <= d - 1.
inline Matroid truncate(const Matroid& m, int level) {
  if (level < 0 || level > m.rank() - 1)
    throw OutOfRange("truncation level " + std::to_string(level) + " outside [0, " +
                     std::to_string(m.rank() - 1) + "]");
  if (level == 0) return m;
  std::vector<int> table(std::size_t{1} << m.size());
  const int cap = m.rank() - level;
  for (Subset s = 0; s < static_cast<Subset>(table.size()); ++s) table[s] = std::min(m.rank(s), cap);
  return Matroid::from_rank_table(m.size(), std::move(table), m.labels());
}

/// Elements of b follow those of a.
inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int m = a.size() + b.size();
  if (m > kMaxGroundSize) throw SizeLimitExceeded("direct sum too large");
  std::vector<int> table(std::size_t{1} << m);
  for (Subset s = 0; s < static_cast<Subset>(table.size()); ++s)
    table[s] = a.rank(s & a.ground()) + b.rank(s >> a.size());
  std::vector<int> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 0);
  return Matroid::from_rank_table(m, std::move(table), std::move(labels));
}

namespace matroids {
/// One-element rank-zero matroid.
inline Matroid loop() { return Matroid::uniform(0, 1); }
/// One-element rank-one matroid.
inline Matroid coloop() { return Matroid::uniform(1, 1); }
}  // namespace matroids

/// The complex of independent sets, on vertices labeled by element labels.
inline SimplicialComplex independent_sets(const Matroid& m) {
  std::vector<Subset> faces;
  for (Subset s = 0; s <= m.ground(); ++s) {
    if (m.is_independent(s)) faces.push_back(s);
    if (s == m.ground()) break;
  }
  return SimplicialComplex::from_faces(m.labels(), std::move(faces));
}

/// All flats, ordered by cardinality then mask (a linear extension of inclusion).
inline std::vector<Subset> closed_sets(const Matroid& m) {
  std::vector<Subset> flats;
  for (Subset s = 0;; ++s) {
    if (m.is_closed(s)) flats.push_back(s);
    if (s == m.ground()) break;
  }
  std::stable_sort(flats.begin(), flats.end(), [](Subset a, Subset b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return flats;
}

}  // namespace dichroma
