#pragma once

// Finite abstract simplicial complexes and their reduced rational homology.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "multigraph.hpp"
#include "poly.hpp"

namespace dichroma {

inline constexpr std::size_t kMaxFacesForHomology = std::size_t{1} << 14;

/// Simplicial complex on a labeled vertex set. Faces are bitmasks over the
/// positions of the (strictly increasing) label vector. The void complex has
/// no faces at all; every other complex contains the empty face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(std::vector<int> labels) {
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    k.check_labels();
    return k;
  }

  /// Faces must already be closed under taking subsets.
  static SimplicialComplex from_faces(std::vector<int> labels, std::vector<Subset> faces) {
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    k.check_labels();
    k.faces_ = std::move(faces);
    k.normalize();
    const Subset all = k.all_vertices();
    for (Subset f : k.faces_) {
      if ((f & ~all) != 0) throw OutOfRange("face uses a vertex outside the complex");
      for (Subset rest = f; rest != 0; rest &= rest - 1) {
        Subset sub = f & ~(rest & -rest);
        if (!k.contains(sub))
          throw OutOfRange("face set is not closed under subsets (missing a facet of face " +
                           std::to_string(f) + ")");
      }
    }
    return k;
  }

  /// Closure of the given facets. An empty facet list yields the void complex.
  static SimplicialComplex from_facets(std::vector<int> labels, const std::vector<Subset>& facets) {
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    k.check_labels();
    std::vector<Subset> faces;
    for (Subset f : facets)
      for (Subset sub = f;; sub = (sub - 1) & f) {
        faces.push_back(sub);
        if (sub == 0) break;
      }
    k.faces_ = std::move(faces);
    k.normalize();
    return k;
  }

  const std::vector<int>& vertex_labels() const { return labels_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  Subset all_vertices() const {
    return labels_.size() >= 32 ? ~Subset{0} : (Subset{1} << labels_.size()) - 1;
  }

  /// Sorted by cardinality, then by mask value.
  const std::vector<Subset>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  bool is_void() const { return faces_.empty(); }

  bool contains(Subset f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f, face_less);
  }

  /// Largest face size minus one; -1 for {empty face}; kMinusInfinity if void.
  int dimension() const { return is_void() ? kMinusInfinity : popcount(faces_.back()) - 1; }

  std::vector<Subset> facets() const {
    std::vector<Subset> out;
    for (Subset f : faces_) {
      bool maximal = true;
      for (int v = 0; v < vertex_count() && maximal; ++v)
        if (!(f >> v & 1u) && contains(f | Subset{1} << v)) maximal = false;
      if (maximal) out.push_back(f);
    }
    return out;
  }

  /// f[k] = number of faces with k vertices (dimension k-1).
  std::vector<std::int64_t> f_vector() const {
    std::vector<std::int64_t> f;
    for (Subset s : faces_) {
      auto k = static_cast<std::size_t>(popcount(s));
      if (f.size() <= k) f.resize(k + 1, 0);
      ++f[k];
    }
    return f;
  }

  /// -f_{-1} + f_0 - f_1 + ... computed from face counts.
  std::int64_t reduced_euler_characteristic() const {
    std::int64_t chi = 0;
    for (Subset s : faces_) chi += (popcount(s) % 2 == 0) ? -1 : 1;
    return chi;
  }

  /// Faces expressed as sorted label lists, for reports and comparisons.
  std::vector<std::vector<int>> labeled_faces() const {
    std::vector<std::vector<int>> out;
    for (Subset f : faces_) {
      std::vector<int> face;
      for (int v = 0; v < vertex_count(); ++v)
        if (f >> v & 1u) face.push_back(labels_[v]);
      out.push_back(std::move(face));
    }
    return out;
  }

  /// Applies a label map (old label at position v becomes new_labels[v]) and
  /// re-sorts into canonical form.
  SimplicialComplex relabeled(const std::vector<int>& new_labels) const {
    if (new_labels.size() != labels_.size()) throw OutOfRange("relabeling has the wrong length");
    std::vector<int> order(labels_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return new_labels[a] < new_labels[b]; });
    std::vector<int> position(labels_.size());
    std::vector<int> sorted_labels(labels_.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      position[order[k]] = static_cast<int>(k);
      sorted_labels[k] = new_labels[order[k]];
    }
    std::vector<Subset> faces;
    faces.reserve(faces_.size());
    for (Subset f : faces_) {
      Subset g = 0;
      for (int v = 0; v < vertex_count(); ++v)
        if (f >> v & 1u) g |= Subset{1} << position[v];
      faces.push_back(g);
    }
    if (is_void()) return void_complex(std::move(sorted_labels));
    return from_faces(std::move(sorted_labels), std::move(faces));
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  static bool face_less(Subset a, Subset b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  }

  void check_labels() const {
    if (labels_.size() > 31) throw SizeLimitExceeded("simplicial complex has more than 31 vertices");
    for (std::size_t k = 1; k < labels_.size(); ++k)
      if (labels_[k - 1] >= labels_[k]) throw OutOfRange("vertex labels must be strictly increasing");
  }

  void normalize() {
    std::sort(faces_.begin(), faces_.end(), face_less);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  }

  std::vector<int> labels_;
  std::vector<Subset> faces_;
};

/// Reduced Betti numbers beta_j for j = -1 .. dim.
struct BettiVector {
  std::vector<std::int64_t> values;  // values[j + 1] = beta_j

  std::int64_t at(int j) const {
    const auto idx = static_cast<std::size_t>(j + 1);
    return (j < -1 || idx >= values.size()) ? 0 : values[idx];
  }
  int top_dimension() const { return static_cast<int>(values.size()) - 2; }

  std::int64_t euler_poincare() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < values.size(); ++k)
      chi += (k % 2 == 0 ? -1 : 1) * values[k];
    return chi;
  }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

namespace detail {

template <typename Int>
bool checked_bareiss_step(const Int& a, const Int& b, const Int& c, const Int& d, const Int& prev,
                          Int& out) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    std::int64_t x, y, z;
    if (__builtin_mul_overflow(a, b, &x) || __builtin_mul_overflow(c, d, &y) ||
        __builtin_sub_overflow(x, y, &z))
      return false;
    out = z / prev;
    return true;
  } else {
    out = (a * b - c * d) / prev;
    return true;
  }
}

/// Fraction-free (Bareiss) elimination; nullopt if the fixed-width type would
/// overflow.
template <typename Int>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<Int>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Int p = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Int lead = a[r][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int v;
        if (!checked_bareiss_step<Int>(p, a[r][j], lead, a[rank][j], prev, v)) return std::nullopt;
        a[r][j] = v;
      }
      a[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the rationals of an integer matrix given as dense rows.
inline std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  if (rows.empty() || cols == 0) return 0;
  if (auto r = detail::bareiss_rank<std::int64_t>(rows, cols)) return *r;
  std::vector<std::vector<BigInt>> big(rows.size(), std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) big[i][j] = rows[i][j];
  return *detail::bareiss_rank<BigInt>(std::move(big), cols);
}

/// Reduced Betti numbers over the rationals. The boundary of each vertex is
/// the empty face (augmented chain complex); faces are ordered by mask and
/// the sign of removing the k-th smallest vertex is (-1)^k.
inline BettiVector betti_numbers(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  if (k.face_count() > kMaxFacesForHomology)
    throw SizeLimitExceeded("complex has " + std::to_string(k.face_count()) + " faces; limit is " +
                            std::to_string(kMaxFacesForHomology));
  const int dim = k.dimension();
  // by_size[s] = faces with s vertices, in ascending mask order.
  std::vector<std::vector<Subset>> by_size(static_cast<std::size_t>(dim + 2));
  for (Subset f : k.faces()) by_size[static_cast<std::size_t>(popcount(f))].push_back(f);

  // boundary_rank[s] = rank of the map from s-vertex faces to (s-1)-vertex faces.
  std::vector<std::size_t> boundary_rank(by_size.size() + 1, 0);
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    const auto& lower = by_size[s - 1];
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(by_size[s].size());
    for (Subset f : by_size[s]) {
      std::vector<std::int64_t> row(lower.size(), 0);
      int position = 0;
      for (Subset rest = f; rest != 0; rest &= rest - 1, ++position) {
        Subset sub = f & ~(rest & -rest);
        auto it = std::lower_bound(lower.begin(), lower.end(), sub);
        row[static_cast<std::size_t>(it - lower.begin())] = (position % 2 == 0) ? 1 : -1;
      }
      rows.push_back(std::move(row));
    }
    boundary_rank[s] = rational_rank(rows, lower.size());
  }

  BettiVector b;
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    const auto count = static_cast<std::int64_t>(by_size[s].size());
    b.values.push_back(count - static_cast<std::int64_t>(boundary_rank[s]) -
                       static_cast<std::int64_t>(boundary_rank[s + 1]));
  }
  return b;
}

/// Order complex of the face poset of nonempty faces (the barycentric
/// subdivision). Vertices are labeled by position in faces(); only for tiny
/// complexes.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  std::vector<Subset> nonempty;
  for (Subset f : k.faces())
    if (f != 0) nonempty.push_back(f);
  if (nonempty.size() > 31) throw SizeLimitExceeded("barycentric subdivision needs at most 31 faces");
  const int n = static_cast<int>(nonempty.size());
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  if (k.is_void()) return SimplicialComplex::void_complex(labels);
  std::vector<Subset> chains{0};
  // Faces are sorted by size, so each chain is extended only by later faces.
  std::vector<Subset> frontier{0};
  std::vector<int> top(1, -1);
  while (!frontier.empty()) {
    std::vector<Subset> next;
    std::vector<int> next_top;
    for (std::size_t c = 0; c < frontier.size(); ++c)
      for (int v = top[c] + 1; v < n; ++v) {
        if (top[c] >= 0) {
          Subset below = nonempty[static_cast<std::size_t>(top[c])];
          Subset above = nonempty[static_cast<std::size_t>(v)];
          if ((below & above) != below || below == above) continue;
        }
        next.push_back(frontier[c] | Subset{1} << v);
        next_top.push_back(v);
      }
    chains.insert(chains.end(), next.begin(), next.end());
    frontier = std::move(next);
    top = std::move(next_top);
  }
  return SimplicialComplex::from_faces(labels, std::move(chains));
}

}  // namespace dichroma
