#pragma once

// The families S_i = {S : rank(S) >= d - i}, the lattices obtained by
// adjoining a bottom element, their Moebius functions, and the Whitney
// numbers assembled from them.
//
// W_i polynomials live in the first slot (variable p); characteristic
// polynomials live in the second slot (variable t).

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "dichromate.hpp"
#include "errors.hpp"
#include "matroid.hpp"
#include "poly.hpp"

namespace dichroma {

class RankedFamily {
 public:
  /// Requires rank d >= 1 and 0 <= level <= d-1.
  RankedFamily(const Matroid& m, int level) : matroid_(m), level_(level) {
    const int d = m.rank();
    if (d < 1) throw OutOfRange("ranked families need a matroid of rank at least 1");
    if (level < 0 || level > d - 1)
      throw OutOfRange("level " + std::to_string(level) + " outside [0, " + std::to_string(d - 1) + "]");
    membership_.assign(std::size_t{1} << m.size(), false);
    for (Subset s = 0;; ++s) {
      if (m.rank(s) >= d - level) membership_[s] = true;
      if (s == m.ground()) break;
    }
    for (Subset s = 0;; ++s) {
      if (membership_[s]) members_.push_back(s);
      if (s == m.ground()) break;
    }
    std::stable_sort(members_.begin(), members_.end(),
                     [](Subset a, Subset b) { return popcount(a) < popcount(b); });
    for (Subset s : members_)
      for (int e = 0; e < m.size(); ++e)
        if (!membership_[s | Subset{1} << e])
          throw IdentityFailure("family is not upward closed at " + subset_to_string(s));
  }

  const Matroid& matroid() const { return matroid_; }
  int level() const { return level_; }
  bool contains(Subset s) const { return s < membership_.size() && membership_[s]; }
  /// Sorted by cardinality, ties by mask.
  const std::vector<Subset>& members() const { return members_; }
  /// Height in the lattice with bottom adjoined: |S| - d + 1 + i.
  int height(Subset s) const { return popcount(s) - matroid_.rank() + 1 + level_; }
  int max_height() const { return matroid_.size() - matroid_.rank() + 1 + level_; }

 private:
  Matroid matroid_;
  int level_;
  std::vector<bool> membership_;
  std::vector<Subset> members_;
};

inline RankedFamily build_family(const Matroid& m, int level) { return {m, level}; }

/// mu(bottom, S) for every subset; zero for non-members.
class MobiusTable {
 public:
  explicit MobiusTable(std::size_t subsets) : values_(subsets, 0) {}
  std::int64_t at(Subset s) const { return s < values_.size() ? values_[s] : 0; }
  void set(Subset s, std::int64_t v) { values_[s] = v; }
  friend bool operator==(const MobiusTable&, const MobiusTable&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// mu(S) = -(1 + sum of mu(T) over members T strictly inside S), bottom-up.
inline MobiusTable mobius_by_recursion(const RankedFamily& f) {
  MobiusTable mu(std::size_t{1} << f.matroid().size());
  for (Subset s : f.members()) {
    std::int64_t sum = 1;  // the adjoined bottom
    for (Subset t = (s - 1) & s;; t = (t - 1) & s) {
      if (f.contains(t)) sum += mu.at(t);
      if (t == 0) break;
    }
    mu.set(s, -sum);
  }
  return mu;
}

namespace detail {

/// A minor of a fixed matroid, described by its deleted and contracted sets.
struct MinorView {
  const Matroid* base;
  Subset deleted = 0;
  Subset contracted = 0;

  int rank_of(Subset s) const { return base->rank(s | contracted) - base->rank(contracted); }
  Subset ground() const { return base->ground() & ~(deleted | contracted); }
  int rank() const { return rank_of(ground()); }
};

/// Expands mu by single-element deletion and contraction on the lowest
/// element of S. At level = rank every subset is a member and the bottom sits
/// below the empty set, so mu is -1 on the empty set and 0 elsewhere.
inline std::int64_t mobius_minor(const MinorView& v, int level, Subset s) {
  if (level < 0) return 0;
  const int d = v.rank();
  if (v.rank_of(s) < d - level) return 0;
  if (level >= d) return s == 0 ? -1 : 0;
  const Subset bit = s & -s;  // nonempty: rank(s) >= 1
  if (v.rank_of(bit) == 0) return 0;
  const bool coloop = v.rank_of(v.ground() & ~bit) == d - 1;
  const MinorView del{v.base, v.deleted | bit, v.contracted};
  const MinorView con{v.base, v.deleted, v.contracted | bit};
  return -mobius_minor(del, level - (coloop ? 1 : 0), s & ~bit) + mobius_minor(con, level, s & ~bit);
}

}  // namespace detail

/// Second, independent computation of mu_i(S) through deletion/contraction
/// minors. Non-members give 0.
inline std::int64_t mobius_by_minors(const Matroid& m, int level, Subset s) {
  if (m.rank() < 1 || level < 0 || level > m.rank() - 1)
    throw OutOfRange("level " + std::to_string(level) + " outside [0, " + std::to_string(m.rank() - 1) + "]");
  if ((s & ~m.ground()) != 0) throw OutOfRange("subset outside ground set");
  return detail::mobius_minor({&m, 0, 0}, level, s);
}

/// Proper unsigned Whitney numbers omega[i][j] (stored at omega[i][j-1]) and
/// the polynomials W_i(p) for 0 <= i <= d-1.
struct WhitneyTable {
  int d = 0;
  int m = 0;
  int loops = 0;
  std::vector<std::vector<BigInt>> omega;
  std::vector<Poly> w;

  /// Zero outside 0 <= i <= d-1, 1 <= j <= m-d+1+i.
  BigInt at(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(omega.size())) return 0;
    const auto& row = omega[static_cast<std::size_t>(i)];
    if (j < 1 || j > static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(j - 1)];
  }
  Poly w_at(int i) const { return (i < 0 || i >= static_cast<int>(w.size())) ? Poly() : w[static_cast<std::size_t>(i)]; }

  friend bool operator==(const WhitneyTable&, const WhitneyTable&) = default;
};

/// W_i(p) = sum over members of mu_i(S) (-p)^height(S). Throws
/// IdentityFailure on a negative Whitney number.
inline WhitneyTable w_polynomials(const Matroid& m) {
  if (m.rank() < 1) throw OutOfRange("Whitney numbers need a matroid of rank at least 1");
  WhitneyTable wt;
  wt.d = m.rank();
  wt.m = m.size();
  wt.loops = m.loop_count();
  for (int i = 0; i < wt.d; ++i) {
    const RankedFamily f(m, i);
    const MobiusTable mu = mobius_by_recursion(f);
    std::vector<BigInt> row(static_cast<std::size_t>(f.max_height()), 0);
    for (Subset s : f.members()) row[static_cast<std::size_t>(f.height(s) - 1)] += mu.at(s);
    Poly w;
    for (int j = 1; j <= f.max_height(); ++j) {
      BigInt& omega = row[static_cast<std::size_t>(j - 1)];
      if (j % 2 != 0) omega = -omega;
      if (omega < 0)
        throw IdentityFailure("negative Whitney number omega_" + std::to_string(j) + "^" + std::to_string(i) + " = " +
                              omega.str());
      w.add_term({static_cast<unsigned>(j), 0}, omega);
    }
    wt.omega.push_back(std::move(row));
    wt.w.push_back(std::move(w));
  }
  return wt;
}

/// Reads omega[i][j] = [p^(d-1-i+j) t^i] Yhat off a companion polynomial.
inline WhitneyTable whitney_table_from_yhat(const Poly& yhat, int d, int m, int loops) {
  WhitneyTable wt;
  wt.d = d;
  wt.m = m;
  wt.loops = loops;
  for (int i = 0; i < d; ++i) {
    std::vector<BigInt> row;
    Poly w;
    for (int j = 1; j <= m - d + 1 + i; ++j) {
      row.push_back(yhat.coeff(static_cast<unsigned>(d - 1 - i + j), static_cast<unsigned>(i)));
      w.add_term({static_cast<unsigned>(j), 0}, row.back());
    }
    wt.omega.push_back(std::move(row));
    wt.w.push_back(std::move(w));
  }
  return wt;
}

/// sum over i of W_i(p) p^(d-1-i) t^i.
inline Poly assemble_yhat(const WhitneyTable& wt) {
  Poly out;
  for (int i = 0; i < wt.d; ++i)
    out += wt.w_at(i) * Poly::monomial(1, static_cast<unsigned>(wt.d - 1 - i), static_cast<unsigned>(i));
  return out;
}

/// The Y(1-p, t) matrix predicted from Whitney numbers:
/// [p^k t^i] = delta_{k0} delta_{id} + (-1)^(k+i-d) (omega^i_{k+i-d+1} + omega^{i-1}_{k+i-d}).
inline Poly y_p_from_whitney(const WhitneyTable& wt) {
  Poly out;
  for (int i = 0; i <= wt.d; ++i)
    for (int k = 0; k <= wt.m - wt.loops; ++k) {
      const int shift = k + i - wt.d;
      BigInt c = wt.at(i, shift + 1) + wt.at(i - 1, shift);
      if (shift % 2 != 0) c = -c;
      if (k == 0 && i == wt.d) c += 1;
      out.add_term({static_cast<unsigned>(k), static_cast<unsigned>(i)}, c);
    }
  return out;
}

/// chi_M(t) = sum over flats F of mu_K(F) t^(d - rank F), with mu_K computed
/// bottom-up on the lattice of flats.
inline Poly characteristic_by_closed_sets(const Matroid& m) {
  const std::vector<Subset> flats = closed_sets(m);
  std::vector<std::int64_t> mu(flats.size(), 0);
  Poly chi;
  for (std::size_t a = 0; a < flats.size(); ++a) {
    if (a == 0) {
      mu[a] = 1;
    } else {
      std::int64_t sum = 0;
      for (std::size_t b = 0; b < a; ++b)
        if ((flats[b] & flats[a]) == flats[b] && flats[b] != flats[a]) sum += mu[b];
      mu[a] = -sum;
    }
    chi.add_term({0, static_cast<unsigned>(m.rank() - m.rank(flats[a]))}, mu[a]);
  }
  return chi;
}

/// chi_M(t) = (-1)^d (1-t) sum_i omega^i_{m-d+1+i} (-t)^i, loopless M only.
inline Poly characteristic_from_whitney(const WhitneyTable& wt) {
  if (wt.loops != 0) throw OutOfRange("the Whitney-number formula for chi needs a loopless matroid");
  Poly sum;
  for (int i = 0; i < wt.d; ++i) {
    BigInt c = wt.at(i, wt.m - wt.d + 1 + i);
    if (i % 2 != 0) c = -c;
    sum.add_term({0, static_cast<unsigned>(i)}, c);
  }
  Poly chi = (Poly(1) - Poly::second_var()) * sum;
  return wt.d % 2 == 0 ? chi : -chi;
}

/// True when every cover relation in the family (plus bottom) raises the
/// height by exactly one. Brute force; intended for small ground sets.
inline bool is_graded(const RankedFamily& f) {
  for (Subset t : f.members()) {
    bool has_member_below = false;
    for (Subset u = (t - 1) & t;; u = (u - 1) & t) {
      if (f.contains(u)) {
        has_member_below = true;
        const Subset gap = t & ~u;
        bool covers = true;
        for (Subset v = (gap - 1) & gap; v != 0 && covers; v = (v - 1) & gap)
          if (f.contains(u | v)) covers = false;
        if (covers && f.height(t) != f.height(u) + 1) return false;
      }
      if (u == 0) break;
    }
    if (!has_member_below && f.height(t) != 1) return false;
  }
  return true;
}

}  // namespace dichroma
