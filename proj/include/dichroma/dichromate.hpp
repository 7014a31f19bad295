#pragma once

// The Tutte polynomial T_M(x, y), its specialization Y_M(q, t), and the
// nonnegative companion Yhat_M(p, t), together with the transforms among them.
//
// Slot conventions: T in (x, y), Y in (q, t), Y(1-p, t) and Yhat in (p, t);
// the first named variable always occupies the first slot.

#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "matroid.hpp"
#include "poly.hpp"

namespace dichroma {

/// sum over S of (x-1)^(d - rank S) (y-1)^(corank S).
inline Poly tutte_subset_expansion(const Matroid& m) {
  const int d = m.rank();
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(d + 1),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(m.size() + 1), 0));
  for (Subset s = 0;; ++s) {
    ++counts[d - m.rank(s)][m.corank(s)];
    if (s == m.ground()) break;
  }
  const Poly xm1 = Poly::first_var() - Poly(1);
  const Poly ym1 = Poly::second_var() - Poly(1);
  Poly t;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= m.size(); ++b)
      if (counts[a][b] != 0)
        t += BigInt(counts[a][b]) * (xm1.pow(static_cast<unsigned>(a)) * ym1.pow(static_cast<unsigned>(b)));
  return t;
}

/// Memo for deletion-contraction, keyed on the exact rank-table bytes.
/// Entries are never modified once inserted.
class TutteMemo {
 public:
  static std::string key(const Matroid& m) {
    std::string k(1, static_cast<char>(m.size()));
    k.append(m.rank_table().begin(), m.rank_table().end());
    return k;
  }
  const Poly* find(const std::string& k) const {
    auto it = table_.find(k);
    return it == table_.end() ? nullptr : &it->second;
  }
  const Poly& insert(std::string k, Poly value) { return table_.try_emplace(std::move(k), std::move(value)).first->second; }
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, Poly> table_;
};

namespace detail {
inline int lowest_link(const Matroid& m) {
  for (int e = 0; e < m.size(); ++e)
    if (m.classify(e) == ElementType::Link) return e;
  return -1;
}
}  // namespace detail

/// T(M) = T(M\e) + T(M/e) on the lowest link; x^coloops y^loops otherwise.
inline Poly tutte_deletion_contraction(const Matroid& m, TutteMemo& memo) {
  std::string k = TutteMemo::key(m);
  if (const Poly* hit = memo.find(k)) return *hit;
  const int e = detail::lowest_link(m);
  Poly result;
  if (e < 0) {
    const int loops = m.loop_count();
    result = Poly::monomial(1, static_cast<unsigned>(m.size() - loops), static_cast<unsigned>(loops));
  } else {
    result = tutte_deletion_contraction(delete_element(m, e), memo) +
             tutte_deletion_contraction(contract_element(m, e), memo);
  }
  return memo.insert(std::move(k), std::move(result));
}

inline Poly tutte_deletion_contraction(const Matroid& m) {
  TutteMemo memo;
  return tutte_deletion_contraction(m, memo);
}

/// Y = (1-q)^rank(E) q^corank(E) T((qt+1-q)/(1-q), 1/q), with denominators
/// cleared and divided out exactly.
inline Poly y_from_tutte(const Matroid& m, const Poly& tutte) {
  const Poly q = Poly::first_var();
  const Poly t = Poly::second_var();
  const Poly one_minus_q = Poly(1) - q;
  const Poly multiplier =
      one_minus_q.pow(static_cast<unsigned>(m.rank())) * q.pow(static_cast<unsigned>(m.corank(m.ground())));
  return substitute(tutte, {q * t + one_minus_q, one_minus_q}, {Poly(1), q}, multiplier);
}

/// Y = sum over S of q^(m-|S|) (1-q)^|S| t^(d - rank S); obtained by
/// substituting the defining change of variables into the subset expansion.
inline Poly y_subset_expansion(const Matroid& m) {
  const int d = m.rank();
  const int n = m.size();
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(n + 1),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(d + 1), 0));
  for (Subset s = 0;; ++s) {
    ++counts[popcount(s)][d - m.rank(s)];
    if (s == m.ground()) break;
  }
  const Poly q = Poly::first_var();
  const Poly p = Poly(1) - q;
  Poly y;
  for (int size = 0; size <= n; ++size) {
    Poly weight = q.pow(static_cast<unsigned>(n - size)) * p.pow(static_cast<unsigned>(size));
    for (int c = 0; c <= d; ++c)
      if (counts[size][c] != 0) y += BigInt(counts[size][c]) * (weight * Poly::monomial(1, 0, static_cast<unsigned>(c)));
  }
  return y;
}

/// Y(q, t) -> Y(1-p, t). The map is an involution, so it also converts back.
inline Poly to_p_basis(const Poly& y) { return compose(y, Poly(1) - Poly::first_var(), Poly::second_var()); }
inline Poly from_p_basis(const Poly& y_p) { return to_p_basis(y_p); }

/// Yhat = ((-1)^d Y(1+p, -t) - t^d) / (1+t). Throws NonExactDivision if the
/// division leaves a remainder and IdentityFailure on a negative coefficient.
inline Poly yhat_from_y(const Poly& y, int d) {
  if (d == 0) {
    if (y != Poly(1)) throw IdentityFailure("a rank-0 dichromate must equal 1, got " + y.to_string("q", "t"));
    return {};
  }
  const Poly p = Poly::first_var();
  const Poly t = Poly::second_var();
  Poly shifted = compose(y, Poly(1) + p, -t);
  if (d % 2 != 0) shifted = -shifted;
  Poly yhat = exact_div(shifted - t.pow(static_cast<unsigned>(d)), Poly(1) + t);
  if (!yhat.all_coefficients_nonnegative())
    throw IdentityFailure("Yhat has a negative coefficient: " + yhat.to_string("p", "t"));
  return yhat;
}

inline Poly yhat(const Matroid& m) { return yhat_from_y(y_subset_expansion(m), m.rank()); }

/// Yhat(M) = p t^(d-1) + (1+p) t^b Yhat(M\e) + p Yhat(M/e) on the lowest
/// nonloop e; zero when every element is a loop.
inline Poly yhat_recursion(const Matroid& m, TutteMemo& memo) {
  std::string k = TutteMemo::key(m);
  if (const Poly* hit = memo.find(k)) return *hit;
  int e = -1;
  for (int f = 0; f < m.size() && e < 0; ++f)
    if (m.classify(f) != ElementType::Loop) e = f;
  Poly result;
  if (e >= 0) {
    const int d = m.rank();
    const Poly p = Poly::first_var();
    result = Poly::monomial(1, 1, static_cast<unsigned>(d - 1)) +
             (Poly(1) + p) * Poly::monomial(1, 0, static_cast<unsigned>(m.coloop_indicator(e))) *
                 yhat_recursion(delete_element(m, e), memo) +
             p * yhat_recursion(contract_element(m, e), memo);
  }
  return memo.insert(std::move(k), std::move(result));
}

inline Poly yhat_recursion(const Matroid& m) {
  TutteMemo memo;
  return yhat_recursion(m, memo);
}

/// Y(1-p, t) = t^d + (1-t) (-1)^d Yhat(-p, -t).
inline Poly y_from_yhat(const Poly& yhat, int d) {
  const Poly p = Poly::first_var();
  const Poly t = Poly::second_var();
  Poly reflected = compose(yhat, -p, -t);
  if (d % 2 != 0) reflected = -reflected;
  return t.pow(static_cast<unsigned>(d)) + (Poly(1) - t) * reflected;
}

/// T(x, y) = y^m / (y-1)^d * Y(1/y, (x-1)(y-1)), restoring the loop factor.
inline Poly tutte_from_y(const Poly& y, int m, int loops, int d) {
  if (y.is_zero() || y.degree_first() != m - loops || y.degree_second() != d)
    throw OutOfRange("inconsistent dichromate parameters: deg_q Y = " + std::to_string(y.degree_first()) +
                     ", deg_t Y = " + std::to_string(y.degree_second()) + ", expected " + std::to_string(m - loops) +
                     " and " + std::to_string(d));
  const Poly x = Poly::first_var();
  const Poly yv = Poly::second_var();
  const Poly ym1 = yv - Poly(1);
  return substitute(y, {Poly(1), yv}, {(x - Poly(1)) * ym1}, yv.pow(static_cast<unsigned>(m)),
                    ym1.pow(static_cast<unsigned>(d)));
}

/// chi_M(t) = [q^(m - loops)] Y(q, t), in the second slot.
inline Poly characteristic_from_y(const Poly& y, int m, int loops) {
  return y.coefficient_of_first(static_cast<unsigned>(m - loops));
}

struct InvariantBundle {
  int m = 0;
  int d = 0;
  int loops = 0;
  Poly tutte;  // (x, y)
  Poly y;      // (q, t)
  Poly y_p;    // (p, t), Y(1-p, t)
  Poly yhat;   // (p, t)
};

inline InvariantBundle compute_invariants(const Matroid& m) {
  InvariantBundle b;
  b.m = m.size();
  b.d = m.rank();
  b.loops = m.loop_count();
  b.tutte = tutte_subset_expansion(m);
  b.y = y_subset_expansion(m);
  b.y_p = to_p_basis(b.y);
  b.yhat = yhat_from_y(b.y, b.d);
  return b;
}

}  // namespace dichroma
