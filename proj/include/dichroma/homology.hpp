#pragma once

// Homology of the complexes Gamma_i(S) = {S \ T : T in S_i, T subset of S},
// whose barycentric subdivisions are the order complexes of the lower
// intervals [bottom, S]. Whitney homology of each lattice is assembled from
// them without building the order complexes.

#include <cstdint>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "matroid.hpp"
#include "whitney.hpp"

namespace dichroma {

namespace detail {
inline std::vector<int> labels_of(const Matroid& m, Subset s) {
  std::vector<int> out;
  for (int e = 0; e < m.size(); ++e)
    if (s >> e & 1u) out.push_back(m.labels()[static_cast<std::size_t>(e)]);
  return out;
}
}  // namespace detail

inline SimplicialComplex gamma_complex(const RankedFamily& f, Subset s) {
  if (!f.contains(s)) throw OutOfRange(subset_to_string(s) + " is not a member of the family");
  const Matroid& m = f.matroid();
  const Subset outside = m.ground() & ~s;
  std::vector<Subset> faces;
  for (Subset t = s;; t = (t - 1) & s) {
    if (f.contains(t)) faces.push_back(detail::compress(s & ~t, outside, m.size()));
    if (t == 0) break;
  }
  return SimplicialComplex::from_faces(detail::labels_of(m, s), std::move(faces));
}

inline SimplicialComplex gamma_complex(const Matroid& m, int level, Subset s) {
  return gamma_complex(RankedFamily(m, level), s);
}

/// J(N_i / (E \ S)) where N_i is the dual of the i-th truncation.
inline SimplicialComplex independence_complex_of_minor(const Matroid& m, int level, Subset s) {
  if (m.rank(s) < m.rank() - level) throw OutOfRange(subset_to_string(s) + " is not a member of the family");
  const Matroid n = dual(truncate(m, level));
  return independent_sets(minor(n, 0, m.ground() & ~s));
}

struct WhitneyHomologyContributor {
  Subset s = 0;
  std::int64_t betti = 0;
};

struct WhitneyHomologyRank {
  int j = 0;
  std::int64_t rank = 0;
  std::vector<WhitneyHomologyContributor> contributors;  // nonzero terms only
};

/// rank WH_{j-1} = sum over members S of height j of beta_{j-2}(Gamma_i(S)),
/// for 1 <= j <= m-d+1+i.
inline std::vector<WhitneyHomologyRank> whitney_homology_report(const Matroid& m, int level) {
  const RankedFamily f(m, level);
  std::vector<WhitneyHomologyRank> out(static_cast<std::size_t>(f.max_height()));
  for (int j = 1; j <= f.max_height(); ++j) out[static_cast<std::size_t>(j - 1)].j = j;
  for (Subset s : f.members()) {
    const int j = f.height(s);
    const std::int64_t b = betti_numbers(gamma_complex(f, s)).at(j - 2);
    if (b != 0) {
      auto& slot = out[static_cast<std::size_t>(j - 1)];
      slot.rank += b;
      slot.contributors.push_back({s, b});
    }
  }
  return out;
}

inline std::vector<std::int64_t> whitney_homology_ranks(const Matroid& m, int level) {
  std::vector<std::int64_t> ranks;
  for (const auto& r : whitney_homology_report(m, level)) ranks.push_back(r.rank);
  return ranks;
}

struct ShellabilityReport {
  int top_dimension = 0;
  BettiVector betti;
  std::int64_t mobius = 0;
  std::int64_t reduced_euler = 0;
};

/// Homology of Gamma_i(S) is concentrated in dimension |S|-d+i-1, its rank
/// there is |mu_i(S)|, and mu_i(S) is the reduced Euler characteristic.
inline ShellabilityReport shellability_consequence_check(const Matroid& m, int level, Subset s) {
  if (m.loop_count() != 0) throw OutOfRange("shellability check needs a loopless matroid");
  const RankedFamily f(m, level);
  const SimplicialComplex gamma = gamma_complex(f, s);
  ShellabilityReport r;
  r.top_dimension = popcount(s) - m.rank() + level - 1;
  r.betti = betti_numbers(gamma);
  r.mobius = mobius_by_recursion(f).at(s);
  r.reduced_euler = gamma.reduced_euler_characteristic();
  const std::string where = " for S=" + subset_to_string(s) + " at level " + std::to_string(level);
  for (int j = -1; j <= r.betti.top_dimension(); ++j)
    if (j != r.top_dimension && r.betti.at(j) != 0)
      throw IdentityFailure("nonzero homology below the top dimension (beta_" + std::to_string(j) + ")" + where);
  const std::int64_t top = r.betti.at(r.top_dimension);
  const std::int64_t signed_top = (r.top_dimension % 2 == 0) ? top : -top;
  if (r.mobius != signed_top || r.mobius != r.reduced_euler)
    throw IdentityFailure("mu = " + std::to_string(r.mobius) + " but signed top Betti number = " +
                          std::to_string(signed_top) + " and reduced Euler characteristic = " +
                          std::to_string(r.reduced_euler) + where);
  return r;
}

/// chi_M(t) = (-1)^d (1-t) sum_i rank H_{m-d+i-1}(J(N_i)) (-t)^i, loopless M.
inline Poly characteristic_from_homology(const Matroid& m) {
  if (m.loop_count() != 0) throw OutOfRange("the homological formula for chi needs a loopless matroid");
  if (m.rank() < 1) throw OutOfRange("the homological formula for chi needs rank at least 1");
  const int d = m.rank();
  Poly sum;
  for (int i = 0; i < d; ++i) {
    const BettiVector b = betti_numbers(independent_sets(dual(truncate(m, i))));
    const std::int64_t top = b.at(m.size() - d + i - 1);
    sum.add_term({0, static_cast<unsigned>(i)}, BigInt(i % 2 == 0 ? top : -top));
  }
  Poly chi = (Poly(1) - Poly::second_var()) * sum;
  return d % 2 == 0 ? chi : -chi;
}

/// Order complex of the open interval (bottom, S): chains of members strictly
/// inside S. Only for tiny S; used to cross-check the subdivision argument.
inline SimplicialComplex interval_order_complex(const RankedFamily& f, Subset s) {
  std::vector<Subset> inside;
  for (Subset t : f.members())
    if ((t & s) == t && t != s) inside.push_back(t);
  if (inside.size() > 31) throw SizeLimitExceeded("interval too large for an explicit order complex");
  const int n = static_cast<int>(inside.size());
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v;
  // inside is sorted by cardinality, so chains grow by later indices.
  std::vector<Subset> chains{0};
  std::vector<Subset> frontier{0};
  std::vector<int> top{-1};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    std::vector<int> next_top;
    for (std::size_t c = 0; c < frontier.size(); ++c)
      for (int v = top[c] + 1; v < n; ++v) {
        if (top[c] >= 0) {
          const Subset below = inside[static_cast<std::size_t>(top[c])];
          const Subset above = inside[static_cast<std::size_t>(v)];
          if ((below & above) != below || below == above) continue;
        }
        next.push_back(frontier[c] | Subset{1} << v);
        next_top.push_back(v);
      }
    chains.insert(chains.end(), next.begin(), next.end());
    frontier = std::move(next);
    top = std::move(next_top);
  }
  return SimplicialComplex::from_faces(std::move(labels), std::move(chains));
}

}  // namespace dichroma
