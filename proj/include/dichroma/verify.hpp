#pragma once

// The identity suite: every cross-check between independent computations,
// run over a list of matroids (optionally with their graphs) and tallied
// per identity with the first failing witness.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "corpus.hpp"
#include "dichromate.hpp"
#include "homology.hpp"
#include "matroid.hpp"
#include "potts.hpp"
#include "whitney.hpp"

namespace dichroma {

struct VerifyOptions {
  int homology_max_m = 6;     // homology checks skip larger ground sets
  int partition_max_n = 6;    // partition-sum oracle
  int partition_max_m = 8;
  std::uint64_t census_max = 1'000'000;  // colours^n for the census
  std::vector<std::string> groups;       // empty: all groups
};

/// Values shared by many identities, computed on first use.
class Subject {
 public:
  explicit Subject(const CorpusEntry& entry) : entry_(entry) {}

  const Matroid& matroid() const { return entry_.matroid; }
  const std::optional<Multigraph>& graph() const { return entry_.graph; }
  const std::string& name() const { return entry_.name; }

  const Poly& y() const { return cached(y_, [&] { return y_subset_expansion(matroid()); }); }
  const Poly& tutte() const { return cached(tutte_, [&] { return tutte_subset_expansion(matroid()); }); }
  const Poly& y_p() const { return cached(y_p_, [&] { return to_p_basis(y()); }); }
  const Poly& yhat() const { return cached(yhat_, [&] { return yhat_from_y(y(), matroid().rank()); }); }
  const WhitneyTable& whitney() const { return cached(whitney_, [&] { return w_polynomials(matroid()); }); }
  const std::vector<MobiusTable>& mobius() const {
    return cached(mobius_, [&] {
      std::vector<MobiusTable> out;
      for (int i = 0; i < matroid().rank(); ++i) out.push_back(mobius_by_recursion(RankedFamily(matroid(), i)));
      return out;
    });
  }

 private:
  template <typename T, typename F>
  static const T& cached(std::optional<T>& slot, F&& make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }

  const CorpusEntry& entry_;
  mutable std::optional<Poly> y_, tutte_, y_p_, yhat_;
  mutable std::optional<WhitneyTable> whitney_;
  mutable std::optional<std::vector<MobiusTable>> mobius_;
};

/// A check returns nullopt on success or a witness describing the failure.
using Witness = std::optional<std::string>;

struct Identity {
  std::string group;
  std::string name;
  std::function<bool(const Subject&, const VerifyOptions&)> applies;
  std::function<Witness(const Subject&, const VerifyOptions&)> check;
};

namespace detail {

inline std::string show(const Poly& p, const char* a, const char* b) { return p.to_string(a, b); }

inline Witness differ(const std::string& what, const Poly& lhs, const Poly& rhs, const char* a, const char* b) {
  if (lhs == rhs) return std::nullopt;
  return what + ": " + show(lhs, a, b) + " != " + show(rhs, a, b);
}

inline bool any(const Subject&, const VerifyOptions&) { return true; }
inline bool ranked(const Subject& s, const VerifyOptions&) { return s.matroid().rank() >= 1; }
inline bool loopless_ranked(const Subject& s, const VerifyOptions& o) {
  return ranked(s, o) && s.matroid().loop_count() == 0;
}
inline bool homology_sized(const Subject& s, const VerifyOptions& o) {
  return ranked(s, o) && s.matroid().size() <= o.homology_max_m;
}
inline bool homology_loopless(const Subject& s, const VerifyOptions& o) {
  return homology_sized(s, o) && s.matroid().loop_count() == 0;
}
inline bool has_graph(const Subject& s, const VerifyOptions&) { return s.graph().has_value(); }

template <typename F>
void for_each_subset(Subset ground, F&& f) {
  for (Subset s = 0;; ++s) {
    if ((s & ~ground) == 0) f(s);
    if (s == ground) break;
  }
}

inline std::string at_level(int i, Subset s) { return " at level " + std::to_string(i) + ", S=" + subset_to_string(s); }

}  // namespace detail

inline std::vector<Identity> identity_catalogue() {
  using detail::differ;
  const Poly q = Poly::first_var();
  const Poly t = Poly::second_var();
  const Poly p = Poly::first_var();
  std::vector<Identity> ids;

  // Tutte polynomial and its specializations.
  ids.push_back({"tutte", "Tutte subset expansion = deletion-contraction", detail::any,
                 [](const Subject& s, const VerifyOptions&) {
                   return differ("T", s.tutte(), tutte_deletion_contraction(s.matroid()), "x", "y");
                 }});
  ids.push_back({"tutte", "Y by Tutte substitution = Y by subset expansion", detail::any,
                 [](const Subject& s, const VerifyOptions&) {
                   return differ("Y", y_from_tutte(s.matroid(), s.tutte()), s.y(), "q", "t");
                 }});
  ids.push_back({"tutte", "T recovered from Y", detail::any, [](const Subject& s, const VerifyOptions&) {
                   const Matroid& m = s.matroid();
                   return differ("T", tutte_from_y(s.y(), m.size(), m.loop_count(), m.rank()), s.tutte(), "x", "y");
                 }});

  // Shape and recursions of Y.
  ids.push_back({"dichromate", "deg_t Y = d, deg_q Y = m - loops, Y(q,1) = 1", detail::any,
                 [q](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   if (s.y().degree_second() != m.rank())
                     return "deg_t Y = " + std::to_string(s.y().degree_second()) + ", d = " + std::to_string(m.rank());
                   if (s.y().degree_first() != m.size() - m.loop_count())
                     return "deg_q Y = " + std::to_string(s.y().degree_first()) +
                            ", nonloops = " + std::to_string(m.size() - m.loop_count());
                   return differ("Y(q,1)", compose(s.y(), q, Poly(1)), Poly(1), "q", "t");
                 }});
  ids.push_back({"dichromate", "Y deletion-contraction on every element", detail::any,
                 [q, t](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   for (int e = 0; e < m.size(); ++e) {
                     const Poly del = y_subset_expansion(delete_element(m, e));
                     Poly expected;
                     switch (m.classify(e)) {
                       case ElementType::Link:
                         expected = q * del + (Poly(1) - q) * y_subset_expansion(contract_element(m, e));
                         break;
                       case ElementType::Loop:
                         expected = del;
                         break;
                       case ElementType::Coloop:
                         expected = (q * t + Poly(1) - q) * del;
                         break;
                     }
                     if (expected != s.y())
                       return std::string("element ") + std::to_string(e) + " (" + to_string(m.classify(e)) +
                              "): " + s.y().to_string("q", "t") + " != " + expected.to_string("q", "t");
                   }
                   return std::nullopt;
                 }});
  ids.push_back({"dichromate", "[p^k t^(d-k)] Y(1-p,t) counts k-element independent sets", detail::any,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   const auto f = independent_sets(m).f_vector();
                   for (int k = 0; k <= m.rank(); ++k) {
                     const BigInt c = s.y_p().coeff(static_cast<unsigned>(k), static_cast<unsigned>(m.rank() - k));
                     if (c != f[static_cast<std::size_t>(k)])
                       return "k=" + std::to_string(k) + ": coefficient " + c.str() + ", independent sets " +
                              std::to_string(f[static_cast<std::size_t>(k)]);
                   }
                   return std::nullopt;
                 }});

  // The companion polynomial.
  ids.push_back({"companion", "Yhat exists and has nonnegative coefficients", detail::any,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   s.yhat();  // throws on a remainder or a negative coefficient
                   return std::nullopt;
                 }});
  ids.push_back({"companion", "Yhat recursion = Yhat formula", detail::any, [](const Subject& s, const VerifyOptions&) {
                   return differ("Yhat", yhat_recursion(s.matroid()), s.yhat(), "p", "t");
                 }});
  ids.push_back({"companion", "Y(1-p,t) recovered from Yhat", detail::any, [](const Subject& s, const VerifyOptions&) {
                   return differ("Y(1-p,t)", y_from_yhat(s.yhat(), s.matroid().rank()), s.y_p(), "p", "t");
                 }});
  ids.push_back({"companion", "deg_t Yhat <= d-1 and p^(d-1-i) divides [t^i] Yhat", detail::ranked,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   const int d = s.matroid().rank();
                   for (const auto& [e, c] : s.yhat().terms()) {
                     if (static_cast<int>(e.second) > d - 1) return "term of t-degree " + std::to_string(e.second);
                     if (static_cast<int>(e.first) < d - 1 - static_cast<int>(e.second))
                       return "term p^" + std::to_string(e.first) + " t^" + std::to_string(e.second);
                   }
                   return std::nullopt;
                 }});

  // Mobius functions and Whitney numbers.
  ids.push_back({"whitney", "Mobius by recursion = Mobius by minors", detail::ranked,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   Witness w;
                   for (int i = 0; i < m.rank() && !w; ++i)
                     detail::for_each_subset(m.ground(), [&](Subset x) {
                       if (w) return;
                       const std::int64_t a = s.mobius()[static_cast<std::size_t>(i)].at(x);
                       const std::int64_t b = mobius_by_minors(m, i, x);
                       if (a != b)
                         w = "recursion " + std::to_string(a) + ", minors " + std::to_string(b) + detail::at_level(i, x);
                     });
                   return w;
                 }});
  ids.push_back({"whitney", "sign law (-1)^height mu >= 0, > 0 without loops", detail::ranked,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   for (int i = 0; i < m.rank(); ++i) {
                     const RankedFamily f(m, i);
                     for (Subset x : f.members()) {
                       const std::int64_t mu = s.mobius()[static_cast<std::size_t>(i)].at(x);
                       const std::int64_t signed_mu = f.height(x) % 2 == 0 ? mu : -mu;
                       if (signed_mu < 0 || (signed_mu == 0 && (x & m.loops()) == 0))
                         return "mu = " + std::to_string(mu) + detail::at_level(i, x);
                     }
                   }
                   return std::nullopt;
                 }});
  ids.push_back({"whitney", "W_(d-1) = (1+p)^(m-loops) - 1", detail::ranked,
                 [p](const Subject& s, const VerifyOptions&) {
                   const Matroid& m = s.matroid();
                   const auto nonloops = static_cast<unsigned>(m.size() - m.loop_count());
                   return differ("W_(d-1)", s.whitney().w_at(m.rank() - 1), (Poly(1) + p).pow(nonloops) - Poly(1), "p",
                                 "t");
                 }});
  ids.push_back({"whitney", "W_i = (1+p) W_(i-b) of M\\e + W_i of M/e on links and coloops",
                 [](const Subject& s, const VerifyOptions&) { return s.matroid().rank() >= 2; },
                 [p](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   for (int e = 0; e < m.size(); ++e) {
                     if (m.classify(e) == ElementType::Loop) continue;
                     const int b = m.coloop_indicator(e);
                     const WhitneyTable wd = w_polynomials(delete_element(m, e));
                     const WhitneyTable wc = w_polynomials(contract_element(m, e));
                     for (int i = 0; i <= m.rank() - 2; ++i) {
                       const Poly expected = (Poly(1) + p) * wd.w_at(i - b) + wc.w_at(i);
                       if (expected != s.whitney().w_at(i))
                         return "element " + std::to_string(e) + ", i=" + std::to_string(i) + ": " +
                                s.whitney().w_at(i).to_string("p", "t") + " != " + expected.to_string("p", "t");
                     }
                   }
                   return std::nullopt;
                 }});
  ids.push_back({"whitney", "Yhat = sum of W_i p^(d-1-i) t^i", detail::any, [](const Subject& s, const VerifyOptions&) {
                   const Poly assembled = s.matroid().rank() == 0 ? Poly() : assemble_yhat(s.whitney());
                   return differ("Yhat", assembled, s.yhat(), "p", "t");
                 }});
  ids.push_back({"whitney", "Y(1-p,t) from Whitney numbers", detail::ranked,
                 [](const Subject& s, const VerifyOptions&) {
                   return differ("Y(1-p,t)", y_p_from_whitney(s.whitney()), s.y_p(), "p", "t");
                 }});
  ids.push_back({"whitney", "omega^i_1 counts (d-i)-element independent sets", detail::ranked,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   const auto f = independent_sets(m).f_vector();
                   for (int i = 0; i < m.rank(); ++i)
                     if (s.whitney().at(i, 1) != f[static_cast<std::size_t>(m.rank() - i)])
                       return "i=" + std::to_string(i) + ": omega " + s.whitney().at(i, 1).str() + ", count " +
                              std::to_string(f[static_cast<std::size_t>(m.rank() - i)]);
                   return std::nullopt;
                 }});

  // Characteristic polynomial.
  ids.push_back({"chi", "chi by closed sets = [q^(m-loops)] Y", detail::any, [](const Subject& s, const VerifyOptions&) {
                   const Matroid& m = s.matroid();
                   return differ("chi", characteristic_by_closed_sets(m),
                                 characteristic_from_y(s.y(), m.size(), m.loop_count()), "q", "t");
                 }});
  ids.push_back({"chi", "chi from Whitney numbers = chi by closed sets", detail::loopless_ranked,
                 [](const Subject& s, const VerifyOptions&) {
                   return differ("chi", characteristic_from_whitney(s.whitney()), characteristic_by_closed_sets(s.matroid()),
                                 "q", "t");
                 }});

  // Homology.
  ids.push_back({"homology", "gamma complex = independence complex of a minor of the dual truncation",
                 detail::homology_loopless, [](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   for (int i = 0; i < m.rank(); ++i) {
                     const RankedFamily f(m, i);
                     for (Subset x : f.members())
                       if (!(gamma_complex(f, x) == independence_complex_of_minor(m, i, x)))
                         return "complexes differ" + detail::at_level(i, x);
                   }
                   return std::nullopt;
                 }});
  ids.push_back({"homology", "mu = reduced Euler characteristic of the gamma complex (Euler-Poincare included)",
                 detail::homology_sized, [](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   for (int i = 0; i < m.rank(); ++i) {
                     const RankedFamily f(m, i);
                     for (Subset x : f.members()) {
                       const SimplicialComplex g = gamma_complex(f, x);
                       const std::int64_t chi = g.reduced_euler_characteristic();
                       const std::int64_t mu = s.mobius()[static_cast<std::size_t>(i)].at(x);
                       if (chi != mu) return "mu " + std::to_string(mu) + ", euler " + std::to_string(chi) + detail::at_level(i, x);
                       if (betti_numbers(g).euler_poincare() != chi)
                         return "Euler-Poincare fails" + detail::at_level(i, x);
                     }
                   }
                   return std::nullopt;
                 }});
  ids.push_back({"homology", "gamma homology is concentrated in the top dimension", detail::homology_loopless,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   for (int i = 0; i < m.rank(); ++i) {
                     const RankedFamily f(m, i);
                     for (Subset x : f.members()) shellability_consequence_check(m, i, x);
                   }
                   return std::nullopt;
                 }});
  ids.push_back({"homology", "Whitney homology ranks = Whitney numbers", detail::homology_loopless,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   const Matroid& m = s.matroid();
                   for (int i = 0; i < m.rank(); ++i) {
                     const auto ranks = whitney_homology_ranks(m, i);
                     for (std::size_t j = 1; j <= ranks.size(); ++j)
                       if (s.whitney().at(i, static_cast<int>(j)) != ranks[j - 1])
                         return "i=" + std::to_string(i) + ", j=" + std::to_string(j) + ": omega " +
                                s.whitney().at(i, static_cast<int>(j)).str() + ", rank " + std::to_string(ranks[j - 1]);
                   }
                   return std::nullopt;
                 }});
  ids.push_back({"homology", "chi from top homology of the dual truncations", detail::homology_loopless,
                 [](const Subject& s, const VerifyOptions&) {
                   return differ("chi", characteristic_from_homology(s.matroid()), characteristic_by_closed_sets(s.matroid()), "q", "t");
                 }});

  // Graph side.
  ids.push_back({"potts", "Z partition sum = Z deletion-contraction",
                 [](const Subject& s, const VerifyOptions& o) {
                   return s.graph() && s.graph()->vertex_count() <= o.partition_max_n &&
                          s.graph()->edge_count() <= o.partition_max_m;
                 },
                 [](const Subject& s, const VerifyOptions&) {
                   return differ("Z", z_partition_sum(*s.graph()), z_deletion_contraction(*s.graph()), "q", "t");
                 }});
  ids.push_back({"potts", "colouring census = [q^k] Z at t = 2, 3", detail::has_graph,
                 [](const Subject& s, const VerifyOptions& o) -> Witness {
                   const Multigraph& g = *s.graph();
                   const Poly z = z_deletion_contraction(g);
                   for (int colours : {2, 3}) {
                     std::uint64_t total = 1;
                     for (int v = 0; v < g.vertex_count(); ++v) total *= static_cast<std::uint64_t>(colours);
                     if (total > o.census_max) continue;
                     const auto census = colouring_census(g, colours);
                     for (int k = 0; k <= g.edge_count(); ++k) {
                       const Rational expected = z.coefficient_of_first(static_cast<unsigned>(k)).evaluate(0, colours);
                       const auto it = census.find(k);
                       const Rational got = it == census.end() ? Rational(0) : Rational(it->second);
                       if (got != expected)
                         return std::to_string(colours) + " colours, " + std::to_string(k) + " crossings: census " +
                                got.str() + ", Z gives " + expected.str();
                     }
                   }
                   return std::nullopt;
                 }});
  ids.push_back({"potts", "component distribution = [t^k] Z", detail::has_graph,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   const Poly z = z_deletion_contraction(*s.graph());
                   const auto d = component_distribution(*s.graph());
                   for (std::size_t k = 0; k < d.size(); ++k)
                     if (d[k] != z.coefficient_of_second(static_cast<unsigned>(k)))
                       return "k=" + std::to_string(k) + ": " + d[k].to_string("q", "t");
                   return std::nullopt;
                 }});
  ids.push_back({"potts", "Y from Z_G = Y from M(G)", detail::has_graph, [](const Subject& s, const VerifyOptions&) {
                   return differ("Y", y_of_graph(*s.graph()), s.y(), "q", "t");
                 }});
  ids.push_back({"potts", "chromatic polynomial vanishes at 1", detail::has_graph,
                 [](const Subject& s, const VerifyOptions&) -> Witness {
                   if (s.graph()->edge_count() == 0) return std::nullopt;
                   const Rational v = chromatic_polynomial(*s.graph()).evaluate(0, 1);
                   if (v != 0) return "P(1) = " + v.str();
                   return std::nullopt;
                 }});
  return ids;
}

struct IdentityTally {
  std::string group;
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_witness;
};

struct VerifyReport {
  std::size_t subjects = 0;
  std::vector<IdentityTally> tallies;

  bool ok() const {
    for (const auto& t : tallies)
      if (t.failed != 0) return false;
    return true;
  }

  const IdentityTally* find(const std::string& name) const {
    for (const auto& t : tallies)
      if (t.name == name) return &t;
    return nullptr;
  }

  /// One line per identity, in catalogue order. Deterministic.
  std::string render() const {
    std::string out = "subjects: " + std::to_string(subjects) + "\n";
    for (const auto& t : tallies) {
      out += std::string(t.failed == 0 ? "PASS" : "FAIL") + "  [" + t.group + "] " + t.name + "  (" +
             std::to_string(t.checked) + " checked";
      if (t.failed != 0) out += ", " + std::to_string(t.failed) + " failed";
      out += ")\n";
      if (t.failed != 0) out += "      witness: " + t.first_witness + "\n";
    }
    return out;
  }
};

inline VerifyReport run_identities(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options = {}) {
  std::vector<Identity> ids;
  for (Identity& id : identity_catalogue())
    if (options.groups.empty() || std::find(options.groups.begin(), options.groups.end(), id.group) != options.groups.end())
      ids.push_back(std::move(id));
  VerifyReport report;
  report.subjects = corpus.size();
  for (const Identity& id : ids) report.tallies.push_back({id.group, id.name, 0, 0, ""});
  for (const CorpusEntry& entry : corpus) {
    const Subject subject(entry);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (!ids[k].applies(subject, options)) continue;
      IdentityTally& tally = report.tallies[k];
      ++tally.checked;
      Witness w;
      try {
        w = ids[k].check(subject, options);
      } catch (const Error& e) {
        w = std::string("exception: ") + e.what();
      }
      if (w) {
        if (tally.failed == 0) tally.first_witness = entry.name + ": " + *w;
        ++tally.failed;
      }
    }
  }
  return report;
}

}  // namespace dichroma
