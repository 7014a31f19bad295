#include <algorithm>
#include <numeric>
#include <random>

#include <catch_amalgamated.hpp>

#include "dichroma/dichromate.hpp"
#include "dichroma/homology.hpp"

using namespace dichroma;

namespace {

const Poly t = Poly::second_var();

Matroid c3() { return Matroid::from_graph(graphs::cycle(3)); }

std::vector<Matroid> loopless_sample() {
  std::vector<Matroid> out;
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= n; ++r) out.push_back(Matroid::uniform(r, n));
  out.push_back(c3());
  out.push_back(Matroid::from_graph(graphs::complete(4)));
  out.push_back(Matroid::from_graph(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}})));
  out.push_back(Matroid::from_graph(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {0, 2}})));
  out.push_back(direct_sum(c3(), matroids::coloop()));
  out.push_back(dual(Matroid::from_graph(graphs::complete(4))));
  return out;
}

SimplicialComplex isolated_points() { return SimplicialComplex::from_facets({0, 1, 2}, {1, 2, 4}); }
SimplicialComplex triangle_boundary() { return SimplicialComplex::from_facets({0, 1, 2}, {3, 5, 6}); }

}  // namespace

TEST_CASE("simplicial complexes") {
  const SimplicialComplex empty_face = SimplicialComplex::from_faces({}, {0});
  CHECK(empty_face.dimension() == -1);
  CHECK_FALSE(empty_face.is_void());
  const SimplicialComplex nothing = SimplicialComplex::void_complex({});
  CHECK(nothing.is_void());
  CHECK(nothing.dimension() == kMinusInfinity);
  CHECK_THROWS_AS(SimplicialComplex::from_faces({0, 1}, {0, 3}), OutOfRange);
  CHECK(triangle_boundary().f_vector() == std::vector<std::int64_t>{1, 3, 3});
  CHECK(triangle_boundary().facets() == std::vector<Subset>{3, 5, 6});
  CHECK(triangle_boundary().reduced_euler_characteristic() == -1);
}

TEST_CASE("Betti numbers of small complexes") {
  CHECK(betti_numbers(isolated_points()).values == std::vector<std::int64_t>{0, 2});
  CHECK(betti_numbers(triangle_boundary()).values == std::vector<std::int64_t>{0, 0, 1});
  CHECK(betti_numbers(SimplicialComplex::from_faces({}, {0})).values == std::vector<std::int64_t>{1});
  CHECK(betti_numbers(SimplicialComplex::void_complex({})).values.empty());
  CHECK(betti_numbers(SimplicialComplex::from_facets({0, 1, 2}, {7})).values == std::vector<std::int64_t>{0, 0, 0, 0});
  // Two hollow triangles sharing an edge: a wedge of two circles.
  CHECK(betti_numbers(SimplicialComplex::from_facets({0, 1, 2, 3}, {3, 5, 6, 9, 10})).at(1) == 2);
  // Hollow tetrahedron.
  CHECK(betti_numbers(SimplicialComplex::from_facets({0, 1, 2, 3}, {7, 11, 13, 14})).at(2) == 1);
}

TEST_CASE("Euler-Poincare and relabeling invariance") {
  std::mt19937 rng(7);
  for (const Matroid& m : loopless_sample()) {
    const SimplicialComplex j = independent_sets(m);
    const BettiVector b = betti_numbers(j);
    CHECK(b.euler_poincare() == j.reduced_euler_characteristic());
    std::vector<int> labels(static_cast<std::size_t>(j.vertex_count()));
    std::iota(labels.begin(), labels.end(), 0);
    std::shuffle(labels.begin(), labels.end(), rng);
    const SimplicialComplex moved = j.relabeled(labels);
    CHECK(betti_numbers(moved) == b);
  }
}

TEST_CASE("barycentric subdivision preserves homology") {
  for (const SimplicialComplex& k : {isolated_points(), triangle_boundary(),
                                     SimplicialComplex::from_facets({0, 1, 2, 3}, {3, 5, 6, 9, 10})})
    CHECK(betti_numbers(barycentric_subdivision(k)) == betti_numbers(k));
}

TEST_CASE("gamma complexes") {
  const SimplicialComplex g0 = gamma_complex(c3(), 0, 7);
  CHECK(g0.f_vector() == std::vector<std::int64_t>{1, 3});
  const SimplicialComplex pair = gamma_complex(c3(), 0, 3);
  CHECK(pair.faces() == std::vector<Subset>{0});
  CHECK(pair.dimension() == -1);
  const SimplicialComplex g1 = gamma_complex(c3(), 1, 7);
  CHECK(g1 == triangle_boundary());
  CHECK_THROWS_AS(gamma_complex(c3(), 0, 1), OutOfRange);

  CHECK(independence_complex_of_minor(c3(), 0, 7) == independent_sets(Matroid::uniform(1, 3)));
  CHECK(independence_complex_of_minor(c3(), 1, 7) == independent_sets(Matroid::uniform(2, 3)));

  for (const Matroid& m : loopless_sample())
    for (int i = 0; i < m.rank(); ++i) {
      const RankedFamily f(m, i);
      for (Subset s : f.members()) {
        const SimplicialComplex g = gamma_complex(f, s);
        CHECK(g == independence_complex_of_minor(m, i, s));
        if (f.height(s) == 1) CHECK(g.faces() == std::vector<Subset>{0});
        CHECK(g.dimension() == popcount(s) - m.rank() + i - 1);
      }
    }
}

TEST_CASE("Whitney homology ranks") {
  CHECK(whitney_homology_ranks(c3(), 0) == std::vector<std::int64_t>{3, 2});
  CHECK(whitney_homology_ranks(c3(), 1) == std::vector<std::int64_t>{3, 3, 1});
  const auto report = whitney_homology_report(c3(), 0);
  REQUIRE(report.size() == 2);
  CHECK(report[1].contributors.size() == 1);
  CHECK(report[1].contributors[0].s == 7);
  CHECK(report[1].contributors[0].betti == 2);

  for (const Matroid& m : loopless_sample()) {
    const WhitneyTable w = w_polynomials(m);
    for (int i = 0; i < m.rank(); ++i) {
      const auto ranks = whitney_homology_ranks(m, i);
      for (std::size_t j = 1; j <= ranks.size(); ++j) CHECK(w.at(i, static_cast<int>(j)) == ranks[j - 1]);
    }
  }
}

TEST_CASE("Philip Hall and shellability consequences") {
  const auto full = shellability_consequence_check(c3(), 0, 7);
  CHECK(full.top_dimension == 0);
  CHECK(full.mobius == 2);
  const auto boolean = shellability_consequence_check(c3(), 1, 7);
  CHECK(boolean.top_dimension == 1);
  CHECK(boolean.mobius == -1);
  const auto minimal = shellability_consequence_check(c3(), 0, 3);
  CHECK(minimal.betti.at(-1) == 1);
  CHECK(minimal.mobius == -1);
  CHECK(minimal.reduced_euler == -1);
  CHECK_THROWS_AS(shellability_consequence_check(direct_sum(c3(), matroids::loop()), 0, 7), OutOfRange);

  for (const Matroid& m : loopless_sample())
    for (int i = 0; i < m.rank(); ++i) {
      const RankedFamily f(m, i);
      for (Subset s : f.members()) CHECK_NOTHROW(shellability_consequence_check(m, i, s));
    }

  // With loops: mu still equals the reduced Euler characteristic.
  const Matroid looped = direct_sum(matroids::loop(), Matroid::from_graph(graphs::complete(4)));
  for (int i = 0; i < looped.rank(); ++i) {
    const RankedFamily f(looped, i);
    const MobiusTable mu = mobius_by_recursion(f);
    for (Subset s : f.members()) CHECK(mu.at(s) == gamma_complex(f, s).reduced_euler_characteristic());
  }
}

TEST_CASE("order complexes of intervals match the gamma complexes") {
  for (const Matroid& m : {c3(), Matroid::uniform(2, 4), Matroid::from_graph(graphs::path(3))})
    for (int i = 0; i < m.rank(); ++i) {
      const RankedFamily f(m, i);
      for (Subset s : f.members())
        CHECK(betti_numbers(interval_order_complex(f, s)) == betti_numbers(gamma_complex(f, s)));
    }
}

TEST_CASE("characteristic polynomial from top homology") {
  CHECK(characteristic_from_homology(c3()) == t * t - BigInt(3) * t + Poly(2));
  CHECK(characteristic_from_homology(matroids::coloop()) == t - Poly(1));
  CHECK_THROWS_AS(characteristic_from_homology(matroids::loop()), OutOfRange);
  for (const Matroid& m : loopless_sample())
    CHECK(characteristic_from_homology(m) == characteristic_from_y(y_subset_expansion(m), m.size(), 0));
}
