#include <catch_amalgamated.hpp>

#include "dichroma/potts.hpp"

using namespace dichroma;

namespace {

const Poly q = Poly::first_var();
const Poly t = Poly::second_var();
const Poly one_minus_q = Poly(1) - q;

Multigraph k2() { return Multigraph(2, {{0, 1}}); }
Multigraph c3() { return graphs::cycle(3); }

std::vector<Multigraph> sample_graphs() {
  return {
      Multigraph(1, {}),
      Multigraph(1, {{0, 0}, {0, 0}}),
      k2(),
      c3(),
      graphs::complete(4),
      graphs::cycle(5),
      graphs::path(3),
      Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}}),
      Multigraph(4, {{0, 1}, {2, 3}}),
      Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {0, 0}}),
      Multigraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 1}}),
  };
}

}  // namespace

TEST_CASE("restricted growth strings enumerate Bell numbers") {
  const std::vector<int> bell{1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n < static_cast<int>(bell.size()); ++n) {
    int count = 0;
    for_each_set_partition(n, [&](const std::vector<int>& rgs, int blocks) {
      ++count;
      CHECK_NOTHROW(SetPartition::from_growth_string(rgs));
      CHECK(SetPartition::from_growth_string(rgs).block_count() == blocks);
    });
    CHECK(count == bell[n]);
  }
}

TEST_CASE("crossing counts") {
  CHECK(crossing_count(c3(), SetPartition::from_blocks(3, {{0}, {1}, {2}})) == 3);
  CHECK(crossing_count(c3(), SetPartition::from_blocks(3, {{0, 1, 2}})) == 0);
  CHECK(crossing_count(c3(), SetPartition::from_blocks(3, {{0, 1}, {2}})) == 2);
  CHECK(crossing_count(Multigraph(2, {{0, 0}, {0, 1}}), SetPartition::from_blocks(2, {{0}, {1}})) == 1);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}}), OutOfRange);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}, {1, 2}}), OutOfRange);
  CHECK_THROWS_AS(crossing_count(c3(), SetPartition::from_blocks(2, {{0, 1}})), OutOfRange);
}

TEST_CASE("partition sums") {
  CHECK(z_partition_sum(k2()) == q * t * t + one_minus_q * t);
  const Poly c3_z = q.pow(3) * t * (t - Poly(1)) * (t - Poly(2)) + BigInt(3) * q * q * t * (t - Poly(1)) + t;
  CHECK(z_partition_sum(c3()) == c3_z);
  CHECK(z_partition_sum(Multigraph(1, {{0, 0}})) == t);
  CHECK_THROWS_AS(z_partition_sum(Multigraph(11, {})), SizeLimitExceeded);
}

TEST_CASE("deletion-contraction agrees with the partition sum") {
  CHECK(z_deletion_contraction(k2()) == q * t * t + one_minus_q * t);
  const Multigraph two_k2 = disjoint_union(k2(), k2());
  CHECK(z_deletion_contraction(two_k2) == (q * t + one_minus_q).pow(2) * t * t);
  for (const Multigraph& g : sample_graphs()) CHECK(z_deletion_contraction(g) == z_partition_sum(g));
}

TEST_CASE("multiplicativity and divisibility") {
  const auto gs = sample_graphs();
  for (std::size_t a = 0; a < gs.size(); ++a)
    for (std::size_t b = a; b < gs.size() && b < a + 3; ++b) {
      if (gs[a].vertex_count() + gs[b].vertex_count() > 8) continue;
      CHECK(z_deletion_contraction(disjoint_union(gs[a], gs[b])) ==
            z_deletion_contraction(gs[a]) * z_deletion_contraction(gs[b]));
    }
  for (const Multigraph& g : gs) CHECK_NOTHROW(y_of_graph(g));
}

TEST_CASE("dichromate of a graph") {
  CHECK(y_of_graph(k2()) == q * t + one_minus_q);
  CHECK(y_of_graph(c3()) ==
        q.pow(3) * (t * t - BigInt(3) * t + Poly(2)) + BigInt(3) * q * q * (t - Poly(1)) + Poly(1));
  CHECK(y_of_graph(Multigraph(1, {{0, 0}})) == Poly(1));

  // One-point unions multiply the dichromate.
  const auto gs = sample_graphs();
  for (std::size_t a = 1; a < gs.size(); ++a) {
    const Multigraph& g = gs[a];
    const Multigraph& h = gs[(a * 3) % gs.size()];
    if (g.vertex_count() + h.vertex_count() > 9 || h.vertex_count() == 0) continue;
    CHECK(y_of_graph(wedge(g, 0, h, h.vertex_count() - 1)) == y_of_graph(g) * y_of_graph(h));
  }
}

TEST_CASE("colouring census") {
  CHECK(colouring_census(c3(), 2) == std::map<int, std::uint64_t>{{0, 2}, {2, 6}});
  CHECK(colouring_census(k2(), 2) == std::map<int, std::uint64_t>{{0, 2}, {1, 2}});
  CHECK(colouring_census(c3(), 1) == std::map<int, std::uint64_t>{{0, 1}});
  CHECK_THROWS_AS(colouring_census(graphs::complete(8), 10), SizeLimitExceeded);

  for (const Multigraph& g : sample_graphs())
    for (int colours : {2, 3}) {
      const Poly z = z_deletion_contraction(g);
      const auto census = colouring_census(g, colours);
      for (int k = 0; k <= g.edge_count(); ++k) {
        const Rational expected = z.coefficient_of_first(static_cast<unsigned>(k)).evaluate(0, colours);
        const auto it = census.find(k);
        CHECK(Rational(it == census.end() ? 0 : it->second) == expected);
      }
    }
}

TEST_CASE("component distribution") {
  const auto dist = component_distribution(c3());
  CHECK(dist[1].evaluate(Rational(1, 2), 0) == Rational(1, 2));
  CHECK(dist[3] == q.pow(3));
  CHECK(component_distribution(k2())[1] == one_minus_q);
  for (const Multigraph& g : sample_graphs()) {
    const Poly z = z_deletion_contraction(g);
    const auto d = component_distribution(g);
    for (std::size_t k = 0; k < d.size(); ++k) CHECK(d[k] == z.coefficient_of_second(static_cast<unsigned>(k)));
  }
}

TEST_CASE("reliability and chromatic polynomials") {
  CHECK(reliability_polynomial(k2()).polynomial == one_minus_q);
  const auto r = reliability_polynomial(c3());
  CHECK(r.polynomial == BigInt(2) * q.pow(3) - BigInt(3) * q * q + Poly(1));
  CHECK_FALSE(r.warning.has_value());
  CHECK(r.polynomial.evaluate(Rational(1, 2), 0) == Rational(1, 2));
  CHECK(reliability_polynomial(Multigraph(4, {{0, 1}, {2, 3}})).warning.has_value());

  CHECK(chromatic_polynomial(c3()) == t * (t - Poly(1)) * (t - Poly(2)));
  for (const Multigraph& g : sample_graphs())
    if (g.edge_count() > 0) CHECK(chromatic_polynomial(g).evaluate(0, 1) == 0);
}
