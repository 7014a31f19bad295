#include <set>

#include <catch_amalgamated.hpp>

#include "dichroma/corpus.hpp"
#include "dichroma/verify.hpp"

using namespace dichroma;

namespace {

bool is_simple(const Multigraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges())
    if (e.is_loop() || !seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return false;
  return true;
}

}  // namespace

TEST_CASE("multigraph enumeration up to isomorphism") {
  // Simple graphs on 4 vertices: 11 classes in total over all edge counts.
  std::size_t simple4 = 0;
  for (int m = 0; m <= 6; ++m)
    for (const Multigraph& g : multigraphs(4, m, false)) simple4 += is_simple(g) ? 1 : 0;
  CHECK(simple4 == 1 + 1 + 2 + 3 + 2 + 1 + 1);
  // Connected simple graphs on 4 vertices: 6.
  std::size_t connected4 = 0;
  for (int m = 3; m <= 6; ++m)
    for (const Multigraph& g : multigraphs(4, m, false)) connected4 += g.is_connected() && is_simple(g) ? 1 : 0;
  CHECK(connected4 == 6);
  // Two vertices, three edges, loops allowed: (links, loops at u, loops at v) up to
  // swapping u and v gives 300, 210, 120, 111, 030, 021.
  CHECK(multigraphs(2, 3, true).size() == 6);
  CHECK(multigraphs(3, 2, false).size() == 2);

  const Multigraph a(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 0}});
  const Multigraph b(4, {{2, 3}, {3, 1}, {1, 0}, {0, 2}, {1, 1}});
  CHECK(canonical_form(a).edges().size() == 5);
  const auto ca = canonical_form(a).edges();
  const auto cb = canonical_form(b).edges();
  CHECK(std::equal(ca.begin(), ca.end(), cb.begin(), [](const Edge& x, const Edge& y) { return x.u == y.u && x.v == y.v; }));
}

TEST_CASE("corpus contents") {
  CorpusCaps caps;
  caps.graphs = {3, 3, true};
  caps.max_uniform_n = 3;
  const auto corpus = build_corpus(caps);
  CHECK(!corpus.empty());
  bool has_dual = false, has_loop_sum = false, has_coloop_sum = false;
  for (const auto& e : corpus) {
    has_dual |= e.name.rfind("dual ", 0) == 0;
    has_loop_sum |= e.name.size() > 4 && e.name.compare(e.name.size() - 4, 4, " + L") == 0;
    has_coloop_sum |= e.name.size() > 5 && e.name.compare(e.name.size() - 5, 5, " + L*") == 0;
  }
  CHECK(has_dual);
  CHECK(has_loop_sum);
  CHECK(has_coloop_sum);
}

TEST_CASE("search by dichromate finds the triangle") {
  const Matroid c3 = Matroid::from_graph(graphs::cycle(3));
  const auto found = search_by_dichromate(3, 3, to_p_basis(y_subset_expansion(c3)));
  REQUIRE(found.size() == 1);
  CHECK(spanning_tree_count(found[0]) == 3);
  CHECK(spanning_tree_count(graphs::complete(4)) == 16);
}

TEST_CASE("identity suite on a small corpus") {
  CorpusCaps caps;
  caps.graphs = {3, 4, true};
  caps.max_uniform_n = 4;
  const auto corpus = build_corpus(caps);
  const VerifyReport report = run_identities(corpus);
  INFO(report.render());
  CHECK(report.ok());
  for (const auto& t : report.tallies) CHECK(t.checked > 0);
  CHECK(report.render() == run_identities(corpus).render());
}

TEST_CASE("identity suite reports a witness") {
  // A fake graph attached to the wrong matroid breaks the graph-side checks.
  std::vector<CorpusEntry> corpus{{"mismatch", Matroid::uniform(1, 2), graphs::cycle(3)}};
  const VerifyReport report = run_identities(corpus);
  CHECK_FALSE(report.ok());
  const IdentityTally* t = report.find("Y from Z_G = Y from M(G)");
  REQUIRE(t != nullptr);
  CHECK(t->failed == 1);
  CHECK(t->first_witness.rfind("mismatch: ", 0) == 0);
  CHECK(report.render().find("FAIL") != std::string::npos);
}
