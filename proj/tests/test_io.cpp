#include <fstream>
#include <iterator>
#include <random>

#include <catch_amalgamated.hpp>

#include "dichroma/io.hpp"

using namespace dichroma;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string parse_error_of(const std::string& text, const std::string& format = "") {
  try {
    load_input(text, format);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph text") {
  const Multigraph g = parse_graph_text("0 1\n\n1 2\n2 0\n2 2   # a loop\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 4);
  CHECK(g.loop_count() == 1);
  CHECK(parse_graph_text(graph_to_text(g)).edges().size() == 4);

  CHECK(parse_error_of("0 1\n1 x\n").find("line 2") != std::string::npos);
  CHECK(parse_error_of("0 1\n\n\n1 2 3\n").find("line 4") != std::string::npos);
  CHECK(parse_error_of("0 -1\n").find("line 1") != std::string::npos);
  CHECK_THROWS_AS(parse_graph_text("\n\n"), ParseError);
}

TEST_CASE("matroid JSON") {
  CHECK(load_input(R"({"type":"uniform","r":2,"n":3})").matroid == Matroid::uniform(2, 3));
  CHECK(load_input(R"({"type":"bases","n":4,"bases":[[0,1],[0,2]]})").matroid.loop_count() == 1);
  const LoadedInput g = load_input(R"({"type":"graph","vertices":3,"edges":[[0,1],[1,2],[2,0]]})");
  REQUIRE(g.graph.has_value());
  CHECK(g.matroid == Matroid::uniform(2, 3));
  CHECK(load_input(R"({"type":"rank_table","n":1,"table":[0,1]})").matroid == matroids::coloop());
  CHECK(load_input("0 1\n", "graph").graph.has_value());

  CHECK_THROWS_AS(load_input(R"({"type":"rank_table","n":2,"table":[0,1,1,0]})"), AxiomViolation);
  CHECK_THROWS_AS(load_input(R"({"type":"mystery"})"), ParseError);
  CHECK_THROWS_AS(load_input(R"({"type":"uniform","r":2})"), ParseError);
  CHECK_THROWS_AS(load_input(R"({"type":"uniform","r":2,"n":3})", "graph"), ParseError);
  CHECK_THROWS_AS(load_input("0 1\n", "bases"), ParseError);
  CHECK(parse_error_of("{\n\"type\": \"uniform\",\n\"r\": ,\n}").find("line 3") != std::string::npos);

  const Matroid c3 = Matroid::from_graph(graphs::cycle(3));
  CHECK(load_input(matroid_to_json(c3).dump()).matroid == c3);
}

TEST_CASE("polynomial JSON round trip") {
  const Poly p = Poly::first_var();
  const Poly t = Poly::second_var();
  const Poly big = Poly::monomial(BigInt("123456789012345678901234567890"), 3, 1) - p * t + Poly(7);
  const Json j = poly_to_json(big, "p", "t");
  CHECK(j["row_var"] == "t");
  CHECK(j["col_var"] == "p");
  CHECK(j["rows"][1][3] == "123456789012345678901234567890");
  CHECK(poly_from_json(j) == big);
  CHECK(poly_from_json(poly_to_json(Poly(), "p", "t")).is_zero());
  CHECK_THROWS_AS(poly_from_json(Json{{"rows", {{"1x"}}}}), ParseError);
}

TEST_CASE("fixtures load as polynomials") {
  const Json ref_y_p = parse_json_text(slurp(std::string(DICHROMA_TEST_DATA) + "/example_y_p.json"));
  const Poly y_p = poly_from_json(ref_y_p);
  CHECK(y_p.coeff(4, 0) == 19);
  CHECK(y_p.coeff(4, 1) == -100);
  CHECK(y_p.coeff(5, 2) == -164);
  CHECK(y_p.coeff(0, 4) == 1);
}

TEST_CASE("tables") {
  const Poly p = Poly::first_var();
  const Poly t = Poly::second_var();
  const Poly c3_hat = BigInt(3) * p * p + BigInt(2) * p.pow(3) + (BigInt(3) * p + BigInt(3) * p * p + p.pow(3)) * t;
  const std::string text = render_table(c3_hat, "p", "t");
  CHECK(text ==
        "   1  p  p^2  p^3\n"
        "1  0  0    3    2\n"
        "t  0  3    3    1\n");
  const ParsedTable back = parse_table(text);
  CHECK(back.poly == c3_hat);
  CHECK(back.col_var == "p");
  CHECK(back.row_var == "t");

  CHECK_THROWS_AS(parse_table("   1  p\n1  0  x\n"), ParseError);
  CHECK_THROWS_AS(parse_table("   1  p^2\n1  0  1\n"), ParseError);
  CHECK_THROWS_AS(parse_table("   1  p\n1  0\n"), ParseError);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-500, 500);
  for (int trial = 0; trial < 50; ++trial) {
    Poly r;
    for (unsigned a = 0; a < 5; ++a)
      for (unsigned b = 0; b < 4; ++b) r.add_term({a, b}, coeff(rng));
    CHECK(parse_table(render_table(r, "p", "t")).poly == r);
  }
}

TEST_CASE("Whitney table JSON") {
  const WhitneyTable wt = w_polynomials(Matroid::from_graph(graphs::cycle(3)));
  const Json j = whitney_to_json(wt);
  CHECK(j["d"] == 2);
  CHECK(j["m"] == 3);
  CHECK(j["loops"] == 0);
  CHECK(j["omega"][0] == Json::array({"3", "2"}));
  CHECK(j["omega"][1] == Json::array({"3", "3", "1"}));
  CHECK(j["W"][0] == Json::array({"0", "3", "2"}));
}

TEST_CASE("homology report JSON") {
  const Matroid c3 = Matroid::from_graph(graphs::cycle(3));
  const Json j = homology_to_json(c3, {whitney_homology_report(c3, 0)});
  REQUIRE(j.size() == 2);
  CHECK(j[0]["wh_rank"] == "3");
  CHECK(j[1]["wh_rank"] == "2");
  CHECK(j[1]["contributors"][0]["S"] == Json::array({0, 1, 2}));
  CHECK(j[1]["contributors"][0]["betti"] == "2");
}
