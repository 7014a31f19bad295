#pragma once

// Reading graphs and matroids; writing polynomials, Whitney tables and
// homology reports as JSON or as aligned coefficient tables.

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dichromate.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "matroid.hpp"
#include "multigraph.hpp"
#include "poly.hpp"
#include "whitney.hpp"

namespace dichroma {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline int parse_vertex(const std::string& token, int line) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || v < 0)
    throw ParseError("line " + std::to_string(line) + ": expected a nonnegative vertex index, got '" + token + "'");
  return v;
}

}  // namespace detail

/// One edge "u v" per line; loops as "u u"; blank lines and text after '#'
/// are ignored. The vertex count is one more than the largest index.
inline Multigraph parse_graph_text(std::istream& in) {
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    const std::string text = detail::trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    std::istringstream fields(text);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line) + ": expected two vertex indices, got " +
                       std::to_string(tokens.size()) + " fields");
    const int u = detail::parse_vertex(tokens[0], line);
    const int v = detail::parse_vertex(tokens[1], line);
    max_vertex = std::max({max_vertex, u, v});
    edges.push_back({u, v});
  }
  if (edges.empty()) throw ParseError("graph text has no edges");
  return Multigraph(max_vertex + 1, std::move(edges));
}

inline Multigraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_text(in);
}

inline std::string graph_to_text(const Multigraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// What an input file describes: always a matroid, and the graph too when
/// the input was a graph.
struct LoadedInput {
  Matroid matroid;
  std::optional<Multigraph> graph;
};

namespace detail {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace detail

inline Multigraph graph_from_json(const Json& j) {
  const int n = detail::field<int>(j, "vertices");
  std::vector<Edge> edges;
  for (const auto& pair : detail::field<std::vector<std::vector<int>>>(j, "edges")) {
    if (pair.size() != 2) throw ParseError("each edge needs exactly two endpoints");
    edges.push_back({pair[0], pair[1]});
  }
  try {
    return Multigraph(n, std::move(edges));
  } catch (const OutOfRange& e) {
    throw ParseError(e.what());
  }
}

/// {"type": "uniform" | "bases" | "graph" | "rank_table", ...}
inline LoadedInput input_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matroid JSON must be an object");
  const std::string type = detail::field<std::string>(j, "type");
  if (type == "uniform") return {Matroid::uniform(detail::field<int>(j, "r"), detail::field<int>(j, "n")), {}};
  if (type == "bases") {
    const int n = detail::field<int>(j, "n");
    return {Matroid::from_bases(n, detail::field<std::vector<std::vector<int>>>(j, "bases")), {}};
  }
  if (type == "rank_table") {
    const int n = detail::field<int>(j, "n");
    return {Matroid::from_rank_table(n, detail::field<std::vector<int>>(j, "table")), {}};
  }
  if (type == "graph") {
    Multigraph g = graph_from_json(j);
    Matroid m = Matroid::from_graph(g);
    return {std::move(m), std::move(g)};
  }
  throw ParseError("unknown matroid type '" + type + "'");
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Report the line of the failing byte.
    const std::size_t pos = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const long line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n');
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

/// Reads graph text or matroid JSON. A nonempty format must match: "graph"
/// accepts graph text or graph JSON, the others require JSON of that type.
inline LoadedInput load_input(const std::string& text, const std::string& format = "") {
  const std::string body = detail::trim(text);
  if (!body.empty() && body.front() == '{') {
    const Json j = parse_json_text(text);
    LoadedInput in = input_from_json(j);
    if (!format.empty() && j.value("type", "") != format)
      throw ParseError("input has type '" + j.value("type", "") + "' but --format is '" + format + "'");
    return in;
  }
  if (!format.empty() && format != "graph") throw ParseError("format '" + format + "' needs JSON input");
  Multigraph g = parse_graph_text(text);
  Matroid m = Matroid::from_graph(g);
  return {std::move(m), std::move(g)};
}

inline Json matroid_to_json(const Matroid& m) {
  return Json{{"type", "rank_table"},
              {"n", m.size()},
              {"table", std::vector<int>(m.rank_table().begin(), m.rank_table().end())}};
}

// Polynomials -----------------------------------------------------------

/// Dense matrix view: rows indexed by the second exponent, columns by the
/// first. The zero polynomial is the 1x1 matrix [0].
inline std::vector<std::vector<BigInt>> coefficient_matrix(const Poly& p) {
  const int rows = p.is_zero() ? 1 : p.degree_second() + 1;
  const int cols = p.is_zero() ? 1 : p.degree_first() + 1;
  std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(rows), std::vector<BigInt>(static_cast<std::size_t>(cols)));
  for (const auto& [e, c] : p.terms()) out[e.second][e.first] = c;
  return out;
}

inline Poly poly_from_matrix(const std::vector<std::vector<BigInt>>& rows) {
  Poly p;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      p.add_term({static_cast<unsigned>(c), static_cast<unsigned>(r)}, rows[r][c]);
  return p;
}

inline Json poly_to_json(const Poly& p, const std::string& col_var, const std::string& row_var) {
  Json rows = Json::array();
  for (const auto& row : coefficient_matrix(p)) {
    Json r = Json::array();
    for (const BigInt& c : row) r.push_back(c.str());
    rows.push_back(std::move(r));
  }
  return Json{{"rows", std::move(rows)}, {"row_var", row_var}, {"col_var", col_var}};
}

namespace detail {

inline BigInt parse_integer(const std::string& s, const std::string& where) {
  const bool negative = !s.empty() && s[0] == '-';
  const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                        [](unsigned char ch) { return std::isdigit(ch) != 0; }))
    throw ParseError(where + ": '" + s + "' is not an integer");
  BigInt v(s.substr(start));
  return negative ? BigInt(-v) : v;
}

}  // namespace detail

/// Accepts coefficients as decimal strings or JSON integers.
inline Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) throw ParseError("polynomial JSON needs 'rows'");
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t r = 0; r < j["rows"].size(); ++r) {
    const Json& row = j["rows"][r];
    if (!row.is_array()) throw ParseError("row " + std::to_string(r) + " is not an array");
    rows.emplace_back();
    for (const Json& c : row) {
      const std::string where = "row " + std::to_string(r);
      if (c.is_string()) rows.back().push_back(detail::parse_integer(c.get<std::string>(), where));
      else if (c.is_number_integer()) rows.back().push_back(BigInt(c.get<long long>()));
      else throw ParseError(where + ": coefficient is neither a string nor an integer");
    }
  }
  return poly_from_matrix(rows);
}

/// Univariate polynomial in the second slot as a coefficient array,
/// lowest degree first.
inline Json second_slot_to_json(const Poly& p) {
  Json out = Json::array();
  if (p.is_zero()) return Json::array({"0"});
  for (int k = 0; k <= p.degree_second(); ++k) out.push_back(p.coeff(0, static_cast<unsigned>(k)).str());
  return out;
}

inline Json first_slot_to_json(const Poly& p) {
  Json out = Json::array();
  if (p.is_zero()) return Json::array({"0"});
  for (int k = 0; k <= p.degree_first(); ++k) out.push_back(p.coeff(static_cast<unsigned>(k), 0).str());
  return out;
}

namespace detail {

inline std::string power_label(const std::string& var, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace detail

/// Aligned table: header row of column powers, then one row per power of
/// the row variable, starting at 1.
inline std::string render_table(const Poly& p, const std::string& col_var, const std::string& row_var) {
  const auto matrix = coefficient_matrix(p);
  const std::size_t cols = matrix[0].size();
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(1, "");
  for (std::size_t c = 0; c < cols; ++c) cells[0].push_back(detail::power_label(col_var, c));
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    cells.emplace_back(1, detail::power_label(row_var, r));
    for (const BigInt& v : matrix[r]) cells.back().push_back(v.str());
  }
  std::vector<std::size_t> width(cols + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line = row[0] + std::string(width[0] - row[0].size(), ' ');
    for (std::size_t c = 1; c < row.size(); ++c) line += "  " + std::string(width[c] - row[c].size(), ' ') + row[c];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

struct ParsedTable {
  Poly poly;
  std::string col_var;
  std::string row_var;
};

/// Inverse of render_table. Checks that the header and row labels run
/// through consecutive powers.
inline ParsedTable parse_table(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  for (int n = 1; std::getline(in, raw); ++n) {
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) lines.emplace_back(n, std::move(tokens));
  }
  if (lines.size() < 2) throw ParseError("a table needs a header and at least one row");

  auto var_of = [](const std::vector<std::string>& labels, int line) {
    std::string var;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const std::string& lab = labels[k];
      if (k == 0) {
        if (lab != "1") throw ParseError("line " + std::to_string(line) + ": first power label must be '1'");
        continue;
      }
      const std::string name = lab.substr(0, lab.find('^'));
      if (var.empty()) var = name;
      if (name != var || lab != detail::power_label(var, k))
        throw ParseError("line " + std::to_string(line) + ": unexpected power label '" + lab + "'");
    }
    return var;
  };

  ParsedTable out;
  const auto& header = lines[0].second;
  out.col_var = var_of(header, lines[0].first);
  std::vector<std::string> row_labels;
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& [n, tokens] = lines[r];
    if (tokens.size() != header.size() + 1)
      throw ParseError("line " + std::to_string(n) + ": expected " + std::to_string(header.size()) + " coefficients");
    row_labels.push_back(tokens[0]);
    rows.emplace_back();
    for (std::size_t c = 1; c < tokens.size(); ++c)
      rows.back().push_back(detail::parse_integer(tokens[c], "line " + std::to_string(n)));
  }
  out.row_var = var_of(row_labels, lines[1].first);
  out.poly = poly_from_matrix(rows);
  return out;
}

// Structured reports -----------------------------------------------------

inline Json whitney_to_json(const WhitneyTable& wt) {
  Json omega = Json::array();
  for (const auto& row : wt.omega) {
    Json r = Json::array();
    for (const BigInt& v : row) r.push_back(v.str());
    omega.push_back(std::move(r));
  }
  Json w = Json::array();
  for (const Poly& p : wt.w) w.push_back(first_slot_to_json(p));
  return Json{{"d", wt.d}, {"m", wt.m}, {"loops", wt.loops}, {"omega", std::move(omega)}, {"W", std::move(w)}};
}

inline Json bundle_to_json(const InvariantBundle& b) {
  return Json{{"m", b.m},
              {"d", b.d},
              {"loops", b.loops},
              {"T", poly_to_json(b.tutte, "x", "y")},
              {"Y", poly_to_json(b.y, "q", "t")},
              {"Y(1-p,t)", poly_to_json(b.y_p, "p", "t")},
              {"Yhat", poly_to_json(b.yhat, "p", "t")}};
}

inline Json subset_to_json(const Matroid& m, Subset s) {
  Json out = Json::array();
  for (int e = 0; e < m.size(); ++e)
    if (s >> e & 1u) out.push_back(m.labels()[static_cast<std::size_t>(e)]);
  return out;
}

/// One entry per (i, j): rank of WH_{j-1} of the i-th lattice and the
/// members contributing to it.
inline Json homology_to_json(const Matroid& m, const std::vector<std::vector<WhitneyHomologyRank>>& levels) {
  Json out = Json::array();
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (const WhitneyHomologyRank& r : levels[i]) {
      Json contributors = Json::array();
      for (const auto& c : r.contributors)
        contributors.push_back(Json{{"S", subset_to_json(m, c.s)}, {"betti", std::to_string(c.betti)}});
      out.push_back(Json{{"i", i},
                         {"j", r.j},
                         {"wh_rank", std::to_string(r.rank)},
                         {"contributors", std::move(contributors)}});
    }
  return out;
}

}  // namespace dichroma
