#include "rpphilb/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace rpphilb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(const std::string& what, std::string_view input) {
  throw Error(ErrorCode::ParseError, what, std::string(input));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("malformed JSON: ") + e.what(), text);
  }
}

template <typename Int>
Int parse_int(std::string_view token, std::string_view whole) {
  Int v{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    parse_fail("expected an integer, got '" + std::string(token) + "'", whole);
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    const std::size_t start = k;
    while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

Rpp rpp_from_rows(const std::vector<std::vector<Value>>& rows, std::string_view input) {
  if (rows.empty()) parse_fail("an RPP needs at least one row", input);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].empty()) parse_fail("empty row", input);
    if (j > 0 && rows[j].size() > rows[j - 1].size()) parse_fail("row lengths must be nonincreasing", input);
  }
  std::vector<int> cols(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) ++cols[i];
  std::vector<Value> values;
  for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
  return Rpp(YoungDiagram(std::move(cols)), std::move(values));
}

std::string relation_side(const Factorization& t, const IntVector& m, int sign) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Integer c = m[k] * sign;
    if (c <= 0) continue;
    if (!s.empty()) s += " + ";
    s += format_indicator(t.terms()[k].indicator);
    if (c != 1) s += "*" + c.str();
  }
  return s.empty() ? "0" : s;
}

}  // namespace

YoungDiagram parse_diagram(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) parse_fail("empty diagram", text);
  if (t.front() == '{') return diagram_from_json(parse_json(t));
  std::vector<int> cols;
  for (auto token : split(t, ',')) cols.push_back(parse_int<int>(trim(token), text));
  return YoungDiagram(std::move(cols));
}

Rpp parse_rpp(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) parse_fail("empty RPP", text);
  if (t.front() == '{') return rpp_from_json(parse_json(t));
  std::vector<std::vector<Value>> rows;
  for (auto row : split(t, '/')) {
    rows.emplace_back();
    for (auto token : split_ws(row)) rows.back().push_back(parse_int<Value>(token, text));
  }
  return rpp_from_rows(rows, text);
}

YoungDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cols") || !j["cols"].is_array())
    parse_fail("diagram JSON needs a \"cols\" array", j.dump());
  std::vector<int> cols;
  for (const auto& c : j["cols"]) {
    if (!c.is_number_integer()) parse_fail("column heights must be integers", j.dump());
    cols.push_back(c.get<int>());
  }
  return YoungDiagram(std::move(cols));
}

Rpp rpp_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    parse_fail("RPP JSON needs a \"rows\" array", j.dump());
  std::vector<std::vector<Value>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) parse_fail("rows must be arrays", j.dump());
    rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) parse_fail("RPP entries must be integers", j.dump());
      rows.back().push_back(v.get<Value>());
    }
  }
  Rpp n = rpp_from_rows(rows, j.dump());
  if (j.contains("cols") && !(diagram_from_json(j) == n.diagram()))
    throw Error(ErrorCode::DiagramMismatch, "\"cols\" does not match the row lengths", j.dump());
  return n;
}

std::string format_diagram(const YoungDiagram& d) {
  std::string s;
  for (int h : d.col_heights()) s += (s.empty() ? "" : ",") + std::to_string(h);
  return s;
}

std::string format_filling(const Filling& f) {
  std::string s;
  const YoungDiagram& d = f.diagram();
  for (int j = 0; j < d.num_rows(); ++j) {
    if (j) s += " / ";
    for (int i = 0; i < d.row_length(j); ++i) {
      if (i) s += ' ';
      s += std::to_string(f.at({i, j}));
    }
  }
  return s;
}

std::string format_indicator(const Indicator& ind) {
  std::string s;
  for (bool b : ind.upper_set().members()) s += b ? '1' : '0';
  return s;
}

std::string format_factorization(const Factorization& t) {
  if (t.terms().empty()) return "0";
  std::string s;
  for (const auto& term : t.terms()) {
    if (!s.empty()) s += " + ";
    s += format_indicator(term.indicator);
    if (term.multiplicity != 1) s += "*" + std::to_string(term.multiplicity);
  }
  return s;
}

std::string format_relation(const Factorization& t, const IntVector& m) {
  std::string a = relation_side(t, m, 1), b = relation_side(t, m, -1);
  if (b < a) std::swap(a, b);
  return a + " = " + b;
}

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const YoungDiagram& d) { return Json{{"cols", d.col_heights()}}; }

Json to_json(const Rpp& n) {
  Json rows = Json::array();
  for (int j = 0; j < n.diagram().num_rows(); ++j) {
    Json row = Json::array();
    for (int i = 0; i < n.diagram().row_length(j); ++i) row.push_back(n.at({i, j}));
    rows.push_back(std::move(row));
  }
  return Json{{"cols", n.diagram().col_heights()}, {"rows", std::move(rows)}};
}

Json to_json(const Factorization& t) {
  Json terms = Json::array();
  for (const auto& term : t.terms())
    terms.push_back(Json{{"indicator", format_indicator(term.indicator)}, {"multiplicity", term.multiplicity}});
  return terms;
}

Json to_json(const ComponentReport& r) {
  Json j{{"factorization", to_json(r.factorization)},
         {"text", format_factorization(r.factorization)},
         {"dimension", r.dimension},
         {"smooth", r.smooth},
         {"bijective_on_points", r.bijective_on_points},
         {"differential_injective", r.differential_injective}};
  if (r.relation_witness) {
    Json w = Json::array();
    for (const auto& x : *r.relation_witness) w.push_back(integer_json(x));
    j["relation_witness"] = std::move(w);
    j["relation"] = format_relation(r.factorization, *r.relation_witness);
  } else {
    j["relation_witness"] = nullptr;
    j["relation"] = nullptr;
  }
  Json norm = Json::array();
  for (const auto& [ind, e] : r.normalization)
    norm.push_back(Json{{"indicator", format_indicator(ind)}, {"exponent", e}});
  j["normalization"] = std::move(norm);
  return j;
}

Json to_json(const AmbientSummary& s) {
  return Json{{"dim_ambient", s.dim_ambient}, {"rank_bundle", s.rank_bundle}, {"expected_dim", s.expected_dim}};
}

Json to_json(const IdealPresentation& ideal) {
  Json vars = Json::array(), grading = Json::object(), gens = Json::array(), groups = Json::array();
  for (const VarId& v : ideal.ambient_vars) {
    vars.push_back(to_string(v));
    grading[to_string(v)] = ideal.grading.at(v);
  }
  for (const auto& g : ideal.generators) gens.push_back(to_string(g));
  for (const auto& g : ideal.groups)
    groups.push_back(Json{{"label", g.label}, {"box", {g.box.i, g.box.j}}, {"size", g.size}});
  return Json{{"ambient_vars", std::move(vars)},
              {"grading", std::move(grading)},
              {"generators", std::move(gens)},
              {"groups", std::move(groups)}};
}

Json to_json(const TangentEmbedding& t) {
  Json elim = Json::array();
  for (const VarId& v : t.eliminated) elim.push_back(to_string(v));
  return Json{{"tangent_dim", t.tangent_dim},
              {"eliminated", std::move(elim)},
              {"degrees", t.degrees},
              {"reduced", to_json(t.reduced)}};
}

Json lefschetz_json(const SparsePoly& p) {
  Json j = Json::object();
  const VarId lef = VarId::lefschetz();
  for (std::uint32_t d = 0; d <= p.degree_in(lef); ++d) {
    const SparsePoly c = p.coefficient(lef, d);
    if (c.is_zero()) continue;
    if (!c.is_constant()) throw Error(ErrorCode::InvalidInput, "coefficient is not a polynomial in L", to_string(p));
    j[std::to_string(d)] = integer_json(c.constant_term());
  }
  return j;
}

Json to_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.coefficients()) {
    if (s.mode() == SeriesVariables::Single)
      terms.push_back(Json{{"size", e[0]}, {"coefficient", lefschetz_json(c)}});
    else
      terms.push_back(Json{{"exponents", e}, {"coefficient", lefschetz_json(c)}});
  }
  return terms;
}

Json error_json(const Error& e) {
  return Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"offending_input", e.offending_input()}};
}

}  // namespace rpphilb
