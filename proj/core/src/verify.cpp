#include "rpphilb/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rpphilb/pointcount.hpp"

namespace rpphilb {

namespace {

const Json& field(const Json& input, const char* name) {
  if (!input.is_object() || !input.contains(name))
    throw Error(ErrorCode::InvalidInput, std::string("case input lacks \"") + name + "\"", input.dump());
  return input.at(name);
}

Rpp rpp_arg(const Json& input) {
  const Json& v = field(input, "rpp");
  return v.is_string() ? parse_rpp(v.get<std::string>()) : rpp_from_json(v);
}

YoungDiagram diagram_arg(const Json& input) {
  const Json& v = field(input, "diagram");
  return v.is_string() ? parse_diagram(v.get<std::string>()) : diagram_from_json(v);
}

Value int_arg(const Json& input, const char* name) {
  const Json& v = field(input, name);
  if (!v.is_number_integer()) throw Error(ErrorCode::InvalidInput, std::string("\"") + name + "\" must be an integer");
  return v.get<Value>();
}

SeriesVariables variables_arg(const Json& input) {
  const std::string v = input.value("variables", std::string("per-box"));
  if (v == "per-box") return SeriesVariables::PerBox;
  if (v == "single") return SeriesVariables::Single;
  if (v == "diagonal") return SeriesVariables::Diagonal;
  throw Error(ErrorCode::UnsupportedOption, "variables must be per-box, single or diagonal", v);
}

Json boxes_json(const std::vector<Box>& boxes) {
  Json out = Json::array();
  for (Box b : boxes) out.push_back({b.i, b.j});
  return out;
}

IdealPresentation ideal_arg(const Json& input, const Rpp& n) {
  const std::string type = field(input, "type").get<std::string>();
  if (type == "I") return type_i_ideal(n);
  if (type == "II") return type_ii_ideal(n, input.value("minimal_border", false));
  throw Error(ErrorCode::UnsupportedOption, "equation type must be I or II", type);
}

Json sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

using Handler = std::function<Json(const Json&, const Limits&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"indicators",
       [](const Json& in, const Limits& lim) {
         std::vector<std::string> vecs;
         for (const auto& ind : indicators(diagram_arg(in), lim.max_boxes)) vecs.push_back(format_indicator(ind));
         return Json{{"count", vecs.size()}, {"vectors", vecs}};
       }},
      {"socle",
       [](const Json& in, const Limits&) {
         const YoungDiagram d = diagram_arg(in);
         return Json{{"socle", boxes_json(d.socle())}, {"subsocle", boxes_json(d.subsocle())}};
       }},
      {"hooks",
       [](const Json& in, const Limits&) {
         const YoungDiagram d = diagram_arg(in);
         std::vector<int> h;
         for (Box b : d.boxes()) h.push_back(d.hook_length(b));
         return Json{{"hook_lengths", h}};
       }},
      {"weight",
       [](const Json& in, const Limits&) {
         const Rpp n = rpp_arg(in);
         return Json{{"weight", weight(n)},
                     {"weight_socle", weight_from_socle(n)},
                     {"dimension_recursive", dimension_recursive(n)},
                     {"derivative", format_filling(derivative(n))}};
       }},
      {"factorizations",
       [](const Json& in, const Limits& lim) {
         const Rpp n = rpp_arg(in);
         std::vector<std::string> all;
         for (const auto& t : all_factorizations(n, lim)) all.push_back(format_factorization(t));
         const auto complete = complete_factorization(n);
         return Json{{"count", all.size()},
                     {"factorizations", sorted(all)},
                     {"standard", n.is_zero() ? Json(nullptr) : Json(format_factorization(standard_factorization(n)))},
                     {"complete", complete ? Json(format_factorization(*complete)) : Json(nullptr)}};
       }},
      {"classify",
       [](const Json& in, const Limits& lim) {
         const Rpp n = rpp_arg(in);
         const auto reports = classify(n, lim);
         std::size_t smooth = 0, bijective_only = 0;
         std::vector<std::pair<std::string, Json>> comps;
         for (const auto& r : reports) {
           smooth += r.smooth;
           bijective_only += r.bijective_on_points && !r.differential_injective;
           const std::string text = format_factorization(r.factorization);
           comps.emplace_back(text, Json{{"factorization", text},
                                         {"smooth", r.smooth},
                                         {"bijective_on_points", r.bijective_on_points},
                                         {"differential_injective", r.differential_injective},
                                         {"relation", r.relation_witness
                                                          ? Json(format_relation(r.factorization, *r.relation_witness))
                                                          : Json(nullptr)}});
         }
         std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
         Json list = Json::array();
         for (auto& c : comps) list.push_back(std::move(c.second));
         return Json{{"count", reports.size()},
                     {"smooth", smooth},
                     {"singular", reports.size() - smooth},
                     {"bijective_not_injective", bijective_only},
                     {"dimension", component_dimension(n)},
                     {"components", std::move(list)}};
       }},
      {"equations",
       [](const Json& in, const Limits&) {
         const Rpp n = rpp_arg(in);
         const IdealPresentation ideal = ideal_arg(in, n);
         std::vector<std::size_t> groups;
         for (const auto& g : ideal.groups) groups.push_back(g.size);
         Json out{{"vars", ideal.ambient_vars.size()},
                  {"generators", ideal.generators.size()},
                  {"groups", groups},
                  {"homogeneous", check_grading(ideal)}};
         if (field(in, "type") == "I") out["conditions"] = type_i_conditions(n);
         return out;
       }},
      {"tangent",
       [](const Json& in, const Limits&) {
         const Rpp n = rpp_arg(in);
         const TangentEmbedding t = tangent_embedding(ideal_arg(in, n));
         return Json{{"tangent_dim", t.tangent_dim}, {"degrees", t.degrees}};
       }},
      {"ambient", [](const Json& in, const Limits&) { return to_json(ambient_and_bundle(rpp_arg(in))); }},
      {"series_identity",
       [](const Json& in, const Limits&) {
         const YoungDiagram d = diagram_arg(in);
         const Value size = int_arg(in, "max_size");
         const SeriesVariables mode = variables_arg(in);
         return Json{{"equal", rpp_series_bruteforce(d, size, mode) == hook_product(d, size, mode)}};
       }},
      {"euler_counts",
       [](const Json& in, const Limits&) {
         const Value size = int_arg(in, "max_size");
         const TruncatedSeries s = euler_series(diagram_arg(in), int_arg(in, "chi"), size, SeriesVariables::Single);
         Json c = Json::array();
         for (Value k = 0; k <= size; ++k) c.push_back(integer_json(s.coefficient({k}).constant_term()));
         return Json{{"coefficients", std::move(c)}};
       }},
      {"rpp_counts",
       [](const Json& in, const Limits&) {
         const Value size = int_arg(in, "max_size");
         std::vector<Value> counts(static_cast<std::size_t>(size) + 1, 0);
         for (const Rpp& n : enumerate_rpps(diagram_arg(in), size)) ++counts[static_cast<std::size_t>(n.size())];
         return Json{{"counts", counts}};
       }},
      {"motivic_coefficient",
       [](const Json& in, const Limits&) {
         const Rpp n = rpp_arg(in);
         const Curve curve = parse_curve(in.value("curve", std::string("A1")));
         const TruncatedSeries s = motivic_series(n.diagram(), curve, n.size());
         return Json{{"coefficient", lefschetz_json(s.coefficient(n.values()))}};
       }},
      {"count_points",
       [](const Json& in, const Limits& lim) {
         const Rpp n = rpp_arg(in);
         const PrimeField f(static_cast<int>(int_arg(in, "p")), lim.max_prime);
         const Integer count = count_points(n, f, lim);
         const Integer motive =
             evaluate_motive(motivic_series(n.diagram(), Curve::A1, n.size()).coefficient(n.values()), f.p());
         return Json{{"count", integer_json(count)}, {"motive_at_p", integer_json(motive)}, {"match", count == motive}};
       }},
  };
  return table;
}

// Objects match on the keys they list, arrays elementwise, everything else exactly.
bool matches(const Json& expected, const Json& actual) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (const auto& [key, value] : expected.items())
      if (!actual.contains(key) || !matches(value, actual.at(key))) return false;
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) return false;
    for (std::size_t k = 0; k < expected.size(); ++k)
      if (!matches(expected[k], actual[k])) return false;
    return true;
  }
  return expected == actual;
}

}  // namespace

bool VerifyReport::all_pass() const noexcept { return failures() == 0; }

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

const std::vector<std::string>& corpus_kinds() {
  static const std::vector<std::string> kinds = [] {
    std::vector<std::string> k;
    for (const auto& [name, h] : handlers()) k.push_back(name);
    return k;
  }();
  return kinds;
}

Json evaluate_case(const std::string& kind, const Json& input, const Limits& limits) {
  auto it = handlers().find(kind);
  if (it == handlers().end()) throw Error(ErrorCode::UnsupportedOption, "unknown case kind", kind);
  return it->second(input, limits);
}

VerifyReport verify_corpus(const Json& corpus, const Limits& limits) {
  if (!corpus.is_object() || !corpus.contains("cases") || !corpus["cases"].is_array())
    throw Error(ErrorCode::CorpusError, "corpus needs a \"cases\" array");
  if (corpus["cases"].empty()) throw Error(ErrorCode::CorpusError, "corpus has no cases");

  VerifyReport report;
  for (const auto& c : corpus["cases"]) {
    if (!c.is_object() || !c.contains("id") || !c.contains("kind") || !c.contains("expected"))
      throw Error(ErrorCode::CorpusError, "every case needs \"id\", \"kind\" and \"expected\"", c.dump());
    CaseResult r;
    r.id = c["id"].get<std::string>();
    r.kind = c["kind"].get<std::string>();
    r.expected = c["expected"];
    try {
      r.actual = evaluate_case(r.kind, c.value("input", Json::object()), limits);
      r.pass = matches(r.expected, r.actual);
    } catch (const Error& e) {
      r.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    report.cases.push_back(std::move(r));
  }
  return report;
}

}  // namespace rpphilb
