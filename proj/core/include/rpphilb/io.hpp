#pragma once

// Text and JSON forms of the library's values.
//
//   diagram  "3,3,3"                    {"cols":[3,3,3]}
//   RPP      "0 0 3 / 0 2 5 / 3 5 5"    {"cols":[3,3,3],"rows":[[0,0,3],[0,2,5],[3,5,5]]}
//
// JSON output uses insertion-ordered objects so that repeated runs are byte-identical.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rpphilb/components.hpp"
#include "rpphilb/equations.hpp"
#include "rpphilb/series.hpp"

namespace rpphilb {

using Json = nlohmann::ordered_json;

// Either form; throws ParseError on malformed text.
YoungDiagram parse_diagram(std::string_view text);
Rpp parse_rpp(std::string_view text);
YoungDiagram diagram_from_json(const Json& j);
Rpp rpp_from_json(const Json& j);

std::string format_diagram(const YoungDiagram& d);
std::string format_filling(const Filling& f);
inline std::string format_rpp(const Rpp& n) { return format_filling(n.filling()); }
// Row-major 0/1 string, e.g. "001011111".
std::string format_indicator(const Indicator& ind);
// Terms as "vector" or "vector*multiplicity" joined by " + ".
std::string format_factorization(const Factorization& t);
// A relation m over the support of t as "lhs = rhs". The smaller side (as a string) comes first,
// so m and -m print the same.
std::string format_relation(const Factorization& t, const IntVector& m);

Json integer_json(const Integer& x);
Json to_json(const YoungDiagram& d);
Json to_json(const Rpp& n);
Json to_json(const Factorization& t);
Json to_json(const ComponentReport& r);
Json to_json(const AmbientSummary& s);
Json to_json(const IdealPresentation& ideal);
Json to_json(const TangentEmbedding& t);
// A polynomial in L as {"degree": coefficient}.
Json lefschetz_json(const SparsePoly& p);
Json to_json(const TruncatedSeries& s);
Json error_json(const Error& e);

}  // namespace rpphilb
