#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rpphilb/pointcount.hpp"
#include "rpphilb/verify.hpp"

using namespace rpphilb;

namespace {

enum class Format { Json, Text };

struct Config {
  Limits limits;
  Format format = Format::Text;
};

struct Output {
  Json json;
  std::string text;
};

// Inputs starting with '@' name a JSON file.
std::string read_argument(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(ErrorCode::ParseError, "cannot open input file", arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rpp rpp_input(const std::string& arg) { return parse_rpp(read_argument(arg)); }
YoungDiagram diagram_input(const std::string& arg) { return parse_diagram(read_argument(arg)); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : sep) + p;
  return s;
}

// ---- commands ----

struct Args {
  std::string input;
  std::string type = "I";
  bool tangent = false;
  bool minimal_border = false;
  std::string curve = "A1";
  std::optional<Value> euler;
  Value max_size = 8;
  bool single_variable = false;
  bool diagonal = false;
  int p = 2;
};

Output cmd_indicators(const Args& a, const Config& cfg) {
  const YoungDiagram d = diagram_input(a.input);
  const auto inds = indicators(d, cfg.limits.max_boxes);
  Json list = Json::array();
  std::ostringstream text;
  text << inds.size() << " indicators on " << format_diagram(d) << "\n";
  for (std::size_t k = 0; k < inds.size(); ++k) {
    list.push_back(Json{{"index", k + 1}, {"vector", format_indicator(inds[k])}});
    text << "  nu" << k + 1 << "  " << format_indicator(inds[k]) << "\n";
  }
  return {Json{{"diagram", to_json(d)}, {"count", inds.size()}, {"indicators", std::move(list)}}, text.str()};
}

Output cmd_weight(const Args& a, const Config&) {
  const Rpp n = rpp_input(a.input);
  const Value w = weight(n);
  const Value ws = weight_from_socle(n);
  const Value wr = dimension_recursive(n);
  std::ostringstream text;
  text << "weight " << w << "\nweight from socle " << ws << "\ndimension (recursive) " << wr << "\nderivative "
       << format_filling(derivative(n)) << "\n";
  return {Json{{"n", to_json(n)},
               {"weight", w},
               {"weight_socle", ws},
               {"dimension_recursive", wr},
               {"derivative", format_filling(derivative(n))}},
          text.str()};
}

Output cmd_factorizations(const Args& a, const Config& cfg) {
  const Rpp n = rpp_input(a.input);
  const auto all = all_factorizations(n, cfg.limits);
  Json list = Json::array();
  std::ostringstream text;
  text << all.size() << " factorisations of " << format_rpp(n) << "\n";
  for (std::size_t k = 0; k < all.size(); ++k) {
    list.push_back(Json{{"index", k + 1},
                        {"text", format_factorization(all[k])},
                        {"length", all[k].length()},
                        {"terms", to_json(all[k])}});
    text << "  T" << k + 1 << "  " << format_factorization(all[k]) << "\n";
  }
  Json standard = nullptr, complete = nullptr;
  if (!n.is_zero()) {
    standard = format_factorization(standard_factorization(n));
    text << "standard  " << standard.get<std::string>() << "\n";
  }
  if (auto c = complete_factorization(n)) {
    complete = format_factorization(*c);
    text << "complete  " << complete.get<std::string>() << "\n";
  } else {
    text << "complete  none\n";
  }
  return {Json{{"n", to_json(n)},
               {"count", all.size()},
               {"factorizations", std::move(list)},
               {"standard", standard},
               {"complete", complete}},
          text.str()};
}

Output cmd_classify(const Args& a, const Config& cfg) {
  const Rpp n = rpp_input(a.input);
  const auto reports = classify(n, cfg.limits);
  std::size_t smooth = 0;
  Json list = Json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    smooth += r.smooth;
    Json j = to_json(r);
    j["index"] = k + 1;
    list.push_back(std::move(j));
    text << "  T" << k + 1 << "  " << format_factorization(r.factorization) << "  "
         << (r.smooth ? "smooth" : "singular");
    if (r.bijective_on_points && !r.differential_injective) text << " (bijective, differential not injective)";
    if (r.relation_witness) text << "  " << format_relation(r.factorization, *r.relation_witness);
    text << "\n";
  }
  const Value dim = component_dimension(n);
  std::ostringstream head;
  head << reports.size() << " components of dimension " << dim << ": " << smooth << " smooth, "
       << reports.size() - smooth << " singular\n";
  return {Json{{"n", to_json(n)},
               {"dimension", dim},
               {"count", reports.size()},
               {"smooth", smooth},
               {"singular", reports.size() - smooth},
               {"components", std::move(list)}},
          head.str() + text.str()};
}

Output cmd_equations(const Args& a, const Config&) {
  const Rpp n = rpp_input(a.input);
  if (a.minimal_border && a.type != "II")
    throw Error(ErrorCode::UnsupportedOption, "--minimal-border applies to Type II only", a.type);
  const IdealPresentation ideal = a.type == "I" ? type_i_ideal(n) : type_ii_ideal(n, a.minimal_border);
  const bool homogeneous = check_grading(ideal);
  Json j{{"n", to_json(n)}, {"type", a.type}, {"minimal_border", a.minimal_border}};
  const Json ideal_json = to_json(ideal);
  for (const auto& [k, v] : ideal_json.items()) j[k] = v;
  j["homogeneous"] = homogeneous;
  j["ambient"] = to_json(ambient_and_bundle(n));
  if (a.type == "I") j["conditions"] = type_i_conditions(n);

  std::ostringstream text;
  text << "Type " << a.type << (a.minimal_border ? " (minimal border)" : "") << ": " << ideal.ambient_vars.size()
       << " variables, " << ideal.generators.size() << " generators, "
       << (homogeneous ? "homogeneous" : "not homogeneous") << "\n";
  std::size_t g = 0;
  for (const auto& grp : ideal.groups) {
    text << "[" << grp.label << "]\n";
    for (std::size_t k = 0; k < grp.size; ++k, ++g) text << "  " << to_string(ideal.generators[g]) << "\n";
  }
  if (a.tangent) {
    const TangentEmbedding t = tangent_embedding(ideal);
    j["tangent"] = to_json(t);
    std::vector<std::string> degs;
    for (int d : t.degrees) degs.push_back(std::to_string(d));
    text << "tangent dimension " << t.tangent_dim << ", reduced degrees {" << join(degs, ",") << "}\n";
    for (const auto& p : t.reduced.generators) text << "  " << to_string(p) << "\n";
  }
  return {std::move(j), text.str()};
}

Output cmd_series(const Args& a, const Config&) {
  const YoungDiagram d = diagram_input(a.input);
  if (a.single_variable && a.diagonal)
    throw Error(ErrorCode::UnsupportedOption, "--single-variable and --diagonal are exclusive");
  const SeriesVariables mode =
      a.single_variable ? SeriesVariables::Single : a.diagonal ? SeriesVariables::Diagonal : SeriesVariables::PerBox;
  const TruncatedSeries s =
      a.euler ? euler_series(d, *a.euler, a.max_size, mode) : motivic_series(d, parse_curve(a.curve), a.max_size, mode);
  Json j{{"diagram", to_json(d)},
         {"kind", a.euler ? "euler" : "motivic"},
         {"variables", mode == SeriesVariables::Single ? "single" : mode == SeriesVariables::Diagonal ? "diagonal" : "per-box"},
         {"max_size", a.max_size}};
  if (a.euler)
    j["chi"] = *a.euler;
  else
    j["curve"] = std::string(to_string(parse_curve(a.curve)));
  j["terms"] = to_json(s);
  std::ostringstream text;
  for (const auto& [e, c] : s.coefficients()) {
    std::vector<std::string> es;
    for (Value x : e) es.push_back(std::to_string(x));
    text << "[" << join(es, ",") << "]  " << to_string(c) << "\n";
  }
  return {std::move(j), text.str()};
}

Output cmd_count_points(const Args& a, const Config& cfg) {
  const Rpp n = rpp_input(a.input);
  const PrimeField f(a.p, cfg.limits.max_prime);
  const Integer count = count_points(n, f, cfg.limits);
  const Integer motive =
      evaluate_motive(motivic_series(n.diagram(), Curve::A1, n.size()).coefficient(n.values()), f.p());
  std::ostringstream text;
  text << "count " << count << " over F_" << a.p << ", motive at L=" << a.p << " gives " << motive << ", "
       << (count == motive ? "match" : "MISMATCH") << "\n";
  return {Json{{"n", to_json(n)},
               {"p", a.p},
               {"count", integer_json(count)},
               {"motive_at_p", integer_json(motive)},
               {"match", count == motive}},
          text.str()};
}

Output cmd_verify(const Args& a, const Config& cfg) {
  std::ifstream in(a.input);
  if (!in) throw Error(ErrorCode::CorpusError, "cannot open corpus", a.input);
  Json corpus;
  try {
    corpus = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::CorpusError, std::string("malformed corpus: ") + e.what(), a.input);
  }
  const VerifyReport report = verify_corpus(corpus, cfg.limits);
  Json rows = Json::array();
  std::ostringstream text;
  for (const auto& c : report.cases) {
    Json row{{"id", c.id}, {"kind", c.kind}, {"pass", c.pass}};
    if (!c.pass) {
      row["expected"] = c.expected;
      row["actual"] = c.actual;
      if (!c.error.empty()) row["error"] = c.error;
    }
    rows.push_back(std::move(row));
    text << (c.pass ? "PASS  " : "FAIL  ") << c.id;
    if (!c.pass) text << "  expected " << c.expected.dump() << " got " << (c.error.empty() ? c.actual.dump() : c.error);
    text << "\n";
  }
  text << report.cases.size() - report.failures() << "/" << report.cases.size() << " passed\n";
  return {Json{{"corpus", a.input},
               {"total", report.cases.size()},
               {"failures", report.failures()},
               {"cases", std::move(rows)}},
          text.str()};
}

// ---- command table ----

struct OptionDoc {
  std::string name;
  std::string help;
};

struct Command {
  std::string name;
  std::string summary;
  std::string positional;
  std::string positional_help;
  std::vector<OptionDoc> options;
  std::function<Output(const Args&, const Config&)> run;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table{
      {"indicators", "List the Young indicators of a diagram in canonical order", "diagram",
       "column heights \"3,3,3\", JSON or @file.json", {}, cmd_indicators},
      {"weight", "Weight of an RPP by three independent routes", "rpp",
       "rows \"0 2 / 2 4\", JSON or @file.json", {}, cmd_weight},
      {"factorizations", "All factorisations into indicators, plus the standard and complete ones", "rpp",
       "rows \"0 2 / 2 4\", JSON or @file.json", {}, cmd_factorizations},
      {"classify", "Irreducible components with smoothness and relation witnesses", "rpp",
       "rows \"0 2 / 2 4\", JSON or @file.json", {}, cmd_classify},
      {"equations", "Local equations of Type I or Type II", "rpp", "rows \"0 2 / 2 4\", JSON or @file.json",
       {{"--type", "I or II (default I)"},
        {"--tangent", "also eliminate linear variables and report the tangent embedding"},
        {"--minimal-border", "Type II on the smooth ambient space"}},
       cmd_equations},
      {"series", "Truncated motivic or Euler series over RPPs of a shape", "diagram",
       "column heights \"2,2\", JSON or @file.json",
       {{"--curve", "A1 or P1 (default A1)"},
        {"--euler", "Euler characteristic chi; replaces the motivic series"},
        {"--max-size", "truncation in total size (default 8)"},
        {"--single-variable", "one variable counting |n|"},
        {"--diagonal", "one variable per diagonal i-j"}},
       cmd_series},
      {"count-points", "Brute-force point count over F_p against the motivic coefficient", "rpp",
       "rows \"1 / 2\", JSON or @file.json", {{"--p", "prime (default 2)"}}, cmd_count_points},
      {"verify", "Run a regression corpus and print a pass/fail table", "corpus",
       "path to the corpus (default data/corpus.json)", {}, cmd_verify},
  };
  return table;
}

Json docs_json() {
  Json cmds = Json::array();
  for (const auto& c : commands()) {
    Json opts = Json::array();
    for (const auto& o : c.options) opts.push_back(Json{{"name", o.name}, {"help", o.help}});
    cmds.push_back(Json{{"name", c.name},
                        {"summary", c.summary},
                        {"positional", {{"name", c.positional}, {"help", c.positional_help}}},
                        {"options", std::move(opts)}});
  }
  return Json{{"program", "rpphilb"},
              {"global_options",
               {{{"name", "--format"}, {"help", "json or text (default text)"}},
                {{"name", "--max-boxes"}, {"help", "largest diagram for upper-set enumeration"}},
                {{"name", "--max-weight"}, {"help", "largest weight for factorisation search"}},
                {{"name", "--max-indicators"}, {"help", "largest indicator count for factorisation search"}},
                {{"name", "--budget"}, {"help", "enumeration budget; RPPHILB_MAX_BUDGET sets the default"}},
                {{"name", "--max-prime"}, {"help", "largest prime for point counts"}}}},
              {"exit_codes", {{"0", "success"}, {"1", "domain or parse error"}, {"2", "cap exhausted or verify failure"}}},
              {"commands", std::move(cmds)}};
}

void emit(const Output& out, Format format) {
  if (format == Format::Json)
    std::cout << out.json.dump(2) << "\n";
  else
    std::cout << out.text;
}

int fail(const Error& e) {
  std::cerr << error_json(e).dump(2) << "\n";
  return is_cap_error(e.code()) ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics, equations and series of double nested Hilbert schemes of points on curves", "rpphilb"};
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("RPPHILB_MAX_BUDGET")) {
    try {
      cfg.limits.budget = std::stoull(env);
    } catch (const std::exception&) {
      return fail(Error(ErrorCode::ParseError, "RPPHILB_MAX_BUDGET must be a positive integer", env));
    }
  }
  std::string format = "text";
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-boxes", cfg.limits.max_boxes)->check(CLI::PositiveNumber);
  app.add_option("--max-weight", cfg.limits.max_weight)->check(CLI::PositiveNumber);
  app.add_option("--max-indicators", cfg.limits.max_indicators)->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.limits.budget)->check(CLI::PositiveNumber);
  app.add_option("--max-prime", cfg.limits.max_prime)->check(CLI::PositiveNumber);

  Args args;
  const Command* chosen = nullptr;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.summary);
    sub->fallthrough();
    auto* pos = sub->add_option(c.positional, args.input, c.positional_help);
    if (c.name == "verify")
      args.input = "data/corpus.json";
    else
      pos->required();
    if (c.name == "equations") {
      sub->add_option("--type", args.type)->check(CLI::IsMember({"I", "II"}));
      sub->add_flag("--tangent", args.tangent);
      sub->add_flag("--minimal-border", args.minimal_border);
    } else if (c.name == "series") {
      sub->add_option("--curve", args.curve);
      sub->add_option("--euler", args.euler);
      sub->add_option("--max-size", args.max_size)->check(CLI::NonNegativeNumber);
      sub->add_flag("--single-variable", args.single_variable);
      sub->add_flag("--diagonal", args.diagonal);
    } else if (c.name == "count-points") {
      sub->add_option("--p", args.p);
    }
    sub->callback([&chosen, &c] { chosen = &c; });
  }
  bool docs = false;
  app.add_subcommand("docs", "Print the command table as JSON")->callback([&docs] { docs = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const ErrorCode code = dynamic_cast<const CLI::ValidationError*>(&e) ? ErrorCode::UnsupportedOption
                                                                           : ErrorCode::ParseError;
    return fail(Error(code, e.what()));
  }
  cfg.format = format == "json" ? Format::Json : Format::Text;

  if (docs) {
    std::cout << docs_json().dump(2) << "\n";
    return 0;
  }
  try {
    const Output out = chosen->run(args, cfg);
    emit(out, cfg.format);
    if (chosen->name == "verify" && out.json.at("failures").get<std::size_t>() > 0) return 2;
    return 0;
  } catch (const Error& e) {
    return fail(e);
  }
}
