#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rpphilb/io.hpp"

using namespace rpphilb;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::CorpusError;
}

}  // namespace

TEST(Io, ParseDiagram) {
  EXPECT_EQ(parse_diagram("3,3,3"), YoungDiagram({3, 3, 3}));
  EXPECT_EQ(parse_diagram(" 2, 1 "), YoungDiagram({2, 1}));
  EXPECT_EQ(parse_diagram(R"({"cols":[2,2]})"), YoungDiagram({2, 2}));
  EXPECT_EQ(code_of([] { parse_diagram(""); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_diagram("3,x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_diagram("{\"cols\":"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_diagram("1,2"); }), ErrorCode::InvalidInput);
}

TEST(Io, ParseRpp) {
  const Rpp n = parse_rpp("0 0 3 / 0 2 5 / 3 5 5");
  EXPECT_EQ(n.diagram(), YoungDiagram({3, 3, 3}));
  EXPECT_EQ(n.at({2, 1}), 5);
  EXPECT_EQ(parse_rpp("0 1 / 1"), Rpp(YoungDiagram({2, 1}), {0, 1, 1}));
  EXPECT_EQ(parse_rpp(R"({"rows":[[0,2],[2,4]]})"), parse_rpp("0 2 / 2 4"));
  EXPECT_EQ(code_of([] { parse_rpp(""); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_rpp("0 1 / 1 1 1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_rpp("0 1 / "); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_rpp("0 a"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_rpp("2 1"); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { parse_rpp(R"({"cols":[1,1],"rows":[[0,2],[2,4]]})"); }), ErrorCode::DiagramMismatch);
}

TEST(Io, RoundTrips) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const YoungDiagram d = oracle::random_diagram(rng, 10);
    const Rpp n = oracle::random_rpp(rng, d, 9);
    EXPECT_EQ(parse_rpp(format_rpp(n)), n);
    EXPECT_EQ(rpp_from_json(to_json(n)), n);
    EXPECT_EQ(parse_rpp(to_json(n).dump()), n);
    EXPECT_EQ(parse_diagram(format_diagram(d)), d);
    EXPECT_EQ(diagram_from_json(to_json(d)), d);
  }
}

TEST(Io, Factorization) {
  const Rpp n = parse_rpp("0 2 / 2 4");
  const Factorization s = standard_factorization(n);
  EXPECT_EQ(format_factorization(s), "0111*2 + 0001*2");
  EXPECT_EQ(to_json(s).dump(), R"([{"indicator":"0111","multiplicity":2},{"indicator":"0001","multiplicity":2}])");
  EXPECT_EQ(format_factorization(Factorization()), "0");
}

TEST(Io, RelationIsSignInvariant) {
  const auto all = all_factorizations(parse_rpp("0 2 / 2 4"));
  for (const auto& t : all) {
    if (t.support_size() != 4) continue;
    const IntVector m{1, -1, -1, 1}, minus{-1, 1, 1, -1};
    EXPECT_EQ(format_relation(t, m), format_relation(t, minus));
    EXPECT_EQ(format_relation(t, m), "0101 + 0011 = 0111 + 0001");
  }
  const Factorization sample = all_factorizations(parse_rpp("0 0 3 / 0 2 5 / 3 5 5"))[0];
  IntVector m(sample.support_size(), 0);
  m[0] = 2;
  EXPECT_NE(format_relation(sample, m).find("*2"), std::string::npos);
}

TEST(Io, IntegerJson) {
  EXPECT_EQ(integer_json(Integer(42)).dump(), "42");
  const Integer big = Integer(1) << 80;
  EXPECT_EQ(integer_json(big).dump(), "\"" + big.str() + "\"");
}

TEST(Io, LefschetzJson) {
  EXPECT_EQ(lefschetz_json(parse_poly("L^2 + 3")).dump(), R"({"0":3,"2":1})");
  EXPECT_EQ(lefschetz_json(SparsePoly()).dump(), "{}");
  EXPECT_THROW(lefschetz_json(parse_poly("x*L")), Error);
}

TEST(Io, ErrorJson) {
  const Error e(ErrorCode::ParseError, "bad", "0 x");
  EXPECT_EQ(error_json(e).dump(), R"({"code":"parse-error","message":"bad","offending_input":"0 x"})");
}
