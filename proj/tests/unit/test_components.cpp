#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rpphilb/components.hpp"
#include "rpphilb/io.hpp"

using namespace rpphilb;

namespace {

const Rpp kSquare = parse_rpp("0 2 / 2 4");
const Rpp kSample = parse_rpp("0 0 3 / 0 2 5 / 3 5 5");

const ComponentReport& by_text(const std::vector<ComponentReport>& reports, const std::string& text) {
  for (const auto& r : reports)
    if (format_factorization(r.factorization) == text) return r;
  throw std::runtime_error("no component " + text);
}

}  // namespace

TEST(Components, Dimension) {
  EXPECT_EQ(component_dimension(kSquare), 4);
  EXPECT_EQ(dimension_recursive(kSquare), 4);
  EXPECT_EQ(component_dimension(kSample), 5);
  EXPECT_EQ(dimension_recursive(kSample), 5);
  EXPECT_EQ(dimension_recursive(parse_rpp("3")), 3);
  EXPECT_EQ(dimension_recursive(parse_rpp("1 2 4 / 1 3")), weight(parse_rpp("1 2 4 / 1 3")));
}

TEST(Components, Square) {
  const auto reports = classify(kSquare);
  ASSERT_EQ(reports.size(), 3u);
  const auto& standard = by_text(reports, "0111*2 + 0001*2");
  const auto& complete = by_text(reports, "0101*2 + 0011*2");
  const auto& mixed = by_text(reports, "0111 + 0101 + 0011 + 0001");
  EXPECT_TRUE(standard.smooth);
  EXPECT_TRUE(complete.smooth);
  EXPECT_FALSE(mixed.smooth);
  EXPECT_FALSE(mixed.bijective_on_points);
  ASSERT_TRUE(mixed.relation_witness);
  EXPECT_EQ(*mixed.relation_witness, (IntVector{1, -1, -1, 1}));
  EXPECT_EQ(format_relation(mixed.factorization, *mixed.relation_witness), "0101 + 0011 = 0111 + 0001");
  for (const auto& r : reports) EXPECT_EQ(r.dimension, 4);
}

TEST(Components, SampleBijectiveButNotImmersive) {
  const auto reports = classify(kSample);
  ASSERT_EQ(reports.size(), 15u);
  std::size_t smooth = 0, odd = 0;
  for (const auto& r : reports) {
    smooth += r.smooth;
    if (r.bijective_on_points && !r.differential_injective) {
      ++odd;
      EXPECT_EQ(format_factorization(r.factorization),
                "001011111 + 001001111 + 001001011 + 000011011 + 000001111");
      ASSERT_TRUE(r.relation_witness);
      EXPECT_EQ(format_relation(r.factorization, *r.relation_witness),
                "001001111*2 + 000011011 = 001011111 + 001001011 + 000001111");
    }
  }
  EXPECT_EQ(smooth, 8u);
  EXPECT_EQ(odd, 1u);
}

TEST(Components, SmoothIffBijectiveAndInjective) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const YoungDiagram d = oracle::random_diagram(rng, 6);
    const Rpp n = oracle::random_rpp(rng, d, 5);
    for (const auto& r : classify(n)) {
      const bool injective = oracle::support_rank(r.factorization, d.size()) == r.factorization.support_size();
      const bool bijective = !oracle::has_bounded_relation(r.factorization, d.size());
      EXPECT_EQ(r.differential_injective, injective) << format_factorization(r.factorization);
      EXPECT_EQ(r.bijective_on_points, bijective) << format_factorization(r.factorization);
      EXPECT_EQ(r.smooth, injective && bijective);
      // Injective differential forces bijectivity: the only relation is zero.
      if (injective) EXPECT_TRUE(bijective);
      EXPECT_EQ(r.dimension, weight(n));
      Value total = 0;
      for (const auto& [ind, e] : r.normalization) total += e;
      EXPECT_EQ(total, weight(n));
    }
  }
}

TEST(Components, WitnessesAreMinimalRelations) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const YoungDiagram d = oracle::random_diagram(rng, 6);
    const Rpp n = oracle::random_rpp(rng, d, 5);
    for (const auto& t : all_factorizations(n)) {
      const RelationCheck bij = bijective_on_points(t);
      if (bij.holds) {
        EXPECT_FALSE(bij.witness);
        continue;
      }
      ASSERT_TRUE(bij.witness);
      const IntVector& m = *bij.witness;
      EXPECT_TRUE(is_zero(multiply(support_matrix(t), m)));
      EXPECT_FALSE(is_zero(m));
      Integer l1 = 0;
      for (std::size_t k = 0; k < m.size(); ++k) {
        EXPECT_LE(abs(m[k]), t.terms()[k].multiplicity);
        l1 += abs(m[k]);
      }
      // No relation of smaller L1 norm within the bounds: check by brute force over the box.
      std::vector<Value> v(m.size());
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = -t.terms()[k].multiplicity;
      for (;;) {
        Integer norm = 0;
        IntVector w;
        for (Value x : v) {
          norm += std::abs(x);
          w.push_back(x);
        }
        if (norm > 0 && norm < l1) EXPECT_FALSE(is_zero(multiply(support_matrix(t), w)));
        std::size_t k = 0;
        while (k < v.size() && v[k] == t.terms()[k].multiplicity) {
          v[k] = -t.terms()[k].multiplicity;
          ++k;
        }
        if (k == v.size()) break;
        ++v[k];
      }
    }
  }
}

TEST(Components, SmallWeightIsSmooth) {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const YoungDiagram d = oracle::random_diagram(rng, 6);
    const Rpp n = oracle::random_rpp(rng, d, 3);
    if (weight(n) > 3) continue;
    ++checked;
    for (const auto& r : classify(n)) EXPECT_TRUE(r.smooth) << format_rpp(n);
  }
  EXPECT_GT(checked, 50);
}

TEST(Components, SearchBudget) {
  Limits lim;
  lim.budget = 2;
  const auto all = all_factorizations(kSample);
  bool threw = false;
  for (const auto& t : all) {
    try {
      bijective_on_points(t, lim);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::SearchTooLarge);
      threw = true;
    }
  }
  EXPECT_TRUE(threw);
}
