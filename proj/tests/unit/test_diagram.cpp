#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rpphilb/diagram.hpp"

using namespace rpphilb;

TEST(Diagram, BoxesAreRowMajor) {
  const YoungDiagram d({3, 2, 1});
  const std::vector<Box> expected{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}};
  EXPECT_EQ(d.boxes(), expected);
  EXPECT_EQ(d.num_rows(), 3);
  EXPECT_EQ(d.row_length(1), 2);
  EXPECT_EQ(d.index_of({1, 1}), 4u);
  EXPECT_FALSE(d.find({2, 1}));
}

TEST(Diagram, RejectsBadHeights) {
  EXPECT_THROW(YoungDiagram({}), Error);
  EXPECT_THROW(YoungDiagram({2, 0}), Error);
  EXPECT_THROW(YoungDiagram({1, 2}), Error);
  try {
    YoungDiagram({1, 3});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(Diagram, IndexOfOutsideThrows) {
  const YoungDiagram d({2, 2});
  try {
    (void)d.index_of({2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoxNotInDiagram);
  }
}

TEST(Diagram, SocleAndSubsocle) {
  const YoungDiagram square({2, 2});
  EXPECT_EQ(square.socle(), (std::vector<Box>{{1, 1}}));
  EXPECT_TRUE(square.subsocle().empty());

  const YoungDiagram stairs({3, 2, 1});
  EXPECT_EQ(stairs.socle(), (std::vector<Box>{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(stairs.subsocle(), (std::vector<Box>{{1, 0}, {0, 1}}));

  const YoungDiagram hook({3, 1});
  EXPECT_EQ(hook.socle(), (std::vector<Box>{{1, 0}, {0, 2}}));
  EXPECT_EQ(hook.subsocle(), (std::vector<Box>{{0, 0}}));
}

TEST(Diagram, HookLengths) {
  const YoungDiagram d({3, 3, 3});
  std::vector<int> h;
  for (Box b : d.boxes()) h.push_back(d.hook_length(b));
  EXPECT_EQ(h, (std::vector<int>{5, 4, 3, 4, 3, 2, 3, 2, 1}));
}

TEST(Diagram, HookLengthsAgainstArmsAndLegs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const YoungDiagram d = oracle::random_diagram(rng, 10);
    for (Box b : d.boxes()) {
      const int arm = d.row_length(b.j) - b.i - 1;
      const int leg = d.height(b.i) - b.j - 1;
      EXPECT_EQ(d.hook_length(b), arm + leg + 1);
    }
  }
}

TEST(UpperSets, MatchBitmaskEnumeration) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const YoungDiagram d = oracle::random_diagram(rng, 9);
    std::size_t all = 0, connected = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
      if (!oracle::upward_closed(d, mask)) continue;
      ++all;
      connected += oracle::edge_connected(d, mask);
    }
    EXPECT_EQ(enumerate_upper_sets(d, false, false).size(), all);
    EXPECT_EQ(enumerate_upper_sets(d, true, true).size(), connected);
  }
}

TEST(UpperSets, ComplementIsADiagram) {
  const YoungDiagram d({3, 2, 2, 1});
  for (const UpperSet& u : enumerate_upper_sets(d, false, false)) {
    for (Box b : d.boxes()) {
      if (u.contains(b)) continue;
      for (Box c : {Box{b.i - 1, b.j}, Box{b.i, b.j - 1}})
        if (c.i >= 0 && c.j >= 0) EXPECT_FALSE(u.contains(c));
    }
  }
}

TEST(UpperSets, RejectsNonClosedSubsets) {
  const YoungDiagram d({2, 2});
  EXPECT_THROW(UpperSet(d, {true, false, false, false}), Error);
  EXPECT_THROW(UpperSet(d, {true, true}), Error);
}

TEST(UpperSets, ConnectedParts) {
  const YoungDiagram d({3, 2, 1});
  const UpperSet corners(d, {false, false, true, false, true, true});
  ASSERT_FALSE(corners.connected());
  const auto parts = connected_parts(corners);
  ASSERT_EQ(parts.size(), 3u);
  for (const auto& p : parts) EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(parts[0].contains({2, 0}));
  EXPECT_TRUE(parts[2].contains({0, 2}));
}

TEST(UpperSets, TooLarge) {
  const YoungDiagram d({6, 6, 6, 6, 6, 6});
  try {
    enumerate_upper_sets(d, true, true, 30);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DiagramTooLarge);
    EXPECT_TRUE(is_cap_error(e.code()));
  }
}
