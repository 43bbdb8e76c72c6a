#include <gtest/gtest.h>

#include "hyperlines/hyperlines.hpp"
#include "support/oracles.hpp"

using namespace hyperlines;

namespace {

VertexSet vs(std::initializer_list<VertexId> members) {
  VertexSet s;
  for (auto v : members) s.insert(v);
  return s;
}

oracle::LineSet ls_of(std::initializer_list<std::set<VertexId>> lines) { return oracle::LineSet(lines); }

}  // namespace

TEST(IndexSet, InsertEraseAcrossWords) {
  VertexSet s;
  s.insert(3);
  s.insert(64);
  s.insert(130);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(64));
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{3, 64, 130}));
  s.erase(130);
  s.erase(64);
  EXPECT_EQ(s, vs({3}));
  EXPECT_EQ(s.hash(), vs({3}).hash());
}

TEST(IndexSet, SetAlgebra) {
  auto a = vs({0, 1, 70});
  auto b = vs({1, 70, 71});
  EXPECT_EQ(a & b, vs({1, 70}));
  EXPECT_EQ(a | b, vs({0, 1, 70, 71}));
  EXPECT_EQ(a - b, vs({0}));
  EXPECT_TRUE(vs({1, 70}).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(vs({0}).intersects(vs({100})));
}

TEST(IndexSet, OrderIsLexicographicOnMemberLists) {
  // [0 1 2] < [0 3] < [1 3] < [2 3]
  EXPECT_LT(vs({0, 1, 2}), vs({0, 3}));
  EXPECT_LT(vs({0, 3}), vs({1, 3}));
  EXPECT_LT(vs({0}), vs({0, 1}));
  EXPECT_LT(vs({0, 100}), vs({1}));
  EXPECT_LT(vs({5, 64}), vs({5, 65}));
}

TEST(Hypergraph, ValidatesHedges) {
  Hypergraph3 h(4);
  EXPECT_THROW(h.add_hedge(0, 0, 1), Error);
  EXPECT_THROW(h.add_hedge(0, 1, 4), Error);
  h.add_hedge(2, 0, 1);
  h.add_hedge(1, 2, 0);
  EXPECT_EQ(h.hedges().size(), 1u);
  EXPECT_TRUE(h.has_hedge(1, 0, 2));
}

TEST(Hypergraph, MaskRoundTripInColexOrder) {
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    auto h = Hypergraph3::from_mask(5, mask);
    ASSERT_EQ(h.mask(), mask);
  }
  // Colex: {0,1,2}=0, {0,1,3}=1, {0,2,3}=2, {1,2,3}=3.
  Hypergraph3 h(4, {{1, 2, 3}});
  EXPECT_EQ(h.mask(), 8u);
}

TEST(LineOfPair, Examples) {
  Hypergraph3 empty(4);
  EXPECT_EQ(line_of_pair(empty, 0, 1), vs({0, 1}));
  Hypergraph3 one(4, {{0, 1, 2}});
  EXPECT_EQ(line_of_pair(one, 0, 1), vs({0, 1, 2}));
  EXPECT_EQ(line_of_pair(one, 0, 3), vs({0, 3}));
  EXPECT_EQ(line_of_pair(one, 1, 0), line_of_pair(one, 0, 1));
}

TEST(LineOfPair, InvalidPairs) {
  Hypergraph3 h(4);
  try {
    line_of_pair(h, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_pair);
  }
  try {
    line_of_pair(h, 0, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_pair);
  }
}

TEST(AllLines, Examples) {
  EXPECT_EQ(oracle::as_set(all_lines(Hypergraph3(3))), ls_of({{0, 1}, {0, 2}, {1, 2}}));
  auto lines = all_lines(Hypergraph3(4, {{0, 1, 2}}));
  EXPECT_EQ(oracle::as_set(lines), ls_of({{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}}));
  EXPECT_EQ(lines.size(), 4u);
  auto two = oracle::as_set(all_lines(Hypergraph3(4, {{0, 1, 2}, {0, 1, 3}})));
  EXPECT_TRUE(two.contains({0, 1, 2, 3}));
  EXPECT_EQ(two, oracle::lines_by_definition(Hypergraph3(4, {{0, 1, 2}, {0, 1, 3}})));
}

TEST(AllLines, SortedLexicographically) {
  auto lines = all_lines(Hypergraph3(4, {{0, 1, 2}}));
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  EXPECT_EQ(lines.front(), vs({0, 1, 2}));
}

TEST(AllLines, DegenerateSizes) {
  EXPECT_TRUE(all_lines(Hypergraph3(0)).empty());
  EXPECT_TRUE(all_lines(Hypergraph3(1)).empty());
  auto two = all_lines(Hypergraph3(2));
  ASSERT_EQ(two.size(), 1u);
  EXPECT_TRUE(has_universal_line(Hypergraph3(2)));
}

TEST(UniversalLine, Examples) {
  EXPECT_TRUE(has_universal_line(Hypergraph3(3, {{0, 1, 2}})));
  EXPECT_FALSE(has_universal_line(Hypergraph3(3)));
  EXPECT_TRUE(has_universal_line(Hypergraph3(4, {{0, 1, 2}, {0, 1, 3}})));
}

TEST(AlphaBeta, Examples) {
  Hypergraph3 tri(3);
  EXPECT_EQ(oracle::as_set(alpha(tri, 0)), ls_of({{0, 1}, {0, 2}}));
  EXPECT_EQ(oracle::as_set(beta(tri, 0)), ls_of({{0, 1}, {0, 2}}));
  Hypergraph3 one(4, {{0, 1, 2}});
  EXPECT_EQ(oracle::as_set(alpha(one, 3)), ls_of({{0, 3}, {1, 3}, {2, 3}}));
  EXPECT_EQ(oracle::as_set(alpha(one, 0)), ls_of({{0, 1, 2}, {0, 3}}));
  EXPECT_EQ(oracle::as_set(beta(one, 0)), ls_of({{0, 1, 2}, {0, 3}}));
}

TEST(AlphaBeta, BetaCanBeProperSubset) {
  // line(0,1) = {0,1,2,3} contains 2, but 2 only defines {0,1,2} with 0 and 1.
  Hypergraph3 h(5, {{0, 1, 2}, {0, 1, 3}});
  auto a = oracle::as_set(alpha(h, 2));
  auto b = oracle::as_set(beta(h, 2));
  EXPECT_TRUE(a.contains({0, 1, 2, 3}));
  EXPECT_FALSE(b.contains({0, 1, 2, 3}));
  for (const auto& line : b) EXPECT_TRUE(a.contains(line));
}

TEST(AlphaBeta, InvalidVertex) {
  Hypergraph3 h(3);
  try {
    alpha(h, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_vertex);
  }
  EXPECT_THROW(beta(h, 7), Error);
}

TEST(Span, Examples) {
  EXPECT_TRUE(span(Hypergraph3(3), VertexSet{}).empty());
  EXPECT_EQ(oracle::as_set(span(Hypergraph3(3), vs({0}))), ls_of({{0, 1}, {0, 2}}));
  EXPECT_EQ(span(Hypergraph3(4), vs({0, 1})).size(), 5u);
}

TEST(LineStructure, PairIdsAgreeWithLines) {
  Hypergraph3 h(6, {{0, 1, 2}, {2, 3, 4}, {1, 4, 5}});
  LineStructure ls(h);
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = 0; v < 6; ++v)
      if (u != v) {
        EXPECT_EQ(ls.line(ls.line_id(u, v)), line_of_pair(h, u, v));
      }
  EXPECT_EQ(ls.find(vs({0, 1, 2})), ls.line_id(0, 1));
  EXPECT_FALSE(ls.find(vs({0, 5, 3})).has_value());
}

TEST(LineSummary, MatchesFullStructureBeyondOneWord) {
  // n > 64 takes the multi-word fallback.
  Hypergraph3 h(70);
  for (VertexId v = 2; v < 70; ++v) h.add_hedge(0, 1, v);
  auto s = summarize_lines(h);
  EXPECT_TRUE(s.universal);
  EXPECT_EQ(s.m, LineStructure(h).line_count());
  Hypergraph3 g(66, {{0, 64, 65}});
  EXPECT_EQ(summarize_lines(g).m, choose(66, 2) - 2);
  EXPECT_FALSE(summarize_lines(g).universal);
}

TEST(Reference, AgreesOnSmallExample) {
  Hypergraph3 h(4, {{0, 1, 2}});
  auto naive = reference::all_lines(h);
  EXPECT_EQ(naive, oracle::lines_by_definition(h));
  EXPECT_FALSE(reference::has_universal_line(naive, 4));
}
