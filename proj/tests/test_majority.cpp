#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rankagg/io.hpp"
#include "rankagg/majority.hpp"

using namespace rankagg;
using fixtures::names;
using fixtures::ranking;

TEST(BuildMajority, ToyProfileMatrix) {
  const auto ms = build_majority(fixtures::toy_profile());
  EXPECT_EQ(ms.majority_matrix(), fixtures::toy_matrix());
  EXPECT_EQ(ms.tie_matrix(), Matrix<std::uint8_t>(5));
}

TEST(BuildMajority, WeightsDecide) {
  const auto alts = names({"a", "b"});
  const auto ab = ranking(alts, {1, 2});
  const auto ba = ranking(alts, {2, 1});
  const auto heavy = build_majority(Profile(alts, {{"p", 2, ab}, {"q", 1, ba}}));
  EXPECT_TRUE(heavy.beats(0, 1));
  EXPECT_FALSE(heavy.beats(1, 0));
  const auto even = build_majority(Profile(alts, {{"p", 1, ab}, {"q", 1, ba}}));
  EXPECT_TRUE(even.tied(0, 1));
  EXPECT_TRUE(even.tied(1, 0));
}

TEST(BuildMajority, TiedCriteriaAbstain) {
  const auto alts = names({"a", "b"});
  const auto ms = build_majority(
      Profile(alts, {{"p", 5, ranking(alts, {1, 1})}, {"q", 1, ranking(alts, {1, 2})}}));
  EXPECT_TRUE(ms.beats(0, 1));
}

TEST(MajorityStructure, RejectsInvalidMatrices) {
  const auto alts = names({"a", "b"});
  Matrix<std::uint8_t> both(2), none(2), t(2);
  both(0, 1) = both(1, 0) = 1;
  EXPECT_THROW(MajorityStructure(alts, both, none), InputError);
  EXPECT_THROW(MajorityStructure(alts, none, none), InputError);
  t(0, 1) = 1;
  EXPECT_THROW(MajorityStructure(alts, none, t), InputError);
  Matrix<std::uint8_t> loop(2);
  loop(0, 0) = 1;
  loop(0, 1) = 1;
  EXPECT_THROW(MajorityStructure(alts, loop, none), InputError);
}

TEST(Sections, Toy) {
  const auto s = sections(fixtures::toy(), "x5");
  EXPECT_EQ(s.lower, (IndexSet{0, 1, 2}));
  EXPECT_EQ(s.upper, (IndexSet{3}));
  EXPECT_TRUE(s.horizon.empty());
}

TEST(Sections, ChainAndTies) {
  const auto s = sections(fixtures::chain3(), "b");
  EXPECT_EQ(s.lower, (IndexSet{2}));
  EXPECT_EQ(s.upper, (IndexSet{0}));
  EXPECT_TRUE(s.horizon.empty());
  const auto t = sections(fixtures::all_tied(2), std::size_t{0});
  EXPECT_TRUE(t.lower.empty());
  EXPECT_TRUE(t.upper.empty());
  EXPECT_EQ(t.horizon, (IndexSet{1}));
  EXPECT_THROW(sections(fixtures::chain3(), "zz"), InputError);
}

TEST(CountCycles, ToyHasFourTriangles) {
  const auto ms = fixtures::toy();
  EXPECT_EQ(count_cycles(ms, 3), 4);
  EXPECT_EQ(count_cycles(ms, 3), oracle::cycles(ms, 3));
}

TEST(CountCycles, TransitiveChainHasNone) {
  const auto ms = fixtures::chain(4);
  for (int k = 3; k <= 5; ++k) EXPECT_EQ(count_cycles(ms, k), 0);
}

TEST(CountCycles, RejectsUnsupportedLength) {
  EXPECT_THROW(count_cycles(fixtures::cycle3(), 2), InputError);
  EXPECT_THROW(count_cycles(fixtures::cycle3(), 6), InputError);
}

TEST(CountCycles, CaseStudyProfile) {
  const auto table = io::load_ranks(fixtures::kDataDir / "criteria_ranks.csv");
  const auto ms = build_majority(io::make_profile(table, io::default_weights()));
  EXPECT_EQ(count_cycles(ms, 3), 638);
  EXPECT_EQ(count_cycles(ms, 4), 5928);
  EXPECT_EQ(count_cycles(ms, 5), 52754);
}

TEST(MajorityProperties, TrichotomyWeightSplitAndSchemeInvariance) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> weight(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto alts = oracle::letters(6);
    std::vector<Criterion> weighted, split, competition;
    for (int c = 0; c < 3; ++c) {
      const auto r = oracle::random_ranking(rng, alts, 4);
      const int w = weight(rng);
      const std::string name = "c" + std::to_string(c);
      weighted.push_back({name, w, r});
      competition.push_back({name, w, r.renumbered(RankScheme::competition)});
      for (int k = 0; k < w; ++k) split.push_back({name + "_" + std::to_string(k), 1, r});
    }
    const auto ms = build_majority(Profile(alts, weighted));
    for (std::size_t x = 0; x < ms.size(); ++x) {
      for (std::size_t y = 0; y < ms.size(); ++y) {
        if (x == y) continue;
        ASSERT_EQ(ms.beats(x, y) + ms.beats(y, x) + ms.tied(x, y), 1);
        ASSERT_EQ(ms.tied(x, y), ms.tied(y, x));
      }
    }
    const auto ms_split = build_majority(Profile(alts, split));
    ASSERT_EQ(ms.majority_matrix(), ms_split.majority_matrix());
    ASSERT_EQ(ms.tie_matrix(), ms_split.tie_matrix());
    const auto ms_comp = build_majority(Profile(alts, competition));
    ASSERT_EQ(ms.majority_matrix(), ms_comp.majority_matrix());
  }
}

TEST(MajorityProperties, CyclesMatchEnumeration) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ms = oracle::random_structure(rng, 1 + trial % 8, 0.2);
    for (int k = 3; k <= 5; ++k) ASSERT_EQ(count_cycles(ms, k), oracle::cycles(ms, k));
  }
}
