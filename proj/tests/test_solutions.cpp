#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "rankagg/io.hpp"
#include "rankagg/solutions.hpp"

using namespace rankagg;
using fixtures::everyone;

TEST(UncoveredSet, SmallStructures) {
  EXPECT_EQ(uncovered_set(fixtures::chain3(), {0, 1, 2}).members, (IndexSet{0}));
  EXPECT_EQ(uncovered_set(fixtures::cycle3(), {0, 1, 2}).members, (IndexSet{0, 1, 2}));
  const auto ms = fixtures::toy();
  EXPECT_EQ(uncovered_set(ms, everyone(ms)).members, (IndexSet{0, 1, 2, 3, 4}));
  EXPECT_THROW(uncovered_set(ms, {}), InputError);
}

TEST(UncoveredSet, CoveringIsRelativeToSubset) {
  const auto ms = fixtures::cycle3();
  EXPECT_EQ(uncovered_set(ms, {0, 1}).members, (IndexSet{0}));
}

TEST(MesUnion, SmallStructures) {
  EXPECT_EQ(mes_union(fixtures::chain3(), {0, 1, 2}).members, (IndexSet{0}));
  EXPECT_EQ(mes_union(fixtures::cycle3(), {0, 1, 2}).members, (IndexSet{0, 1, 2}));
  EXPECT_THROW(mes_union(fixtures::chain3(), {}), InputError);
}

TEST(MesUnion, ToyMinimalSets) {
  const auto ms = fixtures::toy();
  const oracle::Mask all = oracle::mask_of(everyone(ms));
  for (IndexSet s : {IndexSet{0, 4}, IndexSet{1, 4}, IndexSet{2, 4}, IndexSet{3, 4},
                     IndexSet{1, 2, 3}}) {
    EXPECT_TRUE(is_externally_stable(ms, s, everyone(ms)));
    for (auto x : s) {
      IndexSet smaller;
      for (auto y : s) {
        if (y != x) smaller.push_back(y);
      }
      EXPECT_FALSE(oracle::externally_stable(ms, oracle::mask_of(smaller), all));
    }
  }
  EXPECT_EQ(mes_union(ms, everyone(ms)).members, (IndexSet{0, 1, 2, 3, 4}));
}

TEST(WeakTopCycle, SmallStructures) {
  EXPECT_EQ(weak_top_cycle(fixtures::chain3(), {0, 1, 2}).members, (IndexSet{0}));
  EXPECT_EQ(weak_top_cycle(fixtures::cycle3(), {0, 1, 2}).members, (IndexSet{0, 1, 2}));
  const auto ms = fixtures::toy();
  EXPECT_EQ(weak_top_cycle(ms, everyone(ms)).members, (IndexSet{0, 1, 2, 3, 4}));
  EXPECT_THROW(weak_top_cycle(ms, {}), InputError);
}

TEST(SortBySolution, ChainAndToy) {
  const auto chain = fixtures::chain3();
  EXPECT_EQ(sort_by_solution(chain, SolutionKind::uncovered).to_ranking(chain.alternatives()),
            fixtures::ranking(chain.alternatives(), {1, 2, 3}));
  const auto ms = fixtures::toy();
  EXPECT_EQ(sort_by_solution(ms, SolutionKind::uncovered).to_ranking(ms.alternatives()),
            fixtures::ranking(ms.alternatives(), {1, 1, 1, 1, 1}));
}

TEST(SortBySolution, CaseStudyPositions) {
  const auto table = io::load_ranks(fixtures::kDataDir / "criteria_ranks.csv");
  const auto ms = build_majority(io::make_profile(table, io::default_weights()));
  const auto alts = ms.alternatives();
  const auto uc = sort_by_solution(ms, SolutionKind::uncovered).to_ranking(alts);
  const auto mes = sort_by_solution(ms, SolutionKind::mes).to_ranking(alts);
  EXPECT_EQ(uc.positions(), 23u);
  EXPECT_EQ(mes.positions(), 23u);
  EXPECT_EQ(uc.rank("Japan"), 1);
  EXPECT_EQ(mes.rank("Japan"), 1);
}

TEST(SolutionsProperties, StructuralInvariants) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ms = oracle::random_structure(rng, 1 + trial % 10, 0.25);
    const auto all = everyone(ms);
    const auto uc = uncovered_set(ms, all).members;
    const auto mes = mes_union(ms, all).members;
    const auto wtc = weak_top_cycle(ms, all).members;
    ASSERT_FALSE(uc.empty());
    ASSERT_FALSE(mes.empty());
    ASSERT_FALSE(wtc.empty());
    ASSERT_TRUE(is_externally_stable(ms, mes, all));
    for (std::size_t x = 0; x < ms.size(); ++x) {
      bool undominated = true;
      for (std::size_t y = 0; y < ms.size(); ++y) undominated = undominated && !ms.beats(y, x);
      if (!undominated) continue;
      ASSERT_TRUE(std::binary_search(uc.begin(), uc.end(), x));
      ASSERT_TRUE(std::binary_search(mes.begin(), mes.end(), x));
      ASSERT_TRUE(std::binary_search(wtc.begin(), wtc.end(), x));
    }
    for (auto x : wtc) {
      for (std::size_t y = 0; y < ms.size(); ++y) {
        if (!std::binary_search(wtc.begin(), wtc.end(), y)) ASSERT_TRUE(ms.beats(x, y));
      }
    }
    if (wtc.size() > 1) {
      for (auto drop : wtc) {
        bool dominant = true;
        for (auto x : wtc) {
          if (x != drop) dominant = dominant && ms.beats(x, drop);
        }
        ASSERT_FALSE(dominant);
      }
    }
    for (auto kind : props::kKinds) {
      const auto classes = sort_by_solution(ms, kind).classes;
      IndexSet seen;
      for (const auto& c : classes) seen.insert(seen.end(), c.begin(), c.end());
      std::sort(seen.begin(), seen.end());
      ASSERT_EQ(seen, all);
      IndexSet rest = all;
      for (const auto& c : classes) {
        ASSERT_EQ(solve(ms, kind, rest).members, c);
        IndexSet next;
        std::set_difference(rest.begin(), rest.end(), c.begin(), c.end(),
                            std::back_inserter(next));
        rest = next;
      }
    }
  }
}

TEST(SolutionsProperties, MatchBruteForce) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ms = oracle::random_structure(rng, 1 + trial % 10, 0.3);
    props::Violations v;
    props::check_solutions(ms, rng, v);
    ASSERT_TRUE(v.empty()) << v.front();
  }
}
