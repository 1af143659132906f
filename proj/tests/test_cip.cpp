#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rankagg/cip.hpp"

using namespace rankagg;

namespace {

IndicatorRecord record(std::string country, std::array<double, 8> v) {
  return {std::move(country), v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

}  // namespace

TEST(CipIndex, Examples) {
  EXPECT_DOUBLE_EQ(cip_index(record("a", {1, 1, 1, 1, 1, 1, 1, 1})), 1.0);
  EXPECT_DOUBLE_EQ(cip_index(record("a", {1, 1, 1, 1, 1, 1, 0, 1})), 0.0);
  EXPECT_NEAR(cip_index(record("a", {2, 3, 0.4, 0.2, 0.5, 0.7, 0.01, 0.02})), 0.000216, 1e-12);
}

TEST(CipIndex, Validation) {
  EXPECT_THROW(cip_index(record("a", {-1, 1, 1, 1, 1, 1, 1, 1})), InputError);
  EXPECT_THROW(cip_index(record("a", {NAN, 1, 1, 1, 1, 1, 1, 1})), InputError);
  EXPECT_THROW(cip_index(record("", {1, 1, 1, 1, 1, 1, 1, 1})), InputError);
  EXPECT_EQ(validate(record("a", {1, 1, 1.5, 1, 1, 1, 1, 1})).size(), 1u);
}

TEST(CipRanking, DominanceTiesAndDuplicates) {
  const auto r = cip_ranking({record("a", {2, 2, 1, 1, 1, 1, 1, 1}),
                              record("b", {1, 1, 1, 1, 1, 1, 1, 1}),
                              record("c", {1, 2, 1, 1, 1, 1, 1, 1}),
                              record("d", {2, 1, 1, 1, 1, 1, 1, 1})});
  EXPECT_EQ(r.rank("a"), 1);
  EXPECT_EQ(r.rank("c"), 2);
  EXPECT_EQ(r.rank("d"), 2);
  EXPECT_EQ(r.rank("b"), 3);
  EXPECT_THROW(cip_ranking({record("a", {1, 1, 1, 1, 1, 1, 1, 1}),
                            record("a", {2, 1, 1, 1, 1, 1, 1, 1})}),
               InputError);
  EXPECT_THROW(cip_ranking({}), InputError);
}

TEST(CipProperties, MonotoneAndScaleInvariant) {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IndicatorRecord> records;
    for (int c = 0; c < 8; ++c) {
      std::array<double, 8> v;
      for (auto& x : v) x = u(rng);
      records.push_back(record("k" + std::to_string(c), v));
    }
    const auto base = cip_ranking(records);
    for (std::size_t f : {0, 1, 6, 7}) {
      auto scaled = records;
      for (auto& r : scaled) {
        auto v = r.values();
        v[f] *= 2.0;
        r = record(r.country, v);
      }
      ASSERT_EQ(cip_ranking(scaled), base);
    }
    for (std::size_t f = 0; f < 8; ++f) {
      auto v = records[0].values();
      const double before = cip_index(records[0]);
      v[f] *= 1.1;
      ASSERT_GT(cip_index(record("x", v)), before);
    }
  }
}
