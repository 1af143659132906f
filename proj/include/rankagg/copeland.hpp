#pragma once

#include <vector>

#include "rankagg/majority.hpp"

namespace rankagg {

/// Copeland score vector.
///   version 1: |L(x)| - |D(x)|
///   version 2: |L(x)|
///   version 3: m - |D(x)|
struct ScoreVector {
  int version = 2;
  std::vector<int> scores;
};

ScoreVector copeland_scores(const MajorityStructure& ms, int version);

/// Dense ranking by decreasing score, ties kept.
Ranking copeland_ranking(const MajorityStructure& ms, int version);

}  // namespace rankagg
