#include "rankagg/copeland.hpp"

#include <fmt/format.h>

namespace rankagg {

ScoreVector copeland_scores(const MajorityStructure& ms, int version) {
  if (version < 1 || version > 3) {
    throw InputError(fmt::format("Copeland version must be 1, 2 or 3, got {}", version));
  }
  const std::size_t n = ms.size();
  ScoreVector out{version, std::vector<int>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    int lower = 0;
    int upper = 0;
    for (std::size_t y = 0; y < n; ++y) {
      lower += ms.beats(x, y);
      upper += ms.beats(y, x);
    }
    switch (version) {
      case 1: out.scores[x] = lower - upper; break;
      case 2: out.scores[x] = lower; break;
      default: out.scores[x] = static_cast<int>(n) - upper; break;
    }
  }
  return out;
}

Ranking copeland_ranking(const MajorityStructure& ms, int version) {
  auto sv = copeland_scores(ms, version);
  std::vector<double> values(sv.scores.begin(), sv.scores.end());
  return from_scores(ms.alternatives(), values);
}

}  // namespace rankagg
