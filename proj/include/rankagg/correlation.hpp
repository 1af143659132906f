#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rankagg/core.hpp"
#include "rankagg/matrix.hpp"

namespace rankagg {

/// Tie-aware pair counts between two rankings of the same alternatives.
struct PairStats {
  std::int64_t total = 0;     ///< N = m(m-1)/2
  std::int64_t concordant = 0;  ///< N+: ordered the same way, no tie
  std::int64_t discordant = 0;  ///< N-: inversions
  std::int64_t tied_first = 0;  ///< n1
  std::int64_t tied_second = 0; ///< n2
  std::int64_t tied_both = 0;   ///< N0

  bool operator==(const PairStats&) const = default;
};

PairStats pair_stats(const Ranking& r1, const Ranking& r2);

/// (N+ - N-) / sqrt((N - n1)(N - n2)). Throws DegenerateRanking if either
/// ranking is one tied block.
double kendall_tau_b(const Ranking& r1, const Ranking& r2);

/// Percentage of pairs ranked the same way, ties included: 100 (N+ + N0) / N.
double coinciding_share(const Ranking& r1, const Ranking& r2);

enum class Measure { tau_b, coinciding_share };

std::string_view to_string(Measure measure);
Measure parse_measure(std::string_view text);

double correlate(const Ranking& r1, const Ranking& r2, Measure measure);

struct CorrelationMatrix {
  std::vector<std::string> labels;
  Matrix<double> values;
  Measure measure = Measure::tau_b;
};

CorrelationMatrix correlation_matrix(const std::vector<NamedRanking>& rankings, Measure measure);

}  // namespace rankagg
