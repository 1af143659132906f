#pragma once

// Markov-chain ranking. Alternatives are first split into leagues by iterated
// weak top cycle extraction; inside a league the title of "current winner"
// passes along the chain W = (M + T + S) / (m - 1), where S holds the
// within-league Copeland-2 scores on its diagonal. League members are ordered
// by the stationary probability of holding the title.

#include <vector>

#include "rankagg/majority.hpp"

namespace rankagg {

struct LeaguePartition {
  std::vector<IndexSet> leagues;  ///< strongest first
};

LeaguePartition leagues(const MajorityStructure& ms);

/// Column-stochastic transition matrix of one league.
///
/// weight(i, j) = m_ij + t_ij (+ s2(j) on the diagonal), an integer count;
/// W(i, j) = weight(i, j) / denominator with denominator = |league| - 1.
struct TransitionMatrix {
  IndexSet league;
  Matrix<int> weight;
  int denominator = 1;
  Matrix<double> w;

  std::size_t size() const { return league.size(); }
};

/// Throws SingletonLeague when the league has one member.
TransitionMatrix transition_matrix(const MajorityStructure& ms, const IndexSet& league);

enum class StationaryMethod {
  gth,           ///< state reduction without subtractions; the default
  linear_solve,  ///< partial-pivot solve of (W - I)p = 0 with sum(p) = 1
  power,         ///< p <- W p from the uniform vector
};

struct StationaryVector {
  IndexSet league;
  std::vector<double> p;  ///< aligned with `league`
};

struct PowerIterationOptions {
  long max_iterations = 1'000'000;
  double tolerance = 1e-13;
};

StationaryVector stationary(const TransitionMatrix& tm,
                            StationaryMethod method = StationaryMethod::gth,
                            const PowerIterationOptions& power = {});

/// max_i |(W p)_i - p_i|
double stationary_residual(const TransitionMatrix& tm, const StationaryVector& sv);

struct MarkovianResult {
  LeaguePartition leagues;
  std::vector<double> probability;  ///< per alternative, within its own league
  Ranking ranking;
};

/// Two probabilities tie when |a - b| <= kTieTolerance * max(a, b).
inline constexpr double kTieTolerance = 1e-9;

MarkovianResult markovian(const MajorityStructure& ms,
                          StationaryMethod method = StationaryMethod::gth);

Ranking markovian_ranking(const MajorityStructure& ms);

}  // namespace rankagg
