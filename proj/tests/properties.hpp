#pragma once

// Randomised property checks against the oracles. Each function returns the
// list of violations found (empty on success).

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "rankagg/copeland.hpp"
#include "rankagg/correlation.hpp"
#include "rankagg/majority.hpp"
#include "rankagg/markovian.hpp"
#include "rankagg/solutions.hpp"

namespace props {

using Violations = std::vector<std::string>;

inline oracle::Kind to_oracle(rankagg::SolutionKind kind) {
  switch (kind) {
    case rankagg::SolutionKind::uncovered: return oracle::Kind::uc;
    case rankagg::SolutionKind::mes: return oracle::Kind::mes;
    default: return oracle::Kind::wtc;
  }
}

inline constexpr rankagg::SolutionKind kKinds[] = {rankagg::SolutionKind::uncovered,
                                                   rankagg::SolutionKind::mes,
                                                   rankagg::SolutionKind::weak_top_cycle};

/// Solutions on the full set and on a random subset, plus the sorting.
inline void check_solutions(const rankagg::MajorityStructure& ms, std::mt19937& rng,
                            Violations& out) {
  rankagg::IndexSet subset;
  std::bernoulli_distribution keep(0.7);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (keep(rng)) subset.push_back(i);
  }
  if (subset.empty()) subset.push_back(0);
  rankagg::IndexSet all(ms.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (auto kind : kKinds) {
    for (const auto* s : {&all, &subset}) {
      const auto got = rankagg::solve(ms, kind, *s).members;
      if (got != oracle::solve(ms, to_oracle(kind), *s)) {
        out.push_back(fmt::format("{} differs from brute force on a subset of {}",
                                  rankagg::to_string(kind), s->size()));
      }
    }
    if (rankagg::sort_by_solution(ms, kind).classes != oracle::sort_classes(ms, to_oracle(kind))) {
      out.push_back(fmt::format("{}-sort classes differ", rankagg::to_string(kind)));
    }
  }
}

inline void check_cycles(const rankagg::MajorityStructure& ms, Violations& out) {
  for (int k = 3; k <= 5; ++k) {
    const auto got = rankagg::count_cycles(ms, k);
    const auto want = oracle::cycles(ms, k);
    if (got != want) out.push_back(fmt::format("k={} cycles {} != {}", k, got, want));
  }
}

/// Residual, normalisation, positivity and league dominance of the
/// Markovian ranking.
inline void check_markovian(const rankagg::MajorityStructure& ms, Violations& out) {
  const auto result = rankagg::markovian(ms);
  for (const auto& league : result.leagues.leagues) {
    if (league.size() < 2) continue;
    const auto tm = rankagg::transition_matrix(ms, league);
    for (std::size_t j = 0; j < tm.size(); ++j) {
      long col = 0;
      for (std::size_t i = 0; i < tm.size(); ++i) col += tm.weight(i, j);
      if (col != tm.denominator) out.push_back("transition column does not sum to one");
    }
    const auto sv = rankagg::stationary(tm);
    double sum = 0.0;
    for (double p : sv.p) {
      sum += p;
      if (!(p > 0.0)) out.push_back("stationary component not positive");
    }
    if (std::abs(sum - 1.0) > 1e-12) out.push_back(fmt::format("sum p = {}", sum));
    const double residual = rankagg::stationary_residual(tm, sv);
    if (residual > 1e-10) out.push_back(fmt::format("residual {}", residual));
    const auto lin = rankagg::stationary(tm, rankagg::StationaryMethod::linear_solve);
    for (std::size_t i = 0; i < sv.p.size(); ++i) {
      if (std::abs(lin.p[i] - sv.p[i]) > 1e-8) {
        out.push_back("linear solve and state reduction disagree");
        break;
      }
    }
  }
  int previous_max = 0;
  for (const auto& league : result.leagues.leagues) {
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (auto i : league) {
      lo = std::min(lo, result.ranking.rank(i));
      hi = std::max(hi, result.ranking.rank(i));
    }
    if (lo <= previous_max) out.push_back("league ranks overlap");
    previous_max = hi;
  }
}

/// PairStats identity and both measures against the naive recount.
inline void check_correlation(const rankagg::Ranking& a, const rankagg::Ranking& b,
                              Violations& out) {
  const auto s = rankagg::pair_stats(a, b);
  const auto o = oracle::pairs(a, b);
  if (s.total != o.total || s.concordant != o.concordant || s.discordant != o.discordant ||
      s.tied_first != o.tied_first || s.tied_second != o.tied_second ||
      s.tied_both != o.tied_both) {
    out.push_back("pair counts differ from recount");
  }
  if (s.concordant + s.discordant != s.total - s.tied_first - s.tied_second + s.tied_both) {
    out.push_back("pair identity violated");
  }
  const double r = rankagg::coinciding_share(a, b);
  if (std::abs(r - oracle::coinciding(a, b)) > 1e-12) out.push_back("r differs");
  if (r < 0.0 || r > 100.0) out.push_back("r out of range");
  if (o.total - o.tied_first > 0 && o.total - o.tied_second > 0) {
    const double t = rankagg::kendall_tau_b(a, b);
    if (std::abs(t - oracle::tau_b(a, b)) > 1e-12) out.push_back("tau-b differs");
    if (t < -1.0 - 1e-12 || t > 1.0 + 1e-12) out.push_back("tau-b out of range");
    if (std::abs(t - rankagg::kendall_tau_b(b, a)) > 1e-15) out.push_back("tau-b not symmetric");
  }
}

/// All checks on one random structure of size 1..max_m and one random
/// ranking pair.
inline Violations check_random_case(std::mt19937& rng, std::size_t max_m) {
  Violations out;
  std::uniform_int_distribution<std::size_t> size(1, max_m);
  std::uniform_real_distribution<double> ties(0.0, 0.4);
  const auto ms = oracle::random_structure(rng, size(rng), ties(rng));
  check_solutions(ms, rng, out);
  check_cycles(ms, out);
  check_markovian(ms, out);
  const std::size_t m = std::max<std::size_t>(2, size(rng));
  const auto alts = oracle::letters(m);
  std::uniform_int_distribution<int> levels(1, static_cast<int>(m));
  check_correlation(oracle::random_ranking(rng, alts, levels(rng)),
                    oracle::random_ranking(rng, alts, levels(rng)), out);
  return out;
}

}  // namespace props
