#include "rankagg/markovian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "rankagg/solutions.hpp"

namespace rankagg {

LeaguePartition leagues(const MajorityStructure& ms) {
  return LeaguePartition{sort_by_solution(ms, SolutionKind::weak_top_cycle).classes};
}

TransitionMatrix transition_matrix(const MajorityStructure& ms, const IndexSet& league) {
  const std::size_t n = league.size();
  if (n == 0) throw InputError("empty league");
  if (n == 1) {
    throw SingletonLeague(
        fmt::format("league {{{}}} has one member", ms.alternatives()[league.front()]));
  }
  TransitionMatrix tm{league, Matrix<int>(n), static_cast<int>(n) - 1, Matrix<double>(n)};
  for (std::size_t a = 0; a < n; ++a) {
    int copeland2 = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const std::size_t x = league[a];
      const std::size_t y = league[b];
      copeland2 += ms.beats(x, y);
      tm.weight(a, b) = ms.beats(x, y) + ms.tied(x, y);
    }
    tm.weight(a, a) = copeland2;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      tm.w(a, b) = static_cast<double>(tm.weight(a, b)) / tm.denominator;
    }
  }
  return tm;
}

namespace {

// Grassmann-Taksar-Heyman elimination on the integer weights. Works on the
// row-stochastic view P(from, to) = weight(to, from) and never subtracts, so
// tiny probabilities keep their relative accuracy.
std::vector<double> solve_gth(const TransitionMatrix& tm) {
  const std::size_t n = tm.size();
  Matrix<double> a(n);
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t to = 0; to < n; ++to) a(from, to) = tm.weight(to, from);
  }
  for (std::size_t k = n - 1; k > 0; --k) {
    double s = 0.0;
    for (std::size_t j = 0; j < k; ++j) s += a(k, j);
    if (!(s > 0.0)) throw NumericalError("transition matrix is reducible; no unique p");
    for (std::size_t i = 0; i < k; ++i) a(i, k) /= s;
    for (std::size_t i = 0; i < k; ++i) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < k; ++j) a(i, j) += aik * a(k, j);
    }
  }
  std::vector<double> p(n, 0.0);
  p[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    double v = 0.0;
    for (std::size_t i = 0; i < k; ++i) v += p[i] * a(i, k);
    p[k] = v;
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& v : p) v /= total;
  return p;
}

std::vector<double> solve_linear(const TransitionMatrix& tm) {
  const std::size_t n = tm.size();
  // Rows of (W - I) sum to zero, so the last equation is replaced by sum(p) = 1.
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = tm.w(i, j) - (i == j ? 1.0 : 0.0);
  }
  for (std::size_t j = 0; j < n; ++j) a[n - 1][j] = 1.0;
  a[n - 1][n] = 1.0;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-300) throw NumericalError("singular stationary system");
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0.0) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = a[i][n] / a[i][i];
  return p;
}

std::vector<double> solve_power(const TransitionMatrix& tm, const PowerIterationOptions& opt) {
  const std::size_t n = tm.size();
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (long it = 0; it < opt.max_iterations; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double v = 0.0;
      for (std::size_t j = 0; j < n; ++j) v += tm.w(i, j) * p[j];
      next[i] = v;
    }
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= total;
      change = std::max(change, std::abs(next[i] - p[i]));
    }
    p.swap(next);
    if (change <= opt.tolerance) return p;
  }
  throw NumericalError(fmt::format("power iteration did not converge in {} steps",
                                   opt.max_iterations));
}

}  // namespace

StationaryVector stationary(const TransitionMatrix& tm, StationaryMethod method,
                            const PowerIterationOptions& power) {
  if (tm.size() == 0) throw InputError("empty transition matrix");
  if (tm.size() == 1) return {tm.league, {1.0}};
  switch (method) {
    case StationaryMethod::gth: return {tm.league, solve_gth(tm)};
    case StationaryMethod::linear_solve: return {tm.league, solve_linear(tm)};
    case StationaryMethod::power: return {tm.league, solve_power(tm, power)};
  }
  throw InputError("unknown stationary method");
}

double stationary_residual(const TransitionMatrix& tm, const StationaryVector& sv) {
  double worst = 0.0;
  for (std::size_t i = 0; i < tm.size(); ++i) {
    double v = 0.0;
    for (std::size_t j = 0; j < tm.size(); ++j) v += tm.w(i, j) * sv.p[j];
    worst = std::max(worst, std::abs(v - sv.p[i]));
  }
  return worst;
}

MarkovianResult markovian(const MajorityStructure& ms, StationaryMethod method) {
  MarkovianResult out{leagues(ms), std::vector<double>(ms.size(), 0.0), {}};
  std::vector<int> ranks(ms.size(), 0);
  int next_rank = 0;
  for (const auto& league : out.leagues.leagues) {
    std::vector<double> p{1.0};
    if (league.size() > 1) p = stationary(transition_matrix(ms, league), method).p;
    std::vector<std::size_t> order(league.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const std::size_t k = order[pos];
      bool tie = false;
      if (pos > 0) {
        const double prev = p[order[pos - 1]];
        tie = std::abs(prev - p[k]) <= kTieTolerance * std::max(prev, p[k]);
      }
      if (!tie) ++next_rank;
      ranks[league[k]] = next_rank;
      out.probability[league[k]] = p[k];
    }
  }
  out.ranking = Ranking(ms.alternatives(), std::move(ranks), RankScheme::dense);
  return out;
}

Ranking markovian_ranking(const MajorityStructure& ms) { return markovian(ms).ranking; }

}  // namespace rankagg
