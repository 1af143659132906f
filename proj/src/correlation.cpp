#include "rankagg/correlation.hpp"

#include <cmath>

#include <fmt/format.h>

namespace rankagg {

PairStats pair_stats(const Ranking& r1, const Ranking& r2) {
  if (!(r1.alternatives() == r2.alternatives())) {
    throw InputError("rankings are over different alternative sets");
  }
  const std::size_t m = r1.size();
  if (m < 2) throw InputError("correlation needs at least two alternatives");
  auto a = r1.ranks();
  auto b = r2.ranks();
  PairStats s;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const int da = a[i] - a[j];
      const int db = b[i] - b[j];
      ++s.total;
      if (da == 0) ++s.tied_first;
      if (db == 0) ++s.tied_second;
      if (da == 0 && db == 0) ++s.tied_both;
      if ((da < 0 && db < 0) || (da > 0 && db > 0)) ++s.concordant;
      if ((da < 0 && db > 0) || (da > 0 && db < 0)) ++s.discordant;
    }
  }
  if (s.concordant + s.discordant != s.total - s.tied_first - s.tied_second + s.tied_both) {
    throw NumericalError("pair counts violate N+ + N- = N - n1 - n2 + N0");
  }
  return s;
}

double kendall_tau_b(const Ranking& r1, const Ranking& r2) {
  const PairStats s = pair_stats(r1, r2);
  const double denom = static_cast<double>(s.total - s.tied_first) *
                       static_cast<double>(s.total - s.tied_second);
  if (denom == 0.0) throw DegenerateRanking("tau-b undefined: a ranking ties every pair");
  return static_cast<double>(s.concordant - s.discordant) / std::sqrt(denom);
}

double coinciding_share(const Ranking& r1, const Ranking& r2) {
  const PairStats s = pair_stats(r1, r2);
  return 100.0 * static_cast<double>(s.concordant + s.tied_both) / static_cast<double>(s.total);
}

std::string_view to_string(Measure measure) {
  return measure == Measure::tau_b ? "tau-b" : "coinciding";
}

Measure parse_measure(std::string_view text) {
  if (text == "tau-b" || text == "tau_b" || text == "taub") return Measure::tau_b;
  if (text == "coinciding" || text == "r" || text == "coinciding_share") {
    return Measure::coinciding_share;
  }
  throw InputError(fmt::format("unknown measure '{}' (expected tau-b or coinciding)", text));
}

double correlate(const Ranking& r1, const Ranking& r2, Measure measure) {
  return measure == Measure::tau_b ? kendall_tau_b(r1, r2) : coinciding_share(r1, r2);
}

CorrelationMatrix correlation_matrix(const std::vector<NamedRanking>& rankings, Measure measure) {
  if (rankings.size() < 2) throw InputError("correlation matrix needs at least two rankings");
  const std::size_t n = rankings.size();
  CorrelationMatrix out{{}, Matrix<double>(n), measure};
  for (const auto& r : rankings) out.labels.push_back(r.name);
  for (std::size_t i = 0; i < n; ++i) {
    out.values(i, i) = correlate(rankings[i].ranking, rankings[i].ranking, measure);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = correlate(rankings[i].ranking, rankings[j].ranking, measure);
      out.values(i, j) = v;
      out.values(j, i) = v;
    }
  }
  return out;
}

}  // namespace rankagg
