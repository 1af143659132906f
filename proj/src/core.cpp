#include "rankagg/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <fmt/format.h>

namespace rankagg {

AlternativeSet::AlternativeSet(std::vector<std::string> items) : items_(std::move(items)) {
  index_.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].empty()) {
      throw InputError(fmt::format("alternative #{} has an empty name", i + 1));
    }
    if (!index_.emplace(items_[i], i).second) {
      throw InputError(fmt::format("duplicate alternative '{}'", items_[i]));
    }
  }
}

std::optional<std::size_t> AlternativeSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t AlternativeSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError(fmt::format("unknown alternative '{}'", name));
}

IndexSet AlternativeSet::all() const {
  IndexSet out(items_.size());
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

std::string_view to_string(RankScheme scheme) {
  switch (scheme) {
    case RankScheme::dense: return "dense";
    case RankScheme::competition: return "competition";
    case RankScheme::as_given: return "as_given";
  }
  return "?";
}

RankScheme parse_rank_scheme(std::string_view text) {
  if (text == "dense") return RankScheme::dense;
  if (text == "competition") return RankScheme::competition;
  if (text == "as_given" || text == "as-given") return RankScheme::as_given;
  throw InputError(fmt::format("unknown rank scheme '{}'", text));
}

namespace {

std::vector<int> renumber(std::span<const int> ranks, RankScheme scheme) {
  std::vector<double> keys(ranks.begin(), ranks.end());
  return number_ranks(keys, scheme);
}

}  // namespace

Ranking::Ranking(AlternativeSet alternatives, std::vector<int> ranks, RankScheme scheme)
    : alternatives_(std::move(alternatives)), ranks_(std::move(ranks)), scheme_(scheme) {
  if (ranks_.size() != alternatives_.size()) {
    throw InputError(fmt::format("ranking has {} ranks for {} alternatives", ranks_.size(),
                                 alternatives_.size()));
  }
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] < 1) {
      throw InputError(
          fmt::format("rank of '{}' must be >= 1, got {}", alternatives_[i], ranks_[i]));
    }
  }
  if (scheme_ != RankScheme::as_given && renumber(ranks_, scheme_) != ranks_) {
    throw InputError(fmt::format("ranks violate the {} numbering scheme", to_string(scheme_)));
  }
}

std::size_t Ranking::positions() const {
  return std::set<int>(ranks_.begin(), ranks_.end()).size();
}

bool Ranking::is_dense() const { return renumber(ranks_, RankScheme::dense) == ranks_; }

Ranking Ranking::renumbered(RankScheme scheme) const {
  if (scheme == RankScheme::as_given) return Ranking(alternatives_, ranks_, scheme);
  return Ranking(alternatives_, renumber(ranks_, scheme), scheme);
}

std::vector<IndexSet> Ranking::groups() const {
  std::vector<int> distinct(ranks_.begin(), ranks_.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<IndexSet> out(distinct.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    auto pos = std::lower_bound(distinct.begin(), distinct.end(), ranks_[i]) - distinct.begin();
    out[pos].push_back(i);
  }
  return out;
}

std::vector<int> number_ranks(std::span<const double> keys, RankScheme scheme) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<int> out(keys.size());
  int dense = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::size_t i = order[pos];
    bool new_block = pos == 0 || keys[order[pos - 1]] != keys[i];
    if (new_block) ++dense;
    if (scheme == RankScheme::competition) {
      out[i] = new_block ? static_cast<int>(pos) + 1 : out[order[pos - 1]];
    } else {
      out[i] = dense;
    }
  }
  return out;
}

Ranking from_scores(const AlternativeSet& alternatives, std::span<const double> values,
                    const ScoreOptions& options) {
  if (values.size() != alternatives.size()) {
    throw InputError(fmt::format("{} scores given for {} alternatives", values.size(),
                                 alternatives.size()));
  }
  std::vector<double> keys(values.size());
  double scale = options.round_decimals ? std::pow(10.0, *options.round_decimals) : 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InputError(fmt::format("score of '{}' is not finite", alternatives[i]));
    }
    double v = options.round_decimals ? std::round(values[i] * scale) / scale : values[i];
    keys[i] = -v;
  }
  RankScheme scheme =
      options.scheme == RankScheme::as_given ? RankScheme::dense : options.scheme;
  return Ranking(alternatives, number_ranks(keys, scheme), scheme);
}

Ranking from_scores(const AlternativeSet& alternatives,
                    const std::unordered_map<std::string, double>& values,
                    const ScoreOptions& options) {
  std::vector<double> ordered(alternatives.size());
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    auto it = values.find(alternatives[i]);
    if (it == values.end()) {
      throw InputError(fmt::format("no score for '{}'", alternatives[i]));
    }
    ordered[i] = it->second;
  }
  for (const auto& [name, value] : values) {
    (void)value;
    alternatives.index_of(name);
  }
  return from_scores(alternatives, ordered, options);
}

Comparison compare(const Ranking& ranking, std::size_t a, std::size_t b) {
  if (a >= ranking.size() || b >= ranking.size()) {
    throw InputError("alternative index out of range");
  }
  int ra = ranking.rank(a);
  int rb = ranking.rank(b);
  if (ra < rb) return Comparison::better;
  if (ra > rb) return Comparison::worse;
  return Comparison::tied;
}

Comparison compare(const Ranking& ranking, std::string_view a, std::string_view b) {
  const auto& alts = ranking.alternatives();
  return compare(ranking, alts.index_of(a), alts.index_of(b));
}

Profile::Profile(AlternativeSet alternatives, std::vector<Criterion> criteria)
    : alternatives_(std::move(alternatives)), criteria_(std::move(criteria)) {
  if (alternatives_.empty()) throw InputError("profile needs at least one alternative");
  if (criteria_.empty()) throw InputError("profile needs at least one criterion");
  for (const auto& c : criteria_) {
    if (c.weight < 1) {
      throw InputError(fmt::format("criterion '{}' has weight {}; weights must be >= 1",
                                   c.name, c.weight));
    }
    if (!(c.ranking.alternatives() == alternatives_)) {
      throw InputError(
          fmt::format("criterion '{}' ranks a different alternative set", c.name));
    }
    total_weight_ += c.weight;
  }
}

}  // namespace rankagg
