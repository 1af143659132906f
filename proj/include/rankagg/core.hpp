#pragma once

// Alternatives, rankings and profiles shared by every aggregation method.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rankagg/errors.hpp"

namespace rankagg {

/// Sorted list of alternative indices; the currency for subsets.
using IndexSet = std::vector<std::size_t>;

/// Ordered set of unique alternative names. The order fixes matrix indexing.
class AlternativeSet {
 public:
  AlternativeSet() = default;
  explicit AlternativeSet(std::vector<std::string> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::string& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<std::string>& items() const { return items_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  std::size_t index_of(std::string_view name) const;

  /// Indices 0..size()-1.
  IndexSet all() const;

  bool operator==(const AlternativeSet& other) const { return items_ == other.items_; }

 private:
  std::vector<std::string> items_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// How rank integers are assigned to tied blocks.
///   dense:       1,1,2,3   (used ranks are exactly 1..K)
///   competition: 1,1,3,4   (1 + number of strictly better alternatives)
///   as_given:    any positive integers; only their order carries meaning
enum class RankScheme { dense, competition, as_given };

std::string_view to_string(RankScheme scheme);
RankScheme parse_rank_scheme(std::string_view text);

enum class Comparison { better, worse, tied };

/// Assignment of a positive rank to every alternative; smaller is better.
class Ranking {
 public:
  Ranking() = default;
  /// Validates that ranks are positive, one per alternative, and satisfy the
  /// scheme invariant.
  Ranking(AlternativeSet alternatives, std::vector<int> ranks,
          RankScheme scheme = RankScheme::dense);

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::size_t size() const { return ranks_.size(); }
  RankScheme scheme() const { return scheme_; }
  std::span<const int> ranks() const { return ranks_; }

  int rank(std::size_t i) const { return ranks_[i]; }
  int rank(std::string_view name) const { return ranks_[alternatives_.index_of(name)]; }

  /// Number of distinct positions.
  std::size_t positions() const;

  /// True if the ranks are exactly {1..K}.
  bool is_dense() const;

  /// Same order, renumbered under another scheme. Renumbering to as_given
  /// keeps the integers.
  Ranking renumbered(RankScheme scheme) const;

  /// Indices grouped by rank, best group first.
  std::vector<IndexSet> groups() const;

  bool operator==(const Ranking& other) const = default;

 private:
  AlternativeSet alternatives_;
  std::vector<int> ranks_;
  RankScheme scheme_ = RankScheme::dense;
};

struct NamedRanking {
  std::string name;
  Ranking ranking;
};

/// Ranks numbered under `scheme` for an arbitrary order key (smaller key is
/// better, equal keys tie).
std::vector<int> number_ranks(std::span<const double> keys, RankScheme scheme);

struct ScoreOptions {
  RankScheme scheme = RankScheme::dense;
  /// Round values to this many decimals before tie detection.
  std::optional<int> round_decimals;
};

/// Rank alternatives by descending score; equal scores share a rank.
Ranking from_scores(const AlternativeSet& alternatives, std::span<const double> values,
                    const ScoreOptions& options = {});

/// Map-keyed variant. Every alternative needs a finite value.
Ranking from_scores(const AlternativeSet& alternatives,
                    const std::unordered_map<std::string, double>& values,
                    const ScoreOptions& options = {});

Comparison compare(const Ranking& ranking, std::string_view a, std::string_view b);
Comparison compare(const Ranking& ranking, std::size_t a, std::size_t b);

/// One voter of the virtual electorate.
struct Criterion {
  std::string name;
  int weight = 1;
  Ranking ranking;
};

/// Weighted criteria rankings over one alternative set.
class Profile {
 public:
  Profile(AlternativeSet alternatives, std::vector<Criterion> criteria);

  const AlternativeSet& alternatives() const { return alternatives_; }
  const std::vector<Criterion>& criteria() const { return criteria_; }
  std::size_t size() const { return alternatives_.size(); }
  long total_weight() const { return total_weight_; }

 private:
  AlternativeSet alternatives_;
  std::vector<Criterion> criteria_;
  long total_weight_ = 0;
};

}  // namespace rankagg
