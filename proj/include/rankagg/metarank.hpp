#pragma once

// Ranking the rankings: each candidate ranking is described by its
// correlations with the criteria, candidates are compared by weighted
// majority over those components, and the resulting relation is condensed
// into a weak order.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankagg/correlation.hpp"

namespace rankagg {

struct CorrelationVector {
  std::string ranking_name;
  std::vector<std::pair<std::string, double>> components;  ///< criterion order
};

CorrelationVector correlation_vector(const NamedRanking& ranking,
                                     const std::vector<Criterion>& criteria, Measure measure);

/// wins(a, b): votes of criteria that correlate strictly better with a than
/// with b. majority(a, b) == 1 iff wins(a, b) > wins(b, a).
struct MetaComparison {
  std::vector<std::string> candidates;
  Matrix<std::uint8_t> majority;
  Matrix<int> wins;
  int total_weight = 0;
};

MetaComparison rankings_majority(const std::vector<CorrelationVector>& vectors,
                                 std::span<const int> weights);

MetaComparison rankings_majority(const std::vector<NamedRanking>& candidates,
                                 const std::vector<Criterion>& criteria, Measure measure);

/// Number of majority arcs a -> b with b placed before a in `order`.
std::int64_t kendall_distance(const MetaComparison& mc, std::span<const std::size_t> order);

/// Linear orders at minimum Kendall distance from the majority relation.
struct ClosestOrders {
  std::int64_t distance = 0;
  std::uint64_t count = 0;      ///< number of optimal linear orders
  Matrix<std::uint8_t> fixed;   ///< fixed(a, b): a precedes b in every optimal order
};

/// Exact subset dynamic program; throws SizeLimit beyond kMaxExactCandidates.
ClosestOrders closest_linear_orders(const MetaComparison& mc);

inline constexpr std::size_t kMaxExactCandidates = 20;

bool is_acyclic(const MetaComparison& mc);

/// Weak order of the candidates, competition-numbered.
///
/// Pairs whose order is the same in every closest linear order keep that
/// order; pairs that vary are tied, and tied blocks are merged until no two
/// blocks disagree about their relative position. For an acyclic majority
/// the fixed pairs are exactly its transitive closure.
Ranking closest_weak_order(const MetaComparison& mc);

/// Weak order induced by a strict partial order `fixed` on `labels`.
Ranking condense(const std::vector<std::string>& labels, const Matrix<std::uint8_t>& fixed);

/// Graphviz rendering of the majority digraph; arcs labelled with wins.
std::string to_dot(const MetaComparison& mc);

}  // namespace rankagg
