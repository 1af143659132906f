#pragma once

// Tournament solutions on a majority structure, restricted to a subset, and
// the iterated select-and-exclude sorting built on them.

#include <string_view>
#include <vector>

#include "rankagg/majority.hpp"

namespace rankagg {

enum class SolutionKind {
  uncovered,       ///< UC: alternatives not covered by any other
  mes,             ///< union of minimal externally stable sets
  weak_top_cycle,  ///< WTC: minimal set dominating everything outside it
};

std::string_view to_string(SolutionKind kind);

struct SolutionSet {
  SolutionKind kind;
  IndexSet members;  ///< sorted indices into the structure
};

/// x covers y iff x beats y and L(y) is inside L(x), both within `subset`.
SolutionSet uncovered_set(const MajorityStructure& ms, const IndexSet& subset);

/// Union of all inclusion-minimal externally stable subsets of `subset`.
///
/// x belongs to some minimal externally stable set iff for some witness
/// z in {x} + L(x) the set subset \ (({z} + D(z)) \ {x}) is externally stable;
/// z then has no dominator besides x in any stable set built from it. Greedy
/// pruning in index order (never removing x) yields the minimal set.
SolutionSet mes_union(const MajorityStructure& ms, const IndexSet& subset);

/// Seeded at a top Copeland-1 scorer and closed under "add anything not beaten
/// by every current member"; dominant sets form a chain, so this is the
/// minimal one.
SolutionSet weak_top_cycle(const MajorityStructure& ms, const IndexSet& subset);

SolutionSet solve(const MajorityStructure& ms, SolutionKind kind, const IndexSet& subset);

/// Ordered partition B(1), B(2), ... of the alternatives.
struct SortedClasses {
  std::vector<IndexSet> classes;

  /// Rank k for every member of the k-th class.
  Ranking to_ranking(const AlternativeSet& alternatives) const;
};

SortedClasses sort_by_solution(const MajorityStructure& ms, SolutionKind kind);

/// Every outside member of `subset` is beaten by some member of `candidate`.
bool is_externally_stable(const MajorityStructure& ms, const IndexSet& candidate,
                          const IndexSet& subset);

}  // namespace rankagg
