#include "rankagg/solutions.hpp"

#include <algorithm>
#include <limits>

#include "bitset.hpp"

namespace rankagg {

using detail::Bitset;

std::string_view to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::uncovered: return "UC";
    case SolutionKind::mes: return "MES";
    case SolutionKind::weak_top_cycle: return "WTC";
  }
  return "?";
}

namespace {

// Row bitsets of M and of its transpose over the whole structure.
struct Adjacency {
  std::vector<Bitset> lower;  // lower[x] = L(x)
  std::vector<Bitset> upper;  // upper[x] = D(x)

  explicit Adjacency(const MajorityStructure& ms)
      : lower(ms.size(), Bitset(ms.size())), upper(ms.size(), Bitset(ms.size())) {
    for (std::size_t x = 0; x < ms.size(); ++x) {
      for (std::size_t y = 0; y < ms.size(); ++y) {
        if (ms.beats(x, y)) {
          lower[x].set(y);
          upper[y].set(x);
        }
      }
    }
  }
};

IndexSet normalized(const MajorityStructure& ms, const IndexSet& subset) {
  if (subset.empty()) throw InputError("solution requested on an empty subset");
  IndexSet out = subset;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.back() >= ms.size()) throw InputError("subset index out of range");
  return out;
}

Bitset mask_of(std::size_t n, const IndexSet& members) {
  Bitset b(n);
  for (auto i : members) b.set(i);
  return b;
}

bool stable(const Adjacency& adj, const Bitset& candidate, const IndexSet& subset) {
  for (auto y : subset) {
    if (!candidate.test(y) && !adj.upper[y].intersects(candidate)) return false;
  }
  return true;
}

}  // namespace

SolutionSet uncovered_set(const MajorityStructure& ms, const IndexSet& subset_in) {
  const IndexSet subset = normalized(ms, subset_in);
  const Adjacency adj(ms);
  const Bitset within = mask_of(ms.size(), subset);
  SolutionSet out{SolutionKind::uncovered, {}};
  for (auto y : subset) {
    bool covered = false;
    for (auto x : subset) {
      if (ms.beats(x, y) && adj.lower[y].subset_within(within, adj.lower[x])) {
        covered = true;
        break;
      }
    }
    if (!covered) out.members.push_back(y);
  }
  return out;
}

bool is_externally_stable(const MajorityStructure& ms, const IndexSet& candidate,
                          const IndexSet& subset) {
  const Adjacency adj(ms);
  return stable(adj, mask_of(ms.size(), candidate), subset);
}

SolutionSet mes_union(const MajorityStructure& ms, const IndexSet& subset_in) {
  const IndexSet subset = normalized(ms, subset_in);
  const std::size_t n = ms.size();
  const Adjacency adj(ms);
  std::vector<char> in_union(n, 0);

  for (auto x : subset) {
    if (in_union[x]) continue;
    IndexSet witnesses{x};
    for (auto z : subset) {
      if (ms.beats(x, z)) witnesses.push_back(z);
    }
    for (auto z : witnesses) {
      // S0 = subset minus z and its dominators, but always keeping x.
      Bitset s0 = mask_of(n, subset);
      s0.reset(z);
      for (auto d : subset) {
        if (ms.beats(d, z)) s0.reset(d);
      }
      s0.set(x);
      if (!stable(adj, s0, subset)) continue;
      for (auto y : subset) {
        if (y == x || !s0.test(y)) continue;
        s0.reset(y);
        if (!stable(adj, s0, subset)) s0.set(y);
      }
      for (auto y : subset) {
        if (s0.test(y)) in_union[y] = 1;
      }
      break;
    }
  }

  SolutionSet out{SolutionKind::mes, {}};
  for (auto y : subset) {
    if (in_union[y]) out.members.push_back(y);
  }
  return out;
}

SolutionSet weak_top_cycle(const MajorityStructure& ms, const IndexSet& subset_in) {
  const IndexSet subset = normalized(ms, subset_in);
  const std::size_t n = ms.size();
  const Adjacency adj(ms);

  std::size_t seed = subset.front();
  long best = std::numeric_limits<long>::min();
  for (auto x : subset) {
    long score = 0;
    for (auto y : subset) score += static_cast<long>(ms.beats(x, y)) - ms.beats(y, x);
    if (score > best) {
      best = score;
      seed = x;
    }
  }

  Bitset members(n);
  members.set(seed);
  Bitset beaten_by_all = adj.lower[seed];
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto y : subset) {
      if (members.test(y) || beaten_by_all.test(y)) continue;
      members.set(y);
      beaten_by_all &= adj.lower[y];
      grew = true;
    }
  }

  SolutionSet out{SolutionKind::weak_top_cycle, {}};
  for (auto y : subset) {
    if (members.test(y)) out.members.push_back(y);
  }
  return out;
}

SolutionSet solve(const MajorityStructure& ms, SolutionKind kind, const IndexSet& subset) {
  switch (kind) {
    case SolutionKind::uncovered: return uncovered_set(ms, subset);
    case SolutionKind::mes: return mes_union(ms, subset);
    case SolutionKind::weak_top_cycle: return weak_top_cycle(ms, subset);
  }
  throw InputError("unknown solution kind");
}

Ranking SortedClasses::to_ranking(const AlternativeSet& alternatives) const {
  std::vector<int> ranks(alternatives.size(), 0);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (auto i : classes[k]) ranks[i] = static_cast<int>(k) + 1;
  }
  return Ranking(alternatives, std::move(ranks), RankScheme::dense);
}

SortedClasses sort_by_solution(const MajorityStructure& ms, SolutionKind kind) {
  SortedClasses out;
  IndexSet remaining = ms.alternatives().all();
  while (!remaining.empty()) {
    IndexSet best = solve(ms, kind, remaining).members;
    IndexSet rest;
    std::set_difference(remaining.begin(), remaining.end(), best.begin(), best.end(),
                        std::back_inserter(rest));
    out.classes.push_back(std::move(best));
    remaining = std::move(rest);
  }
  return out;
}

}  // namespace rankagg
