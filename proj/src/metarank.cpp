#include "rankagg/metarank.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include <fmt/format.h>

namespace rankagg {

CorrelationVector correlation_vector(const NamedRanking& ranking,
                                     const std::vector<Criterion>& criteria, Measure measure) {
  CorrelationVector out{ranking.name, {}};
  out.components.reserve(criteria.size());
  for (const auto& c : criteria) {
    out.components.emplace_back(c.name, correlate(ranking.ranking, c.ranking, measure));
  }
  return out;
}

MetaComparison rankings_majority(const std::vector<CorrelationVector>& vectors,
                                 std::span<const int> weights) {
  const std::size_t n = vectors.size();
  MetaComparison mc{{}, Matrix<std::uint8_t>(n), Matrix<int>(n), 0};
  for (auto w : weights) {
    if (w < 1) throw InputError(fmt::format("criterion weight must be >= 1, got {}", w));
    mc.total_weight += w;
  }
  for (const auto& v : vectors) {
    if (v.components.size() != weights.size()) {
      throw InputError(fmt::format("'{}' has {} components for {} weights", v.ranking_name,
                                   v.components.size(), weights.size()));
    }
    mc.candidates.push_back(v.ranking_name);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int votes = 0;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (vectors[a].components[i].second > vectors[b].components[i].second) votes += weights[i];
      }
      mc.wins(a, b) = votes;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mc.majority(a, b) = mc.wins(a, b) > mc.wins(b, a);
  }
  return mc;
}

MetaComparison rankings_majority(const std::vector<NamedRanking>& candidates,
                                 const std::vector<Criterion>& criteria, Measure measure) {
  std::vector<CorrelationVector> vectors;
  vectors.reserve(candidates.size());
  for (const auto& c : candidates) vectors.push_back(correlation_vector(c, criteria, measure));
  std::vector<int> weights;
  for (const auto& c : criteria) weights.push_back(c.weight);
  return rankings_majority(vectors, weights);
}

std::int64_t kendall_distance(const MetaComparison& mc, std::span<const std::size_t> order) {
  const std::size_t n = mc.candidates.size();
  if (order.size() != n) throw InputError("order must list every candidate once");
  std::vector<std::size_t> position(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (order[p] >= n || position[order[p]] != n) {
      throw InputError("order must list every candidate once");
    }
    position[order[p]] = p;
  }
  std::int64_t d = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mc.majority(a, b) && position[b] < position[a]) ++d;
    }
  }
  return d;
}

namespace {

std::vector<std::size_t> find_cycle(const MetaComparison& mc) {
  const std::size_t n = mc.candidates.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;
  auto dfs = [&](auto&& self, std::size_t v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    for (std::size_t w = 0; w < n; ++w) {
      if (!mc.majority(v, w)) continue;
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        return true;
      }
      if (state[w] == 0 && self(self, w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (state[v] == 0 && dfs(dfs, v)) return cycle;
  }
  return {};
}

Matrix<std::uint8_t> transitive_closure(const Matrix<std::uint8_t>& rel) {
  Matrix<std::uint8_t> c = rel;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!c(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (c(k, j)) c(i, j) = 1;
      }
    }
  }
  return c;
}

}  // namespace

bool is_acyclic(const MetaComparison& mc) { return find_cycle(mc).empty(); }

ClosestOrders closest_linear_orders(const MetaComparison& mc) {
  const std::size_t n = mc.candidates.size();
  if (n > kMaxExactCandidates) {
    throw SizeLimit(fmt::format("exact closest orders limited to {} candidates, got {}",
                                kMaxExactCandidates, n));
  }
  using Mask = std::uint32_t;
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> beats(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mc.majority(a, b)) beats[a] |= Mask{1} << b;
    }
  }
  // Placing x right after prefix S reverses every arc x -> s with s in S.
  constexpr int kInf = std::numeric_limits<int>::max();
  const std::size_t states = std::size_t{1} << n;
  std::vector<int> forward(states, kInf);
  std::vector<std::uint64_t> ways(states, 0);
  forward[0] = 0;
  ways[0] = 1;
  for (Mask s = 0; s < full; ++s) {
    if (forward[s] == kInf) continue;
    for (std::size_t x = 0; x < n; ++x) {
      const Mask bit = Mask{1} << x;
      if (s & bit) continue;
      const int cost = forward[s] + std::popcount(beats[x] & s);
      const Mask t = s | bit;
      if (cost < forward[t]) {
        forward[t] = cost;
        ways[t] = ways[s];
      } else if (cost == forward[t]) {
        ways[t] += ways[s];
      }
    }
  }
  std::vector<int> backward(states, kInf);
  backward[full] = 0;
  for (Mask s = full; s-- > 0;) {
    for (std::size_t x = 0; x < n; ++x) {
      const Mask bit = Mask{1} << x;
      if (s & bit) continue;
      backward[s] = std::min(backward[s], std::popcount(beats[x] & s) + backward[s | bit]);
    }
  }

  ClosestOrders out{forward[full], ways[full], Matrix<std::uint8_t>(n)};
  // may_precede[x]: candidates that x precedes in at least one optimal order
  std::vector<Mask> may_precede(n, 0);
  for (Mask s = 1; s < full; ++s) {
    if (forward[s] == kInf || forward[s] + backward[s] != out.distance) continue;
    for (std::size_t x = 0; x < n; ++x) {
      if (s & (Mask{1} << x)) may_precede[x] |= full & ~s;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && !(may_precede[b] & (Mask{1} << a))) out.fixed(a, b) = 1;
    }
  }
  return out;
}

Ranking condense(const std::vector<std::string>& labels, const Matrix<std::uint8_t>& fixed) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!fixed(a, b) && !fixed(b, a)) parent[root(a)] = root(b);
    }
  }
  // Merge blocks that disagree about their relative order.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t a = 0; a < n && !merged; ++a) {
      for (std::size_t b = 0; b < n && !merged; ++b) {
        const std::size_t ra = root(a);
        const std::size_t rb = root(b);
        if (ra == rb || !fixed(a, b)) continue;
        for (std::size_t c = 0; c < n && !merged; ++c) {
          if (root(c) != rb) continue;
          for (std::size_t d = 0; d < n; ++d) {
            if (root(d) == ra && fixed(c, d)) {
              parent[ra] = rb;
              merged = true;
              break;
            }
          }
        }
      }
    }
  }
  // Blocks are now totally ordered; a block's position is the number of
  // candidates in blocks that precede it.
  std::vector<int> ranks(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    int better = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (root(a) == root(b)) continue;
      bool before = false;
      for (std::size_t c = 0; c < n && !before; ++c) {
        if (root(c) != root(b)) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (root(d) == root(a) && fixed(c, d)) {
            before = true;
            break;
          }
        }
      }
      better += before;
    }
    ranks[a] = better + 1;
  }
  return Ranking(AlternativeSet(labels), std::move(ranks), RankScheme::competition);
}

Ranking closest_weak_order(const MetaComparison& mc) {
  const std::size_t n = mc.candidates.size();
  if (is_acyclic(mc)) return condense(mc.candidates, transitive_closure(mc.majority));
  if (n > kMaxExactCandidates) {
    std::string names;
    for (auto v : find_cycle(mc)) names += mc.candidates[v] + " -> ";
    names += mc.candidates[find_cycle(mc).front()];
    throw SizeLimit(fmt::format(
        "majority over {} candidates is cyclic ({}); exact search supports at most {}", n, names,
        kMaxExactCandidates));
  }
  return condense(mc.candidates, closest_linear_orders(mc).fixed);
}

std::string to_dot(const MetaComparison& mc) {
  std::string out = "digraph majority {\n  rankdir=TB;\n";
  for (const auto& c : mc.candidates) out += fmt::format("  \"{}\";\n", c);
  const std::size_t n = mc.candidates.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mc.majority(a, b)) {
        out += fmt::format("  \"{}\" -> \"{}\" [label=\"{}:{}\"];\n", mc.candidates[a],
                           mc.candidates[b], mc.wins(a, b), mc.wins(b, a));
      } else if (a < b && !mc.majority(b, a)) {
        out += fmt::format("  \"{}\" -> \"{}\" [dir=none, style=dashed];\n", mc.candidates[a],
                           mc.candidates[b]);
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace rankagg
