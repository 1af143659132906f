#include "rankagg/majority.hpp"

#include <fmt/format.h>

namespace rankagg {

MajorityStructure::MajorityStructure(AlternativeSet alternatives, Matrix<std::uint8_t> beats,
                                     Matrix<std::uint8_t> ties)
    : alternatives_(std::move(alternatives)), m_(std::move(beats)), t_(std::move(ties)) {
  const std::size_t n = alternatives_.size();
  if (m_.size() != n || t_.size() != n) {
    throw InputError("majority matrices do not match the alternative set");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (m_(x, x) != 0 || t_(x, x) != 0) {
      throw InputError(fmt::format("non-zero diagonal at '{}'", alternatives_[x]));
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (m_(x, y) > 1 || t_(x, y) > 1) throw InputError("majority matrices must be 0/1");
      if (t_(x, y) != t_(y, x)) throw InputError("tie matrix must be symmetric");
      if (m_(x, y) + m_(y, x) + t_(x, y) != 1) {
        throw InputError(fmt::format("pair ('{}', '{}') violates trichotomy",
                                     alternatives_[x], alternatives_[y]));
      }
    }
  }
}

MajorityStructure MajorityStructure::from_beats(AlternativeSet alternatives,
                                                Matrix<std::uint8_t> beats) {
  const std::size_t n = beats.size();
  Matrix<std::uint8_t> ties(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && !beats(x, y) && !beats(y, x)) ties(x, y) = 1;
    }
  }
  return MajorityStructure(std::move(alternatives), std::move(beats), std::move(ties));
}

MajorityStructure MajorityStructure::restricted(const IndexSet& subset) const {
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (auto i : subset) names.push_back(alternatives_[i]);
  Matrix<std::uint8_t> m(subset.size());
  Matrix<std::uint8_t> t(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      m(a, b) = m_(subset[a], subset[b]);
      t(a, b) = t_(subset[a], subset[b]);
    }
  }
  return MajorityStructure(AlternativeSet(std::move(names)), std::move(m), std::move(t));
}

MajorityStructure build_majority(const Profile& profile) {
  const std::size_t n = profile.size();
  // margin(x, y) = votes for x over y minus votes for y over x
  Matrix<long> margin(n);
  for (const auto& criterion : profile.criteria()) {
    auto ranks = criterion.ranking.ranks();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (ranks[x] < ranks[y]) {
          margin(x, y) += criterion.weight;
          margin(y, x) -= criterion.weight;
        } else if (ranks[y] < ranks[x]) {
          margin(y, x) += criterion.weight;
          margin(x, y) -= criterion.weight;
        }
      }
    }
  }
  Matrix<std::uint8_t> m(n);
  Matrix<std::uint8_t> t(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (margin(x, y) > 0) m(x, y) = 1;
      if (margin(x, y) == 0) t(x, y) = 1;
    }
  }
  return MajorityStructure(profile.alternatives(), std::move(m), std::move(t));
}

Sections sections(const MajorityStructure& ms, std::size_t x) {
  if (x >= ms.size()) throw InputError("alternative index out of range");
  Sections s;
  for (std::size_t y = 0; y < ms.size(); ++y) {
    if (ms.beats(x, y)) s.lower.push_back(y);
    if (ms.beats(y, x)) s.upper.push_back(y);
    if (ms.tied(x, y)) s.horizon.push_back(y);
  }
  return s;
}

Sections sections(const MajorityStructure& ms, std::string_view x) {
  return sections(ms, ms.alternatives().index_of(x));
}

namespace {

Matrix<std::int64_t> multiply(const Matrix<std::int64_t>& a, const Matrix<std::int64_t>& b) {
  const std::size_t n = a.size();
  Matrix<std::int64_t> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

}  // namespace

std::int64_t count_cycles(const MajorityStructure& ms, int k) {
  if (k < 3 || k > 5) {
    throw InputError(fmt::format("cycle length {} not supported; use 3, 4 or 5", k));
  }
  const std::size_t n = ms.size();
  Matrix<std::int64_t> base(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) base(i, j) = ms.beats(i, j) ? 1 : 0;
  }
  // Closed walks of length <= 5 in an asymmetric digraph are simple cycles,
  // each counted once per starting vertex.
  Matrix<std::int64_t> power = base;
  for (int step = 1; step < k; ++step) power = multiply(power, base);
  std::int64_t trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += power(i, i);
  return trace / k;
}

}  // namespace rankagg
