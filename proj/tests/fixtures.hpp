#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rankagg/core.hpp"
#include "rankagg/majority.hpp"

namespace fixtures {

using namespace rankagg;

inline const std::filesystem::path kDataDir = RANKAGG_DATA_DIR;

inline AlternativeSet names(std::initializer_list<const char*> list) {
  return AlternativeSet(std::vector<std::string>(list.begin(), list.end()));
}

inline Ranking ranking(const AlternativeSet& alts, std::vector<int> ranks,
                       RankScheme scheme = RankScheme::dense) {
  return Ranking(alts, std::move(ranks), scheme);
}

/// Three unit-weight criteria over x1..x5:
/// x1>x2>x3>x4>x5, x4>x5>x2>x3>x1 and x5>x3>x1>x2>x4.
inline Profile toy_profile() {
  const auto alts = names({"x1", "x2", "x3", "x4", "x5"});
  return Profile(alts, {{"f1", 1, ranking(alts, {1, 2, 3, 4, 5})},
                        {"f2", 1, ranking(alts, {5, 3, 4, 1, 2})},
                        {"f3", 1, ranking(alts, {3, 4, 2, 5, 1})}});
}

/// Published majority matrix of the five-alternative example.
inline Matrix<std::uint8_t> toy_matrix() {
  const int rows[5][5] = {{0, 1, 0, 1, 0},
                          {0, 0, 1, 1, 0},
                          {1, 0, 0, 1, 0},
                          {0, 0, 0, 0, 1},
                          {1, 1, 1, 0, 0}};
  Matrix<std::uint8_t> m(5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = static_cast<std::uint8_t>(rows[i][j]);
  }
  return m;
}

inline MajorityStructure toy() {
  return MajorityStructure::from_beats(names({"x1", "x2", "x3", "x4", "x5"}), toy_matrix());
}

/// a -> b -> c with a -> c.
inline MajorityStructure chain3() {
  Matrix<std::uint8_t> m(3);
  m(0, 1) = m(1, 2) = m(0, 2) = 1;
  return MajorityStructure::from_beats(names({"a", "b", "c"}), m);
}

inline MajorityStructure chain(std::size_t n) {
  std::vector<std::string> labels;
  Matrix<std::uint8_t> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = 1;
  }
  return MajorityStructure::from_beats(AlternativeSet(labels), m);
}

/// a -> b -> c -> a.
inline MajorityStructure cycle3() {
  Matrix<std::uint8_t> m(3);
  m(0, 1) = m(1, 2) = m(2, 0) = 1;
  return MajorityStructure::from_beats(names({"a", "b", "c"}), m);
}

inline MajorityStructure all_tied(std::size_t n) {
  std::vector<std::string> labels;
  Matrix<std::uint8_t> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("t" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) t(i, j) = i != j;
  }
  return MajorityStructure(AlternativeSet(labels), Matrix<std::uint8_t>(n), t);
}

inline IndexSet everyone(const MajorityStructure& ms) { return ms.alternatives().all(); }

}  // namespace fixtures
