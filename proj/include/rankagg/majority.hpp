#pragma once

#include <cstdint>
#include <string_view>

#include "rankagg/core.hpp"
#include "rankagg/matrix.hpp"

namespace rankagg {

/// Weighted majority relation (M) and tie relation (T) over an alternative set.
///
/// M(x, y) == 1 iff the criteria preferring x to y carry more votes than
/// those preferring y to x; T(x, y) == 1 iff the two vote totals are equal.
/// For x != y exactly one of M(x, y), M(y, x), T(x, y) is set.
class MajorityStructure {
 public:
  MajorityStructure() = default;
  /// Validates asymmetry of M, symmetry of T, zero diagonals and trichotomy.
  MajorityStructure(AlternativeSet alternatives, Matrix<std::uint8_t> beats,
                    Matrix<std::uint8_t> ties);

  /// Builds T as the complement of M and its transpose.
  static MajorityStructure from_beats(AlternativeSet alternatives, Matrix<std::uint8_t> beats);

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::size_t size() const { return alternatives_.size(); }

  bool beats(std::size_t x, std::size_t y) const { return m_(x, y) != 0; }
  bool tied(std::size_t x, std::size_t y) const { return t_(x, y) != 0; }

  const Matrix<std::uint8_t>& majority_matrix() const { return m_; }
  const Matrix<std::uint8_t>& tie_matrix() const { return t_; }

  /// Restriction to `subset` (indices into this structure), keeping order.
  MajorityStructure restricted(const IndexSet& subset) const;

 private:
  AlternativeSet alternatives_;
  Matrix<std::uint8_t> m_;
  Matrix<std::uint8_t> t_;
};

/// Lower section L(x), upper section D(x), horizon H(x); sorted indices.
struct Sections {
  IndexSet lower;
  IndexSet upper;
  IndexSet horizon;
};

MajorityStructure build_majority(const Profile& profile);

Sections sections(const MajorityStructure& ms, std::size_t x);
Sections sections(const MajorityStructure& ms, std::string_view x);

/// Number of directed k-cycles of M, as tr(M^k)/k. Only k in {3, 4, 5}.
std::int64_t count_cycles(const MajorityStructure& ms, int k);

}  // namespace rankagg
