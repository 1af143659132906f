#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rankagg::detail {

// Fixed-width bitset sized at runtime. Only what the solution code needs.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool intersects(const Bitset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & other.words_[w]) return true;
    }
    return false;
  }

  // this & mask is a subset of other
  bool subset_within(const Bitset& mask, const Bitset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & mask.words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t size() const { return bits_; }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rankagg::detail
