#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace rankagg {

/// Dense square matrix, row-major.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t row, std::size_t col) {
    assert(row < n_ && col < n_);
    return data_[row * n_ + col];
  }
  const T& operator()(std::size_t row, std::size_t col) const {
    assert(row < n_ && col < n_);
    return data_[row * n_ + col];
  }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace rankagg
