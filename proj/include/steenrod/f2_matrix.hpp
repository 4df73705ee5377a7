/*
   Copyright 2026 The steenrod authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef STEENROD_F2_MATRIX_HPP
#define STEENROD_F2_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "f2.hpp"

namespace steenrod {

/// Dense matrix over F2 with rows packed into 64-bit words.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

  static F2Matrix identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, F2::one());
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] F2 at(std::size_t r, std::size_t c) const {
    check(r, c);
    return F2((bits_[r * stride_ + c / 64] >> (c % 64)) & 1U);
  }

  void set(std::size_t r, std::size_t c, F2 v) {
    check(r, c);
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    auto& word = bits_[r * stride_ + c / 64];
    word = v.is_one() ? (word | mask) : (word & ~mask);
  }

  [[nodiscard]] bool is_zero() const noexcept {
    for (auto w : bits_)
      if (w != 0) return false;
    return true;
  }

  /// Rank by row reduction on a copy.
  [[nodiscard]] std::size_t rank() const {
    std::vector<std::uint64_t> m = bits_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      const std::size_t word = c / 64;
      const std::uint64_t mask = std::uint64_t{1} << (c % 64);
      std::size_t pivot = rank;
      while (pivot < rows_ && (m[pivot * stride_ + word] & mask) == 0) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != rank)
        for (std::size_t k = 0; k < stride_; ++k)
          std::swap(m[pivot * stride_ + k], m[rank * stride_ + k]);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == rank || (m[r * stride_ + word] & mask) == 0) continue;
        for (std::size_t k = 0; k < stride_; ++k) m[r * stride_ + k] ^= m[rank * stride_ + k];
      }
      ++rank;
    }
    return rank;
  }

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("F2Matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace steenrod

#endif  // STEENROD_F2_MATRIX_HPP
