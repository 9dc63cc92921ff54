#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edsm/bitvector.hpp"

namespace edsm::linalg {

/// Row-major bit-packed Boolean matrix, 0-based indices.
class BoolMatrix {
 public:
  BoolMatrix(std::size_t rows, std::size_t cols);
  /// Rows given as '0'/'1' strings of equal length.
  static BoolMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const { return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c, bool value = true) {
    auto& w = bits_[r * wpr_ + (c >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    w = value ? (w | mask) : (w & ~mask);
  }
  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * wpr_, wpr_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {bits_.data() + r * wpr_, wpr_}; }

  bool operator==(const BoolMatrix&) const = default;
  std::vector<std::string> to_rows() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t wpr_;
  std::vector<std::uint64_t> bits_;
};

/// List of 1-entries of a matrix that is too sparse to store densely.
struct SparseBoolMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ones;  // (row, col), 0-based
};

/// Word-parallel product, rows distributed over OpenMP threads.
BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b);
/// Single-threaded reference of bool_multiply.
BoolMatrix bool_multiply_serial(const BoolMatrix& a, const BoolMatrix& b);

/// N x N times N x N' with N >= N', as (N/N')^2 products of N' x N' blocks.
BoolMatrix rect_multiply(const BoolMatrix& a, const BoolMatrix& b);

/// M x U_i for every vector. Fewer than z vectors: iterate over the 1s of M.
/// Otherwise groups of z vectors become the columns of an N x z matrix.
/// Vectors use the 1-based BitVector convention, so column t of M pairs
/// with bit t+1.
std::vector<BitVector> bool_matvec_batch(const BoolMatrix& m, const std::vector<BitVector>& vectors,
                                         std::size_t z);
std::vector<BitVector> bool_matvec_batch(const SparseBoolMatrix& m, const std::vector<BitVector>& vectors,
                                         std::size_t z);

}  // namespace edsm::linalg
