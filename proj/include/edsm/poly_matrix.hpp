#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace edsm::linalg {

/// rows x cols matrix of polynomials with non-negative integer coefficients
/// and a shared degree bound.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t degree);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t degree() const { return deg_; }

  std::int64_t coef(std::size_t r, std::size_t c, std::size_t k) const { return data_[index(r, c) + k]; }
  void set_coef(std::size_t r, std::size_t c, std::size_t k, std::int64_t v);
  void add_coef(std::size_t r, std::size_t c, std::size_t k, std::int64_t v) {
    set_coef(r, c, k, coef(r, c, k) + v);
  }
  std::span<const std::int64_t> entry(std::size_t r, std::size_t c) const {
    return {data_.data() + index(r, c), deg_ + 1};
  }
  std::int64_t max_coef() const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t index(std::size_t r, std::size_t c) const { return (r * cols_ + c) * (deg_ + 1); }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t deg_;
  std::vector<std::int64_t> data_;
};

/// Exact product via NTT mod 998244353: transform every entry, multiply the
/// matrices pointwise (OpenMP over evaluation points), transform back.
/// Throws if an output coefficient could reach the modulus.
PolyMatrix poly_multiply(const PolyMatrix& a, const PolyMatrix& b);
/// Schoolbook reference, single-threaded.
PolyMatrix poly_multiply_serial(const PolyMatrix& a, const PolyMatrix& b);

/// In-place NTT of a power-of-two length vector (values < modulus).
void ntt(std::vector<std::uint32_t>& a, bool invert);
inline constexpr std::uint32_t kNttModulus = 998244353;

}  // namespace edsm::linalg
