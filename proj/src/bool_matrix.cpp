#include "edsm/bool_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace edsm::linalg {

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("BoolMatrix: dimensions must be >= 1");
  bits_.assign(rows_ * wpr_, 0);
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("BoolMatrix: no rows");
  BoolMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("BoolMatrix: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (rows[r][c] == '1') {
        m.set(r, c);
      } else if (rows[r][c] != '0') {
        throw std::invalid_argument("BoolMatrix: expected '0' or '1'");
      }
    }
  }
  return m;
}

std::vector<std::string> BoolMatrix::to_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out[r][c] = '1';
    }
  }
  return out;
}

namespace {

void check_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("bool_multiply: inner dimensions differ (" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + ")");
  }
}

// c.row(r) |= OR of b.row(k) over set bits k of a.row(r) within [k_lo, k_hi).
void or_rows(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& c, std::size_t r, std::size_t k_lo,
             std::size_t k_hi) {
  auto out = c.row(r);
  const auto in = a.row(r);
  for (std::size_t w = k_lo >> 6; w < in.size() && (w << 6) < k_hi; ++w) {
    std::uint64_t word = in[w];
    if (!word) continue;
    const std::size_t base = w << 6;
    if (base < k_lo) word &= ~std::uint64_t{0} << (k_lo - base);
    if (base + 64 > k_hi) word &= (k_hi - base) >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (k_hi - base)) - 1;
    while (word) {
      const std::size_t k = base + static_cast<std::size_t>(__builtin_ctzll(word));
      word &= word - 1;
      const auto src = b.row(k);
      for (std::size_t x = 0; x < out.size(); ++x) out[x] |= src[x];
    }
  }
}

}  // namespace

BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b) {
  check_product(a, b);
  BoolMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    or_rows(a, b, c, static_cast<std::size_t>(r), 0, a.cols());
  }
  return c;
}

BoolMatrix bool_multiply_serial(const BoolMatrix& a, const BoolMatrix& b) {
  check_product(a, b);
  BoolMatrix c(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) or_rows(a, b, c, r, 0, a.cols());
  return c;
}

BoolMatrix rect_multiply(const BoolMatrix& a, const BoolMatrix& b) {
  check_product(a, b);
  const std::size_t n = a.rows();
  const std::size_t np = b.cols();
  if (a.cols() != n) throw std::invalid_argument("rect_multiply: left matrix must be square");
  if (np > n) throw std::invalid_argument("rect_multiply: requires N >= N'");
  BoolMatrix c(n, np);
  const std::size_t blocks = (n + np - 1) / np;
  const auto nb = static_cast<std::ptrdiff_t>(blocks);
  // Block row I of C is the OR over K of A[I,K] x B[K]; B has one block column.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t bi = 0; bi < nb; ++bi) {
    const std::size_t r_lo = static_cast<std::size_t>(bi) * np;
    const std::size_t r_hi = std::min(n, r_lo + np);
    for (std::size_t bk = 0; bk < blocks; ++bk) {
      const std::size_t k_lo = bk * np;
      const std::size_t k_hi = std::min(n, k_lo + np);
      for (std::size_t r = r_lo; r < r_hi; ++r) or_rows(a, b, c, r, k_lo, k_hi);
    }
  }
  return c;
}

namespace {

template <typename ForEachOne>
std::vector<BitVector> matvec_impl(std::size_t rows, std::size_t cols, const std::vector<BitVector>& vectors,
                                   std::size_t z, ForEachOne&& for_each_one,
                                   const BoolMatrix* dense) {
  for (const auto& v : vectors) {
    if (v.size() != cols) throw std::invalid_argument("bool_matvec_batch: vector length mismatch");
  }
  std::vector<BitVector> out;
  out.reserve(vectors.size());
  if (vectors.empty()) return out;
  if (z == 0) throw std::invalid_argument("bool_matvec_batch: z must be >= 1");

  if (vectors.size() < z) {
    for (const auto& u : vectors) {
      BitVector v(rows);
      for_each_one([&](std::size_t r, std::size_t c) {
        if (u.test(c + 1)) v.set(r + 1);
      });
      out.push_back(std::move(v));
    }
    return out;
  }

  BoolMatrix m_local = dense ? BoolMatrix(1, 1) : BoolMatrix(rows, cols);
  if (!dense) for_each_one([&](std::size_t r, std::size_t c) { m_local.set(r, c); });
  const BoolMatrix& m = dense ? *dense : m_local;
  // rect_multiply wants a square left factor and z columns on the right.
  const std::size_t n = std::max(rows, cols);
  const bool square = rows == cols;
  BoolMatrix sq = square ? BoolMatrix(1, 1) : BoolMatrix(n, n);
  if (!square) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (m.get(r, c)) sq.set(r, c);
      }
    }
  }
  const BoolMatrix& left = square ? m : sq;
  const std::size_t width = std::min(z, n);
  for (std::size_t g = 0; g < vectors.size(); g += width) {
    BoolMatrix cols_m(n, width);
    const std::size_t take = std::min(width, vectors.size() - g);
    for (std::size_t t = 0; t < take; ++t) {
      vectors[g + t].for_each_set([&](std::size_t c) { cols_m.set(c - 1, t); });
    }
    const BoolMatrix prod = rect_multiply(left, cols_m);
    for (std::size_t t = 0; t < take; ++t) {
      BitVector v(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        if (prod.get(r, t)) v.set(r + 1);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

std::vector<BitVector> bool_matvec_batch(const BoolMatrix& m, const std::vector<BitVector>& vectors,
                                         std::size_t z) {
  auto each = [&m](auto&& f) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto row = m.row(r);
      for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t word = row[w];
        while (word) {
          f(r, w * 64 + static_cast<std::size_t>(__builtin_ctzll(word)));
          word &= word - 1;
        }
      }
    }
  };
  return matvec_impl(m.rows(), m.cols(), vectors, z, each, &m);
}

std::vector<BitVector> bool_matvec_batch(const SparseBoolMatrix& m, const std::vector<BitVector>& vectors,
                                         std::size_t z) {
  if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("bool_matvec_batch: empty matrix");
  for (const auto& [r, c] : m.ones) {
    if (r >= m.rows || c >= m.cols) throw std::out_of_range("bool_matvec_batch: entry outside matrix");
  }
  auto each = [&m](auto&& f) {
    for (const auto& [r, c] : m.ones) f(r, c);
  };
  return matvec_impl(m.rows, m.cols, vectors, z, each, nullptr);
}

}  // namespace edsm::linalg
