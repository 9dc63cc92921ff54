#include "edsm/poly_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace edsm::linalg {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t degree)
    : rows_(rows), cols_(cols), deg_(degree) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("PolyMatrix: dimensions must be >= 1");
  data_.assign(rows * cols * (degree + 1), 0);
}

void PolyMatrix::set_coef(std::size_t r, std::size_t c, std::size_t k, std::int64_t v) {
  if (r >= rows_ || c >= cols_ || k > deg_) throw std::out_of_range("PolyMatrix: index out of range");
  if (v < 0) throw std::invalid_argument("PolyMatrix: coefficients must be non-negative");
  data_[index(r, c) + k] = v;
}

std::int64_t PolyMatrix::max_coef() const {
  std::int64_t m = 0;
  for (auto v : data_) m = std::max(m, v);
  return m;
}

namespace {

constexpr std::uint64_t kMod = kNttModulus;
constexpr std::uint64_t kRoot = 3;

std::uint64_t power(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kMod;
  while (e) {
    if (e & 1) r = r * b % kMod;
    b = b * b % kMod;
    e >>= 1;
  }
  return r;
}

void check_dims(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("poly_multiply: inner dimensions differ");
}

}  // namespace

void ntt(std::vector<std::uint32_t>& a, bool invert) {
  const std::size_t n = a.size();
  if (!std::has_single_bit(n)) throw std::invalid_argument("ntt: length must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = power(kRoot, (kMod - 1) / len);
    if (invert) w = power(w, kMod - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wn = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::uint64_t u = a[i + j];
        const std::uint64_t v = a[i + j + len / 2] * wn % kMod;
        a[i + j] = static_cast<std::uint32_t>((u + v) % kMod);
        a[i + j + len / 2] = static_cast<std::uint32_t>((u + kMod - v) % kMod);
        wn = wn * w % kMod;
      }
    }
  }
  if (invert) {
    const std::uint64_t inv = power(n, kMod - 2);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * inv % kMod);
  }
}

PolyMatrix poly_multiply(const PolyMatrix& a, const PolyMatrix& b) {
  check_dims(a, b);
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
  const std::size_t da = a.degree(), db = b.degree();
  // Largest possible output coefficient.
  const long double bound = static_cast<long double>(inner) * static_cast<long double>(std::min(da, db) + 1) *
                            static_cast<long double>(a.max_coef()) * static_cast<long double>(b.max_coef());
  if (bound >= static_cast<long double>(kMod)) {
    throw std::overflow_error("poly_multiply: coefficient bound " + std::to_string(static_cast<double>(bound)) +
                              " reaches the transform modulus");
  }
  const std::size_t len = std::bit_ceil(da + db + 1);

  auto transform = [len](const PolyMatrix& m) {
    const std::size_t entries = m.rows() * m.cols();
    std::vector<std::vector<std::uint32_t>> out(entries);
    const auto ne = static_cast<std::ptrdiff_t>(entries);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t e = 0; e < ne; ++e) {
      const std::size_t r = static_cast<std::size_t>(e) / m.cols(), c = static_cast<std::size_t>(e) % m.cols();
      std::vector<std::uint32_t> v(len, 0);
      const auto src = m.entry(r, c);
      for (std::size_t k = 0; k < src.size(); ++k) v[k] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(src[k]) % kMod);
      ntt(v, false);
      out[static_cast<std::size_t>(e)] = std::move(v);
    }
    return out;
  };
  const auto fa = transform(a);
  const auto fb = transform(b);

  std::vector<std::vector<std::uint32_t>> fc(rows * cols, std::vector<std::uint32_t>(len, 0));
  const auto points = static_cast<std::ptrdiff_t>(len);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < points; ++t) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t k = 0; k < inner; ++k) {
        const std::uint64_t x = fa[r * inner + k][t];
        if (!x) continue;
        for (std::size_t c = 0; c < cols; ++c) {
          auto& slot = fc[r * cols + c][t];
          slot = static_cast<std::uint32_t>((slot + x * fb[k * cols + c][t]) % kMod);
        }
      }
    }
  }

  PolyMatrix out(rows, cols, da + db);
  const auto ne = static_cast<std::ptrdiff_t>(rows * cols);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t e = 0; e < ne; ++e) {
    auto& v = fc[static_cast<std::size_t>(e)];
    ntt(v, true);
    const std::size_t r = static_cast<std::size_t>(e) / cols, c = static_cast<std::size_t>(e) % cols;
    for (std::size_t k = 0; k <= da + db; ++k) {
      if (v[k]) out.set_coef(r, c, k, v[k]);
    }
  }
  return out;
}

PolyMatrix poly_multiply_serial(const PolyMatrix& a, const PolyMatrix& b) {
  check_dims(a, b);
  PolyMatrix out(a.rows(), b.cols(), a.degree() + b.degree());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto pa = a.entry(r, k);
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const auto pb = b.entry(k, c);
        for (std::size_t x = 0; x < pa.size(); ++x) {
          if (!pa[x]) continue;
          for (std::size_t y = 0; y < pb.size(); ++y) {
            if (pb[y]) out.add_coef(r, c, x + y, pa[x] * pb[y]);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace edsm::linalg
