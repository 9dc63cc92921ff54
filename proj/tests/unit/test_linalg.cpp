#include <doctest.h>

#include "edsm/bool_matrix.hpp"
#include "edsm/dominance.hpp"
#include "edsm/oracles.hpp"
#include "edsm/poly_matrix.hpp"
#include "support.hpp"

using namespace edsm;
using namespace edsm::linalg;
using namespace testing_support;

namespace {

BoolMatrix random_bool(Rng& rng, std::size_t r, std::size_t c, double p) {
  BoolMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng, p)) m.set(i, j);
  return m;
}

PolyMatrix random_poly(Rng& rng, std::size_t r, std::size_t c, std::size_t deg, std::int64_t max) {
  PolyMatrix m(r, c, deg);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t k = 0; k <= deg; ++k) m.set_coef(i, j, k, static_cast<std::int64_t>(uniform(rng, 0, max)));
  return m;
}

}  // namespace

TEST_CASE("bool_multiply against the triple loop") {
  Rng rng(1);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t n = uniform(rng, 1, 8), k = uniform(rng, 1, 8), m = uniform(rng, 1, 8);
    const auto a = random_bool(rng, n, k, 0.4), b = random_bool(rng, k, m, 0.4);
    const auto want = oracle::naive_bool_multiply(a, b);
    CHECK(bool_multiply(a, b) == want);
    CHECK(bool_multiply_serial(a, b) == want);
  }
  for (int it = 0; it < 20; ++it) {
    const std::size_t n = uniform(rng, 60, 140);
    const auto a = random_bool(rng, n, n, 0.1), b = random_bool(rng, n, n, 0.1);
    CHECK(bool_multiply(a, b) == oracle::naive_bool_multiply(a, b));
  }
  CHECK_THROWS_AS(bool_multiply(BoolMatrix(2, 3), BoolMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(BoolMatrix(0, 3), std::invalid_argument);
}

TEST_CASE("rect_multiply and matvec batches") {
  Rng rng(2);
  for (int it = 0; it < 500; ++it) {
    const std::size_t n = uniform(rng, 1, 32), np = uniform(rng, 1, n);
    const auto a = random_bool(rng, n, n, 0.3), b = random_bool(rng, n, np, 0.3);
    CHECK(rect_multiply(a, b) == oracle::naive_bool_multiply(a, b));

    std::vector<BitVector> vs;
    for (std::size_t k = 0; k < uniform(rng, 0, 40); ++k) vs.push_back(random_bits(rng, n, 0.3));
    SparseBoolMatrix sp{n, n, {}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a.get(i, j)) sp.ones.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    const std::size_t z = uniform(rng, 1, 12);
    const auto dense = bool_matvec_batch(a, vs, z);
    const auto sparse = bool_matvec_batch(sp, vs, z);
    REQUIRE(dense.size() == vs.size());
    REQUIRE(sparse.size() == vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const auto want = oracle::naive_matvec(a, vs[k]);
      CHECK(dense[k] == want);
      CHECK(sparse[k] == want);
    }
  }
  CHECK_THROWS_AS(rect_multiply(BoolMatrix(2, 2), BoolMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("poly_multiply is exact") {
  Rng rng(3);
  for (int it = 0; it < 400; ++it) {
    const std::size_t n = uniform(rng, 1, 12), k = uniform(rng, 1, 12), m = uniform(rng, 1, 12);
    const auto a = random_poly(rng, n, k, uniform(rng, 0, 16), 5);
    const auto b = random_poly(rng, k, m, uniform(rng, 0, 16), 5);
    const auto want = oracle::naive_poly_multiply(a, b);
    CHECK(poly_multiply(a, b) == want);
    CHECK(poly_multiply_serial(a, b) == want);
  }
  for (int it = 0; it < 50; ++it) {
    const auto a = random_poly(rng, 3, 4, 4, 3), b = random_poly(rng, 4, 2, 3, 3), c = random_poly(rng, 2, 5, 2, 3);
    CHECK(poly_multiply(poly_multiply(a, b), c) == poly_multiply(a, poly_multiply(b, c)));
  }
  PolyMatrix big(1, 1, 0);
  big.set_coef(0, 0, 0, 1'000'000);
  CHECK_THROWS_AS(poly_multiply(big, big), std::overflow_error);
  CHECK_THROWS_AS(big.set_coef(0, 0, 0, -1), std::invalid_argument);
}

TEST_CASE("ntt round trip") {
  Rng rng(4);
  for (std::size_t len : {1, 2, 8, 64, 1024}) {
    std::vector<std::uint32_t> v(len);
    for (auto& x : v) x = static_cast<std::uint32_t>(uniform(rng, 0, kNttModulus - 1));
    auto w = v;
    ntt(w, false);
    ntt(w, true);
    CHECK(w == v);
  }
  std::vector<std::uint32_t> bad(3);
  CHECK_THROWS_AS(ntt(bad, false), std::invalid_argument);
}

TEST_CASE("dominance decomposition reports each pair once") {
  using namespace edsm::dominance;
  Rng rng(5);
  for (int it = 0; it < 300; ++it) {
    std::vector<Point> reds, blues;
    const std::size_t nr = uniform(rng, 0, 500), nb = uniform(rng, 0, 500);
    const auto range = static_cast<std::int64_t>(uniform(rng, 1, 60));
    for (std::size_t k = 0; k < nr; ++k)
      reds.push_back({static_cast<std::int64_t>(uniform(rng, 0, range)), static_cast<std::int64_t>(uniform(rng, 0, range)), k});
    for (std::size_t k = 0; k < nb; ++k)
      blues.push_back({static_cast<std::int64_t>(uniform(rng, 0, range)), static_cast<std::int64_t>(uniform(rng, 0, range)), k});
    std::vector<std::pair<std::size_t, std::size_t>> got;
    decompose(reds, blues, [&](std::span<const std::size_t> r, std::span<const std::size_t> b) {
      for (auto x : r)
        for (auto y : b) got.emplace_back(x, y);
    });
    auto want = dominating_pairs_naive(reds, blues);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}
