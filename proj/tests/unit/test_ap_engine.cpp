#include <doctest.h>

#include <cmath>

#include "../ap_generators.hpp"
#include "edsm/ap_engine.hpp"
#include "edsm/oracles.hpp"

using namespace edsm;
using namespace edsm::ap;
using namespace testing_support;
using stringology::TypeLabel;

namespace {

std::vector<std::string_view> views(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("golden AP instance") {
  const BitVector u = BitVector::from_string("01000100000");
  const std::vector<std::string> s{"", "ab", "abb", "ba", "baba"};
  CHECK(solve_ap(Pattern("ababbababab"), u, s).to_string() == "01011101010");
  CHECK(oracle::brute_ap("ababbababab", u, s).to_string() == "01011101010");
}

TEST_CASE("length classes") {
  CHECK(default_cutoff(16) == 64);
  CHECK(default_cutoff(8) == 27);
  CHECK(default_cutoff(2) == 23);
  for (std::size_t len = 24; len <= 5000; ++len) {
    const auto [k, ell] = class_of_length(len);
    // (19/18)^k <= len < (19/18)^(k+1)
    CHECK(std::pow(19.0 / 18.0, k) <= len * (1 + 1e-12));
    CHECK(len < std::pow(19.0 / 18.0, k + 1) * (1 + 1e-12));
    CHECK(8 * len >= 9 * ell);
    CHECK(4 * len < 5 * ell);
    CHECK(ell == static_cast<std::size_t>(std::ceil(0.8 * std::pow(19.0 / 18.0, k + 1) - 1e-9)));
  }
}

TEST_CASE("partition_classes covers every string once") {
  std::vector<std::string> s;
  for (std::size_t len = 24; len <= 100; ++len) s.push_back(std::string(len, 'a'));
  const auto classes = partition_classes(views(s), 100);
  std::vector<int> seen(s.size(), 0);
  for (const auto& c : classes) {
    for (auto i : c.members) {
      ++seen[i];
      CHECK(8 * s[i].size() >= 9 * c.ell);
      CHECK(4 * s[i].size() < 5 * c.ell);
    }
  }
  for (int x : seen) CHECK(x == 1);
  CHECK_THROWS_AS(partition_classes({std::string_view("abc")}, 100), std::invalid_argument);
}

TEST_CASE("routing is exhaustive and exclusive") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    const std::size_t m = uniform(rng, 30, 200);
    std::vector<std::string> s;
    for (int k = 0; k < 12; ++k) s.push_back(random_string(rng, uniform(rng, 0, m + 20), "ab"));
    s.push_back(std::string(uniform(rng, 24, m), 'a'));
    const auto routes = route_strings(views(s), m, 23);
    REQUIRE(routes.size() == s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      const std::size_t len = s[k].size();
      if (len == 0) CHECK(routes[k] == Route::Epsilon);
      else if (len > m) CHECK(routes[k] == Route::Discarded);
      else if (len <= 23) CHECK(routes[k] == Route::Naive);
      else CHECK((routes[k] == Route::Type1 || routes[k] == Route::Type2 || routes[k] == Route::Type3));
    }
  }
}

TEST_CASE("batch width") {
  CHECK(batch_width(32, 256) == 1);
  CHECK(batch_width(600, 256) == 1);
  CHECK(batch_width(1000, 8) == 37);
  CHECK(batch_width(8, 2) == 8);
  CHECK(batch_width(8, 1) == 8);
}

TEST_CASE("naive_short agrees with the oracle") {
  Rng rng(11);
  for (int it = 0; it < 500; ++it) {
    const std::string p = random_string(rng, uniform(rng, 1, 40), "ab");
    const PatternIndex idx(p);
    std::vector<std::string> s;
    for (int k = 0; k < 8; ++k) s.push_back(random_string(rng, uniform(rng, 1, 6), "ab"));
    const BitVector u = random_bits(rng, p.size(), 0.3);
    CHECK(naive_short(idx, u, views(s), 6) == oracle::brute_ap(p, u, s));
  }
}

TEST_CASE("typed solvers agree with the oracle") {
  Rng rng(12345);
  for (std::size_t ell : {32, 64}) {
    for (auto type : {TypeLabel::Type1, TypeLabel::Type2, TypeLabel::Type3}) {
      CAPTURE(ell);
      CAPTURE(stringology::to_string(type));
      for (int it = 0; it < 60; ++it) {
        const auto inst = typed_instance(rng, type, ell, 200);
        if (inst.members.empty()) continue;
        const PatternIndex idx(inst.pattern);
        BitVector got;
        if (type == TypeLabel::Type1) got = solve_type1(idx, inst.u, views(inst.members), ell);
        if (type == TypeLabel::Type2) got = solve_type2(idx, inst.u, views(inst.members), ell);
        if (type == TypeLabel::Type3) got = solve_type3(idx, inst.u, views(inst.members), ell);
        const BitVector want = oracle::brute_ap(inst.pattern, inst.u, inst.members);
        CAPTURE(inst.pattern);
        CHECK(got.to_string() == want.to_string());
      }
    }
  }
}

TEST_CASE("solvers reject members of the wrong type") {
  const std::string p(100, 'a');
  const PatternIndex idx(p);
  const std::vector<std::string> s{std::string(36, 'a')};
  CHECK_THROWS_AS(solve_type1(idx, BitVector(100), views(s), 32), std::invalid_argument);
  CHECK_THROWS_AS(solve_type2(idx, BitVector(100), views(s), 32), std::invalid_argument);
  CHECK_NOTHROW(solve_type3(idx, BitVector(100), views(s), 32));
}

TEST_CASE("master property: solve_ap against brute force") {
  Rng rng(99);
  for (int it = 0; it < 10000; ++it) {
    const std::size_t m = uniform(rng, 1, 128);
    std::vector<std::string> roots;
    const std::string p = coin(rng, 0.5) ? random_string(rng, m, "ab") : mixed_pattern(rng, m, 32, roots);
    std::vector<std::string> s;
    const std::size_t count = uniform(rng, 1, 16);
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t len = uniform(rng, 0, std::min<std::size_t>(m + 4, 90));
      if (len <= m && coin(rng, 0.6)) {
        s.push_back(p.substr(uniform(rng, 0, m - len), len));
      } else if (!roots.empty() && coin(rng, 0.5)) {
        s.push_back(periodic_from(roots.front(), uniform(rng, 0, roots.front().size() - 1), len));
      } else {
        s.push_back(random_string(rng, len, "ab"));
      }
    }
    const BitVector u = random_bits(rng, m, 0.3);
    ApOptions opts;
    opts.naive_cutoff = 23;
    const BitVector got = solve_ap(Pattern(p), u, s, opts);
    const BitVector want = oracle::brute_ap(p, u, s);
    if (!(got == want)) {
      CAPTURE(p);
      CAPTURE(u.to_string());
      FAIL_CHECK("mismatch");
      break;
    }
  }
}

TEST_CASE("type-1 anchors hit every member within the selection bound") {
  Rng rng(5);
  for (std::size_t ell : {32, 64}) {
    for (int it = 0; it < 60; ++it) {
      auto inst = typed_instance(rng, TypeLabel::Type1, ell);
      if (inst.members.empty()) continue;
      const PatternIndex idx(inst.pattern);
      const auto anchors = select_type1_anchors(idx, views(inst.members), ell);
      CHECK(anchors.every_member_hit);
      if (anchors.members_kept == 0) continue;
      const double m = static_cast<double>(inst.pattern.size());
      CHECK(static_cast<double>(anchors.total_occurrences) <=
            4.0 * (m / (ell / 8.0)) * std::log(4.0 * static_cast<double>(anchors.members_kept)) + 1e-9);
      for (auto start : anchors.starts) CHECK(start + ell <= inst.pattern.size());
    }
  }
}

TEST_CASE("type-2 anchors flank maximal runs") {
  Rng rng(8);
  for (int it = 0; it < 100; ++it) {
    const std::size_t ell = 32;
    auto inst = typed_instance(rng, TypeLabel::Type2, ell);
    if (inst.members.empty()) continue;
    const auto anchors = type2_anchor_strings(views(inst.members), ell);
    CHECK(!anchors.empty());
    for (const auto& h : anchors) {
      REQUIRE(h.size() == ell + 1);
      // Either the first ell letters are ell-periodic and the last letter
      // breaks the period, or symmetrically on the left.
      const std::size_t pl = stringology::period(std::string_view(h).substr(0, ell));
      const std::size_t pr = stringology::period(std::string_view(h).substr(1));
      const bool right_flank = 4 * pl <= ell && h[ell] != h[ell - pl];
      const bool left_flank = 4 * pr <= ell && h[0] != h[pr];
      CHECK((right_flank || left_flank));
    }
  }
}

TEST_CASE("simple instance matches its definition") {
  Rng rng(21);
  for (int it = 0; it < 300; ++it) {
    const std::size_t m = uniform(rng, 40, 120), ell = 16;
    const BitVector u = random_bits(rng, m, 0.4);
    std::vector<std::size_t> reds;
    for (std::size_t k = 0; k < uniform(rng, 0, 20); ++k) reds.push_back(uniform(rng, 1, m));
    std::sort(reds.begin(), reds.end());
    reds.erase(std::unique(reds.begin(), reds.end()), reds.end());
    std::vector<BluePair> blues;
    for (std::size_t k = 0; k < uniform(rng, 1, 5); ++k) {
      const std::size_t len = uniform(rng, 18, 19);
      blues.push_back({len, uniform(rng, 1, len - ell + 1)});
    }
    BitVector want(m);
    for (auto i : reds)
      for (const auto& b : blues) {
        const auto src = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(b.j);
        const auto dst = static_cast<std::ptrdiff_t>(i + b.length) - static_cast<std::ptrdiff_t>(b.j);
        if (u.test_or_zero(src) && dst >= 1 && dst <= static_cast<std::ptrdiff_t>(m)) want.set(dst);
      }
    for (std::size_t z : {1, 2, 5, 40}) {
      BitVector got(m);
      apply_simple_instance(u, reds, blues, ell, z, got);
      CHECK(got == want);
    }
  }
}

TEST_CASE("periodic run bookkeeping, exhaustive on small roots") {
  // P = x run y with the run following root R from phase phi.
  const std::vector<std::string> roots{"a", "ab", "aab", "abb"};
  for (const auto& root : roots) {
    const std::size_t r = root.size();
    for (std::size_t phi = 0; phi < r; ++phi) {
      for (std::size_t run_len = r; run_len <= 8 * r; ++run_len) {
        const std::string run = periodic_from(root, phi, run_len);
        const std::string p = "x" + run + "y";
        const std::size_t a = 2, b = a + run_len - 1;
        std::vector<std::string> members;
        std::vector<RootTriple> triples;
        for (std::size_t psi = 0; psi < r; ++psi)
          for (std::size_t len = r - psi + 1; len <= run_len; ++len) {
            members.push_back(periodic_from(root, psi, len));
            triples.push_back(root_triple(psi, len, r));
          }
        BitVector u(p.size());
        for (std::size_t i = 1; i <= p.size(); i += 2) u.set(i);
        u.set(1);
        const BitVector want = oracle::brute_ap(p, u, members);
        for (std::size_t limit : {std::size_t{0}, std::size_t{1000}}) {
          BitVector got(p.size());
          apply_periodic_run(u, a, b, r, phi, triples, got, limit);
          // Only positions strictly inside the run can be produced here.
          BitVector restricted(p.size());
          want.for_each_set([&](std::size_t e) {
            if (e >= a && e <= b) restricted.set(e);
          });
          CAPTURE(root);
          CAPTURE(phi);
          CAPTURE(run_len);
          CAPTURE(limit);
          CHECK(got.to_string() == restricted.to_string());
        }
      }
    }
  }
}

TEST_CASE("root triple decomposition") {
  const std::string root = "abcde";
  for (std::size_t r = 1; r <= 5; ++r) {
    const std::string rr = root.substr(0, r);
    for (std::size_t psi = 0; psi < r; ++psi) {
      CHECK_THROWS_AS(root_triple(psi, r - psi, r), std::invalid_argument);
      for (std::size_t len = r - psi + 1; len <= 30; ++len) {
        const auto t = root_triple(psi, len, r);
        CHECK(t.i == psi + 1);
        REQUIRE(t.j >= 1);
        REQUIRE(t.j <= r);
        std::string rebuilt = rr.substr(t.i - 1);
        for (std::size_t k = 0; k < t.beta; ++k) rebuilt += rr;
        rebuilt += rr.substr(0, t.j);
        CHECK(rebuilt == periodic_from(rr, psi, len));
      }
    }
  }
}
