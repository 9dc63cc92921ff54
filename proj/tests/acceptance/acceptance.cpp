// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ap_generators.hpp"
#include "instance_io.hpp"
#include "edsm/ap_engine.hpp"
#include "edsm/bool_matrix.hpp"
#include "edsm/edsm_engine.hpp"
#include "edsm/node_select.hpp"
#include "edsm/oracles.hpp"
#include "edsm/poly_matrix.hpp"
#include "edsm/reductions.hpp"
#include "edsm/stringology.hpp"
#include "support.hpp"

using namespace edsm;
using namespace testing_support;
using linalg::BoolMatrix;
using linalg::PolyMatrix;
using stringology::TypeLabel;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

BoolMatrix random_bool(Rng& rng, std::size_t r, std::size_t c, double p) {
  BoolMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng, p)) m.set(i, j);
  return m;
}

std::vector<std::string> split(const std::string& s, std::size_t w) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.size(); k += w) out.push_back(s.substr(k, w));
  return out;
}

std::vector<std::string_view> views(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

Outcome example_text() {
  const auto t0 = Clock::now();
  const auto t = parse_eds("ATGTA{A,T}C{G,T}CG{TA,TATA,}{TATGC,TTTTA}");
  const auto got = search(Pattern("GTAT"), t).positions;
  const double dt = seconds_since(t0);
  Outcome o;
  o.pass = got == std::vector<std::size_t>{2, 6, 7} && dt < 1.0;
  std::string pos;
  for (auto p : got) pos += (pos.empty() ? "" : ",") + std::to_string(p);
  o.detail = "positions {" + pos + "} in " + fmt(dt, 4) + " s";
  return o;
}

Outcome golden_ap() {
  const auto v = ap::solve_ap(Pattern("ababbababab"), BitVector::from_string("01000100000"),
                              {"", "ab", "abb", "ba", "baba"});
  return {v.to_string() == "01011101010", "V=" + v.to_string()};
}

Outcome worked_reduction() {
  const auto [a, b] = reduce::worked_bmm_example();
  auto blocks = reduce::bmm_to_ap(a, b, 3);
  const std::vector<std::pair<std::size_t, std::size_t>> order{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  const std::vector<std::set<std::string>> strings{
      {"aba", "baaa"}, {"aabaaa", "baa"}, {"aabaa", "ba"}, {"aba", "baa"}};
  const std::vector<std::string> u_top{"0100000", "1010000", "0000000", "1000000", "0000000", "0100000"};
  const std::vector<std::string> u_bottom{"0100000", "0000000", "0010000", "0100000", "1000000", "0000000"};
  const std::vector<std::vector<std::string>> v{
      {"0000100", "0000001", "0000000", "0000000", "0000000", "0000100"},
      {"0000000", "0000011", "0000000", "0000001", "0000000", "0000000"},
      {"0000000", "0000000", "0000100", "0000000", "0000010", "0000000"},
      {"0000100", "0000000", "0000010", "0000100", "0000000", "0000000"}};
  if (blocks.size() != 4) return {false, std::to_string(blocks.size()) + " blocks"};
  const ap::ApSolver solver(blocks[0].pattern);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    auto& blk = blocks[k];
    bad += std::pair{blk.K, blk.J} != order[k];
    bad += std::set<std::string>(blk.strings.begin(), blk.strings.end()) != strings[k];
    bad += split(blk.u.to_string(), 7) != (blk.K == 1 ? u_top : u_bottom);
    blk.v = solver.solve(blk.u, blk.strings);
    bad += split(blk.v->to_string(), 7) != v[k];
  }
  const auto c = reduce::reconstruct_bmm(blocks);
  const std::vector<std::string> want_c{"100100", "001011", "100010", "000101", "010000", "100000"};
  bad += c.to_rows() != want_c;
  return {bad == 0, std::to_string(bad) + " mismatching items, C row 1 = " + c.to_rows()[0]};
}

Outcome edsm_equivalence() {
  const auto t0 = Clock::now();
  Rng rng(20261015);
  std::size_t bad = 0, with_match = 0;
  for (int it = 0; it < 10000; ++it) {
    const auto t = random_eds(rng, uniform(rng, 1, 8), 4, 6, 0.2, "abc");
    const std::string p = coin(rng, 0.8) ? spelled_pattern(rng, t, 12, "abc") : random_string(rng, uniform(rng, 1, 12), "abc");
    const auto got = search(Pattern(p), t).positions;
    const auto want = oracle::brute_edsm(Pattern(p), t).positions;
    bad += got != want;
    with_match += !want.empty();
  }
  const double dt = seconds_since(t0);
  return {bad == 0 && dt < 60.0, std::to_string(bad) + "/10000 disagree (" + std::to_string(with_match) +
                                     " with matches), " + fmt(dt, 2) + " s"};
}

Outcome ap_by_type() {
  Rng rng(4242);
  std::string detail;
  bool pass = true;
  for (auto type : {TypeLabel::Type1, TypeLabel::Type2, TypeLabel::Type3}) {
    std::size_t done = 0, bad = 0;
    while (done < 1000) {
      const std::size_t ell = done % 2 ? 64 : 32;
      const auto inst = typed_instance(rng, type, ell, 256);
      if (inst.members.empty()) continue;
      const ap::PatternIndex idx(inst.pattern);
      BitVector got;
      if (type == TypeLabel::Type1) got = ap::solve_type1(idx, inst.u, views(inst.members), ell);
      if (type == TypeLabel::Type2) got = ap::solve_type2(idx, inst.u, views(inst.members), ell);
      if (type == TypeLabel::Type3) got = ap::solve_type3(idx, inst.u, views(inst.members), ell);
      bad += !(got == oracle::brute_ap(inst.pattern, inst.u, inst.members));
      ++done;
    }
    pass &= bad == 0;
    detail += std::string(detail.empty() ? "" : ", ") + stringology::to_string(type) + " " + std::to_string(bad) +
              "/1000 disagree";
  }
  return {pass, detail};
}

Outcome td_soundness() {
  Rng rng(77);
  std::size_t bad = 0, triangles = 0;
  for (int it = 0; it < 120; ++it) {
    const bool planted = it >= 100;
    const double p = planted ? 0.05 : std::vector<double>{0.05, 0.1, 0.2}[it % 3];
    reduce::TDInstance inst{random_bool(rng, 8, 8, p), random_bool(rng, 8, 8, p), random_bool(rng, 8, 8, p), 2};
    if (planted) {
      const std::size_t i = uniform(rng, 0, 7), j = uniform(rng, 0, 7), k = uniform(rng, 0, 7);
      inst.a.set(i, j);
      inst.b.set(j, k);
      inst.c.set(k, i);
    }
    const bool tri = oracle::brute_triangle(inst.a, inst.b, inst.c);
    const auto enc = reduce::td_to_edsm(inst);
    bad += !search(enc.pattern, enc.text).positions.empty() != tri;
    triangles += tri;
  }
  return {bad == 0, std::to_string(bad) + "/120 disagree, " + std::to_string(triangles) + " with a triangle"};
}

select::BipartiteInstance random_bipartite(Rng& rng, std::size_t u_count, double d) {
  const std::size_t lo = static_cast<std::size_t>(2 * d) + 1;
  const std::size_t v_count = uniform(rng, lo, std::max(lo, 4 * u_count + 8));
  std::vector<std::uint64_t> w(v_count);
  for (auto& x : w) x = uniform(rng, 1, 20);
  std::vector<std::vector<std::size_t>> adj(u_count);
  std::vector<std::size_t> all(v_count);
  for (auto& nb : adj) {
    const std::size_t deg = uniform(rng, static_cast<std::size_t>(std::floor(d)) + 1, static_cast<std::size_t>(2 * d));
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    nb.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(deg));
  }
  return select::BipartiteInstance(u_count, std::move(w), std::move(adj), d);
}

bool selection_ok(const select::BipartiteInstance& g, const select::Selection& s) {
  for (std::size_t u = 0; u < g.u_count(); ++u) {
    bool hit = false;
    for (auto v : g.neighbors(u)) hit |= std::binary_search(s.chosen.begin(), s.chosen.end(), v);
    if (!hit) return false;
  }
  std::uint64_t weight = 0;
  std::size_t incidence = 0;
  for (auto v : s.chosen) {
    weight += g.weight(v);
    incidence += g.reverse_neighbors(v).size();
  }
  const double ln = std::log(4.0 * static_cast<double>(g.u_count()));
  return static_cast<double>(weight) <= 4.0 * (static_cast<double>(g.total_weight()) / g.d()) * ln &&
         static_cast<double>(incidence) <= 8.0 * static_cast<double>(g.u_count()) * ln;
}

Outcome node_selection() {
  Rng rng(17);
  std::size_t bad = 0;
  for (int it = 0; it < 200; ++it) {
    const double d = std::vector<double>{4, 8, 16}[it % 3];
    const auto g = random_bipartite(rng, uniform(rng, 1, 100), d);
    bad += !selection_ok(g, select::solve_random(g, rng()));
    bad += !selection_ok(g, select::solve_derandomized(g));
  }
  return {bad == 0, std::to_string(bad) + "/400 selections out of bounds"};
}

std::size_t naive_period(std::string_view s) {
  for (std::size_t p = 1; p < s.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < s.size() && ok; ++i) ok = s[i] == s[i + p];
    if (ok) return p;
  }
  return s.size();
}

Outcome periodicity() {
  std::size_t fw_bad = 0, fw_checked = 0, t3_bad = 0, t3_checked = 0, run_bad = 0, runs_seen = 0;
  std::string s;
  std::vector<std::size_t> periods;
  for (std::size_t len = 1; len <= 20; ++len) {
    s.assign(len, 'a');
    for (std::uint32_t x = 0; x < (1u << len); ++x) {
      for (std::size_t k = 0; k < len; ++k) s[k] = (x >> k) & 1 ? 'b' : 'a';
      periods.clear();
      for (std::size_t p = 1; p <= len; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < len && ok; ++i) ok = s[i] == s[i + p];
        if (ok) periods.push_back(p);
      }
      for (auto p : periods) {
        for (auto q : periods) {
          if (q < p || p + q > len + 1) continue;
          ++fw_checked;
          fw_bad += !std::binary_search(periods.begin(), periods.end(), std::gcd(p, q));
        }
      }
      for (std::size_t ell : {8, 12, 16}) {
        const std::size_t lo = (9 * ell + 7) / 8, hi = (5 * ell + 3) / 4 - 1;
        if (len >= lo && len <= hi) {
          bool all_windows = true;
          for (std::size_t i = 0; i + ell <= len && all_windows; ++i)
            all_windows = 4 * naive_period(std::string_view(s).substr(i, ell)) <= ell;
          ++t3_checked;
          if (all_windows) t3_bad += 4 * periods.front() > ell;
          t3_bad += all_windows != (stringology::classify_type(s, ell) == TypeLabel::Type3);
        }
        const auto runs = stringology::all_maximal_runs(s, ell);
        runs_seen += runs.size();
        for (std::size_t a = 0; a < runs.size(); ++a) {
          const auto& r = runs[a];
          const auto body = std::string_view(s).substr(r.start - 1, r.length());
          run_bad += r.length() < ell || 4 * naive_period(body) > ell;
          for (std::size_t b = a + 1; b < runs.size(); ++b) {
            const std::size_t from = std::max(r.start, runs[b].start), to = std::min(r.end, runs[b].end);
            if (from <= to) run_bad += 2 * (to - from + 1) >= ell;
          }
        }
      }
    }
  }
  return {fw_bad + t3_bad + run_bad == 0,
          "Fine-Wilf " + std::to_string(fw_bad) + "/" + std::to_string(fw_checked) + ", type 3 " +
              std::to_string(t3_bad) + "/" + std::to_string(t3_checked) + ", runs " + std::to_string(run_bad) +
              " bad of " + std::to_string(runs_seen)};
}

Outcome linear_algebra() {
  Rng rng(9);
  std::size_t bad_mul = 0, bad_rect = 0, bad_vec = 0, bad_poly = 0;
  for (int it = 0; it < 1000; ++it) {
    const std::size_t n = uniform(rng, 1, 32);
    const auto a = random_bool(rng, n, n, 0.3), b = random_bool(rng, n, n, 0.3);
    bad_mul += !(linalg::bool_multiply(a, b) == oracle::naive_bool_multiply(a, b));

    const std::size_t np = uniform(rng, 1, n);
    const auto br = random_bool(rng, n, np, 0.3);
    bad_rect += !(linalg::rect_multiply(a, br) == oracle::naive_bool_multiply(a, br));

    std::vector<BitVector> vs;
    const std::size_t count = uniform(rng, 1, 40);
    for (std::size_t k = 0; k < count; ++k) vs.push_back(random_bits(rng, n, 0.3));
    const auto got = linalg::bool_matvec_batch(a, vs, uniform(rng, 1, 12));
    bool ok = got.size() == vs.size();
    for (std::size_t k = 0; ok && k < vs.size(); ++k) ok = got[k] == oracle::naive_matvec(a, vs[k]);
    bad_vec += !ok;

    const std::size_t r = uniform(rng, 1, 32), inner = uniform(rng, 1, 32), c = uniform(rng, 1, 32);
    const std::size_t da = uniform(rng, 0, 16), db = uniform(rng, 0, 16);
    PolyMatrix pa(r, inner, da), pb(inner, c, db);
    const std::int64_t cap = coin(rng, 0.5) ? 1 : 1000;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < inner; ++j)
        for (std::size_t k = 0; k <= da; ++k)
          if (coin(rng, 0.4)) pa.set_coef(i, j, k, static_cast<std::int64_t>(uniform(rng, 0, cap)));
    for (std::size_t i = 0; i < inner; ++i)
      for (std::size_t j = 0; j < c; ++j)
        for (std::size_t k = 0; k <= db; ++k)
          if (coin(rng, 0.4)) pb.set_coef(i, j, k, static_cast<std::int64_t>(uniform(rng, 0, cap)));
    bad_poly += !(linalg::poly_multiply(pa, pb) == oracle::naive_poly_multiply(pa, pb));
  }
  return {bad_mul + bad_rect + bad_vec + bad_poly == 0,
          "disagreements of 1000: bool " + std::to_string(bad_mul) + ", rect " + std::to_string(bad_rect) +
              ", matvec " + std::to_string(bad_vec) + ", poly " + std::to_string(bad_poly)};
}

struct Timing {
  double fast;
  double naive;
  std::size_t n_total;
  bool same;
};

// Best of three runs of each path on one generated instance.
Timing time_family(std::size_t repeat_root, std::uint64_t seed) {
  cli::Rng rng(seed);
  cli::RandomTextSpec spec;
  spec.m = 1024;
  spec.segments = 8800;
  spec.alternatives = 4;
  spec.max_len = 100;
  spec.repeat_root = repeat_root;
  const auto [pat, text] = cli::random_instance(rng, spec);
  const Pattern p(pat);
  double fast = 1e9, naive = 1e9;
  std::vector<std::size_t> a, b;
  for (int rep = 0; rep < 3; ++rep) {
    auto t0 = Clock::now();
    a = search(p, text).positions;
    fast = std::min(fast, seconds_since(t0));
    t0 = Clock::now();
    EdsmSearcher s(p, [&pat](const BitVector& u, const std::vector<std::string_view>& strs) {
      return oracle::brute_ap(pat, u, std::vector<std::string>(strs.begin(), strs.end()));
    });
    for (const auto& seg : text.segments()) s.process_segment(seg);
    naive = std::min(naive, seconds_since(t0));
    b = s.state().reported;
  }
  return {fast, naive, text.size(), a == b};
}

Outcome speedup() {
  // Gate: text and pattern cut from one tandem repeat of a single letter,
  // so every prefix of P stays active and the naive path is at its worst.
  const auto gate = time_family(1, 1);
  const double ratio = gate.naive / gate.fast;
  std::string detail = "dense family N=" + std::to_string(gate.n_total) + ": fast " + fmt(gate.fast, 4) +
                       " s, naive " + fmt(gate.naive, 4) + " s, ratio " + fmt(ratio, 2);
  // Reported only: a two-letter root and uniform letters leave U sparser.
  const auto two = time_family(2, 1);
  const auto uni = time_family(0, 1);
  detail += "; root 2 ratio " + fmt(two.naive / two.fast, 2) + ", uniform ratio " + fmt(uni.naive / uni.fast, 2);
  return {gate.same && two.same && uni.same && ratio >= 5.0, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example text", example_text},
      {"golden AP instance", golden_ap},
      {"worked BMM reduction", worked_reduction},
      {"EDSM against brute force", edsm_equivalence},
      {"AP solvers by type", ap_by_type},
      {"triangle reduction soundness", td_soundness},
      {"node selection bounds", node_selection},
      {"periodicity, exhaustive", periodicity},
      {"linear algebra kernels", linear_algebra},
      {"ap-fast against naive AP", speedup},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << (k + 1) << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].first << ": "
              << o.detail << " [" << fmt(seconds_since(t0), 2) << " s]" << std::endl;
  }
  return failed ? 1 : 0;
}
