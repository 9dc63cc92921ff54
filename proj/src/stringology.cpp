#include "edsm/stringology.hpp"

#include <algorithm>
#include <stdexcept>

namespace edsm::stringology {

const char* to_string(TypeLabel t) {
  switch (t) {
    case TypeLabel::Type1: return "type1";
    case TypeLabel::Type2: return "type2";
    case TypeLabel::Type3: return "type3";
  }
  return "?";
}

std::vector<std::size_t> border_array(std::string_view s) {
  std::vector<std::size_t> b(s.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    while (k > 0 && s[i] != s[k]) k = b[k - 1];
    if (s[i] == s[k]) ++k;
    b[i] = k;
  }
  return b;
}

std::size_t period(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("period: empty string");
  return s.size() - border_array(s).back();
}

bool is_strongly_periodic(std::string_view s) { return within_quarter(period(s), s.size()); }

std::size_t min_rotation_start(std::string_view s) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("min_rotation_start: empty string");
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto a = static_cast<unsigned char>(s[(i + k) % n]);
    const auto b = static_cast<unsigned char>(s[(j + k) % n]);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::string word_root(std::string_view s) {
  const std::size_t p = period(s);
  const std::string_view base = s.substr(0, p);
  const std::size_t r = min_rotation_start(base);
  std::string out;
  out.reserve(p);
  out.append(base.substr(r));
  out.append(base.substr(0, r));
  return out;
}

namespace {

// Extends the period p of s[lo..hi] (0-based, inclusive) to the left and right,
// going at most `reach` letters beyond the original bounds on each side.
std::pair<std::size_t, std::size_t> extend_period(std::string_view s, std::size_t lo, std::size_t hi,
                                                  std::size_t p, std::size_t reach) {
  const std::size_t min_lo = lo > reach ? lo - reach : 0;
  while (lo > min_lo && s[lo - 1] == s[lo - 1 + p]) --lo;
  const std::size_t max_hi = std::min(s.size() - 1, hi + reach);
  while (hi < max_hi && s[hi + 1] == s[hi + 1 - p]) ++hi;
  return {lo, hi};
}

}  // namespace

TypeLabel classify_type(std::string_view s, std::size_t l) {
  const std::size_t n = s.size();
  if (l < 2 || 8 * n < 9 * l || 4 * n >= 5 * l) {
    throw std::invalid_argument("classify_type: length " + std::to_string(n) +
                                " outside [9/8*l, 5/4*l) for l=" + std::to_string(l));
  }
  // Every length-l window contains one whole block of size floor(l/2). A
  // strongly periodic window containing a block shares the block's period,
  // so extending that period around the block decides the block.
  const std::size_t h = l / 2;
  const std::size_t reach = l - h;
  bool some_periodic_window = false;
  for (std::size_t a = 0; (a + 1) * h <= n; ++a) {
    const std::string_view block = s.substr(a * h, h);
    const std::size_t p = period(block);
    if (!within_quarter(p, l)) continue;
    const auto [lo, hi] = extend_period(s, a * h, (a + 1) * h - 1, p, reach);
    if (hi - lo + 1 >= l) {
      some_periodic_window = true;
      break;
    }
  }
  if (!some_periodic_window) return TypeLabel::Type1;
  return within_quarter(period(s), l) ? TypeLabel::Type3 : TypeLabel::Type2;
}

std::optional<PeriodicRun> maximal_periodic_run(std::string_view s, std::size_t l) {
  const std::size_t n = s.size();
  if (l == 0) throw std::invalid_argument("maximal_periodic_run: l must be positive");
  if (4 * n > 5 * l) throw std::invalid_argument("maximal_periodic_run: |s| exceeds 5/4*l");
  if (n < l) return std::nullopt;
  // Every length-l window contains s[h..l-1].
  const std::size_t h = l / 2;
  const std::size_t p = period(s.substr(h, l - h));
  if (!within_quarter(p, l)) return std::nullopt;
  const auto [lo, hi] = extend_period(s, h, l - 1, p, n);
  if (hi - lo + 1 < l) return std::nullopt;
  return PeriodicRun{lo + 1, hi + 1, p};
}

std::vector<PeriodicRun> all_maximal_runs(std::string_view s, std::size_t l) {
  std::vector<PeriodicRun> runs;
  const std::size_t n = s.size();
  if (l < 4 || n < l) return runs;
  const std::size_t h = l / 2;
  for (std::size_t a = 0; (a + 1) * h <= n; ++a) {
    const std::size_t b_lo = a * h;
    const std::size_t b_hi = (a + 1) * h - 1;
    // A block inside the previous run can only rediscover that run.
    if (!runs.empty() && runs.back().start - 1 <= b_lo && b_hi <= runs.back().end - 1) continue;
    const std::size_t p = period(s.substr(b_lo, h));
    if (!within_quarter(p, l)) continue;
    const auto [lo, hi] = extend_period(s, b_lo, b_hi, p, n);
    if (hi - lo + 1 < l) continue;
    PeriodicRun run{lo + 1, hi + 1, p};
    if (runs.empty() || !(runs.back() == run)) runs.push_back(run);
  }
  std::sort(runs.begin(), runs.end(),
            [](const PeriodicRun& x, const PeriodicRun& y) { return x.start < y.start; });
  runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
  return runs;
}

}  // namespace edsm::stringology
