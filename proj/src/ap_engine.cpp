#include "edsm/ap_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace edsm::ap {

namespace {
std::size_t ceil_log2(std::size_t m) { return m <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(m - 1)); }
}  // namespace

std::size_t default_cutoff(std::size_t m) {
  const std::size_t lg = ceil_log2(m);
  return std::max<std::size_t>(kMinClassed - 1, lg * lg * lg);
}

std::size_t batch_width(std::size_t ell, std::size_t m) {
  const std::size_t lg = std::max<std::size_t>(1, ceil_log2(m));
  const std::size_t z = std::max<std::size_t>(1, ell / (lg * lg * lg));
  return std::min(z, (5 * ell + 3) / 4);
}

std::pair<int, std::size_t> class_of_length(std::size_t len) {
  if (len < kMinClassed) throw std::invalid_argument("class_of_length: length below 24");
  const long double ratio = 19.0L / 18.0L;
  int k = static_cast<int>(std::floor(std::log(static_cast<long double>(len)) / std::log(ratio)));
  // Guard the floor against rounding at class boundaries.
  while (std::pow(ratio, k) > static_cast<long double>(len)) --k;
  while (std::pow(ratio, k + 1) <= static_cast<long double>(len)) ++k;
  const auto ell = static_cast<std::size_t>(std::ceil(0.8L * std::pow(ratio, k + 1)));
  if (8 * len < 9 * ell || 4 * len >= 5 * ell) {
    throw std::logic_error("class_of_length: length " + std::to_string(len) + " outside class window of ell=" +
                           std::to_string(ell));
  }
  return {k, ell};
}

std::vector<LengthClass> partition_classes(const std::vector<std::string_view>& strings, std::size_t m) {
  std::map<int, LengthClass> by_k;
  for (std::size_t s = 0; s < strings.size(); ++s) {
    const std::size_t len = strings[s].size();
    if (len < kMinClassed || len > m) {
      throw std::invalid_argument("partition_classes: length " + std::to_string(len) + " outside [24, m]");
    }
    const auto [k, ell] = class_of_length(len);
    auto [it, fresh] = by_k.try_emplace(k, LengthClass{k, ell, {}});
    it->second.members.push_back(s);
  }
  std::vector<LengthClass> out;
  out.reserve(by_k.size());
  for (auto& [k, c] : by_k) out.push_back(std::move(c));
  return out;
}

const char* to_string(Route r) {
  switch (r) {
    case Route::Epsilon: return "epsilon";
    case Route::Discarded: return "discarded";
    case Route::Naive: return "naive";
    case Route::Type1: return "type1";
    case Route::Type2: return "type2";
    case Route::Type3: return "type3";
  }
  return "?";
}

std::vector<Route> route_strings(const std::vector<std::string_view>& strings, std::size_t m, std::size_t cutoff) {
  std::vector<Route> out;
  out.reserve(strings.size());
  for (auto s : strings) {
    if (s.empty()) {
      out.push_back(Route::Epsilon);
    } else if (s.size() > m) {
      out.push_back(Route::Discarded);
    } else if (s.size() <= std::max(cutoff, kMinClassed - 1)) {
      out.push_back(Route::Naive);
    } else {
      switch (stringology::classify_type(s, class_of_length(s.size()).second)) {
        case stringology::TypeLabel::Type1: out.push_back(Route::Type1); break;
        case stringology::TypeLabel::Type2: out.push_back(Route::Type2); break;
        case stringology::TypeLabel::Type3: out.push_back(Route::Type3); break;
      }
    }
  }
  return out;
}

namespace {
std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}
}  // namespace

PatternIndex::PatternIndex(std::string pattern) : st_(pattern), st_rev_(reversed(pattern)) {
  if (st_.text_size() == 0) throw std::invalid_argument("PatternIndex: empty pattern");
}

const std::vector<stringology::PeriodicRun>& PatternIndex::runs(std::size_t ell) const {
  std::lock_guard lock(runs_mu_);
  auto& slot = runs_[ell];
  if (!slot) {
    slot = std::make_unique<std::vector<stringology::PeriodicRun>>(stringology::all_maximal_runs(pattern(), ell));
  }
  return *slot;
}

std::shared_ptr<const BitVector> PatternIndex::start_mask(std::size_t lo, std::size_t hi) const {
  {
    std::lock_guard lock(masks_mu_);
    if (auto it = masks_.find({lo, hi}); it != masks_.end()) return it->second;
  }
  auto mask = std::make_shared<BitVector>(m());
  for (std::size_t r = lo; r <= hi; ++r) {
    const std::size_t q = st_.suffix_at_rank(r);
    if (q >= 1 && q <= m()) mask->set(q);
  }
  std::lock_guard lock(masks_mu_);
  if ((masks_.size() + 1) * m() > kMaskCacheBits) masks_.clear();
  masks_.emplace(std::pair{lo, hi}, mask);
  return mask;
}

BitVector naive_short(const PatternIndex& idx, const BitVector& u, const std::vector<std::string_view>& strings,
                      std::size_t t) {
  const std::size_t m = idx.m();
  if (u.size() != m) throw std::invalid_argument("naive_short: |U| != m");
  BitVector v(m);
  const auto& st = idx.st();
  // A string's locus owns a contiguous range of suffix ranks, and the
  // suffixes in it start exactly where the string occurs. U restricted to
  // those starts, shifted by the length, is the contribution to V.
  struct Hit {
    std::size_t len, lo, hi;
    auto operator<=>(const Hit&) const = default;
  };
  std::vector<Hit> hits;
  hits.reserve(strings.size());
  for (auto s : strings) {
    if (s.size() > t) throw std::invalid_argument("naive_short: string longer than the cutoff");
    if (s.empty()) {
      v |= u;
      continue;
    }
    if (s.size() > m) continue;
    if (const auto range = st.rank_range(s)) hits.push_back({s.size(), range->first, range->second});
  }
  if (hits.empty()) return v;
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  BitVector starts(m);
  for (std::size_t a = 0; a < hits.size();) {
    std::size_t b = a;
    starts.clear();
    for (; b < hits.size() && hits[b].len == hits[a].len; ++b) {
      if (hits[b].lo == hits[b].hi) {
        const std::size_t q = st.suffix_at_rank(hits[b].lo);
        if (q >= 1 && q <= m) starts.set(q);
      } else {
        starts |= *idx.start_mask(hits[b].lo, hits[b].hi);
      }
    }
    starts &= u;
    v.or_shifted(starts, hits[a].len);
    a = b;
  }
  return v;
}

ApSolver::ApSolver(std::string pattern, ApOptions opts)
    : idx_(std::move(pattern)), opts_(opts), cutoff_(opts.naive_cutoff ? opts.naive_cutoff : default_cutoff(idx_.m())) {
  if (cutoff_ < kMinClassed - 1) throw std::invalid_argument("ApSolver: naive cutoff below 23");
}

BitVector ApSolver::solve(const BitVector& u, const std::vector<std::string>& strings) const {
  std::vector<std::string_view> views(strings.begin(), strings.end());
  return solve(u, views);
}

BitVector ApSolver::solve(const BitVector& u, const std::vector<std::string_view>& strings) const {
  const std::size_t m = idx_.m();
  if (u.size() != m) {
    throw std::invalid_argument("solve_ap: |U|=" + std::to_string(u.size()) + " but m=" + std::to_string(m));
  }
  std::vector<std::string_view> distinct;
  distinct.reserve(strings.size());
  if (strings.size() <= 16) {
    for (auto s : strings) {
      if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
    }
  } else {
    std::unordered_set<std::string_view> seen;
    for (auto s : strings) {
      if (seen.insert(s).second) distinct.push_back(s);
    }
  }
  const auto routes = route_strings(distinct, m, cutoff_);
  BitVector v(m);
  std::vector<std::string_view> naive;
  std::vector<std::string_view> classed;
  for (std::size_t s = 0; s < distinct.size(); ++s) {
    switch (routes[s]) {
      case Route::Epsilon: v |= u; break;
      case Route::Discarded: break;
      case Route::Naive: naive.push_back(distinct[s]); break;
      default: classed.push_back(distinct[s]); break;
    }
  }
  if (!u.any()) return v;
  if (!naive.empty()) v |= naive_short(idx_, u, naive, cutoff_);
  if (classed.empty()) return v;

  struct Task {
    Route type;
    std::size_t ell;
    std::vector<std::string_view> members;
  };
  std::vector<Task> tasks;
  for (const auto& cls : partition_classes(classed, m)) {
    Task by_type[3] = {{Route::Type1, cls.ell, {}}, {Route::Type2, cls.ell, {}}, {Route::Type3, cls.ell, {}}};
    for (std::size_t s : cls.members) {
      switch (stringology::classify_type(classed[s], cls.ell)) {
        case stringology::TypeLabel::Type1: by_type[0].members.push_back(classed[s]); break;
        case stringology::TypeLabel::Type2: by_type[1].members.push_back(classed[s]); break;
        case stringology::TypeLabel::Type3: by_type[2].members.push_back(classed[s]); break;
      }
    }
    for (auto& t : by_type) {
      if (!t.members.empty()) tasks.push_back(std::move(t));
    }
  }
  std::vector<BitVector> partial(tasks.size());
  const auto nt = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) if (opts_.parallel)
  for (std::ptrdiff_t k = 0; k < nt; ++k) {
    const Task& t = tasks[static_cast<std::size_t>(k)];
    switch (t.type) {
      case Route::Type1: partial[k] = solve_type1(idx_, u, t.members, t.ell); break;
      case Route::Type2: partial[k] = solve_type2(idx_, u, t.members, t.ell); break;
      default: partial[k] = solve_type3(idx_, u, t.members, t.ell); break;
    }
  }
  for (const auto& p : partial) v |= p;
  return v;
}

BitVector solve_ap(const Pattern& p, const BitVector& u, const std::vector<std::string>& strings, ApOptions opts) {
  const ApSolver solver(p.letters(), opts);
  return solver.solve(u, strings);
}

}  // namespace edsm::ap
