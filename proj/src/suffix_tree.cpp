#include "edsm/suffix_tree.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace edsm::index {

std::vector<std::int32_t> suffix_array(std::string_view text) {
  const std::size_t n = text.size() + 1;
  std::vector<std::int32_t> sa(n), rank(n), tmp(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = static_cast<std::int32_t>(i);
    rank[i] = i < text.size() ? static_cast<unsigned char>(text[i]) + 1 : 0;
  }
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::int32_t i) {
      const std::size_t j = static_cast<std::size_t>(i) + k;
      return std::pair{rank[i], j < n ? rank[j] : -1};
    };
    std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) { return key(a) < key(b); });
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    rank.swap(tmp);
    if (static_cast<std::size_t>(rank[sa[n - 1]]) == n - 1) break;
  }
  return sa;
}

std::vector<std::int32_t> lcp_array(std::string_view text, const std::vector<std::int32_t>& sa) {
  const std::size_t n = sa.size();
  std::vector<std::int32_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<std::int32_t>(i);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = static_cast<std::size_t>(sa[rank[i] - 1]);
    while (i + h < text.size() && j + h < text.size() && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = static_cast<std::int32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

SuffixTree::SuffixTree(std::string text) : text_(std::move(text)) {
  sa_ = suffix_array(text_);
  const std::size_t n = sa_.size();
  rank_.resize(n);
  for (std::size_t i = 0; i < n; ++i) rank_[sa_[i]] = static_cast<std::int32_t>(i);
  const auto lcp = lcp_array(text_, sa_);
  std::vector<std::int32_t> depth(n);
  for (std::size_t k = 0; k < n; ++k) depth[k] = static_cast<std::int32_t>(n - sa_[k]);
  tree_ = CompactTree::from_sorted_leaves(depth, lcp);

  first_symbol_.assign(tree_.node_count(), -2);
  for (std::size_t v = 1; v < tree_.node_count(); ++v) {
    const auto id = static_cast<NodeId>(v);
    first_symbol_[v] = symbol(witness(id) + static_cast<std::size_t>(tree_.depth(tree_.parent(id))));
  }
}

NodeId SuffixTree::child(NodeId v, int sym) const {
  const auto kids = tree_.children(v);
  auto it = std::lower_bound(kids.begin(), kids.end(), sym,
                             [this](NodeId c, int s) { return first_symbol_[c] < s; });
  if (it == kids.end() || first_symbol_[*it] != sym) return kNoNode;
  return *it;
}

std::optional<Locus> SuffixTree::descend(Locus at, unsigned char c) const {
  if (at.depth == tree_.depth(at.node)) {
    const NodeId ch = child(at.node, c);
    if (ch == kNoNode) return std::nullopt;
    return Locus{ch, at.depth + 1};
  }
  if (symbol(witness(at.node) + static_cast<std::size_t>(at.depth)) != c) return std::nullopt;
  return Locus{at.node, at.depth + 1};
}

std::optional<Locus> SuffixTree::locate(std::string_view q) const {
  Locus at{tree_.root(), 0};
  for (unsigned char c : q) {
    auto next = descend(at, c);
    if (!next) return std::nullopt;
    at = *next;
  }
  return at;
}

namespace {

static_assert(std::endian::native == std::endian::little);

// First index in [j, lim) where a and b differ, or lim.
std::size_t mismatch_from(const char* a, const char* b, std::size_t j, std::size_t lim) {
  while (j + 8 <= lim) {
    std::uint64_t x, y;
    std::memcpy(&x, a + j, 8);
    std::memcpy(&y, b + j, 8);
    if (x != y) return j + static_cast<std::size_t>(std::countr_zero(x ^ y)) / 8;
    j += 8;
  }
  while (j < lim && a[j] == b[j]) ++j;
  return j;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> SuffixTree::rank_range(std::string_view q) const {
  if (q.empty()) throw std::invalid_argument("rank_range: empty query");
  // Binary search that skips the prefix both bracketing suffixes already
  // share with q. Boundaries L < R satisfy go_right(L), !go_right(R).
  const std::size_t n = sa_.size();
  auto search = [&](std::ptrdiff_t left, std::size_t lcp_left, bool upper) {
    std::ptrdiff_t right = static_cast<std::ptrdiff_t>(n);
    std::size_t lcp_right = 0;
    while (right - left > 1) {
      const std::ptrdiff_t mid = left + (right - left) / 2;
      const std::size_t start = static_cast<std::size_t>(sa_[static_cast<std::size_t>(mid)]);
      const std::size_t avail = text_.size() - start;
      const std::size_t lim = std::min(avail, q.size());
      std::size_t j = std::min(lcp_left, lcp_right);
      j = mismatch_from(text_.data() + start, q.data(), j, lim);
      int c;
      if (j < lim) c = static_cast<unsigned char>(text_[start + j]) < static_cast<unsigned char>(q[j]) ? -1 : 1;
      else c = avail < q.size() ? -1 : 0;
      if (c < 0 || (upper && c == 0)) {
        left = mid;
        lcp_left = j;
      } else {
        right = mid;
        lcp_right = j;
      }
    }
    return static_cast<std::size_t>(right);
  };
  const std::size_t first = search(-1, 0, false);
  if (first == n) return std::nullopt;
  {
    const std::size_t start = static_cast<std::size_t>(sa_[first]);
    if (text_.size() - start < q.size() || std::memcmp(text_.data() + start, q.data(), q.size()) != 0) {
      return std::nullopt;
    }
  }
  const std::size_t last = search(static_cast<std::ptrdiff_t>(first), q.size(), true) - 1;
  return std::pair{first, last};
}

Locus SuffixTree::locus_of(std::size_t start, std::size_t len) const {
  if (start + len > text_.size()) throw std::out_of_range("locus_of: range exceeds text");
  const auto d = static_cast<std::int32_t>(len);
  return Locus{tree_.weighted_ancestor(leaf_of_suffix(start), d), d};
}

Locus SuffixTree::suffix_link(Locus at) const {
  if (at.depth < 1) throw std::invalid_argument("suffix_link: empty locus");
  return locus_of(witness(at.node) + 1, static_cast<std::size_t>(at.depth - 1));
}

std::vector<std::size_t> SuffixTree::occurrences(Locus at) const {
  const auto [lo, hi] = tree_.leaf_range(at.node);
  std::vector<std::size_t> out;
  out.reserve(hi - lo + 1);
  for (std::size_t r = lo; r <= hi; ++r) out.push_back(static_cast<std::size_t>(sa_[r]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace edsm::index
