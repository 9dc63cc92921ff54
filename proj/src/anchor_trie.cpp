#include "edsm/anchor_trie.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace edsm::index {

void AnchorStructure::Trie::build(const SuffixTree& st, const std::vector<std::size_t>& starts) {
  const std::size_t k = starts.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return st.rank_of_suffix(starts[a]) < st.rank_of_suffix(starts[b]);
  });
  const std::size_t total = st.text_size() + 1;
  std::vector<std::int32_t> depth(k), lcp(k, 0);
  st_rank.resize(k);
  deco.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t s = starts[order[r]];
    st_rank[r] = st.rank_of_suffix(s);
    deco[r] = order[r];
    depth[r] = static_cast<std::int32_t>(total - s);
    if (r > 0) {
      const NodeId a = st.leaf_of_suffix(starts[order[r - 1]]);
      const NodeId b = st.leaf_of_suffix(s);
      lcp[r] = st.tree().depth(st.tree().lca(a, b));
    }
  }
  tree = CompactTree::from_sorted_leaves(depth, lcp);
  leaf_of.assign(k, kNoNode);
  for (std::size_t r = 0; r < k; ++r) leaf_of[deco[r]] = tree.leaf(r);
}

std::optional<NodeId> AnchorStructure::Trie::node_for(const SuffixTree& st, Locus at) const {
  const auto [lo, hi] = st.tree().leaf_range(at.node);
  const auto a = std::lower_bound(st_rank.begin(), st_rank.end(), lo);
  const auto b = std::upper_bound(st_rank.begin(), st_rank.end(), hi);
  if (a == b) return std::nullopt;
  const auto first = static_cast<std::size_t>(a - st_rank.begin());
  const auto last = static_cast<std::size_t>(b - st_rank.begin()) - 1;
  return tree.lca(tree.leaf(first), tree.leaf(last));
}

AnchorStructure::AnchorStructure(const SuffixTree& st, const SuffixTree& st_rev, std::size_t start,
                                 std::size_t len)
    : len_(len) {
  const std::size_t m = st.text_size();
  if (len == 0 || start + len > m) throw std::invalid_argument("AnchorStructure: anchor outside pattern");
  const Locus at = st.locus_of(start, len);
  std::vector<std::size_t> starts0 = st.occurrences(at);
  occ_.reserve(starts0.size());
  std::vector<std::size_t> fwd_starts, rev_starts;
  fwd_starts.reserve(starts0.size());
  rev_starts.reserve(starts0.size());
  for (std::size_t s : starts0) {
    const std::size_t i = s + 1;
    occ_.push_back(i);
    fwd_starts.push_back(i - 1 + len);
    rev_starts.push_back(m - i + 1);
  }
  fwd_.build(st, fwd_starts);
  rev_.build(st_rev, rev_starts);
}

}  // namespace edsm::index
