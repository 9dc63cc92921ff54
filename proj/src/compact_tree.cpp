#include "edsm/compact_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace edsm::index {

CompactTree CompactTree::from_sorted_leaves(std::span<const std::int32_t> leaf_depth,
                                            std::span<const std::int32_t> lcp) {
  if (leaf_depth.empty()) throw std::invalid_argument("CompactTree: no leaves");
  if (lcp.size() != leaf_depth.size()) throw std::invalid_argument("CompactTree: lcp size mismatch");

  CompactTree t;
  auto make = [&t](std::int32_t depth, NodeId par) {
    t.parent_.push_back(par);
    t.depth_.push_back(depth);
    return static_cast<NodeId>(t.parent_.size() - 1);
  };
  make(0, kNoNode);
  std::vector<NodeId> stack{0};
  t.leaf_node_.reserve(leaf_depth.size());
  for (std::size_t k = 0; k < leaf_depth.size(); ++k) {
    const std::int32_t l = k == 0 ? 0 : lcp[k];
    if (leaf_depth[k] <= l) throw std::invalid_argument("CompactTree: leaf is a prefix of its successor");
    NodeId last = kNoNode;
    while (t.depth_[stack.back()] > l) {
      last = stack.back();
      stack.pop_back();
    }
    if (t.depth_[stack.back()] < l) {
      const NodeId w = make(l, stack.back());
      t.parent_[last] = w;
      stack.push_back(w);
    }
    const NodeId x = make(leaf_depth[k], stack.back());
    t.leaf_node_.push_back(x);
    stack.push_back(x);
  }
  t.finish();
  return t;
}

void CompactTree::finish() {
  const std::size_t n = parent_.size();

  child_begin_.assign(n + 1, 0);
  for (std::size_t v = 1; v < n; ++v) ++child_begin_[parent_[v] + 1];
  for (std::size_t v = 0; v < n; ++v) child_begin_[v + 1] += child_begin_[v];
  child_list_.assign(n > 0 ? n - 1 : 0, kNoNode);
  {
    std::vector<std::int32_t> fill(child_begin_.begin(), child_begin_.end() - 1);
    for (std::size_t v = 1; v < n; ++v) child_list_[fill[parent_[v]]++] = static_cast<NodeId>(v);
  }

  // Leaf ranges, accumulated bottom-up over a BFS order.
  first_leaf_.assign(n, INT32_MAX);
  last_leaf_.assign(n, -1);
  for (std::size_t r = 0; r < leaf_node_.size(); ++r) {
    first_leaf_[leaf_node_[r]] = last_leaf_[leaf_node_[r]] = static_cast<std::int32_t>(r);
  }
  std::vector<NodeId> bfs{0};
  bfs.reserve(n);
  for (std::size_t q = 0; q < bfs.size(); ++q) {
    for (NodeId c : children(bfs[q])) bfs.push_back(c);
  }
  for (std::size_t q = bfs.size(); q-- > 1;) {
    const NodeId v = bfs[q];
    first_leaf_[parent_[v]] = std::min(first_leaf_[parent_[v]], first_leaf_[v]);
    last_leaf_[parent_[v]] = std::max(last_leaf_[parent_[v]], last_leaf_[v]);
  }
  // Sorted by first leaf means lexicographic order.
  for (std::size_t v = 0; v < n; ++v) {
    auto b = child_list_.begin() + child_begin_[v];
    auto e = child_list_.begin() + child_begin_[v + 1];
    std::sort(b, e, [this](NodeId x, NodeId y) { return first_leaf_[x] < first_leaf_[y]; });
  }

  // Iterative DFS: levels, Euler tour, entry/exit times.
  level_.assign(n, 0);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  euler_first_.assign(n, 0);
  std::vector<NodeId> euler;
  euler.reserve(2 * n);
  std::vector<std::pair<NodeId, std::int32_t>> st{{0, child_begin_[0]}};
  std::int32_t clock = 0;
  tin_[0] = clock++;
  euler_first_[0] = 0;
  euler.push_back(0);
  while (!st.empty()) {
    auto& [v, next] = st.back();
    if (next < child_begin_[v + 1]) {
      const NodeId c = child_list_[next++];
      level_[c] = level_[v] + 1;
      tin_[c] = clock++;
      euler_first_[c] = static_cast<std::int32_t>(euler.size());
      euler.push_back(c);
      st.emplace_back(c, child_begin_[c]);
    } else {
      tout_[v] = clock++;
      st.pop_back();
      if (!st.empty()) euler.push_back(st.back().first);
    }
  }

  // Sparse table over the Euler tour, keyed by level.
  const std::size_t e = euler.size();
  const int logs = std::bit_width(e);
  sparse_.assign(static_cast<std::size_t>(logs), {});
  sparse_[0] = std::move(euler);
  for (int k = 1; k < logs; ++k) {
    const std::size_t span = std::size_t{1} << k;
    auto& row = sparse_[k];
    const auto& prev = sparse_[k - 1];
    row.resize(e - span + 1);
    for (std::size_t i = 0; i + span <= e; ++i) {
      const NodeId a = prev[i];
      const NodeId b = prev[i + span / 2];
      row[i] = level_[a] <= level_[b] ? a : b;
    }
  }

  // Binary lifting.
  std::int32_t max_level = 0;
  for (auto l : level_) max_level = std::max(max_level, l);
  const int lift = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(max_level))));
  up_.assign(static_cast<std::size_t>(lift), std::vector<NodeId>(n));
  for (std::size_t v = 0; v < n; ++v) up_[0][v] = v == 0 ? 0 : parent_[v];
  for (int k = 1; k < lift; ++k) {
    for (std::size_t v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
  }

  // Heavy paths: heavy child has the most leaves, ties to the smallest.
  heavy_.assign(n, kNoNode);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t best = 0;
    for (NodeId c : children(static_cast<NodeId>(v))) {
      if (leaf_count(c) > best) {
        best = leaf_count(c);
        heavy_[v] = c;
      }
    }
  }
  head_.assign(n, 0);
  path_id_.assign(n, 0);
  path_total_ = 0;
  // Nodes in preorder: sort by tin.
  std::vector<NodeId> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<NodeId>(v);
  std::sort(order.begin(), order.end(), [this](NodeId a, NodeId b) { return tin_[a] < tin_[b]; });
  for (NodeId v : order) {
    if (v == 0 || heavy_[parent_[v]] != v) {
      head_[v] = v;
      path_id_[v] = static_cast<std::int32_t>(path_total_++);
    } else {
      head_[v] = head_[parent_[v]];
      path_id_[v] = path_id_[parent_[v]];
    }
  }
}

NodeId CompactTree::lca(NodeId u, NodeId v) const {
  std::size_t a = static_cast<std::size_t>(euler_first_[u]);
  std::size_t b = static_cast<std::size_t>(euler_first_[v]);
  if (a > b) std::swap(a, b);
  const int k = std::bit_width(b - a + 1) - 1;
  const NodeId x = sparse_[k][a];
  const NodeId y = sparse_[k][b + 1 - (std::size_t{1} << k)];
  return level_[x] <= level_[y] ? x : y;
}

NodeId CompactTree::weighted_ancestor(NodeId u, std::int32_t d) const {
  if (d < 0 || d > depth_[u]) throw std::out_of_range("weighted_ancestor: depth outside [0, depth(u)]");
  if (d == 0) return 0;
  // Climb while the ancestor above stays at depth >= d.
  for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k) {
    const NodeId a = up_[k][u];
    if (depth_[a] >= d) u = a;
  }
  return u;
}

std::size_t CompactTree::paths_above(NodeId v) const {
  std::size_t count = 0;
  while (v != kNoNode) {
    ++count;
    v = parent_[head_[v]];
  }
  return count;
}

}  // namespace edsm::index
