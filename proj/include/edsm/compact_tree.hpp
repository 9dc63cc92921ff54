#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace edsm::index {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// Static rooted tree whose nodes carry a string depth, built from a
/// lexicographically sorted list of leaves. Backs both the suffix tree of the
/// pattern and the per-anchor tries.
///
/// Queries: LCA (Euler tour + sparse table), weighted ancestor (binary
/// lifting), ancestor tests, leaf ranges, heavy-path decomposition.
class CompactTree {
 public:
  /// leaf_depth[k] is the string length of the k-th smallest leaf string;
  /// lcp[k] (k >= 1) is the longest common prefix of leaves k-1 and k.
  static CompactTree from_sorted_leaves(std::span<const std::int32_t> leaf_depth,
                                        std::span<const std::int32_t> lcp);

  NodeId root() const { return 0; }
  std::size_t node_count() const { return parent_.size(); }
  std::size_t leaf_total() const { return leaf_node_.size(); }

  NodeId parent(NodeId v) const { return parent_[v]; }
  std::int32_t depth(NodeId v) const { return depth_[v]; }
  std::int32_t level(NodeId v) const { return level_[v]; }
  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
  }
  bool is_leaf(NodeId v) const { return child_begin_[v] == child_begin_[v + 1]; }

  NodeId leaf(std::size_t rank) const { return leaf_node_[rank]; }
  std::size_t leaf_rank(NodeId leaf) const { return static_cast<std::size_t>(first_leaf_[leaf]); }
  /// Inclusive range of leaf ranks below v.
  std::pair<std::size_t, std::size_t> leaf_range(NodeId v) const {
    return {static_cast<std::size_t>(first_leaf_[v]), static_cast<std::size_t>(last_leaf_[v])};
  }
  std::size_t leaf_count(NodeId v) const {
    return static_cast<std::size_t>(last_leaf_[v] - first_leaf_[v] + 1);
  }

  bool is_ancestor(NodeId a, NodeId v) const {
    return tin_[a] <= tin_[v] && tout_[v] <= tout_[a];
  }
  NodeId lca(NodeId u, NodeId v) const;
  /// Shallowest ancestor of u (u included) with depth >= d; 0 <= d <= depth(u).
  NodeId weighted_ancestor(NodeId u, std::int32_t d) const;

  NodeId heavy_child(NodeId v) const { return heavy_[v]; }
  NodeId path_head(NodeId v) const { return head_[v]; }
  /// Heavy path id; ids are dense in [0, path_count()).
  std::int32_t path_id(NodeId v) const { return path_id_[v]; }
  std::size_t path_count() const { return path_total_; }
  /// Heavy paths met on the way from v to the root (v's own path included).
  std::size_t paths_above(NodeId v) const;

 private:
  void finish();

  std::vector<NodeId> parent_;
  std::vector<std::int32_t> depth_;
  std::vector<std::int32_t> level_;
  std::vector<std::int32_t> child_begin_;
  std::vector<NodeId> child_list_;
  std::vector<NodeId> leaf_node_;
  std::vector<std::int32_t> first_leaf_;
  std::vector<std::int32_t> last_leaf_;
  std::vector<std::int32_t> tin_;
  std::vector<std::int32_t> tout_;

  // LCA over the Euler tour.
  std::vector<std::int32_t> euler_first_;
  std::vector<std::vector<NodeId>> sparse_;

  // Binary lifting: up_[k][v] is the 2^k-th ancestor (root maps to itself).
  std::vector<std::vector<NodeId>> up_;

  std::vector<NodeId> heavy_;
  std::vector<NodeId> head_;
  std::vector<std::int32_t> path_id_;
  std::size_t path_total_ = 0;
};

}  // namespace edsm::index
