#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edsm/compact_tree.hpp"

namespace edsm::index {

/// Position on the tree: the string of length `depth` spelled on the way to
/// `node`. Explicit when depth == depth(node).
struct Locus {
  NodeId node = 0;
  std::int32_t depth = 0;
  bool operator==(const Locus&) const = default;
};

/// Suffix array by prefix doubling (terminator sorts first, not included).
std::vector<std::int32_t> suffix_array(std::string_view text);
/// Kasai: lcp[k] = LCP(suffix sa[k-1], suffix sa[k]); lcp[0] = 0.
std::vector<std::int32_t> lcp_array(std::string_view text, const std::vector<std::int32_t>& sa);

/// Suffix tree of text$ where $ is smaller than every letter. Leaf k (in
/// sorted order) is the suffix starting at sa[k]; there are |text|+1 leaves.
class SuffixTree {
 public:
  explicit SuffixTree(std::string text);

  const CompactTree& tree() const { return tree_; }
  const std::string& text() const { return text_; }
  std::size_t text_size() const { return text_.size(); }

  /// Letter at 0-based position p of text$; -1 for the terminator.
  int symbol(std::size_t p) const {
    return p < text_.size() ? static_cast<unsigned char>(text_[p]) : -1;
  }

  /// A start position of an occurrence of str(v).
  std::size_t witness(NodeId v) const { return static_cast<std::size_t>(sa_[tree_.leaf_range(v).first]); }
  NodeId leaf_of_suffix(std::size_t start) const { return tree_.leaf(static_cast<std::size_t>(rank_[start])); }
  std::size_t rank_of_suffix(std::size_t start) const { return static_cast<std::size_t>(rank_[start]); }
  std::size_t suffix_at_rank(std::size_t rank) const { return static_cast<std::size_t>(sa_[rank]); }

  NodeId child(NodeId v, int symbol) const;

  /// Extends a locus by one letter.
  std::optional<Locus> descend(Locus at, unsigned char c) const;
  std::optional<Locus> locate(std::string_view q) const;
  /// Inclusive range of suffix ranks starting with q (binary search on the
  /// suffix array); nullopt if q does not occur. q must be non-empty.
  std::optional<std::pair<std::size_t, std::size_t>> rank_range(std::string_view q) const;
  /// Locus of text[start..start+len).
  Locus locus_of(std::size_t start, std::size_t len) const;
  /// Locus of str(at) without its first letter. Requires at.depth >= 1.
  Locus suffix_link(Locus at) const;

  /// Start positions (0-based) of all occurrences of the locus string.
  std::vector<std::size_t> occurrences(Locus at) const;

 private:
  std::string text_;
  std::vector<std::int32_t> sa_;
  std::vector<std::int32_t> rank_;
  CompactTree tree_;
  std::vector<std::int32_t> first_symbol_;  // per node, letter on the edge from its parent
};

}  // namespace edsm::index
