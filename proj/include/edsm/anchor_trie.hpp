#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "edsm/compact_tree.hpp"
#include "edsm/suffix_tree.hpp"

namespace edsm::index {

/// One entry of L(H): the string-side halves of a member around an anchor
/// occurrence at split j (1-based start of the anchor inside the member).
struct AnchorPair {
  NodeId u;  // in the reversed-prefix trie
  NodeId v;  // in the suffix trie
  std::size_t member;
  std::size_t length;  // |S|
  std::size_t j;
};

/// D(H) for an anchor H = P[start, start+len) (0-based).
///
/// forward():  compact trie of P[i+|H|..m]$ over occurrences i of H,
/// reverse():  compact trie of (P[1..i-1])^r $.
/// Leaf k of either trie is decorated with an occurrence index into
/// occurrences(); positions are 1-based like the rest of the engine.
class AnchorStructure {
 public:
  AnchorStructure(const SuffixTree& st, const SuffixTree& st_rev, std::size_t start, std::size_t len);

  std::size_t anchor_length() const { return len_; }
  const std::vector<std::size_t>& occurrences() const { return occ_; }
  const CompactTree& forward() const { return fwd_.tree; }
  const CompactTree& reverse() const { return rev_.tree; }

  /// Occurrence index of a leaf, by leaf rank.
  std::size_t forward_decoration(std::size_t rank) const { return fwd_.deco[rank]; }
  std::size_t reverse_decoration(std::size_t rank) const { return rev_.deco[rank]; }
  /// Leaf node holding occurrence index k.
  NodeId forward_leaf(std::size_t k) const { return fwd_.leaf_of[k]; }
  NodeId reverse_leaf(std::size_t k) const { return rev_.leaf_of[k]; }

  /// Node whose leaves are exactly the strings that start with the locus
  /// string (locus taken in the suffix tree of P, resp. of P^r).
  std::optional<NodeId> forward_node(const SuffixTree& st, Locus at) const { return fwd_.node_for(st, at); }
  std::optional<NodeId> reverse_node(const SuffixTree& st_rev, Locus at) const {
    return rev_.node_for(st_rev, at);
  }

  std::vector<AnchorPair> pairs;

 private:
  struct Trie {
    CompactTree tree;
    std::vector<std::size_t> st_rank;  // ascending
    std::vector<std::size_t> deco;
    std::vector<NodeId> leaf_of;
    void build(const SuffixTree& st, const std::vector<std::size_t>& starts);
    std::optional<NodeId> node_for(const SuffixTree& st, Locus at) const;
  };

  std::size_t len_;
  std::vector<std::size_t> occ_;
  Trie fwd_;
  Trie rev_;
};

}  // namespace edsm::index
