#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edsm/anchor_trie.hpp"
#include "edsm/bitvector.hpp"
#include "edsm/eds.hpp"
#include "edsm/stringology.hpp"
#include "edsm/suffix_tree.hpp"

namespace edsm::ap {

struct ApOptions {
  /// Strings up to this length take the naive path; 0 means
  /// max(23, ceil(log2 m)^3).
  std::size_t naive_cutoff = 0;
  /// Run length classes and root groups concurrently.
  bool parallel = true;
};

/// Smallest length handled by the classed solvers is 24.
inline constexpr std::size_t kMinClassed = 24;

std::size_t default_cutoff(std::size_t m);

struct LengthClass {
  int k;
  std::size_t ell;
  std::vector<std::size_t> members;  // indices into the input list
};

/// (k, ell) for a string length >= 24.
std::pair<int, std::size_t> class_of_length(std::size_t len);

/// Groups strings by length class. Every length must lie in [24, m].
std::vector<LengthClass> partition_classes(const std::vector<std::string_view>& strings, std::size_t m);

enum class Route { Epsilon, Discarded, Naive, Type1, Type2, Type3 };
const char* to_string(Route r);

/// Where each string goes for a pattern of length m and a naive cutoff.
std::vector<Route> route_strings(const std::vector<std::string_view>& strings, std::size_t m,
                                 std::size_t cutoff);

/// P-side preprocessing shared by every AP instance on the same pattern.
class PatternIndex {
 public:
  explicit PatternIndex(std::string pattern);

  const std::string& pattern() const { return st_.text(); }
  std::size_t m() const { return st_.text_size(); }
  const index::SuffixTree& st() const { return st_; }
  const index::SuffixTree& st_rev() const { return st_rev_; }

  /// Maximal ell-periodic runs of P, computed once per ell.
  const std::vector<stringology::PeriodicRun>& runs(std::size_t ell) const;
  /// Bits q (1 <= q < m) such that the suffix starting at 0-based q has a
  /// rank in [lo, hi]. Memoized up to a fixed number of bits in total.
  std::shared_ptr<const BitVector> start_mask(std::size_t lo, std::size_t hi) const;

 private:
  index::SuffixTree st_;
  index::SuffixTree st_rev_;
  mutable std::mutex runs_mu_;
  mutable std::map<std::size_t, std::unique_ptr<std::vector<stringology::PeriodicRun>>> runs_;
  static constexpr std::size_t kMaskCacheBits = std::size_t{1} << 27;
  mutable std::mutex masks_mu_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const BitVector>> masks_;
};

/// Short strings: each string's rank range in the suffix array gives its
/// occurrence starts; per length, starts & U shifted by the length go to V.
/// Throws if a string is longer than t.
BitVector naive_short(const PatternIndex& idx, const BitVector& u, const std::vector<std::string_view>& strings,
                      std::size_t t);

BitVector solve_type1(const PatternIndex& idx, const BitVector& u, const std::vector<std::string_view>& members,
                      std::size_t ell);
BitVector solve_type2(const PatternIndex& idx, const BitVector& u, const std::vector<std::string_view>& members,
                      std::size_t ell);
BitVector solve_type3(const PatternIndex& idx, const BitVector& u, const std::vector<std::string_view>& members,
                      std::size_t ell);

/// Anchors chosen for a type-1 class, exposed for property tests.
struct Type1Anchors {
  std::vector<std::size_t> starts;  // 0-based start in P of one occurrence per anchor
  std::size_t total_occurrences = 0;
  std::size_t members_kept = 0;     // members occurring in P
  bool every_member_hit = false;
};
Type1Anchors select_type1_anchors(const PatternIndex& idx, const std::vector<std::string_view>& members,
                                  std::size_t ell);

/// Distinct length-(ell+1) anchors flanking the members' periodic runs.
std::vector<std::string> type2_anchor_strings(const std::vector<std::string_view>& members, std::size_t ell);

/// One blue point of a simple instance: a member of length `length` whose
/// anchor starts at its j-th letter.
struct BluePair {
  std::size_t length;
  std::size_t j;
};

/// Every occurrence i in `reds` against every blue pair: V[i+|S|-j] |= U[i-j].
/// Goes through bool_matvec_batch with K = ceil(5/4 ell) and batch width z.
void apply_simple_instance(const BitVector& u, const std::vector<std::size_t>& reds,
                           const std::vector<BluePair>& blues, std::size_t ell, std::size_t z, BitVector& v);

/// A type-3 member written over its root R as R[i..|R|] R^beta R[1..j],
/// with 1 <= i <= |R| and 1 <= j <= |R|.
struct RootTriple {
  std::size_t i;
  std::size_t j;
  std::size_t beta;
  auto operator<=>(const RootTriple&) const = default;
};
/// Decomposes a member of length len starting at 0-based phase psi of R.
RootTriple root_triple(std::size_t psi, std::size_t len, std::size_t r);

/// Type-3 core for one run P[a..b] (1-based) whose letters follow R from
/// phase phi at position a. Triples with beta above `beta_limit` are
/// enumerated directly, the rest go through one polynomial-matrix product.
/// beta_limit defaults to ceil(alpha/|R|) where alpha counts copies of R.
void apply_periodic_run(const BitVector& u, std::size_t a, std::size_t b, std::size_t r, std::size_t phi,
                        const std::vector<RootTriple>& triples, BitVector& v,
                        std::optional<std::size_t> beta_limit = std::nullopt);

/// Batching width z = max(1, floor(ell / ceil(log2 m)^3)), at most ceil(5/4 ell).
std::size_t batch_width(std::size_t ell, std::size_t m);

class ApSolver {
 public:
  explicit ApSolver(std::string pattern, ApOptions opts = {});

  const PatternIndex& index() const { return idx_; }
  std::size_t m() const { return idx_.m(); }
  std::size_t cutoff() const { return cutoff_; }

  BitVector solve(const BitVector& u, const std::vector<std::string_view>& strings) const;
  BitVector solve(const BitVector& u, const std::vector<std::string>& strings) const;

 private:
  PatternIndex idx_;
  ApOptions opts_;
  std::size_t cutoff_;
};

BitVector solve_ap(const Pattern& p, const BitVector& u, const std::vector<std::string>& strings,
                   ApOptions opts = {});

}  // namespace edsm::ap
