#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "edsm/ap_engine.hpp"
#include "edsm/bitvector.hpp"
#include "edsm/eds.hpp"
#include "edsm/match_report.hpp"

namespace edsm {

/// KMP automaton of a fixed string. When (|word|+1) x (distinct letters)
/// is small enough the transitions are tabulated.
class KmpAutomaton {
 public:
  explicit KmpAutomaton(std::string word);
  std::size_t length() const { return word_.size(); }
  /// State after reading c in state q (0 <= q <= length()).
  std::size_t step(std::size_t q, unsigned char c) const {
    if (!table_.empty()) {
      const int col = column_[c];
      return col < 0 ? 0 : table_[q * sigma_ + static_cast<std::size_t>(col)];
    }
    return slow_step(q, c);
  }
  /// Longest proper border of word[0..q).
  std::size_t fail(std::size_t q) const { return q == 0 ? 0 : border_[q - 1]; }

 private:
  static constexpr std::size_t kMaxTable = std::size_t{1} << 24;
  std::size_t slow_step(std::size_t q, unsigned char c) const;

  std::string word_;
  std::vector<std::size_t> border_;
  std::array<int, 256> column_{};
  std::size_t sigma_ = 0;
  std::vector<std::uint32_t> table_;
};

/// Active prefixes after the segments processed so far.
struct MatchState {
  BitVector u;
  std::size_t segments = 0;
  std::vector<std::size_t> reported;
};

/// Replacement for the EXTEND step: (U, strings shorter than m) -> V.
using ExtendFn = std::function<BitVector(const BitVector&, const std::vector<std::string_view>&)>;

/// On-line driver. Each call consumes one segment and never keeps a
/// reference to it.
class EdsmSearcher {
 public:
  explicit EdsmSearcher(const Pattern& p, ap::ApOptions opts = {});
  /// Same, but EXTEND goes through `extend` instead of the AP engine.
  EdsmSearcher(const Pattern& p, ExtendFn extend);

  /// Processes the next segment; true if an occurrence ends at it.
  bool process_segment(const Segment& seg);

  const MatchState& state() const { return state_; }
  std::size_t m() const { return m_; }

 private:
  // Prefix lengths q, fail(q), fail(fail(q)), ... as one mask, built on
  // first use. Skipped for long patterns where m^2 bits is too much.
  static constexpr std::size_t kChainCacheMaxM = 8192;
  const BitVector* border_chain(std::size_t q);

  std::size_t m_;
  KmpAutomaton fwd_;
  KmpAutomaton rev_;
  std::unique_ptr<ap::ApSolver> solver_;
  ExtendFn extend_;
  MatchState state_;
  std::vector<std::unique_ptr<BitVector>> chains_;
};

MatchReport search(const Pattern& p, const EDString& t, ap::ApOptions opts = {});

/// Streams segments from `reader`; on_match(j) fires as soon as segment j is
/// known to end an occurrence.
MatchReport search_stream(const Pattern& p, SegmentReader& reader,
                          const std::function<void(std::size_t)>& on_match = {}, ap::ApOptions opts = {});

}  // namespace edsm
