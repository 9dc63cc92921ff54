#include "edsm/edsm_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "edsm/stringology.hpp"

namespace edsm {

KmpAutomaton::KmpAutomaton(std::string word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("KmpAutomaton: empty word");
  border_ = stringology::border_array(word_);
  column_.fill(-1);
  std::vector<unsigned char> letters;
  for (unsigned char c : word_) {
    if (column_[c] < 0) {
      column_[c] = static_cast<int>(sigma_++);
      letters.push_back(c);
    }
  }
  const std::size_t states = word_.size() + 1;
  if (states * sigma_ > kMaxTable) return;
  table_.assign(states * sigma_, 0);
  for (std::size_t q = 0; q < states; ++q) {
    for (unsigned char c : letters) {
      const int col = column_[c];
      std::uint32_t next;
      if (q < word_.size() && word_[q] == static_cast<char>(c)) {
        next = static_cast<std::uint32_t>(q + 1);
      } else if (q == 0) {
        next = 0;
      } else {
        next = table_[border_[q - 1] * sigma_ + static_cast<std::size_t>(col)];
      }
      table_[q * sigma_ + static_cast<std::size_t>(col)] = next;
    }
  }
}

std::size_t KmpAutomaton::slow_step(std::size_t q, unsigned char c) const {
  while (q > 0 && (q == word_.size() || static_cast<unsigned char>(word_[q]) != c)) q = border_[q - 1];
  if (static_cast<unsigned char>(word_[q]) == c) ++q;
  return q;
}

namespace {
std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}
}  // namespace

EdsmSearcher::EdsmSearcher(const Pattern& p, ap::ApOptions opts)
    : m_(p.length()),
      fwd_(p.letters()),
      rev_(reversed(p.letters())),
      solver_(std::make_unique<ap::ApSolver>(p.letters(), opts)),
      state_{BitVector(p.length()), 0, {}} {
  extend_ = [s = solver_.get()](const BitVector& u, const std::vector<std::string_view>& strings) {
    return s->solve(u, strings);
  };
}

EdsmSearcher::EdsmSearcher(const Pattern& p, ExtendFn extend)
    : m_(p.length()),
      fwd_(p.letters()),
      rev_(reversed(p.letters())),
      extend_(std::move(extend)),
      state_{BitVector(p.length()), 0, {}} {}

const BitVector* EdsmSearcher::border_chain(std::size_t q) {
  if (m_ > kChainCacheMaxM) return nullptr;
  if (chains_.empty()) chains_.resize(m_ + 1);
  auto& slot = chains_[q];
  if (!slot) {
    const std::size_t f = fwd_.fail(q);
    slot = std::make_unique<BitVector>(m_);
    if (f > 0) *slot |= *border_chain(f);
    slot->set(q);
  }
  return slot.get();
}

bool EdsmSearcher::process_segment(const Segment& seg) {
  const BitVector& prev = state_.u;
  BitVector next(m_);
  bool found = false;
  std::vector<std::string_view> shorter;

  for (const auto& s : seg.alternatives()) {
    if (s.size() < m_) shorter.push_back(s);
    if (s.empty()) continue;

    // FULL-INSIDE and START: scan s with the automaton of P.
    std::size_t q = 0;
    for (unsigned char c : s) {
      q = fwd_.step(q, c);
      if (q == m_) found = true;
    }
    const std::size_t top = q == m_ ? fwd_.fail(q) : q;
    if (top > 0) {
      if (const BitVector* chain = border_chain(top)) {
        next |= *chain;
      } else {
        for (std::size_t i = top; i > 0; i = fwd_.fail(i)) next.set(i);
      }
    }

    // END: a suffix P[i+1..m] that is a prefix of s shows up as a prefix of
    // P^r ending the reversed head of s.
    if (!found && prev.any()) {
      const std::size_t k = std::min(s.size(), m_);
      std::size_t r = 0;
      for (std::size_t x = k; x-- > 0;) r = rev_.step(r, static_cast<unsigned char>(s[x]));
      for (std::size_t len = r; len > 0; len = rev_.fail(len)) {
        if (len < m_ && prev.test(m_ - len)) {
          found = true;
          break;
        }
      }
    }
  }

  // EXTEND.
  if (prev.any() && !shorter.empty()) next |= extend_(prev, shorter);
  next.reset(m_);

  ++state_.segments;
  if (found) state_.reported.push_back(state_.segments);
  state_.u = std::move(next);
  return found;
}

MatchReport search(const Pattern& p, const EDString& t, ap::ApOptions opts) {
  EdsmSearcher searcher(p, opts);
  for (const auto& seg : t.segments()) searcher.process_segment(seg);
  return MatchReport{searcher.state().reported};
}

MatchReport search_stream(const Pattern& p, SegmentReader& reader, const std::function<void(std::size_t)>& on_match,
                          ap::ApOptions opts) {
  EdsmSearcher searcher(p, opts);
  while (auto seg = reader.next()) {
    if (searcher.process_segment(*seg) && on_match) on_match(searcher.state().segments);
  }
  return MatchReport{searcher.state().reported};
}

}  // namespace edsm
