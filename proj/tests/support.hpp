#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "edsm/bitvector.hpp"
#include "edsm/eds.hpp"

namespace testing_support {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

inline std::string random_string(Rng& rng, std::size_t len, std::string_view alphabet) {
  std::string s(len, ' ');
  for (auto& c : s) c = alphabet[uniform(rng, 0, alphabet.size() - 1)];
  return s;
}

inline edsm::BitVector random_bits(Rng& rng, std::size_t len, double density) {
  edsm::BitVector b(len);
  for (std::size_t i = 1; i <= len; ++i)
    if (coin(rng, density)) b.set(i);
  return b;
}

/// Random ED text: up to `max_alts` alternatives of length <= max_len each,
/// epsilon with probability eps per segment.
inline edsm::EDString random_eds(Rng& rng, std::size_t n, std::size_t max_alts, std::size_t max_len, double eps,
                                 std::string_view alphabet) {
  std::vector<edsm::Segment> segs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::string> alts;
    const std::size_t k = uniform(rng, 1, max_alts);
    for (std::size_t a = 0; a < k; ++a) {
      if (coin(rng, eps)) {
        alts.emplace_back();
      } else {
        alts.push_back(random_string(rng, uniform(rng, 1, max_len), alphabet));
      }
    }
    segs.emplace_back(std::move(alts));
  }
  return edsm::EDString(std::move(segs));
}

/// Pattern cut from a random spelling of a window of the text, so that
/// occurrences are common. Falls back to a random string.
inline std::string spelled_pattern(Rng& rng, const edsm::EDString& t, std::size_t m_max, std::string_view alphabet) {
  const std::size_t start = uniform(rng, 0, t.length() - 1);
  std::string walk;
  for (std::size_t j = start; j < t.length() && walk.size() < 2 * m_max; ++j) {
    const auto& alts = t[j].alternatives();
    walk += alts[uniform(rng, 0, alts.size() - 1)];
  }
  if (walk.empty()) return random_string(rng, uniform(rng, 1, m_max), alphabet);
  const std::size_t len = uniform(rng, 1, std::min(m_max, walk.size()));
  const std::size_t off = uniform(rng, 0, walk.size() - len);
  return walk.substr(off, len);
}

}  // namespace testing_support
