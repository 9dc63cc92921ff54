#pragma once

#include <string>
#include <vector>

#include "edsm/stringology.hpp"
#include "support.hpp"

namespace testing_support {

struct TypedApInstance {
  std::string pattern;
  edsm::BitVector u;
  std::vector<std::string> members;
  std::size_t ell;
};

inline std::string periodic_from(const std::string& root, std::size_t phase, std::size_t len) {
  std::string s(len, ' ');
  for (std::size_t k = 0; k < len; ++k) s[k] = root[(phase + k) % root.size()];
  return s;
}

/// Pattern glued from random blocks and long periodic stretches, so that all
/// three member types occur in it.
inline std::string mixed_pattern(Rng& rng, std::size_t m, std::size_t ell, std::vector<std::string>& roots) {
  std::string p;
  while (p.size() < m) {
    if (coin(rng, 0.5)) {
      p += random_string(rng, uniform(rng, 2, ell / 2), "ab");
    } else {
      std::string root;
      if (!roots.empty() && coin(rng, 0.6)) {
        root = roots[uniform(rng, 0, roots.size() - 1)];
      } else {
        root = random_string(rng, uniform(rng, 1, ell / 4), "ab");
        roots.push_back(root);
      }
      p += periodic_from(root, uniform(rng, 0, root.size() - 1), uniform(rng, ell / 2, 2 * ell));
    }
  }
  p.resize(m);
  return p;
}

inline bool has_type(const std::string& s, std::size_t ell, edsm::stringology::TypeLabel want) {
  return edsm::stringology::classify_type(s, ell) == want;
}

/// One instance whose members all have the wanted type for window length ell.
inline TypedApInstance typed_instance(Rng& rng, edsm::stringology::TypeLabel want, std::size_t ell,
                                      std::size_t m_max = 256) {
  using edsm::stringology::TypeLabel;
  const std::size_t lo = (9 * ell + 7) / 8, hi = (5 * ell + 3) / 4 - 1;
  const std::size_t m = uniform(rng, hi + 1, m_max);
  std::vector<std::string> roots;
  TypedApInstance inst;
  inst.ell = ell;
  inst.pattern = want == TypeLabel::Type1 && coin(rng, 0.5) ? random_string(rng, m, "ab")
                                                            : mixed_pattern(rng, m, ell, roots);
  const std::size_t count = uniform(rng, 1, 6);
  for (int attempt = 0; inst.members.size() < count && attempt < 400; ++attempt) {
    const std::size_t len = uniform(rng, lo, hi);
    std::string cand;
    if (attempt % 3 != 2 && len <= inst.pattern.size()) {
      cand = inst.pattern.substr(uniform(rng, 0, inst.pattern.size() - len), len);
      if (coin(rng, 0.15)) cand[uniform(rng, 0, len - 1)] ^= ('a' ^ 'b');
    } else if (want == TypeLabel::Type1) {
      cand = random_string(rng, len, "ab");
    } else {
      const std::string root = !roots.empty() && coin(rng, 0.7) ? roots[uniform(rng, 0, roots.size() - 1)]
                                                                 : random_string(rng, uniform(rng, 1, ell / 4), "ab");
      if (want == TypeLabel::Type3) {
        cand = periodic_from(root, uniform(rng, 0, root.size() - 1), len);
      } else {
        const std::size_t run = uniform(rng, ell, len - 1);
        const std::size_t left = uniform(rng, 0, len - run);
        cand = random_string(rng, left, "ab") + periodic_from(root, uniform(rng, 0, root.size() - 1), run) +
               random_string(rng, len - run - left, "ab");
      }
    }
    if (has_type(cand, ell, want)) inst.members.push_back(cand);
  }
  inst.u = random_bits(rng, inst.pattern.size(), coin(rng, 0.5) ? 0.3 : 0.05);
  return inst;
}

}  // namespace testing_support
