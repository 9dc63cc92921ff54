#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edsm::stringology {

enum class TypeLabel { Type1, Type2, Type3 };

const char* to_string(TypeLabel t);

/// Maximal l-periodic substring s[start..end] (1-based, inclusive).
struct PeriodicRun {
  std::size_t start;
  std::size_t end;
  std::size_t period;

  std::size_t length() const { return end - start + 1; }
  bool operator==(const PeriodicRun&) const = default;
};

/// Border array: border[i] is the length of the longest proper border of s[0..i].
std::vector<std::size_t> border_array(std::string_view s);

/// Smallest period of s. Throws on empty input.
std::size_t period(std::string_view s);

/// per(s) <= |s|/4, compared exactly.
bool is_strongly_periodic(std::string_view s);

/// Lexicographically smallest rotation of s[0..period(s)).
std::string word_root(std::string_view s);

/// Index (0-based) where the smallest rotation of s starts.
std::size_t min_rotation_start(std::string_view s);

/// Classifies s against window length l. Requires 9/8*l <= |s| < 5/4*l.
TypeLabel classify_type(std::string_view s, std::size_t l);

/// The unique maximal l-periodic substring of s, for |s| <= 5/4*l.
std::optional<PeriodicRun> maximal_periodic_run(std::string_view s, std::size_t l);

/// All maximal l-periodic substrings of s, ordered by start.
std::vector<PeriodicRun> all_maximal_runs(std::string_view s, std::size_t l);

/// x/4 >= p for integers, without rounding.
inline bool within_quarter(std::size_t p, std::size_t x) { return 4 * p <= x; }

}  // namespace edsm::stringology
