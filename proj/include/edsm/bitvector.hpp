#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace edsm {

/// Fixed-length bit sequence addressed with 1-based indices [1, size()].
///
/// Used for the active-prefix sets of the AP problem: bit i set means the
/// prefix of the pattern of length i is active.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len);

  /// Parses a string of '0'/'1' characters; position 1 is the first char.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return len_; }

  bool test(std::size_t i) const {
    check(i);
    return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1u;
  }
  void set(std::size_t i, bool value = true) {
    check(i);
    const std::uint64_t mask = std::uint64_t{1} << ((i - 1) & 63);
    if (value) {
      words_[(i - 1) >> 6] |= mask;
    } else {
      words_[(i - 1) >> 6] &= ~mask;
    }
  }
  void reset(std::size_t i) { set(i, false); }

  /// Out-of-range reads return false instead of throwing. Used where the
  /// algorithms zero-pad slices of U.
  bool test_or_zero(std::ptrdiff_t i) const {
    if (i < 1 || static_cast<std::size_t>(i) > len_) return false;
    return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1u;
  }

  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  /// this |= other shifted up by `shift` positions; bits pushed past size()
  /// are dropped.
  void or_shifted(const BitVector& other, std::size_t shift);
  bool operator==(const BitVector& other) const = default;

  bool any() const;
  std::size_t count() const;
  void clear();

  /// Calls f(i) for every set index in increasing order.
  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int bit = __builtin_ctzll(word);
        f(w * 64 + static_cast<std::size_t>(bit) + 1);
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> set_positions() const;
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check(std::size_t i) const {
    if (i < 1 || i > len_) [[unlikely]] throw_out_of_range(i);
  }
  [[noreturn]] void throw_out_of_range(std::size_t i) const;

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace edsm
