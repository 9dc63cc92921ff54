#include "edsm/bitvector.hpp"

#include <stdexcept>

namespace edsm {

BitVector::BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {
  if (len == 0) throw std::invalid_argument("BitVector: length must be positive");
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i + 1);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector: expected '0' or '1'");
    }
  }
  return v;
}

void BitVector::throw_out_of_range(std::size_t i) const {
  throw std::out_of_range("BitVector: index " + std::to_string(i) + " outside [1, " + std::to_string(len_) + "]");
}

BitVector& BitVector::operator|=(const BitVector& other) {
  if (other.len_ != len_) throw std::invalid_argument("BitVector: length mismatch in |=");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.len_ != len_) throw std::invalid_argument("BitVector: length mismatch in &=");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

void BitVector::or_shifted(const BitVector& other, std::size_t shift) {
  const std::size_t ws = shift / 64, bs = shift % 64;
  const std::size_t nw = words_.size();
  for (std::size_t w = nw; w-- > ws;) {
    const std::size_t src = w - ws;
    if (src >= other.words_.size()) continue;
    std::uint64_t x = other.words_[src] << bs;
    if (bs && src > 0) x |= other.words_[src - 1] >> (64 - bs);
    words_[w] |= x;
  }
  if (len_ % 64) words_.back() &= (std::uint64_t{1} << (len_ % 64)) - 1;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

void BitVector::clear() {
  for (auto& w : words_) w = 0;
}

std::vector<std::size_t> BitVector::set_positions() const {
  std::vector<std::size_t> out;
  for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for_each_set([&](std::size_t i) { s[i - 1] = '1'; });
  return s;
}

}  // namespace edsm
