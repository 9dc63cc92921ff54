#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edsm {

// Text format
// -----------
// An ED string is a concatenation of units. A unit is either a bare string
// (one deterministic segment) or `{alt1,alt2,...}` where each alternative may
// be empty (the empty string). Whitespace is ignored everywhere. Letters are
// ASCII alphanumerics; generated instances may additionally use tagged
// symbols written as `<k:id>` (kind k in 1..5, id >= 1), which map to
// reserved bytes >= 0x80.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Tagged symbols used by the reduction generators.
namespace symbols {
inline constexpr int kKinds = 5;
/// Byte for symbol (kind, id), or nullopt if the id exceeds the kind's range.
std::optional<unsigned char> encode(int kind, int id);
/// Inverse of encode for reserved bytes.
std::optional<std::pair<int, int>> decode(unsigned char byte);
/// Number of ids available for a kind.
int capacity(int kind);
}  // namespace symbols

bool is_letter(unsigned char c);

/// One set of alternatives. Alternatives are distinct; the first-seen order
/// is kept.
class Segment {
 public:
  Segment() = default;
  explicit Segment(std::vector<std::string> alternatives);

  const std::vector<std::string>& alternatives() const { return alts_; }
  std::size_t size() const { return alts_.size(); }
  bool contains_epsilon() const { return has_epsilon_; }
  /// Total letter count over all alternatives.
  std::size_t weight() const { return weight_; }

  /// Set equality of alternatives.
  bool same_set(const Segment& other) const;

 private:
  std::vector<std::string> alts_;
  bool has_epsilon_ = false;
  std::size_t weight_ = 0;
};

class EDString {
 public:
  EDString() = default;
  explicit EDString(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }
  /// Number of segments.
  std::size_t length() const { return segments_.size(); }
  /// Total number of letters.
  std::size_t size() const { return size_; }

  bool same_as(const EDString& other) const;

 private:
  std::vector<Segment> segments_;
  std::size_t size_ = 0;
};

class Pattern {
 public:
  explicit Pattern(std::string letters);
  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

 private:
  std::string letters_;
};

/// Pull-style reader producing one segment at a time from a byte stream.
class SegmentReader {
 public:
  explicit SegmentReader(std::istream& in) : in_(in) {}

  /// Next segment, or nullopt at end of input. Throws ParseError.
  std::optional<Segment> next();
  std::size_t segments_read() const { return count_; }

 private:
  int peek_significant();
  int get_raw();
  unsigned char read_escape();

  std::istream& in_;
  std::size_t offset_ = 0;
  std::size_t count_ = 0;
};

EDString parse_eds(std::string_view text);
EDString parse_eds(std::istream& in);

/// Parses a bare string of letters/escapes (used for patterns).
std::string parse_letters(std::string_view text);

std::string serialize_eds(const EDString& t);
/// Renders a byte string with reserved bytes escaped.
std::string escape_letters(std::string_view s);

}  // namespace edsm
