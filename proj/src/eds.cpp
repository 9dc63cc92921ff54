#include "edsm/eds.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_set>

namespace edsm {

namespace symbols {
namespace {
// [first byte, capacity] per kind 1..5.
constexpr std::array<std::pair<int, int>, kKinds> kRanges{{
    {0x80, 4},
    {0x84, 4},
    {0x88, 24},
    {0xA0, 24},
    {0xB8, 72},
}};
}  // namespace

int capacity(int kind) {
  if (kind < 1 || kind > kKinds) return 0;
  return kRanges[kind - 1].second;
}

std::optional<unsigned char> encode(int kind, int id) {
  if (kind < 1 || kind > kKinds) return std::nullopt;
  const auto [first, cap] = kRanges[kind - 1];
  if (id < 1 || id > cap) return std::nullopt;
  return static_cast<unsigned char>(first + id - 1);
}

std::optional<std::pair<int, int>> decode(unsigned char byte) {
  for (int k = 0; k < kKinds; ++k) {
    const auto [first, cap] = kRanges[k];
    if (byte >= first && byte < first + cap) return std::pair{k + 1, byte - first + 1};
  }
  return std::nullopt;
}
}  // namespace symbols

bool is_letter(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
         symbols::decode(c).has_value();
}

namespace {
bool is_space(int c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; }
bool is_plain_letter(int c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}
}  // namespace

Segment::Segment(std::vector<std::string> alternatives) {
  if (alternatives.empty()) throw std::invalid_argument("Segment: no alternatives");
  std::unordered_set<std::string> seen;
  for (auto& a : alternatives) {
    for (unsigned char c : a) {
      if (!is_letter(c)) throw std::invalid_argument("Segment: illegal letter");
    }
    if (!seen.insert(a).second) continue;
    if (a.empty()) has_epsilon_ = true;
    weight_ += a.size();
    alts_.push_back(std::move(a));
  }
}

bool Segment::same_set(const Segment& other) const {
  if (alts_.size() != other.alts_.size()) return false;
  auto a = alts_;
  auto b = other.alts_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

EDString::EDString(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw std::invalid_argument("EDString: at least one segment required");
  for (const auto& s : segments_) {
    if (s.size() == 0) throw std::invalid_argument("EDString: empty segment");
    size_ += s.weight();
  }
}

bool EDString::same_as(const EDString& other) const {
  if (length() != other.length()) return false;
  for (std::size_t i = 0; i < length(); ++i) {
    if (!segments_[i].same_set(other.segments_[i])) return false;
  }
  return true;
}

Pattern::Pattern(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("Pattern: length must be at least 1");
  for (unsigned char c : letters_) {
    if (!is_letter(c)) throw std::invalid_argument("Pattern: illegal letter");
  }
}

// ---------------------------------------------------------------------------
// SegmentReader

int SegmentReader::get_raw() {
  const int c = in_.get();
  if (c != std::char_traits<char>::eof()) ++offset_;
  return c;
}

int SegmentReader::peek_significant() {
  for (;;) {
    const int c = in_.peek();
    if (c == std::char_traits<char>::eof() || !is_space(c)) return c;
    get_raw();
  }
}

unsigned char SegmentReader::read_escape() {
  const std::size_t start = offset_;
  get_raw();  // '<'
  std::string body;
  for (;;) {
    const int c = get_raw();
    if (c == std::char_traits<char>::eof()) throw ParseError("unterminated symbol escape", start);
    if (c == '>') break;
    body.push_back(static_cast<char>(c));
    if (body.size() > 16) throw ParseError("malformed symbol escape", start);
  }
  const auto colon = body.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == body.size()) {
    throw ParseError("malformed symbol escape", start);
  }
  int kind = 0;
  int id = 0;
  try {
    std::size_t used = 0;
    kind = std::stoi(body.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
    id = std::stoi(body.substr(colon + 1), &used);
    if (used != body.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("malformed symbol escape", start);
  }
  const auto byte = symbols::encode(kind, id);
  if (!byte) throw ParseError("symbol escape out of range", start);
  return *byte;
}

std::optional<Segment> SegmentReader::next() {
  int c = peek_significant();
  if (c == std::char_traits<char>::eof()) {
    if (count_ == 0) throw ParseError("empty input", offset_);
    return std::nullopt;
  }
  if (c == '}') throw ParseError("unbalanced '}'", offset_);
  if (c == ',') throw ParseError("illegal character ','", offset_);

  std::vector<std::string> alts;
  if (c == '{') {
    const std::size_t open_at = offset_;
    get_raw();
    std::string cur;
    for (;;) {
      c = peek_significant();
      if (c == std::char_traits<char>::eof()) throw ParseError("unbalanced '{'", open_at);
      if (c == '}') {
        get_raw();
        alts.push_back(std::move(cur));
        break;
      }
      if (c == ',') {
        get_raw();
        alts.push_back(std::move(cur));
        cur.clear();
      } else if (c == '<') {
        cur.push_back(static_cast<char>(read_escape()));
      } else if (is_plain_letter(c)) {
        cur.push_back(static_cast<char>(get_raw()));
      } else if (c == '{') {
        throw ParseError("nested '{'", offset_);
      } else {
        throw ParseError("illegal character", offset_);
      }
    }
  } else {
    std::string cur;
    for (;;) {
      c = peek_significant();
      if (c == std::char_traits<char>::eof() || c == '{' || c == '}') break;
      if (c == '<') {
        cur.push_back(static_cast<char>(read_escape()));
      } else if (is_plain_letter(c)) {
        cur.push_back(static_cast<char>(get_raw()));
      } else {
        throw ParseError("illegal character", offset_);
      }
    }
    if (cur.empty()) throw ParseError("empty bare unit", offset_);
    alts.push_back(std::move(cur));
  }
  ++count_;
  return Segment(std::move(alts));
}

EDString parse_eds(std::istream& in) {
  SegmentReader reader(in);
  std::vector<Segment> segs;
  while (auto s = reader.next()) segs.push_back(std::move(*s));
  return EDString(std::move(segs));
}

EDString parse_eds(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_eds(in);
}

std::string parse_letters(std::string_view text) {
  std::istringstream in{std::string(text)};
  SegmentReader reader(in);
  auto seg = reader.next();
  if (!seg || seg->size() != 1 || seg->contains_epsilon()) {
    throw ParseError("expected a bare string", 0);
  }
  if (reader.next()) throw ParseError("expected a single bare string", 0);
  return seg->alternatives().front();
}

std::string escape_letters(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if (auto sym = symbols::decode(c)) {
      out += '<' + std::to_string(sym->first) + ':' + std::to_string(sym->second) + '>';
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::string serialize_eds(const EDString& t) {
  std::string out;
  bool prev_bare = false;
  for (const auto& seg : t.segments()) {
    const auto& alts = seg.alternatives();
    // Two bare units in a row would merge on re-parse.
    if (alts.size() == 1 && !alts.front().empty() && !prev_bare) {
      out += escape_letters(alts.front());
      prev_bare = true;
      continue;
    }
    out.push_back('{');
    for (std::size_t k = 0; k < alts.size(); ++k) {
      if (k) out.push_back(',');
      out += escape_letters(alts[k]);
    }
    out.push_back('}');
    prev_bare = false;
  }
  return out;
}

}  // namespace edsm
