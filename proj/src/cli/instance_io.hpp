#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "edsm/bool_matrix.hpp"
#include "edsm/eds.hpp"

namespace edsm::cli {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

/// Pattern argument: inline letters, or @path to a file (trailing newline
/// stripped). Both accept `<k:id>` escapes.
std::string load_pattern(const std::string& arg);

nlohmann::json matrix_to_json(const linalg::BoolMatrix& m);
linalg::BoolMatrix matrix_from_json(const nlohmann::json& j);

/// Deterministic draws: only raw engine output is used, so instances are
/// byte-identical for a seed on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  bool chance(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 eng_;
};

linalg::BoolMatrix random_matrix(Rng& rng, std::size_t n, double density);

struct RandomTextSpec {
  std::size_t m = 16;
  std::size_t segments = 64;
  std::size_t alternatives = 4;
  std::size_t max_len = 8;
  double epsilon = 0.1;
  std::string alphabet = "ab";
  /// 0: letters drawn uniformly. r > 0: everything is cut from one tandem
  /// repeat of a random root of length r, so that long prefixes of the
  /// pattern stay active.
  std::size_t repeat_root = 0;
};

/// Pattern plus ED text over a small alphabet. The pattern is read off a
/// random walk through the text so that occurrences exist.
std::pair<std::string, EDString> random_instance(Rng& rng, const RandomTextSpec& spec);

}  // namespace edsm::cli
