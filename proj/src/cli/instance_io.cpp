#include "instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edsm::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string load_pattern(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    text = read_file(arg.substr(1));
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  }
  return parse_letters(text);
}

nlohmann::json matrix_to_json(const linalg::BoolMatrix& m) { return m.to_rows(); }

linalg::BoolMatrix matrix_from_json(const nlohmann::json& j) {
  return linalg::BoolMatrix::from_rows(j.get<std::vector<std::string>>());
}

linalg::BoolMatrix random_matrix(Rng& rng, std::size_t n, double density) {
  linalg::BoolMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng.chance(density));
  }
  return m;
}

std::pair<std::string, EDString> random_instance(Rng& rng, const RandomTextSpec& spec) {
  std::string root;
  for (std::size_t k = 0; k < spec.repeat_root; ++k) root.push_back(spec.alphabet[rng.below(spec.alphabet.size())]);
  auto word = [&](std::size_t len) {
    std::string w;
    const std::size_t phase = root.empty() ? 0 : rng.below(root.size());
    for (std::size_t k = 0; k < len; ++k) {
      w.push_back(root.empty() ? spec.alphabet[rng.below(spec.alphabet.size())] : root[(phase + k) % root.size()]);
    }
    return w;
  };
  std::vector<Segment> segs;
  std::string walk;
  for (std::size_t i = 0; i < spec.segments; ++i) {
    std::vector<std::string> alts;
    const std::size_t k = 1 + rng.below(spec.alternatives);
    for (std::size_t a = 0; a < k; ++a) {
      if (rng.chance(spec.epsilon)) {
        alts.emplace_back();
      } else {
        alts.push_back(word(1 + rng.below(spec.max_len)));
      }
    }
    walk += alts[rng.below(alts.size())];
    segs.emplace_back(std::move(alts));
  }
  std::string pattern;
  if (!root.empty()) {
    pattern = word(spec.m);
  } else if (walk.size() >= spec.m) {
    const std::size_t at = rng.below(walk.size() - spec.m + 1);
    pattern = walk.substr(at, spec.m);
  } else {
    pattern = word(spec.m);
  }
  return {pattern, EDString(std::move(segs))};
}

}  // namespace edsm::cli
