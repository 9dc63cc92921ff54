#pragma once

#include <cstddef>
#include <vector>

namespace edsm {

struct MatchReport {
  std::vector<std::size_t> positions;  // ascending, 1-based segment indices
  bool operator==(const MatchReport&) const = default;
};

}  // namespace edsm
