#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace edsm::dominance {

struct Point {
  std::int64_t x;
  std::int64_t y;
  std::size_t id;
};

/// A red point dominates a blue point when red.x >= blue.x and red.y >= blue.y.
inline bool dominates(const Point& red, const Point& blue) { return red.x >= blue.x && red.y >= blue.y; }

/// Reports groups (reds, blues) of ids such that every red of a group
/// dominates every blue of it, and every dominating pair lands in exactly one
/// group. Divide and conquer on x, then on y for the cross pairs.
void decompose(std::vector<Point> reds, std::vector<Point> blues,
               const std::function<void(std::span<const std::size_t>, std::span<const std::size_t>)>& emit);

/// Quadratic reference: all dominating (red id, blue id) pairs.
std::vector<std::pair<std::size_t, std::size_t>> dominating_pairs_naive(const std::vector<Point>& reds,
                                                                        const std::vector<Point>& blues);

}  // namespace edsm::dominance
