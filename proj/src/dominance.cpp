#include "edsm/dominance.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace edsm::dominance {

namespace {

struct Item {
  std::int64_t key;
  std::int64_t other;
  bool red;
  std::size_t id;
};

using Emit = std::function<void(std::span<const std::size_t>, std::span<const std::size_t>)>;

// Ties put blue first so that a red sorts after every blue it equals.
void sort_items(std::vector<Item>& items) {
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.red < b.red;
  });
}

std::size_t depth_limit(std::size_t n) { return static_cast<std::size_t>(std::bit_width(n)) + 1; }

void split_1d(std::span<const Item> items, std::size_t depth, std::size_t limit, const Emit& emit,
              std::vector<std::size_t>& rbuf, std::vector<std::size_t>& bbuf) {
  assert(depth <= limit);
  (void)limit;
  if (items.size() < 2) return;
  bool any_red = false, any_blue = false;
  for (const auto& it : items) (it.red ? any_red : any_blue) = true;
  if (!any_red || !any_blue) return;
  const std::size_t mid = items.size() / 2;
  rbuf.clear();
  bbuf.clear();
  for (std::size_t k = mid; k < items.size(); ++k) {
    if (items[k].red) rbuf.push_back(items[k].id);
  }
  for (std::size_t k = 0; k < mid; ++k) {
    if (!items[k].red) bbuf.push_back(items[k].id);
  }
  if (!rbuf.empty() && !bbuf.empty()) emit(rbuf, bbuf);
  split_1d(items.first(mid), depth + 1, limit, emit, rbuf, bbuf);
  split_1d(items.subspan(mid), depth + 1, limit, emit, rbuf, bbuf);
}

void split_2d(std::span<const Item> items, std::size_t depth, std::size_t limit, const Emit& emit,
              std::vector<std::size_t>& rbuf, std::vector<std::size_t>& bbuf) {
  assert(depth <= limit);
  if (items.size() < 2) return;
  bool any_red = false, any_blue = false;
  for (const auto& it : items) (it.red ? any_red : any_blue) = true;
  if (!any_red || !any_blue) return;
  const std::size_t mid = items.size() / 2;
  // Reds right of the split beat blues left of it on x; settle y.
  std::vector<Item> cross;
  for (std::size_t k = mid; k < items.size(); ++k) {
    if (items[k].red) cross.push_back({items[k].other, items[k].key, true, items[k].id});
  }
  if (!cross.empty()) {
    const std::size_t reds = cross.size();
    for (std::size_t k = 0; k < mid; ++k) {
      if (!items[k].red) cross.push_back({items[k].other, items[k].key, false, items[k].id});
    }
    if (cross.size() > reds) {
      sort_items(cross);
      split_1d(cross, 0, depth_limit(cross.size()), emit, rbuf, bbuf);
    }
  }
  split_2d(items.first(mid), depth + 1, limit, emit, rbuf, bbuf);
  split_2d(items.subspan(mid), depth + 1, limit, emit, rbuf, bbuf);
}

}  // namespace

void decompose(std::vector<Point> reds, std::vector<Point> blues, const Emit& emit) {
  if (reds.empty() || blues.empty()) return;
  std::vector<Item> items;
  items.reserve(reds.size() + blues.size());
  for (const auto& p : reds) items.push_back({p.x, p.y, true, p.id});
  for (const auto& p : blues) items.push_back({p.x, p.y, false, p.id});
  sort_items(items);
  std::vector<std::size_t> rbuf, bbuf;
  split_2d(items, 0, depth_limit(items.size()), emit, rbuf, bbuf);
}

std::vector<std::pair<std::size_t, std::size_t>> dominating_pairs_naive(const std::vector<Point>& reds,
                                                                        const std::vector<Point>& blues) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& r : reds) {
    for (const auto& b : blues) {
      if (dominates(r, b)) out.emplace_back(r.id, b.id);
    }
  }
  return out;
}

}  // namespace edsm::dominance
