#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace edsm::select {

/// Bipartite graph G=(U,V,E) with weights on V and every deg(u) in (d, 2d].
class BipartiteInstance {
 public:
  BipartiteInstance(std::size_t u_count, std::vector<std::uint64_t> weights,
                    std::vector<std::vector<std::size_t>> neighbors, double d);

  std::size_t u_count() const { return adj_.size(); }
  std::size_t v_count() const { return weight_.size(); }
  std::uint64_t weight(std::size_t v) const { return weight_[v]; }
  std::uint64_t total_weight() const { return total_; }
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adj_[u]; }
  const std::vector<std::size_t>& reverse_neighbors(std::size_t v) const { return radj_[v]; }
  double d() const { return d_; }

  /// ln(4|U|)/d, the sampling probability before clamping.
  double probability() const;
  double weight_bound() const;
  double incidence_bound() const;

 private:
  std::vector<std::uint64_t> weight_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<std::size_t>> radj_;
  std::uint64_t total_ = 0;
  double d_;
};

struct Selection {
  std::vector<std::size_t> chosen;  // ascending
  std::uint64_t weight = 0;
  std::size_t incidence = 0;
};

/// Fills weight/incidence for a chosen set.
Selection make_selection(const BipartiteInstance& g, std::vector<std::size_t> chosen);

/// Every neighbourhood hit and both bounds respected.
bool is_valid(const BipartiteInstance& g, const Selection& s);

/// Las Vegas sampling; retries until is_valid.
Selection solve_random(const BipartiteInstance& g, std::uint64_t seed);

/// Method of conditional expectations; falls back to solve_random if the
/// floating-point run ever produces an invalid selection.
Selection solve_derandomized(const BipartiteInstance& g);

}  // namespace edsm::select
