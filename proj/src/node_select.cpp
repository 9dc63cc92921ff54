#include "edsm/node_select.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace edsm::select {

BipartiteInstance::BipartiteInstance(std::size_t u_count, std::vector<std::uint64_t> weights,
                                     std::vector<std::vector<std::size_t>> neighbors, double d)
    : weight_(std::move(weights)), adj_(std::move(neighbors)), d_(d) {
  if (adj_.size() != u_count) throw std::invalid_argument("BipartiteInstance: adjacency size mismatch");
  if (!(d > 0)) throw std::invalid_argument("BipartiteInstance: d must be positive");
  radj_.resize(weight_.size());
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    const double deg = static_cast<double>(adj_[u].size());
    if (!(deg > d_ && deg <= 2 * d_)) {
      throw std::invalid_argument("BipartiteInstance: deg(u" + std::to_string(u) + ")=" +
                                  std::to_string(adj_[u].size()) + " outside (d, 2d]");
    }
    for (std::size_t v : adj_[u]) {
      if (v >= weight_.size()) throw std::out_of_range("BipartiteInstance: neighbour out of range");
      radj_[v].push_back(u);
    }
  }
  for (auto w : weight_) total_ += w;
}

double BipartiteInstance::probability() const {
  return std::log(4.0 * static_cast<double>(u_count())) / d_;
}

double BipartiteInstance::weight_bound() const {
  return 4.0 * (static_cast<double>(total_) / d_) * std::log(4.0 * static_cast<double>(u_count()));
}

double BipartiteInstance::incidence_bound() const {
  const double u = static_cast<double>(u_count());
  return 8.0 * u * std::log(4.0 * u);
}

Selection make_selection(const BipartiteInstance& g, std::vector<std::size_t> chosen) {
  Selection s;
  s.chosen = std::move(chosen);
  for (std::size_t v : s.chosen) {
    s.weight += g.weight(v);
    s.incidence += g.reverse_neighbors(v).size();
  }
  return s;
}

bool is_valid(const BipartiteInstance& g, const Selection& s) {
  if (g.u_count() == 0) return true;
  std::vector<char> picked(g.v_count(), 0);
  for (std::size_t v : s.chosen) picked[v] = 1;
  for (std::size_t u = 0; u < g.u_count(); ++u) {
    bool hit = false;
    for (std::size_t v : g.neighbors(u)) hit = hit || picked[v];
    if (!hit) return false;
  }
  return static_cast<double>(s.weight) <= g.weight_bound() &&
         static_cast<double>(s.incidence) <= g.incidence_bound();
}

namespace {
Selection select_all(const BipartiteInstance& g) {
  std::vector<std::size_t> all(g.v_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  return make_selection(g, std::move(all));
}
}  // namespace

Selection solve_random(const BipartiteInstance& g, std::uint64_t seed) {
  if (g.u_count() == 0) return {};
  const double p = g.probability();
  if (p > 1.0) return select_all(g);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<std::size_t> chosen;
    for (std::size_t v = 0; v < g.v_count(); ++v) {
      if (coin(rng)) chosen.push_back(v);
    }
    Selection s = make_selection(g, std::move(chosen));
    if (is_valid(g, s)) return s;
  }
}

Selection solve_derandomized(const BipartiteInstance& g) {
  if (g.u_count() == 0) return {};
  const double p = g.probability();
  if (p > 1.0) return select_all(g);

  // Potential: sum over unhit u of (1-p)^{undecided(u)}, plus selected
  // weight / (4pW), plus selected incidence / (8pd|U|). Its expectation is
  // below 1, and a final value below 1 means every bound holds.
  std::size_t max_deg = 0;
  for (std::size_t u = 0; u < g.u_count(); ++u) max_deg = std::max(max_deg, g.neighbors(u).size());
  std::vector<double> pow_q(max_deg + 1, 1.0);
  for (std::size_t i = 1; i <= max_deg; ++i) pow_q[i] = pow_q[i - 1] * (1.0 - p);

  const double weight_scale =
      g.total_weight() > 0 ? 1.0 / (4.0 * p * static_cast<double>(g.total_weight())) : 0.0;
  const double incidence_scale = 1.0 / (8.0 * p * g.d() * static_cast<double>(g.u_count()));

  std::vector<std::size_t> undecided(g.u_count());
  std::vector<char> hit(g.u_count(), 0);
  for (std::size_t u = 0; u < g.u_count(); ++u) undecided[u] = g.neighbors(u).size();

  std::vector<std::size_t> chosen;
  for (std::size_t v = 0; v < g.v_count(); ++v) {
    const auto& us = g.reverse_neighbors(v);
    double cost_skip = 0.0;
    for (std::size_t u : us) {
      if (!hit[u]) cost_skip += pow_q[undecided[u] - 1];
    }
    const double cost_take = static_cast<double>(g.weight(v)) * weight_scale +
                             static_cast<double>(us.size()) * incidence_scale;
    const bool take = cost_take <= cost_skip;
    if (take) chosen.push_back(v);
    for (std::size_t u : us) {
      --undecided[u];
      if (take) hit[u] = 1;
    }
  }
  Selection s = make_selection(g, std::move(chosen));
  if (is_valid(g, s)) return s;
  return solve_random(g, 0x9e3779b97f4a7c15ULL);
}

}  // namespace edsm::select
