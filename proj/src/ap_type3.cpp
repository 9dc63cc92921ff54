// Type 3: members and runs of P grouped by root; short exponents through a
// polynomial-matrix product, long ones enumerated.
#include <algorithm>
#include <map>
#include <stdexcept>

#include "edsm/ap_engine.hpp"
#include "edsm/poly_matrix.hpp"

namespace edsm::ap {

RootTriple root_triple(std::size_t psi, std::size_t len, std::size_t r) {
  if (r == 0 || psi >= r) throw std::invalid_argument("root_triple: phase outside the root");
  const std::size_t i = psi + 1;
  const std::size_t head = r - i + 1;
  if (len <= head) throw std::invalid_argument("root_triple: member shorter than its first root piece");
  const std::size_t rest = len - head;
  const std::size_t beta = (rest + r - 1) / r - 1;
  return {i, rest - beta * r, beta};
}

void apply_periodic_run(const BitVector& u, std::size_t a, std::size_t b, std::size_t r, std::size_t phi,
                        const std::vector<RootTriple>& triples, BitVector& v, std::optional<std::size_t> beta_limit) {
  if (triples.empty()) return;
  if (r == 0 || phi >= r || a > b || b > v.size()) throw std::invalid_argument("apply_periodic_run: bad run");
  // Local coordinate t = position - a0 puts phase 0 of R at t = 0.
  const auto a0 = static_cast<std::ptrdiff_t>(a) - static_cast<std::ptrdiff_t>(phi);
  const auto run_a = static_cast<std::ptrdiff_t>(a);
  const auto run_b = static_cast<std::ptrdiff_t>(b);
  const std::size_t alpha = (static_cast<std::size_t>(run_b - a0 + 1) + r - 1) / r;
  const std::size_t c = std::max<std::size_t>(1, (alpha + r - 1) / r);
  const std::size_t limit = beta_limit.value_or(c);

  auto ubit = [&](std::size_t t) {
    const std::ptrdiff_t pos = a0 + static_cast<std::ptrdiff_t>(t);
    return pos >= run_a && u.test_or_zero(pos - 1);
  };
  auto emit = [&](std::size_t e) {
    const std::ptrdiff_t pos = a0 + static_cast<std::ptrdiff_t>(e);
    if (pos >= 1 && pos <= run_b) v.set(static_cast<std::size_t>(pos));
  };
  auto end_of = [r](std::size_t gamma, const RootTriple& x) { return (gamma + x.beta + 1) * r + x.j - 1; };

  std::vector<RootTriple> small;
  for (const auto& x : triples) {
    if (x.i < 1 || x.i > r || x.j < 1 || x.j > r) throw std::invalid_argument("apply_periodic_run: bad triple");
    if (x.beta <= limit) {
      small.push_back(x);
      continue;
    }
    for (std::size_t gamma = 0;; ++gamma) {
      const std::size_t e = end_of(gamma, x);
      if (a0 + static_cast<std::ptrdiff_t>(e) > run_b) break;
      if (ubit(gamma * r + x.i - 1)) emit(e);
    }
  }
  if (small.empty()) return;

  std::size_t max_beta = 0;
  for (const auto& x : small) max_beta = std::max(max_beta, x.beta);
  // A[k][i] = sum over gamma' < w of Ubit((k w + gamma') r + i - 1) X^gamma'.
  const std::size_t w = c;
  const std::size_t chunks = (alpha + w - 1) / w;
  linalg::PolyMatrix am(chunks, r, w - 1);
  bool any = false;
  for (std::size_t k = 0; k < chunks; ++k) {
    for (std::size_t g = 0; g < w; ++g) {
      for (std::size_t i = 1; i <= r; ++i) {
        if (ubit((k * w + g) * r + i - 1)) {
          am.set_coef(k, i - 1, g, 1);
          any = true;
        }
      }
    }
  }
  if (!any) return;
  linalg::PolyMatrix mm(r, r, max_beta);
  for (const auto& x : small) mm.set_coef(x.i - 1, x.j - 1, x.beta, 1);
  const auto cm = linalg::poly_multiply(am, mm);
  for (std::size_t k = 0; k < chunks; ++k) {
    for (std::size_t j = 1; j <= r; ++j) {
      const auto poly = cm.entry(k, j - 1);
      for (std::size_t q = 0; q < poly.size(); ++q) {
        if (poly[q] > 0) emit((k * w + q + 1) * r + j - 1);
      }
    }
  }
}

BitVector solve_type3(const PatternIndex& idx, const BitVector& u, const std::vector<std::string_view>& members,
                      std::size_t ell) {
  if (u.size() != idx.m()) throw std::invalid_argument("solve_type3: |U| != m");
  std::map<std::string, std::vector<RootTriple>> by_root;
  for (auto s : members) {
    if (8 * s.size() < 9 * ell || 4 * s.size() >= 5 * ell) {
      throw std::invalid_argument("solve_type3: member outside the class of ell=" + std::to_string(ell));
    }
    const std::size_t p = stringology::period(s);
    if (!stringology::within_quarter(p, ell)) throw std::invalid_argument("solve_type3: member is not of type 3");
    const std::size_t rs = stringology::min_rotation_start(s.substr(0, p));
    std::string root(s.substr(rs, p - rs));
    root.append(s.substr(0, rs));
    by_root[root].push_back(root_triple((p - rs) % p, s.size(), p));
  }
  for (auto& [root, list] : by_root) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  BitVector v(idx.m());
  const std::string_view pat = idx.pattern();
  for (const auto& run : idx.runs(ell)) {
    const std::size_t p = run.period;
    const std::string_view head = pat.substr(run.start - 1, p);
    const std::size_t rs = stringology::min_rotation_start(head);
    std::string root(head.substr(rs));
    root.append(head.substr(0, rs));
    const auto it = by_root.find(root);
    if (it == by_root.end()) continue;
    apply_periodic_run(u, run.start, run.end, p, (p - rs) % p, it->second, v);
  }
  return v;
}

}  // namespace edsm::ap
