#include "edsm/oracles.hpp"

#include <cstdlib>
#include <string_view>

namespace edsm::oracle {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("EDSM_ORACLE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("EDSM_ORACLE_BUDGET is not a number");
    }
  }
  return 200'000'000ULL;
}

BitVector brute_ap(const std::string& p, const BitVector& u, const std::vector<std::string>& strings) {
  const std::size_t m = p.size();
  if (u.size() != m) throw std::invalid_argument("brute_ap: |U| != |P|");
  BitVector v(m);
  for (std::size_t i = 1; i <= m; ++i) {
    if (!u.test(i)) continue;
    for (const auto& s : strings) {
      if (i + s.size() > m) continue;
      if (p.compare(i, s.size(), s) == 0) v.set(i + s.size());
    }
  }
  return v;
}

namespace {

struct EdsmSearch {
  const std::string& p;
  const EDString& t;
  std::size_t last_segment;  // inclusive, 0-based
  std::uint64_t budget;
  std::uint64_t spent = 0;
  std::vector<char> ends;

  void charge(std::uint64_t w) {
    spent += w + 1;
    if (spent > budget) throw BudgetExceeded("brute_edsm: work budget exceeded");
  }

  // P[0..k) matched through segment j-1; try segment j.
  void extend(std::size_t j, std::size_t k) {
    const std::size_t m = p.size();
    if (j > last_segment) return;
    for (const auto& a : t[j].alternatives()) {
      charge(a.size());
      // Last piece: non-empty prefix of a equal to P[k..m).
      if (a.size() >= m - k && a.compare(0, m - k, p, k, m - k) == 0) ends[j] = 1;
      // Middle piece: the whole alternative, leaving room for a last piece.
      if (k + a.size() < m && p.compare(k, a.size(), a) == 0) extend(j + 1, k + a.size());
    }
  }
};

}  // namespace

MatchReport brute_edsm(const Pattern& pat, const EDString& t, std::optional<std::size_t> window_cap,
                       std::optional<std::uint64_t> budget) {
  const std::string& p = pat.letters();
  const std::size_t m = p.size();
  const std::size_t n = t.length();
  std::vector<char> ends(n, 0);
  std::uint64_t spent = 0;
  const std::uint64_t limit = budget.value_or(default_budget());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& a : t[i].alternatives()) {
      // Single segment: P inside one alternative.
      if (a.find(p) != std::string::npos) ends[i] = 1;
      spent += a.size() + 1;
    }
    if (window_cap && *window_cap < 2) continue;
    const std::size_t last = window_cap ? std::min(n - 1, i + *window_cap - 1) : n - 1;
    EdsmSearch search{p, t, last, limit, spent, std::vector<char>(n, 0)};
    for (const auto& a : t[i].alternatives()) {
      // First piece: non-empty proper prefix of P that is a suffix of a.
      for (std::size_t len = 1; len < m && len <= a.size(); ++len) {
        search.charge(len);
        if (a.compare(a.size() - len, len, p, 0, len) == 0) search.extend(i + 1, len);
      }
    }
    spent = search.spent;
    for (std::size_t j = 0; j < n; ++j) ends[j] = ends[j] || search.ends[j];
  }
  MatchReport r;
  for (std::size_t j = 0; j < n; ++j) {
    if (ends[j]) r.positions.push_back(j + 1);
  }
  return r;
}

bool brute_triangle(const linalg::BoolMatrix& a, const linalg::BoolMatrix& b, const linalg::BoolMatrix& c) {
  const std::size_t n = a.rows();
  for (const auto* x : {&a, &b, &c}) {
    if (x->rows() != n || x->cols() != n) throw std::invalid_argument("brute_triangle: matrices must be n x n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (b.get(j, k) && c.get(k, i)) return true;
      }
    }
  }
  return false;
}

linalg::BoolMatrix naive_bool_multiply(const linalg::BoolMatrix& a, const linalg::BoolMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("naive_bool_multiply: dimension mismatch");
  linalg::BoolMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool x = false;
      for (std::size_t k = 0; k < a.cols() && !x; ++k) x = a.get(i, k) && b.get(k, j);
      c.set(i, j, x);
    }
  }
  return c;
}

linalg::PolyMatrix naive_poly_multiply(const linalg::PolyMatrix& a, const linalg::PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("naive_poly_multiply: dimension mismatch");
  linalg::PolyMatrix c(a.rows(), b.cols(), a.degree() + b.degree());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        for (std::size_t x = 0; x <= a.degree(); ++x) {
          for (std::size_t y = 0; y <= b.degree(); ++y) {
            const std::int64_t prod = a.coef(i, k, x) * b.coef(k, j, y);
            if (prod) c.add_coef(i, j, x + y, prod);
          }
        }
      }
    }
  }
  return c;
}

BitVector naive_matvec(const linalg::BoolMatrix& m, const BitVector& u) {
  if (u.size() != m.cols()) throw std::invalid_argument("naive_matvec: length mismatch");
  BitVector v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c) && u.test(c + 1)) {
        v.set(r + 1);
        break;
      }
    }
  }
  return v;
}

}  // namespace edsm::oracle
