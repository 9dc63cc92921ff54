#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edsm/bitvector.hpp"
#include "edsm/bool_matrix.hpp"
#include "edsm/eds.hpp"
#include "edsm/match_report.hpp"
#include "edsm/poly_matrix.hpp"

// Reference implementations straight from the definitions. Only the data
// types of the other modules are used here.
namespace edsm::oracle {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Work budget: EDSM_ORACLE_BUDGET if set, else 2e8 steps.
std::uint64_t default_budget();

/// V[i+|s|] for U[i]=1 and P[i+1..i+|s|] = s.
BitVector brute_ap(const std::string& p, const BitVector& u, const std::vector<std::string>& strings);

/// Enumerates start segment, first piece, then whole alternatives for the
/// middle segments. Without a window cap every window is explored (the
/// search is bounded by the pattern length, not by the window). Throws
/// BudgetExceeded rather than truncating.
MatchReport brute_edsm(const Pattern& p, const EDString& t, std::optional<std::size_t> window_cap = std::nullopt,
                       std::optional<std::uint64_t> budget = std::nullopt);

bool brute_triangle(const linalg::BoolMatrix& a, const linalg::BoolMatrix& b, const linalg::BoolMatrix& c);

linalg::BoolMatrix naive_bool_multiply(const linalg::BoolMatrix& a, const linalg::BoolMatrix& b);
linalg::PolyMatrix naive_poly_multiply(const linalg::PolyMatrix& a, const linalg::PolyMatrix& b);
/// M x u for a 1-based bit vector u.
BitVector naive_matvec(const linalg::BoolMatrix& m, const BitVector& u);

}  // namespace edsm::oracle
