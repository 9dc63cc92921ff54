#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edsm/bitvector.hpp"
#include "edsm/bool_matrix.hpp"
#include "edsm/eds.hpp"

namespace edsm::reduce {

/// Triangle detection input: is there i,j,k with A[i,j]=B[j,k]=C[k,i]=1.
struct TDInstance {
  linalg::BoolMatrix a;
  linalg::BoolMatrix b;
  linalg::BoolMatrix c;
  std::size_t s;
};

struct TdEncoding {
  Pattern pattern;
  EDString text;
  std::size_t z;            // real parts, N s^2
  std::size_t z_padded;     // rounded up to a power of two with filler parts
  std::size_t part_length;  // 2N/s + 8
};

/// P is the concatenation of the parts v(i) x a^{N/s} x $$ y a^{N/s} y v(i)
/// in lexicographic (i, x, y) order. The text is the dyadic prefix sets,
/// the three sets encoding A, B, C, then the dyadic suffix sets.
/// P occurs in the text iff the matrices contain a triangle.
TdEncoding td_to_edsm(const TDInstance& inst);

struct APReductionBlock {
  std::size_t K;
  std::size_t J;
  std::size_t L;
  std::string pattern;  // (a^L b a^L)^N
  BitVector u;
  std::vector<std::string> strings;
  std::optional<BitVector> v;  // filled in by the caller after solving
};

/// (N/L)^2 AP instances, K outer, J inner.
std::vector<APReductionBlock> bmm_to_ap(const linalg::BoolMatrix& a, const linalg::BoolMatrix& b, std::size_t l);

/// C[i, (J-1)L + j'] = OR over K of the j'-th bit of the second half of
/// gadget i in V^(K,J).
linalg::BoolMatrix reconstruct_bmm(const std::vector<APReductionBlock>& blocks);

/// The 6x6 pair used as the worked example for bmm_to_ap with L = 3.
std::pair<linalg::BoolMatrix, linalg::BoolMatrix> worked_bmm_example();

}  // namespace edsm::reduce
