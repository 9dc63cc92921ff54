#include "edsm/reductions.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace edsm::reduce {

namespace {

char sym(int kind, int id) {
  const auto b = symbols::encode(kind, id);
  if (!b) {
    throw std::invalid_argument("td_to_edsm: needs symbol id " + std::to_string(id) + " of kind " +
                                std::to_string(kind) + " (capacity " + std::to_string(symbols::capacity(kind)) + ")");
  }
  return static_cast<char>(*b);
}

}  // namespace

TdEncoding td_to_edsm(const TDInstance& inst) {
  const std::size_t n = inst.a.rows();
  for (const auto* x : {&inst.a, &inst.b, &inst.c}) {
    if (x->rows() != n || x->cols() != n) throw std::invalid_argument("td_to_edsm: matrices must be N x N");
  }
  const std::size_t s = inst.s;
  if (s == 0 || n % s != 0) throw std::invalid_argument("td_to_edsm: s must divide N");
  const std::size_t q = n / s;
  const std::size_t z = n * s * s;
  const std::size_t zp = std::bit_ceil(z);

  const char a = sym(1, 1);
  const char dollar = sym(2, 1);
  const std::string as(q, a);
  auto part = [&](int vid, int x, int y) {
    std::string out;
    out += sym(5, vid);
    out += sym(3, x);
    out += as;
    out += sym(3, x);
    out += dollar;
    out += dollar;
    out += sym(4, y);
    out += as;
    out += sym(4, y);
    out += sym(5, vid);
    return out;
  };
  std::vector<std::string> parts;
  parts.reserve(zp);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t x = 1; x <= s; ++x) {
      for (std::size_t y = 1; y <= s; ++y) parts.push_back(part(int(i), int(x), int(y)));
    }
  }
  // Filler parts carry fresh v symbols that no middle string contains.
  for (std::size_t f = 1; parts.size() < zp; ++f) parts.push_back(part(int(n + f), 1, 1));

  std::string pattern;
  for (const auto& p : parts) pattern += p;

  auto concat = [&](std::size_t from, std::size_t count) {
    std::string out;
    for (std::size_t k = from; k < from + count; ++k) out += parts[k];
    return out;
  };
  const auto levels = static_cast<std::size_t>(std::countr_zero(zp));
  std::vector<Segment> segs;
  for (std::size_t i = 1; i <= levels; ++i) {
    const std::size_t stride = zp >> (i - 1), len = zp >> i;
    std::vector<std::string> alts{""};
    for (std::size_t j = 0; j < (std::size_t{1} << (i - 1)); ++j) alts.push_back(concat(j * stride, len));
    segs.emplace_back(std::move(alts));
  }

  // A set with no strings becomes one unmatched letter, so the text stays
  // well formed and nothing can pass through it.
  const std::string blocker(1, sym(2, 2));
  auto middle = [&](std::vector<std::string> alts) {
    if (alts.empty()) alts.push_back(blocker);
    segs.emplace_back(std::move(alts));
  };
  std::vector<std::string> x1, x2, x3;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t x = 1; x <= s; ++x) {
      for (std::size_t j = 1; j <= q; ++j) {
        if (inst.a.get(i - 1, (x - 1) * q + j - 1)) x1.push_back(sym(5, int(i)) + (sym(3, int(x)) + std::string(j, a)));
      }
    }
  }
  for (std::size_t x = 1; x <= s; ++x) {
    for (std::size_t y = 1; y <= s; ++y) {
      for (std::size_t j = 1; j <= q; ++j) {
        for (std::size_t k = 1; k <= q; ++k) {
          if (!inst.b.get((x - 1) * q + j - 1, (y - 1) * q + k - 1)) continue;
          std::string str(q - j, a);
          str += sym(3, int(x));
          str += dollar;
          str += dollar;
          str += sym(4, int(y));
          str += std::string(q - k, a);
          x2.push_back(std::move(str));
        }
      }
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t y = 1; y <= s; ++y) {
      for (std::size_t k = 1; k <= q; ++k) {
        if (inst.c.get((y - 1) * q + k - 1, i - 1)) x3.push_back(std::string(k, a) + sym(4, int(y)) + sym(5, int(i)));
      }
    }
  }
  middle(std::move(x1));
  middle(std::move(x2));
  middle(std::move(x3));

  for (std::size_t i = levels; i >= 1; --i) {
    const std::size_t stride = zp >> (i - 1), len = zp >> i;
    std::vector<std::string> alts{""};
    for (std::size_t j = 0; j < (std::size_t{1} << (i - 1)); ++j) alts.push_back(concat(zp - j * stride - len, len));
    segs.emplace_back(std::move(alts));
  }

  return TdEncoding{Pattern(std::move(pattern)), EDString(std::move(segs)), z, zp, 2 * q + 8};
}

std::vector<APReductionBlock> bmm_to_ap(const linalg::BoolMatrix& a, const linalg::BoolMatrix& b, std::size_t l) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n) throw std::invalid_argument("bmm_to_ap: matrices must be N x N");
  if (l == 0 || n % l != 0) throw std::invalid_argument("bmm_to_ap: L must divide N");
  const std::size_t width = 2 * l + 1;
  std::string gadget(l, 'a');
  gadget += 'b';
  gadget += std::string(l, 'a');
  std::string pattern;
  for (std::size_t i = 0; i < n; ++i) pattern += gadget;

  std::vector<APReductionBlock> out;
  for (std::size_t bk = 1; bk <= n / l; ++bk) {
    for (std::size_t bj = 1; bj <= n / l; ++bj) {
      APReductionBlock blk{bk, bj, l, pattern, BitVector(n * width), {}, std::nullopt};
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t k = 1; k <= l; ++k) {
          if (a.get(i - 1, (bk - 1) * l + k - 1)) blk.u.set((i - 1) * width + k);
        }
      }
      for (std::size_t k = 1; k <= l; ++k) {
        for (std::size_t j = 1; j <= l; ++j) {
          if (b.get((bk - 1) * l + k - 1, (bj - 1) * l + j - 1)) {
            blk.strings.push_back(std::string(l - k, 'a') + 'b' + std::string(j, 'a'));
          }
        }
      }
      out.push_back(std::move(blk));
    }
  }
  return out;
}

linalg::BoolMatrix reconstruct_bmm(const std::vector<APReductionBlock>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("reconstruct_bmm: no blocks");
  const std::size_t l = blocks.front().L;
  const std::size_t width = 2 * l + 1;
  const std::size_t n = blocks.front().pattern.size() / width;
  const std::size_t per_side = n / l;
  std::map<std::pair<std::size_t, std::size_t>, const APReductionBlock*> by_index;
  for (const auto& blk : blocks) {
    if (!blk.v) throw std::invalid_argument("reconstruct_bmm: block (" + std::to_string(blk.K) + "," +
                                            std::to_string(blk.J) + ") is unsolved");
    if (blk.v->size() != n * width) throw std::invalid_argument("reconstruct_bmm: V has the wrong length");
    by_index[{blk.K, blk.J}] = &blk;
  }
  linalg::BoolMatrix c(n, n);
  for (std::size_t bk = 1; bk <= per_side; ++bk) {
    for (std::size_t bj = 1; bj <= per_side; ++bj) {
      const auto it = by_index.find({bk, bj});
      if (it == by_index.end()) {
        throw std::invalid_argument("reconstruct_bmm: missing block (" + std::to_string(bk) + "," +
                                    std::to_string(bj) + ")");
      }
      const BitVector& v = *it->second->v;
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= l; ++j) {
          if (v.test((i - 1) * width + l + 1 + j)) c.set(i - 1, (bj - 1) * l + j - 1);
        }
      }
    }
  }
  return c;
}

std::pair<linalg::BoolMatrix, linalg::BoolMatrix> worked_bmm_example() {
  auto a = linalg::BoolMatrix::from_rows({"010010", "101000", "000001", "100010", "000100", "010000"});
  auto b = linalg::BoolMatrix::from_rows({"000001", "100000", "001010", "010000", "000100", "100010"});
  return {std::move(a), std::move(b)};
}

}  // namespace edsm::reduce
