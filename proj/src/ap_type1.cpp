// Types 1 and 2: anchors, per-anchor tries, red/blue dominance and
// batched matrix-vector products.
#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "edsm/ap_engine.hpp"
#include "edsm/bool_matrix.hpp"
#include "edsm/dominance.hpp"
#include "edsm/node_select.hpp"

namespace edsm::ap {

using index::AnchorStructure;
using index::NodeId;

namespace {

struct Member {
  std::string_view s;
  std::size_t q0;  // 0-based start of one occurrence in P
};

// One anchor with the member windows that coincide with it (j is 1-based).
struct AnchorJob {
  std::size_t start = 0;
  std::size_t len = 0;
  std::vector<std::pair<std::size_t, std::size_t>> windows;
};

void check_class(std::string_view s, std::size_t ell) {
  if (8 * s.size() < 9 * ell || 4 * s.size() >= 5 * ell) {
    throw std::invalid_argument("member of length " + std::to_string(s.size()) + " outside the class of ell=" +
                                std::to_string(ell));
  }
}

std::vector<Member> occurring(const PatternIndex& idx, const std::vector<std::string_view>& members) {
  std::vector<Member> out;
  for (auto s : members) {
    const auto locus = idx.st().locate(s);
    if (locus) out.push_back({s, idx.st().witness(locus->node)});
  }
  return out;
}

std::vector<std::pair<std::int32_t, std::int32_t>> exits_above(const index::CompactTree& t, NodeId leaf) {
  std::vector<std::pair<std::int32_t, std::int32_t>> out;
  for (NodeId v = leaf; v != index::kNoNode; v = t.parent(t.path_head(v))) out.emplace_back(t.path_id(v), t.depth(v));
  return out;
}

void process_anchor(const PatternIndex& idx, const BitVector& u, const AnchorJob& job,
                    const std::vector<Member>& mem, std::size_t ell, BitVector& v) {
  const std::size_t m = idx.m();
  AnchorStructure d(idx.st(), idx.st_rev(), job.start, job.len);
  for (const auto& [k, j] : job.windows) {
    const Member& mi = mem[k];
    const std::size_t len = mi.s.size();
    const auto rl = idx.st_rev().locus_of(m - mi.q0 - j + 1, j - 1);
    const auto fl = idx.st().locus_of(mi.q0 + j - 1 + job.len, len - (j - 1) - job.len);
    const auto un = d.reverse_node(idx.st_rev(), rl);
    const auto vn = d.forward_node(idx.st(), fl);
    if (!un || !vn) throw std::logic_error("anchor pair without a leaf below it");
    d.pairs.push_back({*un, *vn, k, len, j});
  }

  struct Bucket {
    std::vector<dominance::Point> reds, blues;
  };
  std::unordered_map<std::uint64_t, Bucket> buckets;
  auto key = [](std::int32_t p, std::int32_t q) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p)) << 32) | static_cast<std::uint32_t>(q);
  };
  const auto& rt = d.reverse();
  const auto& ft = d.forward();
  for (std::size_t b = 0; b < d.pairs.size(); ++b) {
    const auto& pr = d.pairs[b];
    buckets[key(rt.path_id(pr.u), ft.path_id(pr.v))].blues.push_back({rt.depth(pr.u), ft.depth(pr.v), b});
  }
  const auto& occ = d.occurrences();
  for (std::size_t k = 0; k < occ.size(); ++k) {
    const auto xs = exits_above(rt, d.reverse_leaf(k));
    const auto ys = exits_above(ft, d.forward_leaf(k));
    for (const auto& [p, x] : xs) {
      for (const auto& [q, y] : ys) {
        auto it = buckets.find(key(p, q));
        if (it != buckets.end()) it->second.reds.push_back({x, y, k});
      }
    }
  }

  const std::size_t z = batch_width(ell, m);
  std::vector<std::size_t> reds;
  std::vector<BluePair> blues;
  for (auto& [kk, bucket] : buckets) {
    if (bucket.reds.empty()) continue;
    dominance::decompose(std::move(bucket.reds), std::move(bucket.blues),
                         [&](std::span<const std::size_t> r, std::span<const std::size_t> b) {
                           reds.clear();
                           blues.clear();
                           for (std::size_t k : r) reds.push_back(occ[k]);
                           for (std::size_t x : b) blues.push_back({d.pairs[x].length, d.pairs[x].j});
                           std::sort(blues.begin(), blues.end(), [](const BluePair& a, const BluePair& c) {
                             return a.length != c.length ? a.length < c.length : a.j < c.j;
                           });
                           blues.erase(std::unique(blues.begin(), blues.end(),
                                                   [](const BluePair& a, const BluePair& c) {
                                                     return a.length == c.length && a.j == c.j;
                                                   }),
                                       blues.end());
                           apply_simple_instance(u, reds, blues, ell, z, v);
                         });
  }
}

struct Type1Plan {
  std::vector<Member> mem;
  std::vector<AnchorJob> jobs;
  std::size_t total_occurrences = 0;
  bool every_member_hit = true;
};

Type1Plan plan_type1(const PatternIndex& idx, const std::vector<std::string_view>& members, std::size_t ell) {
  Type1Plan plan;
  plan.mem = occurring(idx, members);
  if (plan.mem.empty()) return plan;
  const auto& tree = idx.st().tree();
  const auto depth = static_cast<std::int32_t>(ell);

  std::unordered_map<NodeId, std::size_t> v_of_node;
  std::vector<NodeId> node_of_v;
  std::vector<std::uint64_t> weights;
  std::vector<std::vector<std::size_t>> adj(plan.mem.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> windows(plan.mem.size());  // (j, v)
  for (std::size_t k = 0; k < plan.mem.size(); ++k) {
    const auto& mi = plan.mem[k];
    for (std::size_t j = 1; j + ell - 1 <= mi.s.size(); ++j) {
      const NodeId w = tree.weighted_ancestor(idx.st().leaf_of_suffix(mi.q0 + j - 1), depth);
      auto [it, fresh] = v_of_node.try_emplace(w, node_of_v.size());
      if (fresh) {
        node_of_v.push_back(w);
        weights.push_back(tree.leaf_count(w));
      }
      windows[k].emplace_back(j, it->second);
      adj[k].push_back(it->second);
    }
    std::sort(adj[k].begin(), adj[k].end());
    adj[k].erase(std::unique(adj[k].begin(), adj[k].end()), adj[k].end());
  }
  // Members have between floor(ell/8)+2 and ceil(ell/4) distinct windows.
  const double d = static_cast<double>((ell + 3) / 4) / 2.0;
  const select::BipartiteInstance g(plan.mem.size(), std::move(weights), std::move(adj), d);
  const auto sel = select::solve_derandomized(g);

  std::vector<std::ptrdiff_t> job_of_v(node_of_v.size(), -1);
  for (std::size_t vv : sel.chosen) {
    job_of_v[vv] = static_cast<std::ptrdiff_t>(plan.jobs.size());
    plan.jobs.push_back({idx.st().witness(node_of_v[vv]), ell, {}});
    plan.total_occurrences += g.weight(vv);
  }
  for (std::size_t k = 0; k < plan.mem.size(); ++k) {
    bool hit = false;
    for (const auto& [j, vv] : windows[k]) {
      if (job_of_v[vv] < 0) continue;
      plan.jobs[static_cast<std::size_t>(job_of_v[vv])].windows.emplace_back(k, j);
      hit = true;
    }
    plan.every_member_hit = plan.every_member_hit && hit;
  }
  return plan;
}

}  // namespace

void apply_simple_instance(const BitVector& u, const std::vector<std::size_t>& reds,
                           const std::vector<BluePair>& blues, std::size_t ell, std::size_t z, BitVector& v) {
  const std::size_t m = v.size();
  if (reds.empty() || blues.empty()) return;
  if (reds.size() < z) {
    for (std::size_t i : reds) {
      for (const auto& b : blues) {
        if (i <= b.j) continue;
        if (u.test_or_zero(static_cast<std::ptrdiff_t>(i - b.j)) && i + b.length - b.j <= m) {
          v.set(i + b.length - b.j);
        }
      }
    }
    return;
  }
  // M[|S|-j, K+1-j] = 1 and U_i[t] = U[i-K+t-1], so (M U_i)[k] = 1 exactly
  // when some pair has |S|-j = k and U[i-j] = 1.
  const std::size_t big_k = (5 * ell + 3) / 4;
  linalg::SparseBoolMatrix mat{big_k, big_k, {}};
  for (const auto& b : blues) {
    if (b.j < 1 || b.j > big_k || b.length <= b.j || b.length - b.j > big_k) {
      throw std::invalid_argument("apply_simple_instance: pair outside the K x K matrix");
    }
    mat.ones.emplace_back(static_cast<std::uint32_t>(b.length - b.j - 1), static_cast<std::uint32_t>(big_k - b.j));
  }
  std::vector<BitVector> slices;
  slices.reserve(reds.size());
  for (std::size_t i : reds) {
    BitVector ui(big_k);
    for (std::size_t t = 1; t <= big_k; ++t) {
      if (u.test_or_zero(static_cast<std::ptrdiff_t>(i + t) - static_cast<std::ptrdiff_t>(big_k) - 1)) ui.set(t);
    }
    slices.push_back(std::move(ui));
  }
  const auto prod = linalg::bool_matvec_batch(mat, slices, std::min(z, big_k));
  for (std::size_t r = 0; r < reds.size(); ++r) {
    const std::size_t i = reds[r];
    prod[r].for_each_set([&](std::size_t k) {
      if (i + k <= m) v.set(i + k);
    });
  }
}

Type1Anchors select_type1_anchors(const PatternIndex& idx, const std::vector<std::string_view>& members,
                                  std::size_t ell) {
  const auto plan = plan_type1(idx, members, ell);
  Type1Anchors out;
  for (const auto& job : plan.jobs) out.starts.push_back(job.start);
  out.total_occurrences = plan.total_occurrences;
  out.members_kept = plan.mem.size();
  out.every_member_hit = plan.every_member_hit;
  return out;
}

BitVector solve_type1(const PatternIndex& idx, const BitVector& u, const std::vector<std::string_view>& members,
                      std::size_t ell) {
  if (u.size() != idx.m()) throw std::invalid_argument("solve_type1: |U| != m");
  for (auto s : members) {
    check_class(s, ell);
    if (stringology::classify_type(s, ell) != stringology::TypeLabel::Type1) {
      throw std::invalid_argument("solve_type1: member is not of type 1");
    }
  }
  BitVector v(idx.m());
  const auto plan = plan_type1(idx, members, ell);
  if (!plan.every_member_hit) throw std::logic_error("solve_type1: anchor selection missed a member");
  for (const auto& job : plan.jobs) {
    if (!job.windows.empty()) process_anchor(idx, u, job, plan.mem, ell, v);
  }
  return v;
}

namespace {

// 1-based starts j of the length-(ell+1) windows flanking the member's run.
std::vector<std::size_t> flank_starts(std::string_view s, std::size_t ell) {
  const auto run = stringology::maximal_periodic_run(s, ell);
  if (!run) throw std::invalid_argument("type 2 member without a periodic run");
  std::vector<std::size_t> js;
  if (run->start > 1) js.push_back(run->start - 1);
  if (run->end < s.size()) js.push_back(run->end - ell + 1);
  if (js.empty()) throw std::invalid_argument("type 2 member whose run covers it (type 3)");
  return js;
}

}  // namespace

std::vector<std::string> type2_anchor_strings(const std::vector<std::string_view>& members, std::size_t ell) {
  std::vector<std::string> out;
  for (auto s : members) {
    for (std::size_t j : flank_starts(s, ell)) out.emplace_back(s.substr(j - 1, ell + 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BitVector solve_type2(const PatternIndex& idx, const BitVector& u, const std::vector<std::string_view>& members,
                      std::size_t ell) {
  if (u.size() != idx.m()) throw std::invalid_argument("solve_type2: |U| != m");
  for (auto s : members) {
    check_class(s, ell);
    if (stringology::classify_type(s, ell) != stringology::TypeLabel::Type2) {
      throw std::invalid_argument("solve_type2: member is not of type 2");
    }
  }
  BitVector v(idx.m());
  const auto mem = occurring(idx, members);
  const auto& tree = idx.st().tree();
  const auto depth = static_cast<std::int32_t>(ell + 1);
  std::unordered_map<NodeId, std::size_t> job_of_node;
  std::vector<AnchorJob> jobs;
  for (std::size_t k = 0; k < mem.size(); ++k) {
    for (std::size_t j : flank_starts(mem[k].s, ell)) {
      const NodeId w = tree.weighted_ancestor(idx.st().leaf_of_suffix(mem[k].q0 + j - 1), depth);
      auto [it, fresh] = job_of_node.try_emplace(w, jobs.size());
      if (fresh) jobs.push_back({idx.st().witness(w), ell + 1, {}});
      jobs[it->second].windows.emplace_back(k, j);
    }
  }
  for (const auto& job : jobs) process_anchor(idx, u, job, mem, ell, v);
  return v;
}

}  // namespace edsm::ap
