#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "condtorus/errors.hpp"
#include "condtorus/index_set.hpp"
#include "condtorus/torus_graph.hpp"

namespace condtorus {

enum class OracleKind { Kappa, Lambda, MinSubgraph };

inline std::string_view to_string(OracleKind k) {
  switch (k) {
    case OracleKind::Kappa: return "kappa";
    case OracleKind::Lambda: return "lambda";
    case OracleKind::MinSubgraph: return "min_subgraph";
  }
  return "unknown";
}

struct OracleOptions {
  unsigned workers = 1;
  /// Maximum number of candidates (subsets, or search nodes in branch-and-bound) to examine.
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  bool branch_and_bound = false;
};

/**
 * @brief Exact minimum found by exhaustive search.
 *
 * `value` is empty when the search completed without finding any feasible
 * candidate (e.g. no conditional cut exists). Kappa and min-subgraph results
 * carry `vertex_witness`; lambda results carry `edge_witness`.
 */
struct OracleResult {
  OracleKind kind = OracleKind::Kappa;
  int h = 0;
  std::optional<std::int64_t> value;
  VertexSet vertex_witness;
  EdgeSet edge_witness;
  std::uint64_t explored = 0;
  bool complete = false;
  std::string method;
};

inline constexpr std::size_t kExhaustiveVertexLimit = 32;
inline constexpr std::size_t kBranchAndBoundVertexLimit = 40;

namespace detail {

template <typename Fn>
void run_tasks(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Word-sized view of a torus with at most 64 vertices and 64 edges.
struct MaskGraph {
  std::size_t n = 0;
  std::size_t deg = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> adj;
  std::vector<std::uint64_t> incident;  // edge-id masks; valid when edge_count <= 64
  std::vector<std::uint8_t> nbr;        // n * deg
  bool edges_fit = false;

  explicit MaskGraph(const TorusGraph& g) : n(g.vertex_count()), deg(g.degree()) {
    if (n > 64) throw InfeasibleError("mask graph needs at most 64 vertices");
    full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    adj.assign(n, 0);
    nbr.resize(n * deg);
    for (std::size_t v = 0; v < n; ++v) {
      auto nb = g.neighbor_indices(v);
      for (std::size_t j = 0; j < deg; ++j) {
        adj[v] |= std::uint64_t{1} << nb[j];
        nbr[v * deg + j] = static_cast<std::uint8_t>(nb[j]);
      }
    }
    edges_fit = g.edge_count() <= 64;
    if (edges_fit) {
      incident.assign(n, 0);
      for (std::size_t v = 0; v < n; ++v)
        for (auto e : g.incident_edges(v)) incident[v] |= std::uint64_t{1} << e;
    }
  }

  int degree_in(std::size_t v, std::uint64_t s) const { return std::popcount(adj[v] & s); }

  // Largest subset of s whose induced min degree is >= h (the h-core of [s]).
  std::uint64_t core(std::uint64_t s, int h) const {
    if (h <= 0) return s;
    for (;;) {
      std::uint64_t bad = 0;
      for (auto m = s; m; m &= m - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(m));
        if (degree_in(v, s) < h) bad |= std::uint64_t{1} << v;
      }
      if (!bad) return s;
      s &= ~bad;
    }
  }

  bool min_degree_at_least(std::uint64_t s, int h) const {
    for (auto m = s; m; m &= m - 1) {
      if (degree_in(static_cast<std::size_t>(std::countr_zero(m)), s) < h) return false;
    }
    return true;
  }
};

struct Best {
  std::optional<std::int64_t> value;
  std::uint64_t witness = 0;
  std::uint64_t explored = 0;

  void offer(std::int64_t v, std::uint64_t w) {
    if (!value || v < *value || (v == *value && w < witness)) {
      value = v;
      witness = w;
    }
  }
  void merge(const Best& o) {
    if (o.value) offer(*o.value, o.witness);
    explored += o.explored;
  }
};

inline void require_cut_h(const TorusGraph& g, int h) {
  if (h < 0 || h >= static_cast<int>(g.degree())) {
    throw ValidationError("conditional cut oracle needs 0 <= h < 2r");
  }
}

// Incremental state for the Gray-code walk. cnt[v] = |N(v) n Y|.
class GrayState {
 public:
  GrayState(const MaskGraph& mg, int h, std::uint64_t y) : mg_(mg), h_(h), cnt_(mg.n, 0), cover_(mg.n, 0) {
    y_ = y;
    for (std::size_t v = 0; v < mg.n; ++v) {
      cnt_[v] = static_cast<std::uint8_t>(mg.degree_in(v, y));
      const bool in = (y >> v) & 1U;
      cover_[v] = static_cast<std::uint8_t>(cnt_[v] + (in ? 1 : 0));
      if (cover_[v]) closed_ |= std::uint64_t{1} << v;
      if (in && cnt_[v] < h) ++deficient_in_;
      if (!in && cnt_[v] > static_cast<int>(mg.deg) - h) ++deficient_out_;
      if (in) {
        boundary_ += static_cast<int>(mg.deg) - cnt_[v];
        if (mg.edges_fit) edges_ ^= mg.incident[v];
      }
    }
  }

  void flip(std::size_t u) {
    const std::uint64_t bit = std::uint64_t{1} << u;
    const int deg = static_cast<int>(mg_.deg);
    const std::uint8_t* nb = &mg_.nbr[u * mg_.deg];
    if (!(y_ & bit)) {
      if (cnt_[u] > deg - h_) --deficient_out_;
      y_ |= bit;
      if (cnt_[u] < h_) ++deficient_in_;
      boundary_ += deg - 2 * cnt_[u];
      if (cover_[u]++ == 0) closed_ |= bit;
      for (std::size_t j = 0; j < mg_.deg; ++j) {
        const auto w = nb[j];
        const int old = cnt_[w]++;
        if ((y_ >> w) & 1U) {
          if (old == h_ - 1) --deficient_in_;
        } else if (old == deg - h_) {
          ++deficient_out_;
        }
        if (cover_[w]++ == 0) closed_ |= std::uint64_t{1} << w;
      }
    } else {
      if (cnt_[u] < h_) --deficient_in_;
      y_ &= ~bit;
      if (cnt_[u] > deg - h_) ++deficient_out_;
      boundary_ -= deg - 2 * cnt_[u];
      if (--cover_[u] == 0) closed_ &= ~bit;
      for (std::size_t j = 0; j < mg_.deg; ++j) {
        const auto w = nb[j];
        const int old = cnt_[w]--;
        if ((y_ >> w) & 1U) {
          if (old == h_) ++deficient_in_;
        } else if (old == deg - h_ + 1) {
          --deficient_out_;
        }
        if (--cover_[w] == 0) closed_ &= ~(std::uint64_t{1} << w);
      }
    }
    if (mg_.edges_fit) edges_ ^= mg_.incident[u];
  }

  std::uint64_t y() const { return y_; }
  std::uint64_t closed() const { return closed_; }
  int deficient_in() const { return deficient_in_; }
  int deficient_out() const { return deficient_out_; }
  int boundary() const { return boundary_; }
  std::uint64_t edges() const { return edges_; }

 private:
  const MaskGraph& mg_;
  int h_;
  std::vector<std::uint8_t> cnt_;
  std::vector<std::uint8_t> cover_;
  std::uint64_t y_ = 0;
  std::uint64_t closed_ = 0;
  int deficient_in_ = 0;   // members of Y with fewer than h neighbours in Y
  int deficient_out_ = 0;  // non-members with fewer than h neighbours outside Y
  int boundary_ = 0;       // |E_r(Y)|
  std::uint64_t edges_ = 0;
};

/**
 * Enumerates every subset Y of V in a fixed global order: 64 (or fewer)
 * chunks keyed by the high bits, each walked in Gray-code order over the low
 * bits. Global ordinal = chunk * 2^low + step; ordinals >= budget are skipped.
 */
template <typename Evaluate>
Best gray_enumerate(const MaskGraph& mg, int h, const OracleOptions& opt, Evaluate eval) {
  const std::size_t high = std::min<std::size_t>(mg.n, 6);
  const std::size_t low = mg.n - high;
  const std::size_t chunks = std::size_t{1} << high;
  const std::uint64_t per_chunk = std::uint64_t{1} << low;
  std::vector<Best> results(chunks);

  run_tasks(chunks, opt.workers, [&](std::size_t c) {
    const std::uint64_t first = static_cast<std::uint64_t>(c) * per_chunk;
    if (first >= opt.budget) return;
    const std::uint64_t steps = std::min<std::uint64_t>(per_chunk, opt.budget - first);
    GrayState st(mg, h, static_cast<std::uint64_t>(c) << low);
    Best& best = results[c];
    for (std::uint64_t s = 0; s < steps; ++s) {
      if (s) st.flip(static_cast<std::size_t>(std::countr_zero(s)));
      if (st.y() == 0) continue;
      ++best.explored;
      eval(st, best);
    }
  });

  Best total;
  for (const auto& r : results) total.merge(r);
  return total;
}

inline std::uint64_t total_subsets(std::size_t n) {
  return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << n;
}

// --- branch and bound ---------------------------------------------------

enum : std::uint8_t { kUnset = 0, kSideY = 1, kSideZ = 2, kCut = 3 };

// Depth-first search over side assignments in BFS vertex order.
class BranchAndBound {
 public:
  BranchAndBound(const MaskGraph& mg, int h, bool vertex_cut, std::uint64_t cap)
      : mg_(mg), h_(h), vertex_cut_(vertex_cut), cap_(cap), side_(mg.n, kUnset) {
    std::vector<char> seen(mg.n, 0);
    order_.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const auto v = order_[i];
      for (std::size_t j = 0; j < mg.deg; ++j) {
        const auto w = mg.nbr[v * mg.deg + j];
        if (!seen[w]) {
          seen[w] = 1;
          order_.push_back(w);
        }
      }
    }
  }

  std::size_t prefix_length() const { return std::min<std::size_t>(mg_.n, 8); }

  /// Number of value choices per vertex.
  std::uint8_t arity() const { return vertex_cut_ ? 3 : 2; }

  /**
   * Runs the subtree whose first `prefix_length()` choices are encoded in
   * `prefix` (base arity(), least-significant digit first). Returns false if
   * the prefix itself is infeasible.
   */
  Best run(std::uint64_t prefix) {
    Best best;
    explored_ = 0;
    exhausted_ = false;
    best_value_ = std::numeric_limits<int>::max();
    std::fill(side_.begin(), side_.end(), kUnset);
    cut_ = 0;
    bool ok = true;
    for (std::size_t d = 0; d < prefix_length() && ok; ++d) {
      const auto choice = static_cast<std::uint8_t>(prefix % arity() + 1);
      prefix /= arity();
      ok = assign(order_[d], choice, d);
    }
    if (ok) dfs(prefix_length());
    best.explored = explored_;
    if (best_value_ != std::numeric_limits<int>::max()) {
      best.value = best_value_;
      best.witness = best_witness_;
    }
    return best;
  }

  bool exhausted() const { return exhausted_; }

 private:
  // Assigns v and checks local feasibility. Undo with unassign().
  bool assign(std::size_t v, std::uint8_t s, std::size_t depth) {
    if (depth == first_free_depth() && s == kSideZ) return false;  // Y/Z symmetry
    side_[v] = s;
    if (s == kCut) ++cut_;
    if (!vertex_cut_ && s == kSideZ) {
      for (std::size_t j = 0; j < mg_.deg; ++j)
        if (side_[mg_.nbr[v * mg_.deg + j]] == kSideY) ++cut_;
    }
    if (!vertex_cut_ && s == kSideY) {
      for (std::size_t j = 0; j < mg_.deg; ++j)
        if (side_[mg_.nbr[v * mg_.deg + j]] == kSideZ) ++cut_;
    }
    if (feasible_around(v)) return true;
    return false;
  }

  void unassign(std::size_t v) {
    const auto s = side_[v];
    if (s == kCut) --cut_;
    if (!vertex_cut_ && (s == kSideY || s == kSideZ)) {
      const auto other = s == kSideY ? kSideZ : kSideY;
      for (std::size_t j = 0; j < mg_.deg; ++j)
        if (side_[mg_.nbr[v * mg_.deg + j]] == other) --cut_;
    }
    side_[v] = kUnset;
  }

  // Depth of the first vertex whose side is not forced to be the cut; Y is chosen there.
  std::size_t first_free_depth() const {
    if (!vertex_cut_) return 0;
    for (std::size_t d = 0; d < order_.size(); ++d)
      if (side_[order_[d]] != kCut) return d;
    return order_.size();
  }

  bool vertex_ok(std::size_t v) const {
    const auto s = side_[v];
    if (s != kSideY && s != kSideZ) return true;
    int lost = 0;
    for (std::size_t j = 0; j < mg_.deg; ++j) {
      const auto t = side_[mg_.nbr[v * mg_.deg + j]];
      if (t == kUnset || t == s) continue;
      if (vertex_cut_ && t != kCut) return false;  // Y adjacent to Z
      ++lost;
    }
    return lost <= static_cast<int>(mg_.deg) - h_;
  }

  bool feasible_around(std::size_t v) const {
    if (cut_ >= best_value_) return false;
    if (!vertex_ok(v)) return false;
    for (std::size_t j = 0; j < mg_.deg; ++j)
      if (!vertex_ok(mg_.nbr[v * mg_.deg + j])) return false;
    return true;
  }

  void dfs(std::size_t depth) {
    if (exhausted_) return;
    if (++explored_ > cap_) {
      exhausted_ = true;
      return;
    }
    if (depth == order_.size()) {
      std::uint64_t y = 0, z = 0, cut_vertices = 0;
      for (std::size_t v = 0; v < mg_.n; ++v) {
        if (side_[v] == kSideY) y |= std::uint64_t{1} << v;
        if (side_[v] == kSideZ) z |= std::uint64_t{1} << v;
        if (side_[v] == kCut) cut_vertices |= std::uint64_t{1} << v;
      }
      if (!y || !z) return;
      best_value_ = cut_;
      if (vertex_cut_) {
        best_witness_ = cut_vertices;
      } else {
        best_witness_ = 0;
        for (auto m = y; m; m &= m - 1) best_witness_ ^= mg_.incident[static_cast<std::size_t>(std::countr_zero(m))];
      }
      return;
    }
    const auto v = order_[depth];
    for (std::uint8_t s = 1; s <= arity(); ++s) {
      if (assign(v, s, depth)) dfs(depth + 1);
      unassign(v);
    }
  }

  const MaskGraph& mg_;
  int h_;
  bool vertex_cut_;
  std::uint64_t cap_;
  std::vector<std::uint8_t> side_;
  std::vector<std::size_t> order_;
  int cut_ = 0;
  int best_value_ = std::numeric_limits<int>::max();
  std::uint64_t best_witness_ = 0;
  std::uint64_t explored_ = 0;
  bool exhausted_ = false;
};

inline OracleResult branch_and_bound(const TorusGraph& g, int h, bool vertex_cut, const OracleOptions& opt) {
  const MaskGraph mg(g);
  if (!vertex_cut && !mg.edges_fit) throw InfeasibleError("edge oracle needs at most 64 edges");
  std::size_t prefix_len = 0;
  std::uint8_t arity = 0;
  {
    BranchAndBound probe(mg, h, vertex_cut, 0);
    prefix_len = probe.prefix_length();
    arity = probe.arity();
  }
  std::size_t subtrees = 1;
  for (std::size_t i = 0; i < prefix_len; ++i) subtrees *= arity;

  struct Outcome {
    Best best;
    bool exhausted = false;
  };
  std::vector<Outcome> outcomes(subtrees);
  run_tasks(subtrees, opt.workers, [&](std::size_t i) {
    BranchAndBound search(mg, h, vertex_cut, opt.budget);
    outcomes[i].best = search.run(i);
    outcomes[i].exhausted = search.exhausted();
  });

  // Subtrees are charged against the budget in index order.
  Best total;
  bool complete = true;
  std::uint64_t used = 0;
  for (const auto& o : outcomes) {
    if (o.exhausted || used + o.best.explored > opt.budget) {
      complete = false;
      total.explored = opt.budget;
      break;
    }
    used += o.best.explored;
    total.merge(o.best);
  }

  OracleResult out;
  out.kind = vertex_cut ? OracleKind::Kappa : OracleKind::Lambda;
  out.h = h;
  out.method = "branch-and-bound";
  out.complete = complete;
  out.explored = total.explored;
  out.value = total.value;
  out.vertex_witness = g.empty_vertices();
  out.edge_witness = g.empty_edges();
  if (total.value) {
    if (vertex_cut) out.vertex_witness = VertexSet::from_mask(g.vertex_count(), total.witness);
    else out.edge_witness = EdgeSet::from_mask(g.edge_count(), total.witness);
  }
  return out;
}

inline void gate(const TorusGraph& g, const OracleOptions& opt) {
  const auto limit = opt.branch_and_bound ? kBranchAndBoundVertexLimit : kExhaustiveVertexLimit;
  if (g.vertex_count() > limit) {
    throw InfeasibleError("torus has " + std::to_string(g.vertex_count()) + " vertices; " +
                          (opt.branch_and_bound ? "branch-and-bound" : "exhaustive") + " mode allows at most " +
                          std::to_string(limit));
  }
}

}  // namespace detail

/**
 * Exact conditional h-vertex connectivity. Every non-empty Y with induced
 * min degree >= h is a candidate side; the other side is the h-core Z of
 * [V - N[Y]], and the cut is V - Y - Z. Any valid cut F contains such a
 * V - Y - Z (take Y = a component of G - F), so the minimum is exact.
 */
inline OracleResult oracle_kappa(const TorusGraph& g, int h, const OracleOptions& opt = {}) {
  detail::require_cut_h(g, h);
  detail::gate(g, opt);
  if (opt.branch_and_bound) return detail::branch_and_bound(g, h, true, opt);

  const detail::MaskGraph mg(g);
  auto best = detail::gray_enumerate(mg, h, opt, [&](const detail::GrayState& st, detail::Best& b) {
    if (st.deficient_in()) return;
    const std::uint64_t y = st.y();
    const int lower = std::popcount(st.closed()) - std::popcount(y);
    if (b.value && lower > *b.value) return;
    const std::uint64_t z = mg.core(mg.full & ~st.closed(), h);
    if (!z) return;
    const std::uint64_t cut = mg.full & ~y & ~z;
    b.offer(std::popcount(cut), cut);
  });

  OracleResult out;
  out.kind = OracleKind::Kappa;
  out.h = h;
  out.method = "gray-code-exhaustive";
  out.explored = best.explored;
  out.complete = opt.budget >= detail::total_subsets(mg.n);
  out.value = best.value;
  out.vertex_witness = best.value ? VertexSet::from_mask(mg.n, best.witness) : g.empty_vertices();
  out.edge_witness = g.empty_edges();
  return out;
}

/**
 * Exact conditional h-edge connectivity: minimum |E_r(Y)| over bipartitions
 * (Y, V - Y) with both sides non-empty and of induced min degree >= h.
 */
inline OracleResult oracle_lambda(const TorusGraph& g, int h, const OracleOptions& opt = {}) {
  detail::require_cut_h(g, h);
  detail::gate(g, opt);
  if (opt.branch_and_bound) return detail::branch_and_bound(g, h, false, opt);

  const detail::MaskGraph mg(g);
  if (!mg.edges_fit) throw InfeasibleError("edge oracle needs at most 64 edges");
  auto best = detail::gray_enumerate(mg, h, opt, [&](const detail::GrayState& st, detail::Best& b) {
    if (st.deficient_in() || st.deficient_out() || st.y() == mg.full) return;
    b.offer(st.boundary(), st.edges());
  });

  OracleResult out;
  out.kind = OracleKind::Lambda;
  out.h = h;
  out.method = "gray-code-exhaustive";
  out.explored = best.explored;
  out.complete = opt.budget >= detail::total_subsets(mg.n);
  out.value = best.value;
  out.vertex_witness = g.empty_vertices();
  out.edge_witness = best.value ? EdgeSet::from_mask(g.edge_count(), best.witness) : g.empty_edges();
  return out;
}

namespace detail {

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/**
 * Visits all size-k subsets of the n-bit universe, split into tasks by the
 * position of the highest set bit. Returns the numerically least subset
 * accepted by `pred`, if any.
 */
template <typename Pred>
std::optional<std::uint64_t> least_subset_of_size(std::size_t n, std::size_t k, unsigned workers, Pred pred) {
  if (k == 0 || k > n) return std::nullopt;
  std::vector<std::optional<std::uint64_t>> found(n);
  run_tasks(n, workers, [&](std::size_t top) {
    if (top + 1 < k) return;
    const std::uint64_t top_bit = std::uint64_t{1} << top;
    const std::size_t rest = k - 1;
    if (rest == 0) {
      if (pred(top_bit)) found[top] = top_bit;
      return;
    }
    const std::uint64_t limit = std::uint64_t{1} << top;
    for (std::uint64_t m = (std::uint64_t{1} << rest) - 1; m < limit;) {
      if (pred(top_bit | m)) {
        found[top] = top_bit | m;
        return;
      }
      const std::uint64_t c = m & (~m + 1);  // Gosper's hack: next subset of equal size
      const std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  });
  for (const auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace detail

/**
 * Smallest vertex set whose induced subgraph has min degree >= h, by
 * size-ascending enumeration. `explored` counts every subset of every size
 * up to and including the first feasible one.
 */
inline OracleResult oracle_min_subgraph(const TorusGraph& g, int h, const OracleOptions& opt = {}) {
  if (h < 0 || h > static_cast<int>(g.degree())) throw ValidationError("min-subgraph oracle needs 0 <= h <= 2r");
  if (g.vertex_count() > kExhaustiveVertexLimit) {
    throw InfeasibleError("min-subgraph oracle allows at most " + std::to_string(kExhaustiveVertexLimit) +
                          " vertices");
  }
  const detail::MaskGraph mg(g);
  OracleResult out;
  out.kind = OracleKind::MinSubgraph;
  out.h = h;
  out.method = "size-ascending-exhaustive";
  out.vertex_witness = g.empty_vertices();
  out.edge_witness = g.empty_edges();
  out.complete = true;
  for (std::size_t k = 1; k <= mg.n; ++k) {
    const auto level = detail::binomial(mg.n, k);
    if (out.explored + level > opt.budget) {
      out.complete = false;
      out.explored = opt.budget;
      return out;
    }
    out.explored += level;
    auto hit = detail::least_subset_of_size(mg.n, k, opt.workers,
                                            [&](std::uint64_t s) { return mg.min_degree_at_least(s, h); });
    if (hit) {
      out.value = static_cast<std::int64_t>(k);
      out.vertex_witness = VertexSet::from_mask(mg.n, *hit);
      return out;
    }
  }
  return out;
}

namespace detail {

// Whether the induced subgraph on s has a spanning h-regular subgraph (an h-factor).
inline bool has_h_factor(const MaskGraph& mg, std::uint64_t s, int h) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> verts;
  for (auto m = s; m; m &= m - 1) verts.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  for (auto v : verts)
    for (auto m = mg.adj[v] & s; m; m &= m - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(m));
      if (v < w) edges.emplace_back(v, w);
    }
  std::vector<int> need(mg.n, 0), avail(mg.n, 0);
  for (auto v : verts) need[v] = h;
  for (auto [u, w] : edges) {
    ++avail[u];
    ++avail[w];
  }
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == edges.size()) {
      return std::all_of(verts.begin(), verts.end(), [&](auto v) { return need[v] == 0; });
    }
    auto [u, w] = edges[i];
    --avail[u];
    --avail[w];
    bool ok = false;
    if (need[u] > 0 && need[w] > 0) {
      --need[u];
      --need[w];
      ok = need[u] <= avail[u] && need[w] <= avail[w] && self(self, i + 1);
      ++need[u];
      ++need[w];
    }
    if (!ok && need[u] <= avail[u] && need[w] <= avail[w]) ok = self(self, i + 1);
    ++avail[u];
    ++avail[w];
    return ok;
  };
  return rec(rec, 0);
}

}  // namespace detail

/**
 * Smallest vertex count of an h-regular (not necessarily induced) subgraph.
 * Starts from the min-degree minimum, which is a lower bound.
 */
inline OracleResult oracle_min_regular_subgraph(const TorusGraph& g, int h, const OracleOptions& opt = {}) {
  OracleResult base = oracle_min_subgraph(g, h, opt);
  if (!base.complete || !base.value) return base;
  const detail::MaskGraph mg(g);
  OracleResult out = base;
  out.method = "size-ascending-h-factor";
  for (auto k = static_cast<std::size_t>(*base.value); k <= mg.n; ++k) {
    auto hit = detail::least_subset_of_size(mg.n, k, opt.workers, [&](std::uint64_t s) {
      return mg.min_degree_at_least(s, h) && detail::has_h_factor(mg, s, h);
    });
    if (k > static_cast<std::size_t>(*base.value)) out.explored += detail::binomial(mg.n, k);
    if (hit) {
      out.value = static_cast<std::int64_t>(k);
      out.vertex_witness = VertexSet::from_mask(mg.n, *hit);
      return out;
    }
  }
  out.value.reset();
  return out;
}

/**
 * Instance check of the bound lambda^h(G) <= a_h(G) (k - h), k = 2r, where
 * a_h(G) is the size of a smallest h-regular subgraph. The min-degree
 * minimum is reported alongside; the two agree on tori.
 */
struct XuCheck {
  std::int64_t lambda_h = 0;
  std::int64_t a_h_regular = 0;
  std::int64_t a_h_min_degree = 0;
  std::int64_t bound = 0;
  bool ok = false;
  bool minima_diverge = false;
};

inline XuCheck oracle_xu_conjecture(const TorusGraph& g, int h, const OracleOptions& opt = {}) {
  const auto lambda = oracle_lambda(g, h, opt);
  if (!lambda.complete || !lambda.value) throw InfeasibleError("lambda oracle did not produce an exact value");
  const auto mindeg = oracle_min_subgraph(g, h, opt);
  const auto regular = oracle_min_regular_subgraph(g, h, opt);
  if (!mindeg.value || !regular.value) throw InfeasibleError("no subgraph of the requested degree exists");
  XuCheck out;
  out.lambda_h = *lambda.value;
  out.a_h_min_degree = *mindeg.value;
  out.a_h_regular = *regular.value;
  out.minima_diverge = out.a_h_min_degree != out.a_h_regular;
  out.bound = checked::mul(out.a_h_regular, static_cast<std::int64_t>(g.degree()) - h);
  out.ok = out.lambda_h <= out.bound;
  return out;
}

}  // namespace condtorus
