#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "condtorus/errors.hpp"

namespace condtorus {

/// Simple undirected graph with string labels, used for products of arbitrary factors.
class GeneralGraph {
 public:
  GeneralGraph() = default;
  explicit GeneralGraph(std::vector<std::string> labels)
      : labels_(std::move(labels)), adj_(labels_.size()) {}

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }

  bool adjacent(std::size_t u, std::size_t v) const {
    const auto& a = adj_.at(u);
    return std::find(a.begin(), a.end(), v) != a.end();
  }

  /// Rejects loops and parallel edges.
  void add_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop rejected");
    if (adjacent(u, v)) throw ValidationError("parallel edge rejected");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  std::size_t min_degree() const {
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (const auto& a : adj_) d = std::min(d, a.size());
    return adj_.empty() ? 0 : d;
  }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }
  bool is_regular() const { return min_degree() == max_degree(); }

  bool is_connected() const {
    if (adj_.empty()) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : adj_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == adj_.size();
  }

  static GeneralGraph cycle(std::size_t n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    GeneralGraph g(numbered(n));
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
  }

  static GeneralGraph complete(std::size_t n) {
    if (n < 1) throw ValidationError("complete graph needs at least 1 vertex");
    GeneralGraph g(numbered(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
  }

 private:
  static std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> adj_;
};

/**
 * Cartesian product G1 x G2. Vertex (x, y) gets index x * |V2| + y and label "x|y".
 * (x,y) ~ (u,v) iff (x = u and y ~ v) or (y = v and x ~ u).
 */
inline GeneralGraph cartesian_product(const GeneralGraph& g1, const GeneralGraph& g2) {
  if (g1.vertex_count() == 0 || g2.vertex_count() == 0) {
    throw ValidationError("cartesian_product: factors must be non-empty");
  }
  const auto n2 = g2.vertex_count();
  std::vector<std::string> labels;
  labels.reserve(g1.vertex_count() * n2);
  for (std::size_t x = 0; x < g1.vertex_count(); ++x)
    for (std::size_t y = 0; y < n2; ++y) labels.push_back(g1.label(x) + "|" + g2.label(y));

  GeneralGraph out(std::move(labels));
  for (std::size_t x = 0; x < g1.vertex_count(); ++x) {
    for (std::size_t y = 0; y < n2; ++y) {
      for (auto w : g2.neighbors(y))
        if (y < w) out.add_edge(x * n2 + y, x * n2 + w);
      for (auto u : g1.neighbors(x))
        if (x < u) out.add_edge(x * n2 + y, u * n2 + y);
    }
  }
  return out;
}

namespace detail {

// Unit-capacity flow network for counting internally vertex-disjoint paths.
// Vertex v is split into v_in = 2v and v_out = 2v + 1.
class SplitFlow {
 public:
  explicit SplitFlow(const GeneralGraph& g) : node_count_(2 * g.vertex_count()), head_(node_count_, -1) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      add_arc(2 * v, 2 * v + 1);
      for (auto w : g.neighbors(v)) add_arc(2 * v + 1, 2 * w);
    }
  }

  // Max number of internally disjoint s-t paths, stopping early at `cap`.
  std::size_t disjoint_paths(std::size_t s, std::size_t t, std::size_t cap) {
    for (auto& a : arcs_) a.flow = 0;
    const std::size_t source = 2 * s + 1;
    const std::size_t sink = 2 * t;
    std::size_t flow = 0;
    std::vector<int> via(node_count_);
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<std::size_t> q;
      q.push(source);
      via[source] = -2;
      while (!q.empty() && via[sink] == -1) {
        auto u = q.front();
        q.pop();
        for (int e = head_[u]; e != -1; e = arcs_[e].next) {
          auto& a = arcs_[e];
          if (a.cap - a.flow > 0 && via[a.to] == -1) {
            via[a.to] = e;
            q.push(a.to);
          }
        }
      }
      if (via[sink] == -1) break;
      for (auto v = sink; v != source;) {
        int e = via[v];
        arcs_[e].flow += 1;
        arcs_[e ^ 1].flow -= 1;
        v = arcs_[e ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    int flow;
    int next;
  };
  void add_arc(std::size_t from, std::size_t to) {
    arcs_.push_back({to, 1, 0, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::size_t node_count_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

/**
 * Classical vertex connectivity kappa(G): the minimum over non-adjacent pairs
 * of the number of internally vertex-disjoint paths (Menger), or n - 1 for a
 * complete graph. A disconnected graph has connectivity 0.
 */
inline std::size_t vertex_connectivity(const GeneralGraph& g) {
  const auto n = g.vertex_count();
  if (n < 2) throw ValidationError("vertex_connectivity needs at least 2 vertices");
  if (!g.is_connected()) return 0;
  std::size_t best = n - 1;
  detail::SplitFlow flow(g);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, flow.disjoint_paths(s, t, best));
    }
  }
  return best;
}

}  // namespace condtorus
