#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "condtorus/errors.hpp"
#include "condtorus/general_graph.hpp"
#include "condtorus/index_set.hpp"
#include "condtorus/torus_spec.hpp"

namespace condtorus {

/// A vertex of a torus, addressed by its canonical-order coordinates.
struct Vertex {
  std::vector<int> coords;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/**
 * @brief Immutable r-dimensional torus C_{k_1} x ... x C_{k_r}.
 *
 * Vertices are numbered in mixed radix over canonical coordinates with the
 * last axis varying fastest. Edge `v * r + a` joins v to its +1 neighbour on
 * canonical axis a, so every edge has exactly one id.
 */
class TorusGraph {
 public:
  explicit TorusGraph(TorusSpec spec) : spec_(std::move(spec)) {
    if (spec_.rank() < 1) throw ValidationError("torus needs at least one cycle (r >= 1)");
    r_ = static_cast<std::size_t>(spec_.rank());
    n_ = static_cast<std::size_t>(spec_.vertex_count());
    stride_.assign(r_, 1);
    for (std::size_t a = r_ - 1; a-- > 0;) stride_[a] = stride_[a + 1] * static_cast<std::size_t>(spec_.k(a + 1));

    nbr_.resize(n_ * 2 * r_);
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t a = 0; a < r_; ++a) {
        nbr_[v * 2 * r_ + 2 * a] = step(v, a, +1);
        nbr_[v * 2 * r_ + 2 * a + 1] = step(v, a, -1);
      }
    }
  }

  const TorusSpec& spec() const noexcept { return spec_; }
  std::size_t rank() const noexcept { return r_; }
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return n_ * r_; }
  std::size_t degree() const noexcept { return 2 * r_; }

  // --- addressing -------------------------------------------------------

  int coord(std::size_t v, std::size_t axis) const {
    return static_cast<int>((v / stride_[axis]) % static_cast<std::size_t>(spec_.k(axis)));
  }

  Vertex vertex(std::size_t index) const {
    if (index >= n_) throw ValidationError("vertex index out of range");
    Vertex out;
    out.coords.resize(r_);
    for (std::size_t a = 0; a < r_; ++a) out.coords[a] = coord(index, a);
    return out;
  }

  std::size_t index_of(const Vertex& v) const {
    if (v.coords.size() != r_) {
      throw ValidationError("vertex has " + std::to_string(v.coords.size()) +
                            " coordinates, torus has rank " + std::to_string(r_));
    }
    std::size_t idx = 0;
    for (std::size_t a = 0; a < r_; ++a) {
      if (v.coords[a] < 0 || v.coords[a] >= spec_.k(a)) throw ValidationError("coordinate out of range");
      idx += static_cast<std::size_t>(v.coords[a]) * stride_[a];
    }
    return idx;
  }

  /// Neighbour of v one step in direction `dir` (+1 or -1) along `axis`.
  std::size_t step(std::size_t v, std::size_t axis, int dir) const {
    const int k = spec_.k(axis);
    const int c = coord(v, axis);
    const int nc = ((c + dir) % k + k) % k;
    return v + static_cast<std::size_t>(nc) * stride_[axis] - static_cast<std::size_t>(c) * stride_[axis];
  }

  /// v shifted by `offset` (canonical order), coordinatewise mod k.
  std::size_t translate(std::size_t v, std::span<const int> offset) const {
    if (offset.size() != r_) throw ValidationError("offset arity mismatch");
    Vertex p = vertex(v);
    for (std::size_t a = 0; a < r_; ++a) {
      const int k = spec_.k(a);
      p.coords[a] = ((p.coords[a] + offset[a]) % k + k) % k;
    }
    return index_of(p);
  }

  // --- adjacency --------------------------------------------------------

  /// The 2r neighbours of v, ordered (+axis0, -axis0, +axis1, ...).
  std::span<const std::size_t> neighbor_indices(std::size_t v) const {
    return {nbr_.data() + v * 2 * r_, 2 * r_};
  }

  std::vector<Vertex> neighbors(const Vertex& v) const {
    std::vector<Vertex> out;
    for (auto w : neighbor_indices(index_of(v))) out.push_back(vertex(w));
    return out;
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    auto nb = neighbor_indices(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
  }

  std::pair<std::size_t, std::size_t> endpoints(std::size_t edge) const {
    if (edge >= edge_count()) throw ValidationError("edge id out of range");
    const auto v = edge / r_;
    return {v, step(v, edge % r_, +1)};
  }

  std::optional<std::size_t> edge_id(std::size_t u, std::size_t v) const {
    for (std::size_t a = 0; a < r_; ++a) {
      if (step(u, a, +1) == v) return u * r_ + a;
      if (step(v, a, +1) == u) return v * r_ + a;
    }
    return std::nullopt;
  }

  /// Edge ids incident to v, in the same order as neighbor_indices(v).
  std::vector<std::size_t> incident_edges(std::size_t v) const {
    std::vector<std::size_t> out;
    out.reserve(2 * r_);
    for (std::size_t a = 0; a < r_; ++a) {
      out.push_back(v * r_ + a);
      out.push_back(step(v, a, -1) * r_ + a);
    }
    return out;
  }

  // --- subsets ----------------------------------------------------------

  VertexSet empty_vertices() const { return VertexSet(n_); }
  EdgeSet empty_edges() const { return EdgeSet(edge_count()); }
  VertexSet all_vertices() const { return VertexSet::full(n_); }

  /// Copy H^value of the sub-torus obtained by deleting `axis`.
  VertexSet slice(std::size_t axis, int value) const {
    check_axis_value(axis, value);
    VertexSet s(n_);
    for (std::size_t v = 0; v < n_; ++v)
      if (coord(v, axis) == value) s.insert(v);
    return s;
  }

  /// Perfect matching between slice(axis, value) and slice(axis, value + 1 mod k).
  EdgeSet slice_matching(std::size_t axis, int value) const {
    check_axis_value(axis, value);
    EdgeSet m(edge_count());
    for (std::size_t v = 0; v < n_; ++v)
      if (coord(v, axis) == value) m.insert(v * r_ + axis);
    return m;
  }

  /// N(S): vertices outside S with a neighbour in S.
  VertexSet open_neighborhood(const VertexSet& s) const {
    return closed_neighborhood(s) - s;
  }

  /// N[S] = N(S) u S.
  VertexSet closed_neighborhood(const VertexSet& s) const {
    check_vertices(s);
    VertexSet out = s;
    for (auto v : s.members())
      for (auto w : neighbor_indices(v)) out.insert(w);
    return out;
  }

  /// E_r(S): edges with exactly one endpoint in S.
  EdgeSet boundary_edges(const VertexSet& s) const {
    check_vertices(s);
    EdgeSet out(edge_count());
    for (auto v : s.members()) {
      for (std::size_t a = 0; a < r_; ++a) {
        if (!s.contains(step(v, a, +1))) out.insert(v * r_ + a);
        const auto back = step(v, a, -1);
        if (!s.contains(back)) out.insert(back * r_ + a);
      }
    }
    return out;
  }

  /// Number of neighbours of v inside s.
  std::size_t degree_within(std::size_t v, const VertexSet& s) const {
    std::size_t d = 0;
    for (auto w : neighbor_indices(v)) d += s.contains(w) ? 1 : 0;
    return d;
  }

  /// Minimum induced degree of the subgraph [s].
  std::size_t min_degree(const VertexSet& s) const {
    check_vertices(s);
    if (s.empty()) throw ValidationError("min_degree of an empty vertex set");
    std::size_t best = 2 * r_;
    for (auto v : s.members()) best = std::min(best, degree_within(v, s));
    return best;
  }

  /**
   * Connected components of G - deleted_vertices - deleted_edges, each
   * listed once, ordered by least member index.
   */
  std::vector<VertexSet> components(const VertexSet& deleted_vertices,
                                    const EdgeSet& deleted_edges) const {
    check_vertices(deleted_vertices);
    if (deleted_edges.universe() != edge_count()) throw ValidationError("edge set universe mismatch");
    std::vector<VertexSet> out;
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n_; ++start) {
      if (seen[start] || deleted_vertices.contains(start)) continue;
      VertexSet comp(n_);
      seen[start] = 1;
      stack.push_back(start);
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        comp.insert(u);
        for (std::size_t a = 0; a < r_; ++a) {
          const std::size_t fwd = step(u, a, +1);
          const std::size_t back = step(u, a, -1);
          if (!deleted_edges.contains(u * r_ + a)) visit(fwd, deleted_vertices, seen, stack);
          if (!deleted_edges.contains(back * r_ + a)) visit(back, deleted_vertices, seen, stack);
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::vector<VertexSet> components(const VertexSet& deleted_vertices) const {
    return components(deleted_vertices, empty_edges());
  }

  /// The same graph as a GeneralGraph; labels are canonical coordinates "x1,...,xr".
  GeneralGraph to_general() const {
    std::vector<std::string> labels;
    labels.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      std::string s;
      for (std::size_t a = 0; a < r_; ++a) s += (a ? "," : "") + std::to_string(coord(v, a));
      labels.push_back(std::move(s));
    }
    GeneralGraph g(std::move(labels));
    for (std::size_t e = 0; e < edge_count(); ++e) {
      auto [u, v] = endpoints(e);
      g.add_edge(u, v);
    }
    return g;
  }

  /// Induced subgraph [s] as a GeneralGraph, vertices in increasing index order.
  GeneralGraph induced(const VertexSet& s) const {
    check_vertices(s);
    const auto mem = s.members();
    std::vector<std::size_t> pos(n_, n_);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < mem.size(); ++i) {
      pos[mem[i]] = i;
      labels.push_back(std::to_string(mem[i]));
    }
    GeneralGraph g(std::move(labels));
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t a = 0; a < r_; ++a) {
        const auto w = step(mem[i], a, +1);
        if (pos[w] != n_) g.add_edge(i, pos[w]);
      }
    return g;
  }

 private:
  static void visit(std::size_t w, const VertexSet& deleted, std::vector<char>& seen,
                    std::vector<std::size_t>& stack) {
    if (!seen[w] && !deleted.contains(w)) {
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  void check_axis_value(std::size_t axis, int value) const {
    if (axis >= r_) throw ValidationError("axis out of range");
    if (value < 0 || value >= spec_.k(axis)) throw ValidationError("slice value out of range");
  }
  void check_vertices(const VertexSet& s) const {
    if (s.universe() != n_) throw ValidationError("vertex set universe mismatch");
  }

  TorusSpec spec_;
  std::size_t r_ = 0;
  std::size_t n_ = 0;
  std::vector<std::size_t> stride_;
  std::vector<std::size_t> nbr_;
};

/// Materializes the torus for `spec`. Refuses instances whose neighbour table would not fit memory.
inline TorusGraph build_torus(const TorusSpec& spec) {
  constexpr std::int64_t kMaxVertices = std::int64_t{1} << 26;
  if (spec.vertex_count() > kMaxVertices) {
    throw ValidationError("torus with " + std::to_string(spec.vertex_count()) +
                          " vertices is too large to materialize");
  }
  return TorusGraph(spec);
}

}  // namespace condtorus
