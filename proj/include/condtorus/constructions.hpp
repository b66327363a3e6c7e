#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "condtorus/errors.hpp"
#include "condtorus/formulas.hpp"
#include "condtorus/torus_graph.hpp"

namespace condtorus {

/**
 * @brief An embedded copy of W_h^r, the smallest subgraph of minimum degree h.
 *
 * For h <= r it is a hypercube Q_h: the last h canonical axes range over a
 * two-value window and the remaining axes are pinned. For h = r + i it is
 * Q_{r-i} x C_{k_1} x ... x C_{k_i}: the i shortest axes run over their whole
 * cycle and the others over a two-value window.
 */
struct WhrEmbedding {
  int h = 0;
  TorusSpec spec;
  VertexSet vertex_set;
  std::vector<std::size_t> cycle_axes;
  std::vector<std::size_t> hypercube_axes;
  std::vector<std::pair<std::size_t, int>> fixed_axes;  // (axis, pinned value)
};

/**
 * Builds W_h^r inside g. `offset` (canonical order, empty for all zeros)
 * translates the embedding: hypercube axes use {o, o+1} and pinned axes o.
 */
inline WhrEmbedding construct_W(const TorusGraph& g, int h, std::span<const int> offset = {}) {
  const TorusSpec& spec = g.spec();
  spec.require_theorem_range();
  const int r = spec.rank();
  if (h < 0 || h > 2 * r) throw ValidationError("W_h^r needs 0 <= h <= 2r");
  if (!offset.empty() && offset.size() != static_cast<std::size_t>(r)) {
    throw ValidationError("offset arity mismatch");
  }
  auto off = [&](std::size_t a) {
    const int k = spec.k(a);
    const int o = offset.empty() ? 0 : offset[a];
    return ((o % k) + k) % k;
  };

  WhrEmbedding w;
  w.h = h;
  w.spec = spec;
  const auto ur = static_cast<std::size_t>(r);
  if (h <= r) {
    const auto first_cube = ur - static_cast<std::size_t>(h);
    for (std::size_t a = 0; a < first_cube; ++a) w.fixed_axes.emplace_back(a, off(a));
    for (std::size_t a = first_cube; a < ur; ++a) w.hypercube_axes.push_back(a);
  } else {
    const auto i = static_cast<std::size_t>(h - r);
    for (std::size_t a = 0; a < i; ++a) w.cycle_axes.push_back(a);
    for (std::size_t a = i; a < ur; ++a) w.hypercube_axes.push_back(a);
  }

  w.vertex_set = g.empty_vertices();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    bool in = true;
    for (auto [a, pin] : w.fixed_axes) in = in && g.coord(v, a) == pin;
    for (auto a : w.hypercube_axes) {
      const int k = spec.k(a);
      const int rel = ((g.coord(v, a) - off(a)) % k + k) % k;
      in = in && rel <= 1;
    }
    if (in) w.vertex_set.insert(v);
  }
  return w;
}

/// N(V(W_h^r)); a conditional h-vertex cut of size (2r-h) a_h^r for 0 <= h <= 2r-2.
inline VertexSet optimal_vertex_cut(const TorusGraph& g, int h, std::span<const int> offset = {}) {
  const int r = g.spec().rank();
  if (h < 0 || h > 2 * r - 2) {
    throw ValidationError("vertex cut construction covers 0 <= h <= 2r-2, got h = " + std::to_string(h));
  }
  return g.open_neighborhood(construct_W(g, h, offset).vertex_set);
}

/// E_r(W_h^r); a conditional h-edge cut of size (2r-h) a_h^r for 0 <= h <= 2r-1.
inline EdgeSet optimal_edge_cut(const TorusGraph& g, int h, std::span<const int> offset = {}) {
  const int r = g.spec().rank();
  if (h < 0 || h > 2 * r - 1) {
    throw ValidationError("edge cut construction covers 0 <= h <= 2r-1, got h = " + std::to_string(h));
  }
  return g.boundary_edges(construct_W(g, h, offset).vertex_set);
}

}  // namespace condtorus
