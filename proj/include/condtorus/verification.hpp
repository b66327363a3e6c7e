#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "condtorus/constructions.hpp"
#include "condtorus/errors.hpp"
#include "condtorus/formulas.hpp"
#include "condtorus/torus_graph.hpp"

namespace condtorus {

enum class CutFailure { ConnectedAfterRemoval, ComponentDegreeTooLow, EmptyRemainder };

inline std::string_view to_string(CutFailure f) {
  switch (f) {
    case CutFailure::ConnectedAfterRemoval: return "connected-after-removal";
    case CutFailure::ComponentDegreeTooLow: return "component-degree-too-low";
    case CutFailure::EmptyRemainder: return "empty-remainder";
  }
  return "unknown";
}

/**
 * @brief Outcome of checking a candidate conditional h-cut.
 *
 * A cut is valid when G - F is non-empty, disconnected, and every component
 * has minimum degree >= h. On a degree failure `violating_component` and
 * `violating_vertex` name the first offender (components are ordered by
 * least member, vertices by index).
 */
struct CutCertificate {
  bool valid = false;
  std::optional<CutFailure> reason;
  std::vector<VertexSet> components;
  std::vector<std::size_t> per_component_min_degree;
  std::size_t cut_size = 0;
  std::optional<std::size_t> violating_component;
  std::optional<std::size_t> violating_vertex;
};

namespace detail {

// Fills validity fields from a component inventory; `deg` gives each vertex's degree in G - F.
template <typename DegreeFn>
void judge(CutCertificate& cert, int h, DegreeFn deg) {
  if (cert.components.empty()) {
    cert.reason = CutFailure::EmptyRemainder;
    return;
  }
  for (std::size_t c = 0; c < cert.components.size(); ++c) {
    std::size_t md = SIZE_MAX;
    std::size_t worst = 0;
    for (auto v : cert.components[c].members()) {
      const auto d = deg(v);
      if (d < md) {
        md = d;
        worst = v;
      }
    }
    cert.per_component_min_degree.push_back(md);
    if (md < static_cast<std::size_t>(h) && !cert.violating_component) {
      cert.violating_component = c;
      cert.violating_vertex = worst;
    }
  }
  if (cert.components.size() < 2) {
    cert.reason = CutFailure::ConnectedAfterRemoval;
  } else if (cert.violating_component) {
    cert.reason = CutFailure::ComponentDegreeTooLow;
  } else {
    cert.valid = true;
  }
}

inline void require_h(const TorusGraph& g, int h) {
  if (h < 0 || h >= static_cast<int>(g.degree())) {
    throw ValidationError("cut verification needs 0 <= h < 2r");
  }
}

}  // namespace detail

/// Checks that deleting vertex set f leaves a disconnected graph whose components all have min degree >= h.
inline CutCertificate verify_vertex_cut(const TorusGraph& g, const VertexSet& f, int h) {
  detail::require_h(g, h);
  CutCertificate cert;
  cert.cut_size = f.size();
  cert.components = g.components(f);
  const VertexSet rest = f.complement();
  detail::judge(cert, h, [&](std::size_t v) { return g.degree_within(v, rest); });
  return cert;
}

/// Checks that deleting edge set f disconnects G with every component of min degree >= h.
inline CutCertificate verify_edge_cut(const TorusGraph& g, const EdgeSet& f, int h) {
  detail::require_h(g, h);
  if (f.universe() != g.edge_count()) throw ValidationError("edge set universe mismatch");
  CutCertificate cert;
  cert.cut_size = f.size();
  cert.components = g.components(g.empty_vertices(), f);
  detail::judge(cert, h, [&](std::size_t v) {
    std::size_t d = 0;
    for (auto e : g.incident_edges(v)) d += f.contains(e) ? 0 : 1;
    return d;
  });
  return cert;
}

/**
 * Result of a structural property scan. `in_stated_range` is false when the
 * instance lies outside the h range for which the property is claimed; the
 * result is then informational only.
 */
struct NeighborCheck {
  bool holds = true;
  bool in_stated_range = true;
  std::optional<std::size_t> violator;
  std::size_t scanned = 0;
};

/// Every vertex outside V(W) has at most one neighbour in V(W). Claimed for h < 2r-1.
inline NeighborCheck check_one_neighbor(const TorusGraph& g, const WhrEmbedding& w) {
  NeighborCheck out;
  out.in_stated_range = w.h < 2 * g.spec().rank() - 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (w.vertex_set.contains(v)) continue;
    ++out.scanned;
    if (g.degree_within(v, w.vertex_set) > 1 && out.holds) {
      out.holds = false;
      out.violator = v;
    }
  }
  return out;
}

/// Every vertex outside N[V(W)] has at most two neighbours in N[V(W)]. Claimed for h <= 2r-1.
inline NeighborCheck check_two_neighbor(const TorusGraph& g, const WhrEmbedding& w) {
  NeighborCheck out;
  out.in_stated_range = w.h <= 2 * g.spec().rank() - 1;
  const VertexSet closed = g.closed_neighborhood(w.vertex_set);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (closed.contains(v)) continue;
    ++out.scanned;
    if (g.degree_within(v, closed) > 2 && out.holds) {
      out.holds = false;
      out.violator = v;
    }
  }
  return out;
}

struct BoundCheck {
  std::int64_t value = 0;
  std::int64_t bound = 0;
  bool ok = false;
};

namespace detail {

inline void require_min_degree(const TorusGraph& g, const VertexSet& y, int h) {
  if (y.empty()) throw PreconditionError("bound check needs a non-empty vertex set");
  if (g.min_degree(y) < static_cast<std::size_t>(h)) {
    throw PreconditionError("vertex set has induced min degree " + std::to_string(g.min_degree(y)) +
                            " < h = " + std::to_string(h));
  }
}

}  // namespace detail

/// |N[Y]| >= a_h^r (2r-h+1) for any Y whose induced min degree is >= h.
inline BoundCheck check_closed_neighborhood_bound(const TorusGraph& g, const VertexSet& y, int h) {
  const int r = g.spec().rank();
  if (h < 0 || h > 2 * r - 1) throw ValidationError("closed-neighbourhood bound covers 0 <= h <= 2r-1");
  detail::require_min_degree(g, y, h);
  BoundCheck out;
  out.value = static_cast<std::int64_t>(g.closed_neighborhood(y).size());
  out.bound = checked::mul(a_h_r(h, g.spec()), 2 * r - h + 1);
  out.ok = out.value >= out.bound;
  return out;
}

/// |Y| + |E_r(Y)| >= a_h^r (2r-h+1) for any Y whose induced min degree is >= h.
inline BoundCheck check_edge_boundary_bound(const TorusGraph& g, const VertexSet& y, int h) {
  const int r = g.spec().rank();
  if (h < 0 || h > 2 * r - 1) throw ValidationError("edge-boundary bound covers 0 <= h <= 2r-1");
  detail::require_min_degree(g, y, h);
  BoundCheck out;
  out.value = static_cast<std::int64_t>(y.size() + g.boundary_edges(y).size());
  out.bound = checked::mul(a_h_r(h, g.spec()), 2 * r - h + 1);
  out.ok = out.value >= out.bound;
  return out;
}

/// |Y| >= a_h^r for any Y whose induced min degree is >= h.
inline bool check_min_subgraph_bound(const TorusGraph& g, const VertexSet& y, int h) {
  detail::require_min_degree(g, y, h);
  return static_cast<std::int64_t>(y.size()) >= a_h_r(h, g.spec());
}

}  // namespace condtorus
