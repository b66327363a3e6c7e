#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "condtorus/constructions.hpp"
#include "condtorus/torus_graph.hpp"

using namespace condtorus;

namespace {

std::vector<std::vector<int>> all_specs(int kmin, int kmax, int rmax) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == rmax) return;
    for (int k = kmin; k <= kmax; ++k) {
      cur.push_back(k);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

VertexSet random_set(const TorusGraph& g, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  VertexSet s = g.empty_vertices();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

}  // namespace

TEST(TorusSpec, CanonicalizesAndRemembersUserOrder) {
  TorusSpec spec{6, 4, 5};
  EXPECT_EQ(std::vector<int>(spec.ks().begin(), spec.ks().end()), (std::vector<int>{4, 5, 6}));
  EXPECT_EQ(std::vector<int>(spec.user_ks().begin(), spec.user_ks().end()), (std::vector<int>{6, 4, 5}));
  const std::vector<int> canonical{1, 2, 3};  // x on the 4-, 5-, 6-cycles
  EXPECT_EQ(spec.to_user<int>(canonical), (std::vector<int>{3, 1, 2}));
  const auto user = spec.to_user<int>(canonical);
  EXPECT_EQ(spec.from_user<int>(user), canonical);
}

TEST(TorusSpec, RejectsDegenerateInput) {
  EXPECT_THROW(TorusSpec(std::vector<int>{}), ValidationError);
  EXPECT_THROW((TorusSpec{4, 2}), ValidationError);
  EXPECT_THROW((TorusSpec{0}), ValidationError);
  EXPECT_NO_THROW((TorusSpec{3, 4}));
  EXPECT_TRUE((TorusSpec{3, 4}).has_short_cycles());
  EXPECT_THROW((TorusSpec{3, 4}).require_theorem_range(), ValidationError);
  EXPECT_FALSE((TorusSpec{4, 4}).has_short_cycles());
}

TEST(TorusSpec, OverflowIsDistinctError) {
  std::vector<int> huge(40, 1000);
  EXPECT_THROW(TorusSpec{huge}, OverflowError);
}

TEST(BuildTorus, CountsFromDefinition) {
  auto g44 = build_torus({4, 4});
  EXPECT_EQ(g44.vertex_count(), 16u);
  EXPECT_EQ(g44.edge_count(), 32u);
  EXPECT_EQ(g44.degree(), 4u);
  auto g55 = build_torus({5, 5});
  EXPECT_EQ(g55.vertex_count(), 25u);
  EXPECT_EQ(g55.edge_count(), 50u);
  auto g456 = build_torus({4, 5, 6});
  EXPECT_EQ(g456.vertex_count(), 120u);
  EXPECT_EQ(g456.edge_count(), 360u);
  EXPECT_EQ(g456.degree(), 6u);
}

TEST(BuildTorus, ExhaustiveRegularityAndCounts) {
  for (const auto& ks : all_specs(3, 8, 3)) {
    const auto g = build_torus(TorusSpec(ks));
    std::size_t expected_n = 1;
    for (int k : ks) expected_n *= static_cast<std::size_t>(k);
    ASSERT_EQ(g.vertex_count(), expected_n);
    ASSERT_EQ(g.edge_count(), ks.size() * expected_n);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      auto nb = g.neighbor_indices(v);
      ASSERT_EQ(std::set<std::size_t>(nb.begin(), nb.end()).size(), 2 * ks.size());
      for (auto w : nb) edges.emplace(std::min(v, w), std::max(v, w));
    }
    ASSERT_EQ(edges.size(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto [u, w] = g.endpoints(e);
      ASSERT_EQ(g.edge_id(u, w), e);
      ASSERT_EQ(g.edge_id(w, u), e);
    }
  }
}

TEST(BuildTorus, AdjacencyRuleMatchesCoordinates) {
  const auto g = build_torus({4, 5, 6});
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto a = g.vertex(u), b = g.vertex(v);
      int differing = 0;
      bool unit = true;
      for (std::size_t i = 0; i < 3; ++i) {
        if (a.coords[i] == b.coords[i]) continue;
        ++differing;
        const int k = g.spec().k(i);
        const int d = ((a.coords[i] - b.coords[i]) % k + k) % k;
        unit = unit && (d == 1 || d == k - 1);
      }
      ASSERT_EQ(g.adjacent(u, v), differing == 1 && unit);
    }
  }
}

TEST(Neighbors, Examples) {
  const auto g = build_torus({4, 4});
  auto nb = g.neighbors(Vertex{{0, 0}});
  std::set<std::vector<int>> got;
  for (auto& v : nb) got.insert(v.coords);
  EXPECT_EQ(got, (std::set<std::vector<int>>{{1, 0}, {3, 0}, {0, 1}, {0, 3}}));

  const auto g55 = build_torus({5, 5});
  got.clear();
  for (auto& v : g55.neighbors(Vertex{{2, 2}})) got.insert(v.coords);
  EXPECT_EQ(got, (std::set<std::vector<int>>{{1, 2}, {3, 2}, {2, 1}, {2, 3}}));

  const auto g456 = build_torus({4, 5, 6});
  EXPECT_EQ(g456.neighbors(Vertex{{3, 4, 5}}).size(), 6u);
}

TEST(Neighbors, InvalidVertexRejected) {
  const auto g = build_torus({4, 4});
  EXPECT_THROW(g.neighbors(Vertex{{4, 0}}), ValidationError);
  EXPECT_THROW(g.neighbors(Vertex{{0, 0, 0}}), ValidationError);
  EXPECT_THROW(g.neighbors(Vertex{{-1, 0}}), ValidationError);
}

TEST(Slice, Examples) {
  const auto g = build_torus({4, 4});
  auto s = g.slice(1, 0);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(g.min_degree(s), 2u);
  EXPECT_TRUE(g.induced(s).is_connected());
  EXPECT_EQ(g.induced(s).edge_count(), 4u);  // an induced C4

  EXPECT_EQ(build_torus({4, 5}).slice(1, 2).size(), 4u);

  const auto g456 = build_torus({4, 5, 6});
  auto s3 = g456.slice(2, 0);
  EXPECT_EQ(s3.size(), 20u);
  auto sub = g456.induced(s3);
  EXPECT_EQ(sub.min_degree(), 4u);
  EXPECT_EQ(sub.max_degree(), 4u);
}

TEST(Slice, OutOfRangeRejected) {
  const auto g = build_torus({4, 5});
  EXPECT_THROW(g.slice(2, 0), ValidationError);
  EXPECT_THROW(g.slice(1, 5), ValidationError);
  EXPECT_THROW(g.slice_matching(0, -1), ValidationError);
}

// Dropping the sliced axis is an explicit isomorphism onto the smaller torus.
TEST(Slice, IsomorphicToSubTorus) {
  for (const auto& ks : all_specs(3, 6, 3)) {
    if (ks.size() < 2) continue;
    const auto g = build_torus(TorusSpec(ks));
    for (std::size_t axis = 0; axis < g.rank(); ++axis) {
      std::vector<int> rest;
      for (std::size_t a = 0; a < g.rank(); ++a)
        if (a != axis) rest.push_back(g.spec().k(a));
      const auto h = build_torus(TorusSpec(rest));
      for (int value : {0, g.spec().k(axis) - 1}) {
        const auto s = g.slice(axis, value);
        ASSERT_EQ(s.size(), h.vertex_count());
        auto project = [&](std::size_t v) {
          auto c = g.vertex(v).coords;
          c.erase(c.begin() + static_cast<std::ptrdiff_t>(axis));
          return h.index_of(Vertex{c});
        };
        const auto mem = s.members();
        for (auto u : mem)
          for (auto v : mem) ASSERT_EQ(g.adjacent(u, v), h.adjacent(project(u), project(v)));
      }
    }
  }
}

TEST(SliceMatching, Examples) {
  const auto g = build_torus({4, 4});
  EXPECT_EQ(g.slice_matching(1, 0).size(), 4u);

  const auto g456 = build_torus({4, 5, 6});
  auto m = g456.slice_matching(2, 5);
  EXPECT_EQ(m.size(), 20u);
  for (auto e : m.members()) {
    auto [u, w] = g456.endpoints(e);
    EXPECT_EQ(g456.coord(u, 2), 5);
    EXPECT_EQ(g456.coord(w, 2), 0);
  }

  EdgeSet all = g.empty_edges();
  std::size_t total = 0;
  for (int v = 0; v < 4; ++v) {
    auto mv = g.slice_matching(1, v);
    EXPECT_TRUE((all & mv).empty());
    total += mv.size();
    all |= mv;
  }
  EXPECT_EQ(total, 16u);
  EXPECT_EQ(all.size(), 16u);
}

TEST(Neighborhoods, Examples) {
  const auto g = build_torus({4, 4});
  VertexSet one(16, {g.index_of(Vertex{{1, 2}})});
  EXPECT_EQ(g.open_neighborhood(one).size(), 4u);
  EXPECT_EQ(g.closed_neighborhood(one).size(), 5u);
  EXPECT_TRUE(g.open_neighborhood(g.all_vertices()).empty());

  const auto w1 = construct_W(g, 1).vertex_set;
  EXPECT_EQ(w1.size(), 2u);
  EXPECT_EQ(g.open_neighborhood(w1).size(), 6u);
}

TEST(BoundaryEdges, Examples) {
  const auto g = build_torus({4, 4});
  EXPECT_EQ(g.boundary_edges(VertexSet(16, {5})).size(), 4u);
  EXPECT_TRUE(g.boundary_edges(g.all_vertices()).empty());

  const auto g55 = build_torus({5, 5});
  EXPECT_EQ(g55.boundary_edges(construct_W(g55, 2).vertex_set).size(), 8u);
}

TEST(BoundaryEdges, OutsideEndpointsAreTheOpenNeighborhood) {
  std::mt19937_64 rng(7);
  for (const auto& ks : std::vector<std::vector<int>>{{4, 4}, {3, 5}, {4, 5, 6}, {5, 5}}) {
    const auto g = build_torus(TorusSpec(ks));
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = random_set(g, rng, trial % 2 ? 0.1 : 0.5);
      const auto boundary = g.boundary_edges(s);
      VertexSet outside = g.empty_vertices();
      for (auto e : boundary.members()) {
        auto [u, w] = g.endpoints(e);
        ASSERT_NE(s.contains(u), s.contains(w));
        outside.insert(s.contains(u) ? w : u);
      }
      ASSERT_EQ(outside, g.open_neighborhood(s));
      ASSERT_LE(g.open_neighborhood(s).size(), boundary.size());
    }
  }
}

TEST(Components, Examples) {
  const auto g = build_torus({4, 4});
  auto none = g.components(g.empty_vertices());
  ASSERT_EQ(none.size(), 1u);
  EXPECT_EQ(none[0].size(), 16u);

  auto cut = g.slice(1, 0) | g.slice(1, 2);
  auto parts = g.components(cut);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].size(), 4u);
  EXPECT_EQ(parts[1].size(), 4u);
  EXPECT_TRUE(parts[0].contains(g.index_of(Vertex{{0, 1}})));

  EXPECT_TRUE(g.components(g.all_vertices()).empty());
}

TEST(Components, PartitionWithoutCrossingEdges) {
  std::mt19937_64 rng(11);
  const auto g = build_torus({4, 5});
  for (int trial = 0; trial < 300; ++trial) {
    const auto dv = random_set(g, rng, 0.35);
    EdgeSet de = g.empty_edges();
    std::bernoulli_distribution coin(0.3);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (coin(rng)) de.insert(e);
    const auto comps = g.components(dv, de);
    VertexSet seen = g.empty_vertices();
    std::vector<int> owner(g.vertex_count(), -1);
    std::size_t prev_min = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      ASSERT_TRUE((seen & comps[c]).empty());
      seen |= comps[c];
      const auto least = comps[c].members().front();
      if (c) {
        ASSERT_GT(least, prev_min);
      }
      prev_min = least;
      for (auto v : comps[c].members()) owner[v] = static_cast<int>(c);
    }
    ASSERT_EQ(seen, dv.complement());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (de.contains(e)) continue;
      auto [u, w] = g.endpoints(e);
      if (dv.contains(u) || dv.contains(w)) continue;
      ASSERT_EQ(owner[u], owner[w]);
    }
  }
}

TEST(MinDegree, Examples) {
  const auto g = build_torus({4, 4});
  EXPECT_EQ(g.min_degree(g.all_vertices()), 4u);
  EXPECT_EQ(build_torus({4, 5}).min_degree(build_torus({4, 5}).slice(0, 1)), 2u);
  EXPECT_EQ(g.min_degree(VertexSet(16, {3})), 0u);
  EXPECT_THROW(g.min_degree(g.empty_vertices()), ValidationError);
}

TEST(MinDegree, TriangleCyclesFlaggedButBuilt) {
  const auto g = build_torus({3, 3});
  EXPECT_TRUE(g.spec().has_short_cycles());
  EXPECT_EQ(g.min_degree(g.all_vertices()), 4u);
  EXPECT_THROW(construct_W(g, 1), ValidationError);
}
