#include <gtest/gtest.h>

#include <random>
#include <set>

#include "condtorus/constructions.hpp"
#include "condtorus/formulas.hpp"
#include "condtorus/verification.hpp"

using namespace condtorus;

namespace {

std::vector<std::vector<int>> sorted_specs(int kmin, int kmax, int rmax) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == rmax) return;
    for (int k = lo; k <= kmax; ++k) {
      cur.push_back(k);
      self(self, k);
      cur.pop_back();
    }
  };
  rec(rec, kmin);
  return out;
}

std::set<std::vector<int>> coords_of(const TorusGraph& g, const VertexSet& s) {
  std::set<std::vector<int>> out;
  for (auto v : s.members()) out.insert(g.vertex(v).coords);
  return out;
}

}  // namespace

TEST(ConstructW, Examples) {
  const auto g = build_torus({5, 5});
  auto w2 = construct_W(g, 2);
  EXPECT_EQ(coords_of(g, w2.vertex_set), (std::set<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  auto sub = g.induced(w2.vertex_set);
  EXPECT_TRUE(sub.is_regular());
  EXPECT_EQ(sub.min_degree(), 2u);
  EXPECT_TRUE(sub.is_connected());

  auto w3 = construct_W(g, 3);
  std::set<std::vector<int>> expect;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 2; ++y) expect.insert({x, y});
  EXPECT_EQ(coords_of(g, w3.vertex_set), expect);
  EXPECT_EQ(w3.cycle_axes, (std::vector<std::size_t>{0}));
  EXPECT_EQ(w3.hypercube_axes, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(w3.fixed_axes.empty());
  EXPECT_EQ(g.min_degree(w3.vertex_set), 3u);

  const auto g3 = build_torus({4, 4, 4});
  auto w0 = construct_W(g3, 0);
  EXPECT_EQ(coords_of(g3, w0.vertex_set), (std::set<std::vector<int>>{{0, 0, 0}}));
  EXPECT_EQ(w0.fixed_axes.size(), 3u);
}

TEST(ConstructW, Errors) {
  const auto g = build_torus({4, 4});
  EXPECT_THROW(construct_W(g, 5), ValidationError);
  EXPECT_THROW(construct_W(g, -1), ValidationError);
  EXPECT_THROW(construct_W(build_torus({3, 5}), 2), ValidationError);
}

// Size a_h^r, exact h-regularity, and axis partition for every small spec and h.
TEST(ConstructW, SizeAndRegularitySweep) {
  for (const auto& ks : sorted_specs(4, 6, 3)) {
    const auto g = build_torus(TorusSpec(ks));
    const int r = g.spec().rank();
    for (int h = 0; h <= 2 * r; ++h) {
      const auto w = construct_W(g, h);
      ASSERT_EQ(static_cast<std::int64_t>(w.vertex_set.size()), a_h_r(h, g.spec()));
      const auto sub = g.induced(w.vertex_set);
      ASSERT_TRUE(sub.is_regular());
      ASSERT_EQ(sub.min_degree(), static_cast<std::size_t>(h));
      std::set<std::size_t> axes(w.cycle_axes.begin(), w.cycle_axes.end());
      axes.insert(w.hypercube_axes.begin(), w.hypercube_axes.end());
      for (auto [a, pin] : w.fixed_axes) axes.insert(a);
      ASSERT_EQ(axes.size(), static_cast<std::size_t>(r));
      ASSERT_EQ(w.cycle_axes.size() + w.hypercube_axes.size() + w.fixed_axes.size(), static_cast<std::size_t>(r));
      if (h >= 1 && sub.vertex_count() <= 64) {
        ASSERT_EQ(vertex_connectivity(sub), static_cast<std::size_t>(h)) << "h=" << h;
      }
    }
  }
}

TEST(ConstructW, TranslatesBehaveIdentically) {
  std::mt19937_64 rng(3);
  const auto g = build_torus({4, 5, 6});
  for (int h = 0; h <= 6; ++h) {
    for (int t = 0; t < 5; ++t) {
      std::vector<int> off{static_cast<int>(rng() % 4), static_cast<int>(rng() % 5), static_cast<int>(rng() % 6)};
      const auto w = construct_W(g, h, off);
      ASSERT_EQ(static_cast<std::int64_t>(w.vertex_set.size()), a_h_r(h, g.spec()));
      ASSERT_EQ(g.induced(w.vertex_set).min_degree(), static_cast<std::size_t>(h));
      ASSERT_EQ(g.induced(w.vertex_set).max_degree(), static_cast<std::size_t>(h));
      // Translate of the canonical embedding.
      const auto base = construct_W(g, h).vertex_set;
      VertexSet moved = g.empty_vertices();
      for (auto v : base.members()) moved.insert(g.translate(v, off));
      ASSERT_EQ(moved, w.vertex_set);
    }
  }
}

TEST(OptimalVertexCut, Examples) {
  const auto g44 = build_torus({4, 4});
  auto c0 = optimal_vertex_cut(g44, 0);
  EXPECT_EQ(coords_of(g44, c0), (std::set<std::vector<int>>{{1, 0}, {3, 0}, {0, 1}, {0, 3}}));
  EXPECT_EQ(optimal_vertex_cut(build_torus({5, 5}), 2).size(), 8u);
  auto c1 = optimal_vertex_cut(g44, 1);
  EXPECT_EQ(c1.size(), 6u);
  EXPECT_EQ(c1.size(), (4 - 1) * construct_W(g44, 1).vertex_set.size());
  EXPECT_THROW(optimal_vertex_cut(g44, 3), ValidationError);
}

TEST(OptimalEdgeCut, Examples) {
  const auto g44 = build_torus({4, 4});
  auto e0 = optimal_edge_cut(g44, 0);
  EXPECT_EQ(e0.size(), 4u);
  for (auto e : e0.members()) {
    auto [u, w] = g44.endpoints(e);
    EXPECT_TRUE(u == 0 || w == 0);
  }
  EXPECT_EQ(optimal_edge_cut(build_torus({5, 5}), 3).size(), 10u);
  EXPECT_EQ(optimal_edge_cut(build_torus({4, 5, 6}), 2).size(), 16u);
  EXPECT_THROW(optimal_edge_cut(g44, 4), ValidationError);
  EXPECT_NO_THROW(optimal_edge_cut(g44, 3));
}

TEST(OptimalCuts, VerifyAndMatchTheoremValue) {
  for (const auto& ks : sorted_specs(4, 6, 3)) {
    const auto g = build_torus(TorusSpec(ks));
    const int r = g.spec().rank();
    for (int h = 0; h <= 2 * r - 2; ++h) {
      const auto vc = optimal_vertex_cut(g, h);
      const auto ec = optimal_edge_cut(g, h);
      const auto expected = theorem_value(h, g.spec());
      ASSERT_EQ(static_cast<std::int64_t>(vc.size()), expected);
      ASSERT_EQ(static_cast<std::int64_t>(ec.size()), expected);
      ASSERT_TRUE(verify_vertex_cut(g, vc, h).valid) << "h=" << h;
      ASSERT_TRUE(verify_edge_cut(g, ec, h).valid) << "h=" << h;
    }
    if (r >= 1) {
      const int top = 2 * r - 1;
      const auto ec = optimal_edge_cut(g, top);
      ASSERT_TRUE(verify_edge_cut(g, ec, top).valid);
    }
  }
}

// Each vertex of W has exactly 2r - h outside neighbours and no outside vertex is shared.
TEST(OptimalVertexCut, CountingStep) {
  for (const auto& ks : sorted_specs(4, 6, 3)) {
    const auto g = build_torus(TorusSpec(ks));
    const int r = g.spec().rank();
    for (int h = 0; h <= 2 * r - 2; ++h) {
      const auto w = construct_W(g, h).vertex_set;
      std::vector<int> hits(g.vertex_count(), 0);
      for (auto v : w.members()) {
        std::size_t outside = 0;
        for (auto u : g.neighbor_indices(v))
          if (!w.contains(u)) {
            ++outside;
            ++hits[u];
          }
        ASSERT_EQ(outside, static_cast<std::size_t>(2 * r - h));
      }
      for (int c : hits) ASSERT_LE(c, 1);
    }
  }
}

TEST(OptimalCuts, UserOrderDoesNotChangeSizes) {
  const auto a = build_torus({6, 4, 5});
  const auto b = build_torus({4, 5, 6});
  for (int h = 0; h <= 4; ++h) {
    EXPECT_EQ(optimal_vertex_cut(a, h).size(), optimal_vertex_cut(b, h).size());
    EXPECT_EQ(optimal_edge_cut(a, h).size(), optimal_edge_cut(b, h).size());
  }
}
