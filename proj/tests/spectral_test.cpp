#include "qconn/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qconn/enumerate.hpp"
#include "qconn/extremal.hpp"
#include "test_support.hpp"

namespace qconn {
namespace {

TEST(q_apply, small_cases) {
  const std::vector<double> ones{1, 1, 1};
  EXPECT_EQ(q_apply(complete(3), ones), (std::vector<double>{4, 4, 4}));
  const std::vector<double> e0{1, 0, 0};
  EXPECT_EQ(q_apply(path(3), e0), (std::vector<double>{1, 1, 0}));
  EXPECT_EQ(q_apply(empty(3), ones), (std::vector<double>{0, 0, 0}));
}

TEST(rayleigh, edge_sum_form) {
  const std::vector<double> v{1, 1};
  EXPECT_DOUBLE_EQ(rayleigh_q(complete(2), v), 2.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = testing::erdos_renyi(12, 0.4, seed);
    const std::vector<double> ones(12, 1.0);
    EXPECT_NEAR(rayleigh_q(g, ones), 4.0 * g.edge_count() / 12.0, 1e-12);
  }
  EXPECT_THROW(rayleigh_q(complete(2), std::vector<double>{0, 0}), std::invalid_argument);
}

TEST(rayleigh, indicator_of_clique_part_is_exact) {
  // K_100 u coK_2: indicator of the clique gives 2 * 99.
  const auto g = disjoint_union(complete(100), empty(2));
  VertexSet s(102);
  for (int v = 0; v < 100; ++v) s.insert(v);
  const auto r = rayleigh_q_indicator(g, s);
  EXPECT_EQ(r, (Rational{198, 1}));
  EXPECT_EQ(r, (Rational{19800, 100}));
}

TEST(q_index, closed_forms) {
  EXPECT_NEAR(q_index(complete(4)).midpoint(), 6.0, 1e-9);
  EXPECT_NEAR(q_index(cycle(5)).midpoint(), 4.0, 1e-9);
  // Star K_{1,n-1} has q = n.
  EXPECT_NEAR(q_index(join(complete(1), empty(4))).midpoint(), 5.0, 1e-9);
  // The 3-vertex path is the star K_{1,2}: spectrum {3, 1, 0}.
  EXPECT_NEAR(q_index(path(3)).midpoint(), 3.0, 1e-9);
  EXPECT_NEAR(testing::eigen_q_index(path(3)), 3.0, 1e-12);
}

TEST(q_index, clique_with_isolated_vertices) {
  EXPECT_NEAR(q_index(disjoint_union(complete(100), empty(2))).midpoint(), 198.0, 1e-9);
  // K_{n-delta+k-2} u coK_{delta-k+2} at (103,3,3)
  const auto est = q_index(disjoint_union(complete(101), empty(2)));
  EXPECT_TRUE(est.converged);
  EXPECT_NEAR(est.midpoint(), 200.0, 1e-9);
  EXPECT_LE(est.lower, 200.0);
  EXPECT_GE(est.upper, 200.0);
}

TEST(q_index, empty_and_trivial_graphs) {
  EXPECT_EQ(q_index(empty(4)).upper, 0.0);
  EXPECT_EQ(q_index(empty(1)).upper, 0.0);
  EXPECT_TRUE(q_index(empty(0)).converged);
}

TEST(q_index, disconnected_takes_component_maximum) {
  const auto g = disjoint_union(cycle(6), complete(4));
  const auto est = q_index(g);
  EXPECT_NEAR(est.midpoint(), 6.0, 1e-9);
  // Iterate lives on the K4 block only.
  for (int v = 0; v < 6; ++v) EXPECT_EQ(est.vector[v], 0.0);
}

TEST(q_index, bracket_contains_eigen_value_on_random_graphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 40);
    const auto g = testing::erdos_renyi(n, 0.1 + 0.8 * ((seed * 37) % 100) / 100.0, seed);
    const auto est = q_index(g);
    const double truth = testing::eigen_q_index(g);
    EXPECT_TRUE(est.converged) << seed;
    EXPECT_LE(est.lower, truth + 1e-10) << seed;
    EXPECT_GE(est.upper, truth - 1e-10) << seed;
    EXPECT_LE(est.width(), 1e-9 * 1.01) << seed;
  }
}

TEST(q_index, unconverged_bracket_is_still_valid) {
  const auto g = testing::erdos_renyi(30, 0.3, 99);
  const auto est = q_index(g, 1e-12, 2);
  const double truth = testing::eigen_q_index(g);
  EXPECT_LE(est.lower, truth);
  EXPECT_GE(est.upper, truth);
}

TEST(q_index, rejects_nonpositive_tolerance) {
  EXPECT_THROW(q_index(complete(3), 0.0), std::invalid_argument);
}

TEST(dense_oracle, agrees_with_eigen) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 30);
    const auto g = testing::erdos_renyi(n, 0.5, seed + 1000);
    EXPECT_NEAR(q_index_dense_oracle(g), testing::eigen_q_index(g), 1e-9);
    EXPECT_NEAR(adjacency_dense_oracle(g), testing::eigen_adjacency_radius(g), 1e-9);
  }
  EXPECT_THROW(q_index_dense_oracle(empty(401)), std::invalid_argument);
}

TEST(adjacency, closed_forms) {
  for (int n = 2; n < 10; ++n) EXPECT_NEAR(adjacency_spectral_radius(complete(n)).midpoint(), n - 1.0, 1e-9);
  EXPECT_NEAR(adjacency_spectral_radius(cycle(6)).midpoint(), 2.0, 1e-9);
  // Bipartite graphs have -lambda in the spectrum; the shifted iteration copes.
  EXPECT_NEAR(adjacency_spectral_radius(join(complete(1), empty(4))).midpoint(), 2.0, 1e-9);
}

TEST(adjacency, extremal_graph_radius_window) {
  const auto a = build_A({103, 3, 3}).graph;
  const auto est = adjacency_spectral_radius(a);
  EXPECT_GT(est.lower, 99.0);
  EXPECT_LT(est.upper, 102.0);
  EXPECT_NEAR(est.midpoint(), testing::eigen_adjacency_radius(a), 1e-8);
}

TEST(eigen_identity, exact_on_complete_graph) {
  const auto rep = verify_eigen_identity(complete(4), q_index(complete(4)));
  EXPECT_LE(rep.vertex_residual, 1e-10);
  EXPECT_LE(rep.pair_residual, 1e-10);
  EXPECT_TRUE(rep.passed);
}

TEST(eigen_identity, cycle_and_extremal_residuals) {
  const auto c = verify_eigen_identity(cycle(5), q_index(cycle(5), 1e-9));
  EXPECT_LE(c.vertex_residual, 1e-8);
  EXPECT_LE(c.pair_residual, 1e-8);
  const auto a = build_A({103, 3, 3}).graph;
  const auto r = verify_eigen_identity(a, q_index(a, 1e-8));
  EXPECT_LE(r.vertex_residual, 1e-6);
  EXPECT_LE(r.pair_residual, 1e-6);
  EXPECT_TRUE(r.passed);
}

TEST(eigen_identity, refuses_unconverged_estimate) {
  const auto g = testing::erdos_renyi(30, 0.3, 5);
  EXPECT_THROW(verify_eigen_identity(g, q_index(g, 1e-14, 1)), std::invalid_argument);
}

TEST(edge_bound, formula) {
  EXPECT_DOUBLE_EQ(q_upper_bound_edges(path(3)), 3.0);
  EXPECT_DOUBLE_EQ(q_upper_bound_edges(complete(5)), 8.0);
  EXPECT_THROW(q_upper_bound_edges(empty(1)), std::invalid_argument);
}

TEST(edge_bound, holds_on_random_graphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = testing::erdos_renyi(2 + static_cast<int>(seed % 25), 0.5, seed + 7);
    EXPECT_LE(testing::eigen_q_index(g), q_upper_bound_edges(g) + 1e-9) << seed;
  }
}

TEST(threshold, decides_clear_cases) {
  const auto k = complete(10);
  EXPECT_EQ(compare_q_to_threshold(k, 17.5).decision, ThresholdDecision::kAtLeast);
  EXPECT_EQ(compare_q_to_threshold(k, 18.5).decision, ThresholdDecision::kBelow);
}

TEST(threshold, exact_tie_stays_undecided) {
  // q(K_10) = 18 exactly: the bracket can never certify either side.
  const auto r = compare_q_to_threshold(complete(10), 18.0, 1e-9, 50'000);
  EXPECT_NE(r.decision, ThresholdDecision::kBelow);
  EXPECT_LE(r.estimate.lower, 18.0);
}

TEST(threshold, near_tie_families_at_order_103) {
  const ExtremalParams p{103, 3, 3};
  const auto a = build_A(p).graph;
  EXPECT_EQ(compare_q_to_threshold(a, 200.0).decision, ThresholdDecision::kAtLeast);
  auto second = make_member(p, {{0, 1}, {5, 6}}).graph;
  EXPECT_EQ(compare_q_to_threshold(second, 200.0).decision, ThresholdDecision::kBelow);
}

}  // namespace
}  // namespace qconn
