#include "qconn/certifier.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

#include "qconn/serialize.hpp"
#include "test_support.hpp"

namespace qconn {
namespace {

const ExtremalParams kBase{103, 3, 3};

TEST(certify, complete_graph_needs_declared_delta) {
  const auto own = certify(complete(103), 3);
  EXPECT_EQ(own.outcome, Outcome::kHypothesisFailed);
  EXPECT_FALSE(own.hypotheses.order_at_least_F);
  EXPECT_EQ(own.delta, 102);
  const auto v = certify(complete(103), 3, kDefaultTolerance, 3);
  EXPECT_TRUE(v.hypotheses.min_degree_at_least_delta);
  EXPECT_EQ(v.min_degree, 102);
  EXPECT_EQ(v.outcome, Outcome::kKConnectedCertified);
  EXPECT_EQ(v.threshold, 200);
  ASSERT_TRUE(v.connectivity);
  EXPECT_EQ(v.connectivity->kappa, 102);
  EXPECT_NEAR(v.spectral.midpoint(), 204.0, 1e-9);
}

TEST(certify, extremal_graph_is_exceptional) {
  const auto v = certify(build_A(kBase).graph, 3);
  EXPECT_EQ(v.outcome, Outcome::kExceptionalFamily);
  EXPECT_EQ(v.threshold, 200);
  ASSERT_TRUE(v.membership);
  EXPECT_TRUE(v.membership->removed.empty());
  EXPECT_EQ(v.connectivity->kappa, 2);
  EXPECT_FALSE(v.theorem_violation());
}

TEST(certify, first_family_members_are_exceptional_under_relabeling) {
  for (const auto& orbit : enumerate_Eprime_orbits(kBase, 1)) {
    const auto g = testing::relabel(make_member(kBase, orbit.edges).graph, testing::random_permutation(103, 11));
    const auto v = certify(g, 3);
    EXPECT_EQ(v.outcome, Outcome::kExceptionalFamily) << orbit.pattern;
    ASSERT_TRUE(v.membership);
    EXPECT_EQ(v.membership->removed.size(), 1u);
  }
}

TEST(certify, second_family_members_miss_the_condition) {
  for (const auto& orbit : enumerate_Eprime_orbits(kBase, 2)) {
    const auto v = certify(make_member(kBase, orbit.edges).graph, 3);
    EXPECT_EQ(v.outcome, Outcome::kConditionNotMet) << orbit.pattern;
    EXPECT_GT(v.spectral.lower, 199.0);
    EXPECT_LT(v.spectral.upper, 200.0);
  }
}

TEST(certify, hypothesis_failures) {
  EXPECT_EQ(certify(cycle(103), 3).outcome, Outcome::kHypothesisFailed);
  EXPECT_EQ(certify(build_A({102, 3, 3}).graph, 3).outcome, Outcome::kHypothesisFailed);
  EXPECT_EQ(certify(build_A({103, 2, 3}).graph, 2).outcome, Outcome::kHypothesisFailed);
  EXPECT_FALSE(certify(build_A({103, 3, 3}).graph, 3, kDefaultTolerance, 4).hypotheses.min_degree_at_least_delta);
  EXPECT_EQ(certify(disjoint_union(complete(60), complete(60)), 3).outcome, Outcome::kHypothesisFailed);
  const auto v = certify(complete(8), 3);
  EXPECT_FALSE(v.hypotheses.order_at_least_F);
  EXPECT_EQ(v.hypotheses.F, threshold_F(3, 7));
}

TEST(certify, below_the_threshold) {
  // A with extra sparsity inside Z: delta stays 3 but q drops.
  auto g = build_A(kBase).graph;
  for (int v = 10; v < 60; v += 2) g.remove_edge(v, v + 1);
  const auto v = certify(g, 3);
  EXPECT_EQ(v.outcome, Outcome::kConditionNotMet);
}

TEST(certify, serializes_stable_fields) {
  const nlohmann::json j = certify(build_A(kBase).graph, 3);
  for (const char* key : {"outcome", "threshold", "q_lower", "q_upper", "kappa", "cut", "member", "identity_value"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["outcome"], "EXCEPTIONAL_FAMILY");
  EXPECT_EQ(j["identity_value"], 4);
  EXPECT_EQ(j["cut"], (std::vector<int>{0, 1}));
}

TEST(indicator_identity, closed_form) {
  EXPECT_EQ(indicator_identity(make_member(kBase, {})), 4);
  EXPECT_EQ(indicator_identity(make_member(kBase, {{0, 1}})), 0);
  EXPECT_EQ(indicator_identity(make_member(kBase, {{0, 1}, {4, 5}})), -4);
  EXPECT_EQ(indicator_identity(make_member({30, 3, 4}, {{0, 1}, {6, 7}})), -2);
}

TEST(edge_bound_check, tight_cases_pass) {
  EXPECT_EQ(check_edge_bound(path(3)).status, CheckStatus::kPass);
  EXPECT_EQ(check_edge_bound(complete(6)).status, CheckStatus::kPass);
  EXPECT_EQ(check_edge_bound(join(complete(1), empty(5))).status, CheckStatus::kPass);
}

TEST(density_check, examples) {
  const auto k8 = check_density_condition(complete(8), 3, 3);
  EXPECT_EQ(k8.status, CheckStatus::kPass);
  EXPECT_EQ(k8.evidence["via"], "k-connected");
  const auto a = check_density_condition(build_A({8, 3, 3}).graph, 3, 3);
  EXPECT_EQ(a.status, CheckStatus::kPass);
  EXPECT_EQ(a.evidence["via"], "subgraph-of-A");
  EXPECT_EQ(check_density_condition(cycle(8), 3, 3).status, CheckStatus::kHypothesisFailed);
  EXPECT_EQ(check_density_condition(build_M(8, 3), 3, 3).status, CheckStatus::kVacuous);
}

TEST(first_family_check, order_103) {
  const auto intact = check_first_family(kBase, {});
  EXPECT_EQ(intact.status, CheckStatus::kPass);
  EXPECT_EQ(intact.evidence["identity_value"], 4);
  for (const auto& orbit : enumerate_Eprime_orbits(kBase, 1)) {
    const auto r = check_first_family(kBase, orbit.edges);
    EXPECT_EQ(r.status, CheckStatus::kPass) << orbit.pattern;
    EXPECT_EQ(r.evidence["identity_value"], 0);
    EXPECT_GE(r.evidence["q_lower"].get<double>(), 200.0 - 1e-6);
  }
  EXPECT_THROW(check_first_family(kBase, {{0, 1}, {4, 5}}), std::invalid_argument);
}

TEST(second_family_check, order_103) {
  for (const auto& orbit : enumerate_Eprime_orbits(kBase, 2)) {
    const auto r = check_second_family(kBase, orbit.edges);
    EXPECT_EQ(r.status, CheckStatus::kPass) << orbit.pattern;
    EXPECT_EQ(r.evidence["identity_value"], -4);
  }
  EXPECT_THROW(check_second_family(kBase, {}), std::invalid_argument);
}

TEST(x_entries_check, tight_on_intact_graph) {
  const auto r = check_x_entries(make_member(kBase, {}));
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_NEAR(r.evidence["slack"].get<double>(), 0.0, 1e-7);
  EXPECT_LE(r.evidence["x_spread"].get<double>(), 1e-9);
}

TEST(x_entries_check, every_representative) {
  for (int size = 0; size <= 2; ++size) {
    for (const auto& orbit : enumerate_Eprime_orbits(kBase, size)) {
      const auto r = check_x_entries(make_member(kBase, orbit.edges));
      EXPECT_EQ(r.status, CheckStatus::kPass) << orbit.pattern;
      EXPECT_GE(r.evidence["slack"].get<double>(), -1e-7);
    }
  }
}

TEST(orderings_check, intact_graph_has_only_y1_over_z1) {
  const auto r = check_orderings(make_member(kBase, {}));
  EXPECT_EQ(r.status, CheckStatus::kPass);
  int vacuous = 0;
  for (const auto& o : r.evidence["orderings"]) {
    if (o["status"] == "vacuous") ++vacuous;
    if (o["check"] == "Y1>Z1") EXPECT_EQ(o["status"], "pass");
  }
  EXPECT_EQ(vacuous, 3);
}

TEST(orderings_check, empirical_maximizer) {
  const auto best = find_empirical_maximizer(kBase);
  EXPECT_EQ(best.representatives, static_cast<int>(enumerate_Eprime_orbits(kBase, 2).size()));
  EXPECT_EQ(best.member.family, FamilyClass::kA2);
  const auto r = check_orderings(best.member);
  EXPECT_EQ(r.status, CheckStatus::kPass) << r.evidence.dump();
  EXPECT_LE(r.evidence["eq_vertex_residual"].get<double>(), 1e-6);
  EXPECT_LE(r.evidence["eq_pair_residual"].get<double>(), 1e-6);
  EXPECT_LE(r.evidence["eq_nested_residual"].get<double>(), 1e-6);
}

TEST(entry_spread_check, maximizer_and_others) {
  const auto best = find_empirical_maximizer(kBase);
  EXPECT_EQ(check_entry_spread(best.member, true).status, CheckStatus::kPass);
  for (const auto& orbit : enumerate_Eprime_orbits(kBase, 2)) {
    const auto r = check_entry_spread(make_member(kBase, orbit.edges), false);
    EXPECT_EQ(r.status, CheckStatus::kInformational);
  }
}

TEST(second_family_below_check, order_103) {
  const auto r = check_second_family_below(kBase);
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_LT(r.evidence["max_q_upper"].get<double>(), 200.0);
  EXPECT_GT(r.evidence["min_q_lower"].get<double>(), 199.0);
  EXPECT_LT(r.evidence["proof_difference_bound"].get<double>(), 0.0);
}

TEST(edge_count_chain, exact_at_threshold_orders) {
  EXPECT_EQ(verify_edge_count_chain(kBase).status, CheckStatus::kPass);
  EXPECT_EQ(verify_edge_count_chain({185, 3, 4}).status, CheckStatus::kPass);
  const auto below = verify_edge_count_chain({102, 3, 3});
  EXPECT_EQ(below.status, CheckStatus::kInformational);
  EXPECT_TRUE(below.evidence["identity_holds"].get<bool>());
}

TEST(edge_count_chain, margin_formula) {
  // 2m_min - twice density bound = 2(n-delta-2) - 2(delta-k+2)(delta+1).
  const auto r = verify_edge_count_chain(kBase);
  EXPECT_EQ(r.evidence["margins"]["twice_strict_gap"], 2 * 98 - 2 * 2 * 4);
}

TEST(z1_nonempty_check, order_103) {
  EXPECT_EQ(check_z1_nonempty(kBase).status, CheckStatus::kPass);
  EXPECT_EQ(check_z1_nonempty({185, 3, 4}).status, CheckStatus::kPass);
}

}  // namespace
}  // namespace qconn
