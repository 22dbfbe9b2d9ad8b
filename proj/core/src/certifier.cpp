#include "qconn/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qconn {

namespace {

using nlohmann::json;

VertexSet yz_support(const FamilyMember& m) {
  VertexSet s(m.graph.order());
  for (int v : m.partition.y) s.insert(v);
  for (int v : m.partition.z) s.insert(v);
  return s;
}

json rational_json(const Rational& r) { return {{"num", r.num}, {"den", r.den}, {"value", r.value()}}; }

double max_over(const std::vector<double>& x, const std::vector<int>& set) {
  double best = -INFINITY;
  for (int v : set) best = std::max(best, x[v]);
  return best;
}

double min_over(const std::vector<double>& x, const std::vector<int>& set) {
  double best = INFINITY;
  for (int v : set) best = std::min(best, x[v]);
  return best;
}

std::vector<int> union_of(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// N(j) \ {i} is contained in N(i) \ {j}.
bool nested_neighbourhood(const Graph& g, int i, int j) {
  auto ri = g.row(i);
  auto rj = g.row(j);
  for (int w = 0; w < g.words_per_row(); ++w) {
    std::uint64_t extra = rj[w] & ~ri[w];
    if (w == (i >> 6)) extra &= ~(std::uint64_t{1} << (i & 63));
    if (extra != 0) return false;
  }
  return true;
}

void record_order_check(CheckReport& rep, const char* name, const std::vector<double>& x,
                        const std::vector<int>& high, const std::vector<int>& low, double margin_needed) {
  json entry{{"check", name}};
  if (high.empty() || low.empty()) {
    entry["status"] = "vacuous";
  } else {
    const double margin = min_over(x, high) - max_over(x, low);
    entry["margin"] = margin;
    const bool ok = margin > margin_needed;
    entry["status"] = ok ? "pass" : "fail";
    if (!ok) {
      rep.status = CheckStatus::kFail;
      rep.findings.push_back(std::string(name) + " ordering violated, margin " + std::to_string(margin));
    }
  }
  rep.evidence["orderings"].push_back(entry);
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kKConnectedCertified: return "K_CONNECTED_CERTIFIED";
    case Outcome::kExceptionalFamily: return "EXCEPTIONAL_FAMILY";
    case Outcome::kConditionNotMet: return "CONDITION_NOT_MET";
    case Outcome::kHypothesisFailed: return "HYPOTHESIS_FAILED";
    case Outcome::kUndecidedNumeric: return "UNDECIDED_NUMERIC";
    case Outcome::kTheoremViolation: return "THEOREM_VIOLATION";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kVacuous: return "vacuous";
    case CheckStatus::kHypothesisFailed: return "hypothesis_failed";
    case CheckStatus::kUndecided: return "undecided";
    case CheckStatus::kInformational: return "informational";
  }
  return "?";
}

std::int64_t indicator_identity(const FamilyMember& m) {
  const auto support = yz_support(m);
  const std::int64_t n_yz = support.size();
  std::int64_t sum = 0;
  for (const auto& e : m.graph.edges()) {
    const int s = (support.contains(e.u) ? 1 : 0) + (support.contains(e.v) ? 1 : 0);
    sum += s * s;
  }
  // Subtract <Q(K_{|YuZ|} u coK_{|X|}) z, z> = 4 C(|YuZ|, 2).
  return sum - 2 * n_yz * (n_yz - 1);
}

Verdict certify(const Graph& g, int k, double tolerance, std::optional<int> delta) {
  Verdict v;
  v.n = g.order();
  v.k = k;
  const auto prof = degree_profile(g);
  v.min_degree = prof.min_degree;
  v.delta = delta.value_or(prof.min_degree);
  v.hypotheses.connected = prof.connected && v.n > 0;
  v.hypotheses.k_at_least_3 = k >= 3;
  v.hypotheses.min_degree_at_least_k = v.delta >= k;
  v.hypotheses.min_degree_at_least_delta = prof.min_degree >= v.delta;
  if (v.hypotheses.k_at_least_3 && v.hypotheses.min_degree_at_least_k) {
    v.hypotheses.F = threshold_F(k, v.delta);
    v.hypotheses.order_at_least_F = v.n >= *v.hypotheses.F;
  }
  v.threshold = 2 * (static_cast<std::int64_t>(v.n) - v.delta + k - 3);

  if (!v.hypotheses.all()) {
    v.spectral = q_index(g, tolerance);
    v.outcome = Outcome::kHypothesisFailed;
    return v;
  }

  auto cmp = compare_q_to_threshold(g, static_cast<double>(v.threshold), tolerance);
  v.spectral = cmp.estimate;
  v.resolved_by = "bracket";
  if (cmp.decision == ThresholdDecision::kUndecided) {
    // A member whose indicator identity is nonnegative reaches the threshold
    // exactly at the indicator vector of Y u Z.
    if (auto member = classify_membership(g, k, v.delta, MembershipMode::kExact)) {
      const auto r = rayleigh_q_indicator(g, yz_support(*member));
      if (r >= Rational{v.threshold, 1}) {
        cmp.decision = ThresholdDecision::kAtLeast;
        v.spectral.lower = std::max(v.spectral.lower, r.value());
        v.resolved_by = "exact-rayleigh";
      }
    }
  }
  if (cmp.decision == ThresholdDecision::kBelow) {
    v.outcome = Outcome::kConditionNotMet;
    return v;
  }
  if (cmp.decision == ThresholdDecision::kUndecided) {
    v.outcome = Outcome::kUndecidedNumeric;
    return v;
  }

  const auto kc = is_k_connected(g, k);
  if (kc.k_connected) {
    v.connectivity = vertex_connectivity(g);
    v.outcome = Outcome::kKConnectedCertified;
    return v;
  }
  v.connectivity = vertex_connectivity(g);
  auto member = classify_membership(g, k, v.delta, MembershipMode::kExact);
  if (member && member->family == FamilyClass::kA1) {
    v.membership = std::move(member);
    v.outcome = Outcome::kExceptionalFamily;
  } else {
    v.membership = std::move(member);
    v.outcome = Outcome::kTheoremViolation;
  }
  return v;
}

CheckReport check_edge_bound(const Graph& g, double tolerance) {
  CheckReport rep;
  rep.check = "edge-bound";
  const auto est = q_index(g, tolerance);
  const double bound = q_upper_bound_edges(g);
  rep.evidence = {{"n", g.order()},        {"m", g.edge_count()},  {"bound", bound},
                  {"q_lower", est.lower},   {"q_upper", est.upper}, {"slack", bound - est.upper}};
  constexpr double kSlack = 1e-9;
  if (est.upper <= bound + kSlack) {
    rep.status = CheckStatus::kPass;
  } else if (est.lower > bound + kSlack) {
    rep.status = CheckStatus::kFail;
    rep.findings.push_back("q exceeds 2m/(n-1)+n-2");
  } else {
    rep.status = CheckStatus::kUndecided;
  }
  return rep;
}

CheckReport check_density_condition(const Graph& g, int k, int delta) {
  CheckReport rep;
  rep.check = "density";
  const auto dc = density_condition(g, k, delta);
  rep.evidence = {{"n", g.order()},
                  {"m", dc.edge_count},
                  {"twice_bound", dc.twice_bound},
                  {"density_holds", dc.holds},
                  {"hypotheses",
                   {{"parameters", dc.parameters_ok},
                    {"order", dc.order_ok},
                    {"connected", dc.connected},
                    {"min_degree", dc.min_degree_ok}}}};
  if (!dc.hypotheses_hold()) {
    rep.status = CheckStatus::kHypothesisFailed;
    return rep;
  }
  if (!dc.holds) {
    rep.status = CheckStatus::kVacuous;
    return rep;
  }
  const auto kc = is_k_connected(g, k);
  if (kc.k_connected) {
    rep.status = CheckStatus::kPass;
    rep.evidence["via"] = "k-connected";
    return rep;
  }
  rep.evidence["cut"] = kc.witness;
  if (auto m = classify_membership(g, k, delta, MembershipMode::kSubgraph)) {
    rep.status = CheckStatus::kPass;
    rep.evidence["via"] = "subgraph-of-A";
    rep.evidence["x"] = m->partition.x;
    rep.evidence["y"] = m->partition.y;
    return rep;
  }
  rep.status = CheckStatus::kFail;
  rep.findings.push_back("dense graph neither k-connected nor a subgraph of A(n,k,delta)");
  return rep;
}

CheckReport check_first_family(const ExtremalParams& p, const std::vector<Edge>& removed, double tolerance) {
  validate_certified_range(p);
  const auto m = make_member(p, removed);
  if (m.family != FamilyClass::kA1) throw std::invalid_argument("member is not in the first family");
  CheckReport rep;
  rep.check = "first-family";
  const std::int64_t thr = q_threshold(p);
  const std::int64_t identity = indicator_identity(m);
  const std::int64_t closed = static_cast<std::int64_t>(p.x_size()) * p.y_size() - 4 * static_cast<std::int64_t>(m.removed.size());
  const std::int64_t n_yz = p.n - p.x_size();
  const auto rq = rayleigh_q_indicator(m.graph, yz_support(m));
  const Rational predicted{thr * n_yz + identity, n_yz};
  const auto est = q_index(m.graph, tolerance);
  const bool order_ok = p.n >= threshold_F(p.k, p.delta);

  rep.evidence = {{"threshold", thr},
                  {"identity_value", identity},
                  {"identity_closed_form", closed},
                  {"rayleigh_indicator", rational_json(rq)},
                  {"q_lower", est.lower},
                  {"q_upper", est.upper},
                  {"margins", {{"q_lower_minus_threshold", est.lower - thr}}},
                  {"order_at_least_F", order_ok}};
  bool ok = true;
  if (identity != closed) {
    ok = false;
    rep.findings.push_back("indicator identity differs from closed form");
  }
  if (!(rq == predicted)) {
    ok = false;
    rep.findings.push_back("indicator Rayleigh quotient differs from threshold + identity/|YuZ|");
  }
  if (identity < 0) {
    ok = false;
    rep.findings.push_back("indicator identity negative");
  }
  if (est.lower < thr - tolerance) {
    ok = false;
    rep.findings.push_back("certified q below threshold");
  }
  rep.status = ok ? (order_ok ? CheckStatus::kPass : CheckStatus::kHypothesisFailed) : CheckStatus::kFail;
  return rep;
}

CheckReport check_second_family(const ExtremalParams& p, const std::vector<Edge>& removed, double tolerance) {
  validate_certified_range(p);
  const auto m = make_member(p, removed);
  if (m.family != FamilyClass::kA2) throw std::invalid_argument("member is not in the second family");
  CheckReport rep;
  rep.check = "second-family";
  const std::int64_t thr = q_threshold(p);
  const std::int64_t identity = indicator_identity(m);
  const auto est = q_index(m.graph, tolerance);
  const auto rq = rayleigh_q_indicator(m.graph, yz_support(m));
  const bool order_ok = p.n >= threshold_F(p.k, p.delta);
  rep.evidence = {{"threshold", thr},
                  {"identity_value", identity},
                  {"rayleigh_indicator", rational_json(rq)},
                  {"q_lower", est.lower},
                  {"q_upper", est.upper},
                  {"margins", {{"q_lower_minus_threshold_plus_1", est.lower - (thr - 1)}}},
                  {"flagged", m.flagged()},
                  {"order_at_least_F", order_ok}};
  bool ok = true;
  if (identity < -4) {
    ok = false;
    rep.findings.push_back("indicator identity below -4");
  }
  if (!(est.lower > thr - 1)) {
    ok = false;
    rep.findings.push_back("certified q not above threshold - 1");
  }
  rep.status = ok ? (order_ok ? CheckStatus::kPass : CheckStatus::kHypothesisFailed) : CheckStatus::kFail;
  return rep;
}

PerronData perron_scaled(const Graph& g, double tolerance) {
  PerronData d;
  d.estimate = q_index(g, tolerance);
  const double mx = *std::max_element(d.estimate.vector.begin(), d.estimate.vector.end());
  d.scaled = d.estimate.vector;
  for (double& x : d.scaled) x /= mx;
  return d;
}

CheckReport check_x_entries(const FamilyMember& m, double tolerance) {
  CheckReport rep;
  rep.check = "x-entries";
  const auto d = perron_scaled(m.graph, tolerance);
  if (!d.estimate.converged) throw std::runtime_error("Perron vector did not converge");
  const auto& p = m.params;
  const double q = d.estimate.midpoint();
  const double bound = (p.k - 1) / (q - (2.0 * p.delta - p.k + 1));
  const double x_max = max_over(d.scaled, m.partition.x);
  const double x_min = min_over(d.scaled, m.partition.x);
  const double slack = bound - x_max;
  rep.evidence = {{"bound", bound},   {"x_max", x_max},          {"x_spread", x_max - x_min},
                  {"slack", slack},   {"q_lower", d.estimate.lower}, {"q_upper", d.estimate.upper}};
  bool ok = true;
  if (slack < -10 * tolerance) {
    ok = false;
    rep.findings.push_back("X entry exceeds (k-1)/(q-(2delta-k+1))");
  }
  if (x_max - x_min > 10 * tolerance) {
    ok = false;
    rep.findings.push_back("X entries not equal");
  }
  rep.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  return rep;
}

CheckReport check_orderings(const FamilyMember& m, double tolerance) {
  CheckReport rep;
  rep.check = "orderings";
  rep.evidence["orderings"] = json::array();
  const auto d = perron_scaled(m.graph, tolerance);
  if (!d.estimate.converged) throw std::runtime_error("Perron vector did not converge");
  const auto& x = d.scaled;
  const auto& pt = m.partition;
  const double need = 10 * tolerance;
  record_order_check(rep, "Z1>Y2", x, pt.z1, pt.y2, need);
  record_order_check(rep, "Z1>Z2", x, pt.z1, pt.z2, need);
  record_order_check(rep, "Y1>Y2", x, pt.y1, pt.y2, need);
  record_order_check(rep, "Y1>Z1", x, pt.y1, pt.z1, need);

  // Location of the maximum entry against the case table.
  const int arg = static_cast<int>(std::max_element(x.begin(), x.end()) - x.begin());
  const double top = x[arg];
  auto attains = [&](const std::vector<int>& set) {
    return !set.empty() && max_over(x, set) >= top - need;
  };
  const char* expected = pt.y1.empty() ? "Z1" : "Y1";
  const bool located = pt.y1.empty() ? attains(pt.z1) : attains(pt.y1);
  rep.evidence["argmax_expected_class"] = expected;
  rep.evidence["argmax_located"] = located;
  if (!located) rep.findings.push_back(std::string("maximum entry not attained in ") + expected);

  // Residuals of the eigen equation, its pairwise form, and the nested form.
  const auto eig = verify_eigen_identity(m.graph, d.estimate);
  rep.evidence["eq_vertex_residual"] = eig.vertex_residual;
  rep.evidence["eq_pair_residual"] = eig.pair_residual;
  if (!eig.passed) {
    rep.status = CheckStatus::kFail;
    rep.findings.push_back("eigen identity residual above bound");
  }
  const double q = d.estimate.midpoint();
  double nested = 0.0;
  int nested_pairs = 0;
  auto nested_residual = [&](const std::vector<int>& hi, const std::vector<int>& lo) {
    for (int i : hi) {
      for (int j : lo) {
        if (i == j || !m.graph.has_edge(i, j) || !nested_neighbourhood(m.graph, i, j)) continue;
        const int di = m.graph.degree(i);
        const int dj = m.graph.degree(j);
        double rest = 0.0;
        m.graph.for_each_neighbor(i, [&](int t) {
          if (t != j && !m.graph.has_edge(j, t)) rest += x[t];
        });
        const double lhs = (q - di + 1) * (x[i] - x[j]);
        const double rhs = (di - dj) * x[j] + rest;
        nested = std::max(nested, std::abs(lhs - rhs));
        ++nested_pairs;
      }
    }
  };
  nested_residual(pt.z1, pt.z2);
  nested_residual(pt.y1, pt.y2);
  nested_residual(pt.y1, pt.z1);
  nested_residual(pt.z1, pt.y2);
  rep.evidence["eq_nested_residual"] = nested;
  rep.evidence["eq_nested_pairs"] = nested_pairs;
  if (nested > 1e-6) {
    rep.status = CheckStatus::kFail;
    rep.findings.push_back("nested-neighbourhood identity residual above 1e-6");
  }
  rep.evidence["q_lower"] = d.estimate.lower;
  rep.evidence["q_upper"] = d.estimate.upper;
  return rep;
}

CheckReport check_entry_spread(const FamilyMember& m, bool is_maximizer, double tolerance) {
  CheckReport rep;
  rep.check = "entry-spread";
  const auto d = perron_scaled(m.graph, tolerance);
  if (!d.estimate.converged) throw std::runtime_error("Perron vector did not converge");
  const auto& x = d.scaled;
  const auto& pt = m.partition;
  const auto& p = m.params;
  const double q = d.estimate.lower;
  const double n = p.n;
  const double a = p.x_size();
  const double k = p.k;
  const auto yz = union_of(pt.y, pt.z);
  const double spread = 1.0 - min_over(x, yz);
  const double bound = (a * (k + 3) + 4) / (2 * (q - n + 1));
  const double slack = bound - spread;
  rep.evidence = {{"bound", bound}, {"spread", spread}, {"slack", slack}, {"q_lower", q},
                  {"maximizer", is_maximizer}};
  bool ok = slack >= -1e-8;

  // Per-subcase bounds, anchored at the maximum entry.
  const int arg = static_cast<int>(std::max_element(x.begin(), x.end()) - x.begin());
  auto in = [](const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); };
  json subcases = json::array();
  auto subcase = [&](const char* name, const std::vector<int>& js, double limit, bool strict) {
    json e{{"subcase", name}, {"limit", limit}};
    if (js.empty()) {
      e["status"] = "vacuous";
    } else {
      const double gap = x[arg] - min_over(x, js);
      e["gap"] = gap;
      const bool good = strict ? gap < limit + 1e-8 : gap <= limit + 1e-8;
      e["status"] = good ? "pass" : "fail";
      ok = ok && good;
      if (!good) rep.findings.push_back(std::string("subcase ") + name + " bound violated");
    }
    subcases.push_back(e);
  };
  if (in(pt.z1, arg) && pt.y1.empty()) {
    rep.evidence["argmax_class"] = "Z1";
    const double den = 2 * (q - n + p.delta - k + 4);
    subcase("z1-max:z2", pt.z2, (a * (k - 1) + 4) / den, false);
    subcase("z1-max:y2", pt.y2, (a * (k + 1) + 4) / den, false);
  } else if (in(pt.y1, arg)) {
    rep.evidence["argmax_class"] = "Y1";
    const double den = 2 * (q - n + 2);
    subcase("y1-max:y2", pt.y2, (a * (k - 1) + 4) / den, false);
    subcase("y1-max:z1", pt.z1, 2 * a / (q - n + 2), true);
    subcase("y1-max:z2", pt.z2, (a * (k + 3) + 4) / den, false);
  } else {
    rep.evidence["argmax_class"] = nullptr;
    rep.findings.push_back("maximum entry outside the class the case analysis expects");
  }
  rep.evidence["subcases"] = subcases;

  if (is_maximizer) {
    rep.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  } else {
    rep.status = CheckStatus::kInformational;
    if (!ok) rep.findings.push_back("bound fails on a non-maximizer member (not asserted)");
  }
  return rep;
}

EmpiricalMaximizer find_empirical_maximizer(const ExtremalParams& p, double tolerance) {
  validate_certified_range(p);
  const int size = removal_bound(p) + 1;
  std::optional<EmpiricalMaximizer> best;
  int count = 0;
  auto y_edges = [](const FamilyMember& m) {
    int e = 0;
    for (std::size_t i = 0; i < m.partition.y.size(); ++i) {
      for (std::size_t j = i + 1; j < m.partition.y.size(); ++j) {
        if (m.graph.has_edge(m.partition.y[i], m.partition.y[j])) ++e;
      }
    }
    return e;
  };
  for (const auto& rep : enumerate_Eprime_orbits(p, size)) {
    auto m = make_member(p, rep.edges);
    if (m.flagged()) continue;
    ++count;
    auto est = q_index(m.graph, tolerance);
    if (!best) {
      best = EmpiricalMaximizer{std::move(m), std::move(est), 0};
      continue;
    }
    const double diff = est.lower - best->estimate.lower;
    const bool tie = std::abs(diff) <= 10 * tolerance;
    if ((!tie && diff > 0) || (tie && y_edges(m) > y_edges(best->member))) {
      best->member = std::move(m);
      best->estimate = std::move(est);
    }
  }
  if (!best) throw std::runtime_error("no unflagged second-family representative");
  best->representatives = count;
  return *best;
}

CheckReport check_second_family_below(const ExtremalParams& p, double tolerance) {
  validate_certified_range(p);
  CheckReport rep;
  rep.check = "second-family-below";
  const std::int64_t thr = q_threshold(p);
  const bool order_ok = p.n >= threshold_F(p.k, p.delta);
  json members = json::array();
  double max_upper = -INFINITY;
  double min_lower = INFINITY;
  int skipped = 0;
  bool ok = true;
  bool undecided = false;
  for (const auto& orbit : enumerate_Eprime_orbits(p, removal_bound(p) + 1)) {
    const auto m = make_member(p, orbit.edges);
    if (m.flagged()) {
      ++skipped;
      continue;
    }
    const auto cmp = compare_q_to_threshold(m.graph, static_cast<double>(thr), tolerance);
    max_upper = std::max(max_upper, cmp.estimate.upper);
    min_lower = std::min(min_lower, cmp.estimate.lower);
    json e{{"pattern", orbit.pattern}, {"q_lower", cmp.estimate.lower}, {"q_upper", cmp.estimate.upper}};
    if (cmp.decision == ThresholdDecision::kAtLeast) {
      ok = false;
      rep.findings.push_back("second-family member reaches the threshold: " + orbit.pattern);
    } else if (cmp.decision == ThresholdDecision::kUndecided) {
      undecided = true;
    }
    members.push_back(e);
  }
  // Upper estimate of the Rayleigh difference used in the proof, evaluated
  // at q = threshold - 1 where it is largest over the admissible range.
  const long double qq = static_cast<long double>(thr) - 1;
  const long double a = p.x_size();
  const long double k = p.k;
  const long double dl = p.delta;
  const long double n = p.n;
  const long double xb = (k - 1) / (qq - (2 * dl - k + 1));
  const long double spread = (a * (k + 3) + 4) / (2 * (qq - n + 1));
  const long double proof_bound = a * (a - 1) / 2 * (2 * xb) * (2 * xb) + (k - 1) * a * (1 + xb) * (1 + xb) -
                                  ((k - 1) * a + 1) * (1 - spread) * (1 - spread);
  rep.evidence = {{"threshold", thr},
                  {"members", members},
                  {"skipped_flagged", skipped},
                  {"max_q_upper", max_upper},
                  {"min_q_lower", min_lower},
                  {"margins", {{"threshold_minus_max_q", static_cast<double>(thr) - max_upper}}},
                  {"proof_difference_bound", static_cast<double>(proof_bound)},
                  {"order_at_least_F", order_ok}};
  if (proof_bound >= 0) rep.findings.push_back("proof's Rayleigh-difference estimate is not negative here");
  if (!ok) {
    rep.status = CheckStatus::kFail;
  } else if (undecided) {
    rep.status = CheckStatus::kUndecided;
  } else {
    rep.status = order_ok ? CheckStatus::kPass : CheckStatus::kHypothesisFailed;
  }
  return rep;
}

CheckReport verify_edge_count_chain(const ExtremalParams& p) {
  validate_certified_range(p);
  CheckReport rep;
  rep.check = "edge-count-chain";
  const std::int64_t n = p.n;
  const std::int64_t d = p.delta;
  const std::int64_t k = p.k;
  const std::int64_t F = threshold_F(p.k, p.delta);
  // q >= 2(n-d+k-3) and q <= 2m/(n-1)+n-2 give 2m >= (n-2d+2k-4)(n-1).
  const std::int64_t twice_m_min = (n - 2 * d + 2 * k - 4) * (n - 1);
  const std::int64_t twice_density = n * (n - 1) - 2 * (d - k + 3) * (n - d - 2);
  const std::int64_t twice_gap = 2 * (n - d - 2) - 2 * (d - k + 2) * (d + 1);
  const bool identity = twice_m_min == twice_density + twice_gap;
  const bool strict = twice_m_min > twice_density;
  const bool density_order = n >= 2 * d - k + 5;
  const std::int64_t bound = removal_bound(p);
  const bool z1_claim = n - d - 1 > 2 * (bound + 1) + 1;
  rep.evidence = {{"n", n},
                  {"F", F},
                  {"order_at_least_F", n >= F},
                  {"twice_m_min", twice_m_min},
                  {"twice_density_bound", twice_density},
                  {"identity_holds", identity},
                  {"margins",
                   {{"twice_strict_gap", twice_gap},
                    {"order_minus_density_order", n - (2 * d - k + 5)},
                    {"z_size_minus_claim", (n - d - 1) - (2 * (bound + 1) + 1)}}},
                  {"strict_inequality", strict},
                  {"density_order_ok", density_order},
                  {"z1_claim", z1_claim}};
  const bool ok = identity && strict && density_order && z1_claim;
  if (!identity) rep.findings.push_back("algebraic rearrangement does not hold");
  if (!strict) rep.findings.push_back("edge-count chain does not exceed the density bound");
  if (!density_order) rep.findings.push_back("order below 2delta-k+5");
  if (!z1_claim) rep.findings.push_back("|Z| too small for the Z1 claim");
  if (n < F) {
    rep.status = CheckStatus::kInformational;
    rep.findings.push_back(ok ? "chain still holds below F" : "chain breaks below F");
  } else {
    rep.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  }
  return rep;
}

CheckReport check_z1_nonempty(const ExtremalParams& p) {
  validate_certified_range(p);
  CheckReport rep;
  rep.check = "z1-nonempty";
  int checked = 0;
  int empty = 0;
  for (const auto& orbit : enumerate_Eprime_orbits(p, removal_bound(p) + 1)) {
    const auto m = make_member(p, orbit.edges);
    ++checked;
    if (m.partition.z1.empty()) {
      ++empty;
      rep.findings.push_back("Z1 empty for " + orbit.pattern);
    }
  }
  rep.evidence = {{"representatives", checked}, {"z1_empty", empty}};
  rep.status = empty == 0 ? CheckStatus::kPass : CheckStatus::kFail;
  return rep;
}

}  // namespace qconn
