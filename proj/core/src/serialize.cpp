#include "qconn/serialize.hpp"

namespace qconn {

using nlohmann::json;

const char* to_string(ConnectivityMethod m) {
  return m == ConnectivityMethod::kBruteForce ? "brute-force" : "max-flow";
}

void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }

json estimate_summary(const SpectralEstimate& est) {
  return {{"lower", est.lower},
          {"upper", est.upper},
          {"iterations", est.iterations},
          {"converged", est.converged}};
}

void to_json(json& j, const SpectralEstimate& est) {
  j = estimate_summary(est);
  j["tolerance"] = est.tolerance;
  j["vector"] = est.vector;
}

void to_json(json& j, const ConnectivityResult& r) {
  j = {{"kappa", r.kappa}, {"cut", r.cut}, {"parts", r.parts}, {"method", to_string(r.method)}};
}

void to_json(json& j, const ExtremalParams& p) { j = {{"n", p.n}, {"k", p.k}, {"delta", p.delta}}; }

void to_json(json& j, const VertexPartition& p) {
  j = {{"x", p.x}, {"y", p.y}, {"z", p.z}, {"y1", p.y1}, {"y2", p.y2}, {"z1", p.z1}, {"z2", p.z2}};
}

void to_json(json& j, const FamilyMember& m) {
  j = {{"params", m.params},
       {"removed", m.removed},
       {"class", to_string(m.family)},
       {"partition", m.partition},
       {"connected", m.connected},
       {"min_degree_ok", m.min_degree_ok},
       {"flagged", m.flagged()}};
  if (!m.missing_skeleton.empty()) j["missing_skeleton"] = m.missing_skeleton;
}

void to_json(json& j, const HypothesisFlags& h) {
  j = {{"connected", h.connected},
       {"k_at_least_3", h.k_at_least_3},
       {"min_degree_at_least_k", h.min_degree_at_least_k},
       {"min_degree_at_least_delta", h.min_degree_at_least_delta},
       {"order_at_least_F", h.order_at_least_F},
       {"F", h.F ? json(*h.F) : json(nullptr)}};
}

void to_json(json& j, const Verdict& v) {
  j = {{"outcome", to_string(v.outcome)},
       {"n", v.n},
       {"k", v.k},
       {"delta", v.delta},
       {"min_degree", v.min_degree},
       {"hypotheses", v.hypotheses},
       {"threshold", v.threshold},
       {"q_lower", v.spectral.lower},
       {"q_upper", v.spectral.upper},
       {"iterations", v.spectral.iterations},
       {"converged", v.spectral.converged},
       {"resolved_by", v.resolved_by.empty() ? json(nullptr) : json(v.resolved_by)},
       {"theorem_violation", v.theorem_violation()}};
  if (v.connectivity) {
    j["kappa"] = v.connectivity->kappa;
    j["cut"] = v.connectivity->cut;
  } else {
    j["kappa"] = nullptr;
    j["cut"] = nullptr;
  }
  j["member"] = v.membership ? json(*v.membership) : json(nullptr);
  if (v.membership) j["identity_value"] = indicator_identity(*v.membership);
}

void to_json(json& j, const CheckReport& r) {
  j = {{"check", r.check}, {"status", to_string(r.status)}, {"findings", r.findings}, {"evidence", r.evidence}};
}

}  // namespace qconn
