#pragma once

#include <nlohmann/json.hpp>

#include "qconn/certifier.hpp"
#include "qconn/connectivity.hpp"
#include "qconn/extremal.hpp"
#include "qconn/spectral.hpp"

namespace qconn {

// nlohmann ADL hooks. Field names are part of the report format.

void to_json(nlohmann::json& j, const Edge& e);
void to_json(nlohmann::json& j, const SpectralEstimate& est);
void to_json(nlohmann::json& j, const ConnectivityResult& r);
void to_json(nlohmann::json& j, const ExtremalParams& p);
void to_json(nlohmann::json& j, const VertexPartition& p);
void to_json(nlohmann::json& j, const FamilyMember& m);
void to_json(nlohmann::json& j, const HypothesisFlags& h);
void to_json(nlohmann::json& j, const Verdict& v);
void to_json(nlohmann::json& j, const CheckReport& r);

const char* to_string(ConnectivityMethod m);

/// Estimate without the iterate, for compact reports.
nlohmann::json estimate_summary(const SpectralEstimate& est);

}  // namespace qconn
