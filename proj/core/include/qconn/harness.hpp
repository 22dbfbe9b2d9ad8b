#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qconn/graph.hpp"
#include "qconn/spectral.hpp"

namespace qconn {

enum class CampaignMode { kEdgeBound, kDensity, kCertifyFamilies, kFamilySweep, kCounterexample, kCertifyOne };

const char* to_string(CampaignMode m);
/// Throws std::invalid_argument for an unknown name.
CampaignMode parse_campaign_mode(const std::string& name);

struct CampaignConfig {
  CampaignMode mode = CampaignMode::kCertifyOne;
  int k = 3;
  int delta = 3;
  /// Orders swept; enumeration modes walk [n_min, n_max], the family modes
  /// use n_min (0 means F(k, delta)).
  int n_min = 0;
  int n_max = 0;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 1;
  /// Number of random graphs in counterexample mode.
  std::uint64_t budget = 10'000;
  /// Rejection attempts per random graph.
  std::uint64_t rejection_budget = 10'000;
  std::optional<std::string> corpus;
  std::optional<std::string> output;
  /// Malformed corpus lines are skipped (and counted) instead of aborting.
  bool lenient = false;
  unsigned threads = 1;
  /// Per-item results are kept when the campaign has at most this many items.
  std::uint64_t item_limit = 20'000;
};

nlohmann::json config_json(const CampaignConfig& c);

struct Violation {
  std::uint64_t index = 0;
  std::string graph6;
  nlohmann::json detail;
};

struct Report {
  CampaignConfig config;
  std::uint64_t tested = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t undecided = 0;
  std::vector<Violation> violations;
  /// Mode-specific aggregates such as per-order tallies.
  nlohmann::json summary = nlohmann::json::object();
  nlohmann::json items = nlohmann::json::array();
  bool items_truncated = false;
  double wall_clock_seconds = 0.0;

  bool counters_consistent() const { return tested == passed + failed + skipped + undecided; }
  bool clean() const { return failed == 0 && violations.empty(); }
};

/// Top-level "schema": 1 document. `with_timing` false drops wall-clock so
/// two runs of one config compare equal.
nlohmann::json report_json(const Report& r, bool with_timing = true);

/// Runs one campaign. Throws std::invalid_argument for a bad config and
/// std::runtime_error for IO failures. Writes the report when `output` is set.
Report run_campaign(const CampaignConfig& config);

struct CorpusError {
  std::uint64_t line = 0;
  std::string message;
};

struct CorpusStats {
  std::uint64_t delivered = 0;
  std::vector<CorpusError> errors;
};

/// Streams newline-separated graph6 in order, skipping blank lines. A parse
/// error throws std::runtime_error naming the line unless `lenient`.
CorpusStats stream_corpus(const std::string& path, const std::function<void(std::uint64_t line, const Graph&)>& sink,
                          bool lenient = false);

/// Independent edges with probability p, resampled until connected with
/// delta(G) >= floor. Deterministic in seed. Throws std::runtime_error after
/// `budget` rejected samples.
Graph random_graph(int n, double p, int min_degree_floor, std::uint64_t seed, std::uint64_t budget = 10'000);

}  // namespace qconn
