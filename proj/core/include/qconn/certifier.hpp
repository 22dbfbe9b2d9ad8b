#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qconn/connectivity.hpp"
#include "qconn/extremal.hpp"
#include "qconn/graph.hpp"
#include "qconn/spectral.hpp"

namespace qconn {

/// Tolerance for eigenvector-level checks, where entries are compared.
inline constexpr double kEigenvectorTolerance = 1e-10;

enum class Outcome {
  kKConnectedCertified,
  kExceptionalFamily,
  kConditionNotMet,
  kHypothesisFailed,
  kUndecidedNumeric,
  /// q clears the threshold, the graph is not k-connected, and it is not a
  /// first-family member: a counterexample to the certified statement.
  kTheoremViolation,
};

const char* to_string(Outcome o);

struct HypothesisFlags {
  bool connected = false;
  bool k_at_least_3 = false;
  bool min_degree_at_least_k = false;
  bool order_at_least_F = false;
  /// delta(G) >= the declared delta; always true when none is declared.
  bool min_degree_at_least_delta = true;
  /// F(k, delta(G)); unset when delta(G) >= k >= 3 fails.
  std::optional<std::int64_t> F;

  bool all() const {
    return connected && k_at_least_3 && min_degree_at_least_k && order_at_least_F && min_degree_at_least_delta;
  }
};

struct Verdict {
  Outcome outcome = Outcome::kHypothesisFailed;
  int n = 0;
  int k = 0;
  /// Declared delta, or delta(G) when none was given.
  int delta = 0;
  int min_degree = 0;
  HypothesisFlags hypotheses;
  SpectralEstimate spectral;
  /// 2(n - delta + k - 3) with delta = delta(G).
  std::int64_t threshold = 0;
  std::optional<ConnectivityResult> connectivity;
  std::optional<FamilyMember> membership;
  /// How the threshold comparison was settled: "bracket" or "exact-rayleigh".
  std::string resolved_by;

  bool theorem_violation() const { return outcome == Outcome::kTheoremViolation; }
};

/// Runs the spectral k-connectivity certificate on g. delta defaults to
/// delta(G); a declared delta needs delta(G) >= delta and sets both F and the
/// threshold, so K_n can be certified against the (n, k, delta) threshold.
Verdict certify(const Graph& g, int k, double tolerance = kDefaultTolerance,
                std::optional<int> delta = std::nullopt);

enum class CheckStatus {
  kPass,
  kFail,
  kVacuous,
  kHypothesisFailed,
  kUndecided,
  /// Recorded but not asserted, e.g. a bound evaluated off its stated scope.
  kInformational,
};

const char* to_string(CheckStatus s);

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::kPass;
  std::vector<std::string> findings;
  nlohmann::json evidence = nlohmann::json::object();

  bool ok() const { return status != CheckStatus::kFail && status != CheckStatus::kUndecided; }
};

/// q(G) <= 2m/(n-1) + n - 2. Fails only when the certified lower bound
/// exceeds the bound by more than 1e-9.
CheckReport check_edge_bound(const Graph& g, double tolerance = kDefaultTolerance);

/// Density condition implies k-connected or a spanning subgraph of A(n,k,delta).
CheckReport check_density_condition(const Graph& g, int k, int delta);

/// First family reaches the threshold; also the exact indicator identity.
/// Throws std::invalid_argument when `removed` is not a first-family set.
CheckReport check_first_family(const ExtremalParams& p, const std::vector<Edge>& removed,
                            double tolerance = kDefaultTolerance);

/// Second family sits above threshold - 1. Throws when `removed` is not a
/// second-family set.
CheckReport check_second_family(const ExtremalParams& p, const std::vector<Edge>& removed,
                            double tolerance = kDefaultTolerance);

/// Perron vector scaled to max entry 1, with its certified bracket.
struct PerronData {
  SpectralEstimate estimate;
  std::vector<double> scaled;
};

PerronData perron_scaled(const Graph& g, double tolerance = kEigenvectorTolerance);

/// X entries bounded by (k-1)/(q - (2 delta - k + 1)) and mutually equal.
CheckReport check_x_entries(const FamilyMember& m, double tolerance = kEigenvectorTolerance);

/// Strict orderings Z1 > Y2, Z1 > Z2, Y1 > Y2, Y1 > Z1 of Perron entries,
/// the location of the maximum entry, and the residuals of the eigen
/// equation, its pairwise form, and the nested-neighbourhood form.
CheckReport check_orderings(const FamilyMember& m, double tolerance = kEigenvectorTolerance);

/// max x - min over Y u Z of x <= ((delta-k+2)(k+3)+4) / (2(q-n+1)) and the
/// per-subcase intermediate bounds. Asserted only when `is_maximizer`.
CheckReport check_entry_spread(const FamilyMember& m, bool is_maximizer,
                            double tolerance = kEigenvectorTolerance);

/// Every unflagged second-family orbit representative has q < threshold.
CheckReport check_second_family_below(const ExtremalParams& p, double tolerance = kDefaultTolerance);

/// Edge-count chain of the main proof in exact integer arithmetic.
CheckReport verify_edge_count_chain(const ExtremalParams& p);

/// Z1 is non-empty for every second-family orbit representative.
CheckReport check_z1_nonempty(const ExtremalParams& p);

struct EmpiricalMaximizer {
  FamilyMember member;
  SpectralEstimate estimate;
  int representatives = 0;
};

/// Largest-q second-family orbit representative, ties broken toward more
/// edges inside Y. Flagged members are skipped.
EmpiricalMaximizer find_empirical_maximizer(const ExtremalParams& p,
                                            double tolerance = kEigenvectorTolerance);

/// (delta-k+2)(k-1) - 4|E'| evaluated from the member's actual edges.
std::int64_t indicator_identity(const FamilyMember& m);

}  // namespace qconn
