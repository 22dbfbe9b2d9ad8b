#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "qconn/graph.hpp"

namespace qconn {

enum class ConnectivityMethod { kMaxFlow, kBruteForce };

inline constexpr int kBruteForceMaxOrder = 12;

/// Vertex connectivity with a minimum cut witness.
///
/// The cut is empty for complete, trivial and disconnected graphs. For other
/// graphs |cut| == kappa and `parts` lists the components left after the cut
/// is deleted.
struct ConnectivityResult {
  int kappa = 0;
  std::vector<int> cut;
  std::vector<std::vector<int>> parts;
  ConnectivityMethod method = ConnectivityMethod::kMaxFlow;
};

/// Exact kappa from unit-capacity flows on the vertex-split digraph, taken
/// over all non-adjacent pairs.
ConnectivityResult vertex_connectivity(const Graph& g);

struct KConnectivity {
  bool k_connected = false;
  /// Separating set with fewer than k vertices when one was found; empty
  /// when the graph is disconnected or has at most k vertices.
  std::vector<int> witness;
};

/// n > k and kappa >= k. Stops at the first pair with fewer than k disjoint
/// paths. Throws std::invalid_argument for k < 1.
KConnectivity is_k_connected(const Graph& g, int k);

/// Oracle: smallest vertex subset whose deletion disconnects g, by exhaustive
/// search in increasing size. Throws for n > 12.
ConnectivityResult brute_force_connectivity(const Graph& g);

/// Menger data for one non-adjacent pair.
struct LocalConnectivity {
  int value = 0;
  /// Minimum s-t separator; only filled when the flow was not capped.
  std::vector<int> separator;
  /// Internally vertex-disjoint s-t paths, each listed from s to t.
  std::vector<std::vector<int>> paths;
  bool capped = false;
};

/// Maximum number of internally disjoint s-t paths, stopping once `cap`
/// paths are found. Throws when s and t are equal or adjacent.
LocalConnectivity local_vertex_connectivity(const Graph& g, int s, int t,
                                            int cap = std::numeric_limits<int>::max());

/// Classical sufficient condition: n >= k+1 and 2 delta >= n + k - 2.
bool dirac_condition(const Graph& g, int k);

/// Edge-density condition m > n(n-1)/2 - (delta-k+3)(n-delta-2) together with
/// the hypotheses under which it implies k-connectivity up to subgraphs of
/// the extremal graph. Hypothesis failures are reported, never thrown.
struct DensityCheck {
  bool holds = false;
  std::int64_t edge_count = 0;
  /// Twice the right-hand side, to keep the comparison in integers.
  std::int64_t twice_bound = 0;
  bool parameters_ok = false;  // delta >= k >= 2
  bool order_ok = false;       // n >= 2 delta - k + 5
  bool connected = false;
  bool min_degree_ok = false;  // delta(G) >= delta

  bool hypotheses_hold() const { return parameters_ok && order_ok && connected && min_degree_ok; }
};

DensityCheck density_condition(const Graph& g, int k, int delta);

}  // namespace qconn
