#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qconn/graph.hpp"

namespace qconn {

/// Number of vertex pairs C(n,2).
int pair_count(int n);

/// Index of pair (u,v), u < v, in graph6 column order x01, x02, x12, x03, ...
inline int pair_index(int u, int v) { return v * (v - 1) / 2 + u; }

/// Builds the graph whose edge set is the set bits of `mask` in pair order.
Graph graph_from_pair_mask(int n, std::uint64_t mask);

struct EnumerationSpec {
  int n = 0;
  /// When set, only graphs whose complement has at most this many edges.
  std::optional<int> complement_budget;
};

struct EnumerationSummary {
  std::uint64_t emitted = 0;
  std::uint64_t accepted = 0;
};

/// Disjoint slice of the index space: items with index % count == index.
struct Shard {
  unsigned index = 0;
  unsigned count = 1;
};

using GraphFilter = std::function<bool(const Graph&)>;
using GraphSink = std::function<void(std::uint64_t index, const Graph&)>;

inline constexpr int kMaxUnrestrictedOrder = 7;

/// Number of labeled graphs covered by `spec`.
std::uint64_t enumeration_size(const EnumerationSpec& spec);

/// Emits every labeled graph covered by `spec` exactly once, in a fixed index
/// order. Graphs passing `filter` (or all, when empty) go to `sink` together
/// with their enumeration index. Throws std::invalid_argument when the order
/// is too large for the requested mode.
EnumerationSummary enumerate_labeled_graphs(const EnumerationSpec& spec, const GraphFilter& filter,
                                            const GraphSink& sink, Shard shard = {});

}  // namespace qconn
