#include "qconn/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace qconn {

namespace {

constexpr std::uint64_t kMaxBudgetEnumeration = 2'000'000'000ULL;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

void validate(const EnumerationSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("negative order");
  if (!spec.complement_budget) {
    if (spec.n > kMaxUnrestrictedOrder) {
      throw std::invalid_argument("unrestricted enumeration supports n <= 7; n = " +
                                  std::to_string(spec.n) + " needs a complement budget");
    }
    return;
  }
  if (*spec.complement_budget < 0) throw std::invalid_argument("negative complement budget");
  if (pair_count(spec.n) > 63) throw std::invalid_argument("order too large for mask enumeration");
  if (enumeration_size(spec) > kMaxBudgetEnumeration) {
    throw std::invalid_argument("complement-budget enumeration too large");
  }
}

// Next integer with the same popcount (Gosper).
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int p = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++p) {
      if ((mask >> p) & 1u) g.add_edge(u, v);
    }
  }
  return g;
}

std::uint64_t enumeration_size(const EnumerationSpec& spec) {
  const int pairs = pair_count(spec.n);
  if (!spec.complement_budget) return std::uint64_t{1} << pairs;
  std::uint64_t total = 0;
  for (int s = 0; s <= *spec.complement_budget && s <= pairs; ++s) total += binomial(pairs, s);
  return total;
}

EnumerationSummary enumerate_labeled_graphs(const EnumerationSpec& spec, const GraphFilter& filter,
                                            const GraphSink& sink, Shard shard) {
  validate(spec);
  if (shard.count == 0 || shard.index >= shard.count) throw std::invalid_argument("bad shard");
  EnumerationSummary summary;
  const int n = spec.n;
  const int pairs = pair_count(n);

  auto visit = [&](std::uint64_t index, std::uint64_t mask) {
    if (index % shard.count != shard.index) return;
    ++summary.emitted;
    Graph g = graph_from_pair_mask(n, mask);
    if (filter && !filter(g)) return;
    ++summary.accepted;
    if (sink) sink(index, g);
  };

  if (!spec.complement_budget) {
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(mask, mask);
    return summary;
  }

  const std::uint64_t full = pairs == 0 ? 0 : (~std::uint64_t{0} >> (64 - pairs));
  std::uint64_t index = 0;
  for (int size = 0; size <= *spec.complement_budget && size <= pairs; ++size) {
    if (size == 0) {
      visit(index++, full);
      continue;
    }
    const std::uint64_t limit = std::uint64_t{1} << pairs;
    for (std::uint64_t c = (std::uint64_t{1} << size) - 1; c < limit; c = next_combination(c)) {
      visit(index++, full ^ c);
      if (size == pairs) break;
    }
  }
  return summary;
}

}  // namespace qconn
