#include "qconn/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qconn {

namespace {

constexpr int kInfinite = std::numeric_limits<int>::max() / 2;

// Vertex-split network: v_in = 2v, v_out = 2v+1. The arc v_in -> v_out has
// capacity 1, each edge uv gives u_out -> v_in and v_out -> u_in with
// unbounded capacity. Built once per graph and reset between pairs.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : n_(g.order()), head_(2 * g.order(), -1) {
    for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, kInfinite);
      add_arc(2 * e.v + 1, 2 * e.u, kInfinite);
    }
    original_ = cap_;
    parent_.resize(2 * n_);
    queue_.reserve(2 * n_);
  }

  // Augments from s_out to t_in until `limit` paths or no augmenting path.
  int max_flow(int s, int t, int limit) {
    cap_ = original_;
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    while (flow < limit && augment(source, sink)) ++flow;
    return flow;
  }

  // Vertices whose split arc crosses from the source side after max_flow.
  std::vector<int> separator(int s) {
    std::vector<char> seen(2 * n_, 0);
    std::vector<int> stack{2 * s + 1};
    seen[2 * s + 1] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a >= 0; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
      }
    }
    std::vector<int> cut;
    for (int v = 0; v < n_; ++v) {
      if (v != s && seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    }
    return cut;
  }

  // Flow decomposition into vertex paths s .. t.
  std::vector<std::vector<int>> paths(int s, int t, int count) {
    std::vector<int> used(cap_.size(), 0);
    for (std::size_t a = 0; a < cap_.size(); a += 2) used[a] = std::max(0, original_[a] - cap_[a]);
    std::vector<std::vector<int>> out;
    for (int p = 0; p < count; ++p) {
      std::vector<int> nodes{2 * s + 1};
      std::vector<int> arcs;
      std::vector<int> position(2 * n_, -1);
      position[2 * s + 1] = 0;
      while (nodes.back() != 2 * t) {
        int x = nodes.back();
        int chosen = -1;
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          if ((a & 1) == 0 && used[a] > 0) {
            chosen = a;
            break;
          }
        }
        if (chosen < 0) break;
        --used[chosen];
        const int y = to_[chosen];
        if (position[y] >= 0) {
          // Drop a circulation.
          while (static_cast<int>(nodes.size()) > position[y] + 1) {
            position[nodes.back()] = -1;
            nodes.pop_back();
            arcs.pop_back();
          }
          continue;
        }
        position[y] = static_cast<int>(nodes.size());
        nodes.push_back(y);
        arcs.push_back(chosen);
      }
      std::vector<int> vertices{s};
      for (std::size_t i = 1; i < nodes.size(); ++i) {
        const int v = nodes[i] / 2;
        if (vertices.back() != v) vertices.push_back(v);
      }
      out.push_back(std::move(vertices));
    }
    return out;
  }

 private:
  void add_arc(int from, int to, int capacity) {
    to_.push_back(to);
    cap_.push_back(capacity);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = static_cast<int>(to_.size()) - 1;
  }

  bool augment(int source, int sink) {
    std::fill(parent_.begin(), parent_.end(), -1);
    queue_.clear();
    queue_.push_back(source);
    parent_[source] = -2;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const int x = queue_[qi];
      for (int a = head_[x]; a >= 0; a = next_[a]) {
        const int y = to_[a];
        if (cap_[a] > 0 && parent_[y] == -1) {
          parent_[y] = a;
          if (y == sink) {
            for (int z = sink; z != source;) {
              const int arc = parent_[z];
              cap_[arc] -= 1;
              cap_[arc ^ 1] += 1;
              z = to_[arc ^ 1];
            }
            return true;
          }
          queue_.push_back(y);
        }
      }
    }
    return false;
  }

  int n_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> original_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

bool is_complete(const Graph& g) {
  const std::int64_t n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

ConnectivityResult finish(const Graph& g, int kappa, std::vector<int> cut, ConnectivityMethod method) {
  ConnectivityResult r;
  r.kappa = kappa;
  r.method = method;
  std::sort(cut.begin(), cut.end());
  r.cut = std::move(cut);
  r.parts = components(g, VertexSet(g.order(), r.cut));
  return r;
}

}  // namespace

ConnectivityResult vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return finish(g, 0, {}, ConnectivityMethod::kMaxFlow);
  if (is_complete(g)) {
    ConnectivityResult r;
    r.kappa = n - 1;
    return r;
  }
  SplitNetwork net(g);
  int best = n - 1;
  std::vector<int> best_cut;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      const int f = net.max_flow(s, t, best);
      if (f < best) {
        best = f;
        best_cut = net.separator(s);
      }
    }
  }
  return finish(g, best, std::move(best_cut), ConnectivityMethod::kMaxFlow);
}

KConnectivity is_k_connected(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  KConnectivity r;
  const int n = g.order();
  if (n <= k || !is_connected(g)) return r;
  SplitNetwork net(g);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      if (net.max_flow(s, t, k) < k) {
        r.witness = net.separator(s);
        return r;
      }
    }
  }
  r.k_connected = true;
  return r;
}

LocalConnectivity local_vertex_connectivity(const Graph& g, int s, int t, int cap) {
  const int n = g.order();
  if (s < 0 || t < 0 || s >= n || t >= n || s == t) throw std::invalid_argument("bad terminal pair");
  if (g.has_edge(s, t)) throw std::invalid_argument("terminals are adjacent");
  SplitNetwork net(g);
  LocalConnectivity r;
  r.value = net.max_flow(s, t, cap);
  r.capped = r.value >= cap;
  if (!r.capped) r.separator = net.separator(s);
  r.paths = net.paths(s, t, r.value);
  return r;
}

ConnectivityResult brute_force_connectivity(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) throw std::invalid_argument("brute-force connectivity limited to n <= 12");
  if (n <= 1 || !is_connected(g)) return finish(g, 0, {}, ConnectivityMethod::kBruteForce);

  std::vector<std::uint32_t> rows(n, 0);
  for (int v = 0; v < n; ++v) rows[v] = static_cast<std::uint32_t>(g.row(v)[0]);
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);

  auto remainder_connected = [&](std::uint32_t removed) {
    const std::uint32_t alive = all & ~removed;
    if (alive == 0) return true;
    std::uint32_t seen = alive & (~alive + 1);
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      while (frontier != 0) {
        next |= rows[std::countr_zero(frontier)];
        frontier &= frontier - 1;
      }
      next &= alive & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == alive;
  };

  for (int size = 1; size <= n - 2; ++size) {
    for (std::uint32_t mask = (1u << size) - 1; mask <= all; ) {
      if (!remainder_connected(mask)) {
        std::vector<int> cut;
        for (int v = 0; v < n; ++v) {
          if ((mask >> v) & 1u) cut.push_back(v);
        }
        return finish(g, size, std::move(cut), ConnectivityMethod::kBruteForce);
      }
      const std::uint32_t c = mask & (~mask + 1);
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  ConnectivityResult r;
  r.kappa = n - 1;
  r.method = ConnectivityMethod::kBruteForce;
  return r;
}

bool dirac_condition(const Graph& g, int k) {
  const int n = g.order();
  if (n < k + 1) return false;
  const auto p = degree_profile(g);
  return 2 * p.min_degree >= n + k - 2;
}

DensityCheck density_condition(const Graph& g, int k, int delta) {
  DensityCheck r;
  const std::int64_t n = g.order();
  const auto p = degree_profile(g);
  r.edge_count = p.edge_count;
  r.twice_bound = n * (n - 1) - 2 * static_cast<std::int64_t>(delta - k + 3) * (n - delta - 2);
  r.holds = 2 * r.edge_count > r.twice_bound;
  r.parameters_ok = delta >= k && k >= 2;
  r.order_ok = n >= 2 * delta - k + 5;
  r.connected = p.connected;
  r.min_degree_ok = n > 0 && p.min_degree >= delta;
  return r;
}

}  // namespace qconn
