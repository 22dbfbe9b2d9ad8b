#pragma once

// Oracles that share no code with the library under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qconn/graph.hpp"

namespace qconn::testing {

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && g.has_edge(i, j)) a(i, j) = 1.0;
    }
  }
  return a;
}

inline double eigen_q_index(const Graph& g) {
  if (g.order() == 0) return 0.0;
  Eigen::MatrixXd a = adjacency_matrix(g);
  Eigen::MatrixXd q = a;
  for (int i = 0; i < g.order(); ++i) q(i, i) = a.row(i).sum();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

inline double eigen_adjacency_radius(const Graph& g) {
  if (g.order() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Plain BFS over has_edge with `removed` vertices deleted; counts components.
inline int naive_component_count(const Graph& g, const std::vector<int>& removed) {
  const int n = g.order();
  std::vector<char> gone(n, 0), seen(n, 0);
  for (int v : removed) gone[v] = 1;
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (!gone[y] && !seen[y] && x != y && g.has_edge(x, y)) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Connected labeled graphs on n vertices via
// c(n) = 2^C(n,2) - sum_{j<n} C(n-1, j-1) c(j) 2^C(n-j, 2).
inline std::uint64_t connected_labeled_count(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  for (int m = 1; m <= n; ++m) {
    std::uint64_t total = std::uint64_t{1} << (m * (m - 1) / 2);
    for (int j = 1; j < m; ++j) {
      total -= binomial(m - 1, j - 1) * c[j] * (std::uint64_t{1} << ((m - j) * (m - j - 1) / 2));
    }
    c[m] = total;
  }
  return c[n];
}

}  // namespace qconn::testing
