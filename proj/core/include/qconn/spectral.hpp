#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qconn/graph.hpp"

namespace qconn {

__extension__ using int128 = __int128;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kDefaultIterationCap = 100'000;
inline constexpr std::size_t kEscalationIterationCap = 1'000'000;
inline constexpr int kDenseOracleMaxOrder = 400;

/// Certified bracket on the largest eigenvalue of a nonnegative graph
/// operator together with the positive iterate that produced it.
struct SpectralEstimate {
  double lower = 0.0;
  double upper = 0.0;
  /// Unit-norm iterate; zero outside the component attaining the maximum.
  std::vector<double> vector;
  std::size_t iterations = 0;
  bool converged = false;
  double tolerance = kDefaultTolerance;

  double midpoint() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

/// Exact nonnegative rational num/den.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<int128>(a.num) * b.den <=> static_cast<int128>(b.num) * a.den;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

/// (Q v)_i = d(i) v_i + sum over N(i) of v_j, without forming Q.
std::vector<double> q_apply(const Graph& g, std::span<const double> v);

/// sum over edges ij of (v_i + v_j)^2 divided by <v,v>. Throws on a zero vector.
double rayleigh_q(const Graph& g, std::span<const double> v);

/// Rayleigh quotient of Q at the 0/1 indicator of `support`, exactly.
Rational rayleigh_q_indicator(const Graph& g, const VertexSet& support);

/// Q-index bracket by power iteration with Collatz-Wielandt quotients.
/// Disconnected graphs are handled per component and the maximum reported.
SpectralEstimate q_index(const Graph& g, double tolerance = kDefaultTolerance,
                         std::size_t max_iterations = kDefaultIterationCap);

/// Largest eigenvalue of the dense matrix D+A by cyclic Jacobi rotations.
/// Independent of q_index; only meant for validation at n <= 400.
double q_index_dense_oracle(const Graph& g);

/// Same bracket as q_index but for the adjacency operator A, iterated as A+I.
SpectralEstimate adjacency_spectral_radius(const Graph& g, double tolerance = kDefaultTolerance,
                                           std::size_t max_iterations = kDefaultIterationCap);

/// Largest eigenvalue of the dense adjacency matrix by Jacobi rotations.
double adjacency_dense_oracle(const Graph& g);

struct EigenResidualReport {
  double eigenvalue = 0.0;
  /// max_i |(q - d(i)) z_i - sum_{j in N(i)} z_j|
  double vertex_residual = 0.0;
  /// max over pairs of the pairwise difference identity residual
  double pair_residual = 0.0;
  int worst_vertex = -1;
  Edge worst_pair;
  double bound = 0.0;
  bool passed = false;
};

/// Checks the eigen-equation and its pairwise difference form on a converged
/// estimate. Both residuals must be <= 10 * tolerance * n. Throws when the
/// estimate did not converge.
EigenResidualReport verify_eigen_identity(const Graph& g, const SpectralEstimate& est);

/// 2m/(n-1) + n - 2. Throws for n < 2.
double q_upper_bound_edges(const Graph& g);

enum class ThresholdDecision { kAtLeast, kBelow, kUndecided };

struct ThresholdResult {
  ThresholdDecision decision = ThresholdDecision::kUndecided;
  SpectralEstimate estimate;
};

/// Decides q(G) >= threshold from certified bounds, iterating until the
/// bracket clears the threshold, stagnates, or `max_iterations` is spent.
ThresholdResult compare_q_to_threshold(const Graph& g, double threshold,
                                       double tolerance = kDefaultTolerance,
                                       std::size_t max_iterations = kEscalationIterationCap);

}  // namespace qconn
