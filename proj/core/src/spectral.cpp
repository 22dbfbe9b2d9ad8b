#include "qconn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qconn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kStagnationWindow = 2000;

// Operator M = diag(weight) + A restricted to one component; `weight` is the
// degree for Q and 1 for the shifted adjacency A + I.
enum class OperatorKind { kSignlessLaplacian, kShiftedAdjacency };

class ComponentIteration {
 public:
  ComponentIteration(const Graph& g, std::vector<int> vertices, OperatorKind kind)
      : g_(g),
        vertices_(std::move(vertices)),
        kind_(kind),
        weight_(g.order(), 1.0),
        v_(g.order(), 0.0),
        w_(g.order(), 0.0) {
    int max_degree = 0;
    for (int i : vertices_) {
      max_degree = std::max(max_degree, g_.degree(i));
      if (kind_ == OperatorKind::kSignlessLaplacian) weight_[i] = g_.degree(i);
      v_[i] = g_.degree(i) + 1.0;
    }
    // Each quotient sums at most max_degree + 1 positive terms and divides once.
    rounding_ = (max_degree + 3) * kEps;
    normalize();
    step();
  }

  // Applies the operator and refreshes the bracket; v_ is not advanced.
  void step() {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i : vertices_) {
      double s = weight_[i] * v_[i];
      g_.for_each_neighbor(i, [&](int j) { s += v_[j]; });
      w_[i] = s;
      const double r = s / v_[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const double shift = kind_ == OperatorKind::kShiftedAdjacency ? 1.0 : 0.0;
    lower_ = lo * (1.0 - rounding_) - shift;
    upper_ = hi * (1.0 + rounding_) - shift;
    if (kind_ == OperatorKind::kSignlessLaplacian) lower_ = std::max(lower_, 0.0);
  }

  void advance() {
    for (int i : vertices_) v_[i] = w_[i];
    normalize();
    ++iterations_;
    step();
  }

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  double width() const { return upper_ - lower_; }
  std::size_t iterations() const { return iterations_; }
  const std::vector<double>& vector() const { return v_; }

 private:
  void normalize() {
    double norm = 0.0;
    for (int i : vertices_) norm += v_[i] * v_[i];
    norm = std::sqrt(norm);
    for (int i : vertices_) v_[i] /= norm;
  }

  const Graph& g_;
  std::vector<int> vertices_;
  OperatorKind kind_;
  std::vector<double> weight_;
  std::vector<double> v_;
  std::vector<double> w_;
  double rounding_ = 0.0;
  double lower_ = 0.0;
  double upper_ = 0.0;
  std::size_t iterations_ = 0;
};

template <class Done>
bool run_until(ComponentIteration& it, std::size_t max_iterations, Done done) {
  double best_width = it.width();
  std::size_t since_improvement = 0;
  while (!done(it)) {
    if (it.iterations() >= max_iterations) return false;
    it.advance();
    if (it.width() < best_width * (1.0 - 1e-6)) {
      best_width = it.width();
      since_improvement = 0;
    } else if (++since_improvement >= kStagnationWindow) {
      return done(it);
    }
  }
  return true;
}

SpectralEstimate bracket_largest(const Graph& g, double tolerance, std::size_t max_iterations,
                                 OperatorKind kind) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const int n = g.order();
  SpectralEstimate est;
  est.tolerance = tolerance;
  est.converged = true;
  est.vector.assign(n, 0.0);
  if (n == 0) return est;

  bool have_component = false;
  double best_mid = -1.0;
  for (auto& comp : components(g)) {
    if (comp.size() == 1) continue;
    ComponentIteration it(g, std::move(comp), kind);
    const bool ok = run_until(it, max_iterations,
                              [&](const ComponentIteration& c) { return c.width() <= tolerance; });
    est.converged = est.converged && ok;
    est.iterations += it.iterations();
    const double mid = 0.5 * (it.lower() + it.upper());
    if (!have_component) {
      est.lower = it.lower();
      est.upper = it.upper();
    } else {
      est.lower = std::max(est.lower, it.lower());
      est.upper = std::max(est.upper, it.upper());
    }
    if (mid > best_mid) {
      best_mid = mid;
      est.vector = it.vector();
    }
    have_component = true;
  }
  if (!have_component) {
    // Edgeless: the operator is zero, every unit vector is an eigenvector.
    est.lower = est.upper = 0.0;
    std::fill(est.vector.begin(), est.vector.end(), 1.0 / std::sqrt(static_cast<double>(n)));
  } else if (est.lower < 0.0 && kind == OperatorKind::kSignlessLaplacian) {
    est.lower = 0.0;
  }
  return est;
}

std::vector<double> dense_matrix(const Graph& g, bool with_degrees) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (with_degrees) a[static_cast<std::size_t>(i) * n + i] = g.degree(i);
    g.for_each_neighbor(i, [&](int j) { a[static_cast<std::size_t>(i) * n + j] = 1.0; });
  }
  return a;
}

// Cyclic Jacobi on a symmetric row-major matrix; returns the diagonal.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * n + c]; };
  double frob = 0.0;
  for (double x : a) frob += x * x;
  const double target = 1e-12 * std::max(1.0, std::sqrt(frob));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    }
    if (std::sqrt(off) < target) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = at(i, i);
  return diag;
}

double dense_largest(const Graph& g, bool with_degrees) {
  const int n = g.order();
  if (n > kDenseOracleMaxOrder) throw std::invalid_argument("dense oracle limited to n <= 400");
  if (n == 0) return 0.0;
  auto diag = jacobi_eigenvalues(dense_matrix(g, with_degrees), n);
  return *std::max_element(diag.begin(), diag.end());
}

}  // namespace

std::vector<double> q_apply(const Graph& g, std::span<const double> v) {
  const int n = g.order();
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector length differs from order");
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = g.degree(i) * v[i];
    g.for_each_neighbor(i, [&](int j) { s += v[j]; });
    out[i] = s;
  }
  return out;
}

double rayleigh_q(const Graph& g, std::span<const double> v) {
  if (static_cast<int>(v.size()) != g.order()) throw std::invalid_argument("vector length differs from order");
  double den = 0.0;
  for (double x : v) den += x * x;
  if (den == 0.0) throw std::invalid_argument("Rayleigh quotient of the zero vector");
  double num = 0.0;
  for (const auto& e : g.edges()) {
    const double s = v[e.u] + v[e.v];
    num += s * s;
  }
  return num / den;
}

Rational rayleigh_q_indicator(const Graph& g, const VertexSet& support) {
  Rational r;
  r.den = support.size();
  if (r.den == 0) throw std::invalid_argument("Rayleigh quotient of the zero vector");
  for (const auto& e : g.edges()) {
    const int s = (support.contains(e.u) ? 1 : 0) + (support.contains(e.v) ? 1 : 0);
    r.num += s * s;
  }
  return r;
}

SpectralEstimate q_index(const Graph& g, double tolerance, std::size_t max_iterations) {
  return bracket_largest(g, tolerance, max_iterations, OperatorKind::kSignlessLaplacian);
}

SpectralEstimate adjacency_spectral_radius(const Graph& g, double tolerance, std::size_t max_iterations) {
  return bracket_largest(g, tolerance, max_iterations, OperatorKind::kShiftedAdjacency);
}

double q_index_dense_oracle(const Graph& g) { return dense_largest(g, true); }

double adjacency_dense_oracle(const Graph& g) { return dense_largest(g, false); }

EigenResidualReport verify_eigen_identity(const Graph& g, const SpectralEstimate& est) {
  if (!est.converged) throw std::invalid_argument("eigen identity needs a converged estimate");
  const int n = g.order();
  if (static_cast<int>(est.vector.size()) != n) throw std::invalid_argument("estimate does not match graph");
  EigenResidualReport rep;
  rep.eigenvalue = est.midpoint();
  rep.bound = 10.0 * est.tolerance * std::max(n, 1);
  const auto& z = est.vector;
  const double q = rep.eigenvalue;

  std::vector<double> nsum(n, 0.0);
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) {
    deg[i] = g.degree(i);
    g.for_each_neighbor(i, [&](int j) { nsum[i] += z[j]; });
    const double r = std::abs((q - deg[i]) * z[i] - nsum[i]);
    if (rep.worst_vertex < 0 || r > rep.vertex_residual) {
      rep.vertex_residual = r;
      rep.worst_vertex = i;
    }
  }

  const int words = g.words_per_row();
  for (int i = 0; i < n; ++i) {
    auto ri = g.row(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto rj = g.row(j);
      double only_i = 0.0;
      double only_j = 0.0;
      for (int w = 0; w < words; ++w) {
        std::uint64_t a = ri[w] & ~rj[w];
        std::uint64_t b = rj[w] & ~ri[w];
        while (a != 0) {
          only_i += z[w * 64 + std::countr_zero(a)];
          a &= a - 1;
        }
        while (b != 0) {
          only_j += z[w * 64 + std::countr_zero(b)];
          b &= b - 1;
        }
      }
      const double lhs = (q - deg[i]) * (z[i] - z[j]);
      const double rhs = (deg[i] - deg[j]) * z[j] + only_i - only_j;
      const double r = std::abs(lhs - rhs);
      if (r > rep.pair_residual) {
        rep.pair_residual = r;
        rep.worst_pair = Edge(i, j);
      }
    }
  }
  rep.passed = rep.vertex_residual <= rep.bound && rep.pair_residual <= rep.bound;
  return rep;
}

double q_upper_bound_edges(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("edge bound needs n >= 2");
  return 2.0 * static_cast<double>(g.edge_count()) / (n - 1) + n - 2;
}

ThresholdResult compare_q_to_threshold(const Graph& g, double threshold, double tolerance,
                                       std::size_t max_iterations) {
  ThresholdResult out;
  // A cheap bracket first; most graphs sit far from the threshold.
  out.estimate = q_index(g, tolerance, std::min(max_iterations, kDefaultIterationCap));
  auto classify = [&](double lo, double hi) {
    if (lo >= threshold) return ThresholdDecision::kAtLeast;
    if (hi < threshold) return ThresholdDecision::kBelow;
    return ThresholdDecision::kUndecided;
  };
  out.decision = classify(out.estimate.lower, out.estimate.upper);
  if (out.decision != ThresholdDecision::kUndecided) return out;

  // Near the threshold: drive each component until its bracket clears it.
  double lower = 0.0;
  double upper = 0.0;
  bool any = false;
  std::size_t iterations = 0;
  std::vector<double> vec(g.order(), 0.0);
  double best_mid = -1.0;
  for (auto& comp : components(g)) {
    if (comp.size() == 1) continue;
    ComponentIteration it(g, std::move(comp), OperatorKind::kSignlessLaplacian);
    run_until(it, max_iterations, [&](const ComponentIteration& c) {
      return c.lower() >= threshold || c.upper() < threshold;
    });
    iterations += it.iterations();
    lower = any ? std::max(lower, it.lower()) : it.lower();
    upper = any ? std::max(upper, it.upper()) : it.upper();
    any = true;
    const double mid = 0.5 * (it.lower() + it.upper());
    if (mid > best_mid) {
      best_mid = mid;
      vec = it.vector();
    }
  }
  if (any) {
    out.estimate.lower = std::max(lower, 0.0);
    out.estimate.upper = upper;
    out.estimate.vector = std::move(vec);
    out.estimate.iterations = iterations;
    out.estimate.converged = out.estimate.width() <= tolerance;
  }
  out.decision = classify(out.estimate.lower, out.estimate.upper);
  return out;
}

}  // namespace qconn
