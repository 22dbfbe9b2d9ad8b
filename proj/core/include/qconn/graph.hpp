#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace qconn {

/// Undirected edge with endpoints stored as u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Packed vertex subset over [0, n).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}
  VertexSet(int n, std::span<const int> members);

  int universe() const { return n_; }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<int> members() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph stored as one bit row per vertex.
///
/// Row i holds N(i). Rows are kept symmetric and loop-free by the mutators,
/// so every Graph value satisfies the simple-graph invariants.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int words_per_row() const { return words_; }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_edge(int u, int v, bool present);

  int degree(int v) const;
  std::int64_t edge_count() const;

  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;

  template <class F>
  void for_each_neighbor(int v, F&& f) const {
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t b = r[w];
      while (b != 0) {
        f(w * 64 + std::countr_zero(b));
        b &= b - 1;
      }
    }
  }

  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint64_t* mutable_row(int v) {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  void check_pair(int u, int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
  std::int64_t edge_count = 0;
  bool connected = false;
};

Graph complete(int n);
Graph empty(int n);
Graph cycle(int n);
Graph path(int n);

/// G ∨ H: vertices of h follow those of g, all cross edges present.
Graph join(const Graph& g, const Graph& h);
/// G ∪ H: block-diagonal adjacency.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Graphs with n <= 1 count as connected.
DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components of g with the vertices in `removed` deleted.
/// Components are listed in order of their smallest vertex.
std::vector<std::vector<int>> components(const Graph& g, const VertexSet& removed);
std::vector<std::vector<int>> components(const Graph& g);

/// True when g minus `removed` has at least two components.
bool disconnects(const Graph& g, std::span<const int> removed);

}  // namespace qconn
