#include "qconn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qconn {

VertexSet::VertexSet(int n, std::span<const int> members) : VertexSet(n) {
  for (int v : members) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0," +
                                  std::to_string(n) + ")");
    }
    insert(v);
  }
}

int VertexSet::size() const {
  int s = 0;
  for (auto w : words_) s += std::popcount(w);
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t b = words_[w];
    while (b != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(b));
      b &= b - 1;
    }
  }
  return out;
}

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  n_ = n;
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") outside vertex range of order " + std::to_string(n_));
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) { set_edge(u, v, true); }

void Graph::remove_edge(int u, int v) { set_edge(u, v, false); }

void Graph::set_edge(int u, int v, bool present) {
  check_pair(u, v);
  const std::uint64_t bu = std::uint64_t{1} << (u & 63);
  const std::uint64_t bv = std::uint64_t{1} << (v & 63);
  if (present) {
    mutable_row(u)[v >> 6] |= bv;
    mutable_row(v)[u >> 6] |= bu;
  } else {
    mutable_row(u)[v >> 6] &= ~bv;
    mutable_row(v)[u >> 6] &= ~bu;
  }
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::int64_t Graph::edge_count() const {
  std::int64_t total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for_each_neighbor(v, [&](int j) { out.push_back(j); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_neighbor(u, [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty(int n) { return Graph(n); }

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

namespace {

Graph place_blocks(const Graph& g, const Graph& h, bool cross) {
  const int ng = g.order();
  const int nh = h.order();
  Graph out(ng + nh);
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) out.add_edge(ng + e.u, ng + e.v);
  if (cross) {
    for (int u = 0; u < ng; ++u) {
      for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
    }
  }
  return out;
}

}  // namespace

Graph join(const Graph& g, const Graph& h) { return place_blocks(g, h, true); }

Graph disjoint_union(const Graph& g, const Graph& h) { return place_blocks(g, h, false); }

std::vector<std::vector<int>> components(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  const int words = g.words_per_row();
  std::vector<std::uint64_t> seen(words, 0);
  if (removed.universe() == n) {
    auto r = removed.words();
    std::copy(r.begin(), r.end(), seen.begin());
  }
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if ((seen[s >> 6] >> (s & 63)) & 1u) continue;
    std::vector<int> comp;
    seen[s >> 6] |= std::uint64_t{1} << (s & 63);
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      auto r = g.row(v);
      for (int w = 0; w < words; ++w) {
        std::uint64_t fresh = r[w] & ~seen[w];
        seen[w] |= fresh;
        while (fresh != 0) {
          stack.push_back(w * 64 + std::countr_zero(fresh));
          fresh &= fresh - 1;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  return components(g, VertexSet(g.order()));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool disconnects(const Graph& g, std::span<const int> removed) {
  return components(g, VertexSet(g.order(), removed)).size() >= 2;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  const int n = g.order();
  p.degrees.resize(n);
  std::int64_t sum = 0;
  for (int v = 0; v < n; ++v) {
    p.degrees[v] = g.degree(v);
    sum += p.degrees[v];
  }
  if (n > 0) {
    p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
    p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
  }
  p.edge_count = sum / 2;
  p.connected = is_connected(g);
  return p;
}

}  // namespace qconn
