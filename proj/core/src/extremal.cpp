#include "qconn/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qconn {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr double kOrbitSearchBudget = 5e8;
constexpr double kSubgraphSearchBudget = 2e7;

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  u128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
  return static_cast<std::uint64_t>(r);
}

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<int> range(int from, int to) {
  std::vector<int> v(std::max(0, to - from));
  std::iota(v.begin(), v.end(), from);
  return v;
}

bool closed_neighborhood_equals(const Graph& g, int v, const VertexSet& set) {
  auto r = g.row(v);
  auto s = set.words();
  const std::uint64_t self_bit = std::uint64_t{1} << (v & 63);
  for (int w = 0; w < g.words_per_row(); ++w) {
    std::uint64_t closed = r[w] | (w == (v >> 6) ? self_bit : 0);
    if (closed != s[w]) return false;
  }
  return true;
}

// Fills removed / missing_skeleton / class / flags for a partition of g.
FamilyMember assemble(const Graph& g, const ExtremalParams& p, std::vector<int> x, std::vector<int> y,
                      std::vector<int> z) {
  FamilyMember m;
  m.params = p;
  m.graph = g;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::sort(z.begin(), z.end());
  std::vector<int> yz;
  std::merge(y.begin(), y.end(), z.begin(), z.end(), std::back_inserter(yz));
  for (std::size_t i = 0; i < yz.size(); ++i) {
    for (std::size_t j = i + 1; j < yz.size(); ++j) {
      if (!g.has_edge(yz[i], yz[j])) m.removed.emplace_back(yz[i], yz[j]);
    }
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (!g.has_edge(x[i], x[j])) m.missing_skeleton.emplace_back(x[i], x[j]);
    }
    for (int b : y) {
      if (!g.has_edge(x[i], b)) m.missing_skeleton.emplace_back(x[i], b);
    }
  }
  std::sort(m.removed.begin(), m.removed.end());
  std::sort(m.missing_skeleton.begin(), m.missing_skeleton.end());
  const int bound = removal_bound(p);
  const int size = static_cast<int>(m.removed.size());
  if (!m.missing_skeleton.empty() || size > bound + 1) {
    m.family = FamilyClass::kSubgraph;
  } else {
    m.family = size <= bound ? FamilyClass::kA1 : FamilyClass::kA2;
  }
  m.partition.x = std::move(x);
  m.partition.y = std::move(y);
  m.partition.z = std::move(z);
  refine_partition(g, p, m.partition);
  const auto prof = degree_profile(g);
  m.connected = prof.connected;
  m.min_degree_ok = g.order() > 0 && prof.min_degree == p.delta;
  return m;
}

// X is a clique of delta-k+2 twins with N[x] = X u Y; exact when it exists.
std::optional<FamilyMember> find_skeleton(const Graph& g, const ExtremalParams& p) {
  const int n = g.order();
  for (int x0 = 0; x0 < n; ++x0) {
    if (g.degree(x0) != p.delta) continue;
    VertexSet closed(n);
    for (int v : g.neighbors(x0)) closed.insert(v);
    closed.insert(x0);
    std::vector<int> twins;
    for (int v : closed.members()) {
      if (closed_neighborhood_equals(g, v, closed)) twins.push_back(v);
    }
    if (static_cast<int>(twins.size()) < p.x_size()) continue;
    std::vector<int> x(twins.begin(), twins.begin() + p.x_size());
    VertexSet xs(n, x);
    std::vector<int> y;
    std::vector<int> z;
    for (int v = 0; v < n; ++v) {
      if (xs.contains(v)) continue;
      (closed.contains(v) ? y : z).push_back(v);
    }
    return assemble(g, p, std::move(x), std::move(y), std::move(z));
  }
  return std::nullopt;
}

// Some Y of size k-1 leaves components whose sizes add up to |X| exactly.
std::optional<FamilyMember> find_cut_partition(const Graph& g, const ExtremalParams& p) {
  const int n = g.order();
  const int ys = p.y_size();
  const int xs = p.x_size();
  if (static_cast<double>(binomial(n, ys)) > kSubgraphSearchBudget) {
    throw std::length_error("subgraph membership search too large");
  }
  std::vector<int> pick(ys);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    auto comps = components(g, VertexSet(n, pick));
    // Subset sum over component sizes with parent pointers.
    const int m = static_cast<int>(comps.size());
    std::vector<std::vector<char>> reach(m + 1, std::vector<char>(xs + 1, 0));
    reach[0][0] = 1;
    for (int i = 0; i < m; ++i) {
      const int c = static_cast<int>(comps[i].size());
      for (int s = 0; s <= xs; ++s) {
        if (!reach[i][s]) continue;
        reach[i + 1][s] = 1;
        if (s + c <= xs) reach[i + 1][s + c] = 1;
      }
    }
    if (reach[m][xs]) {
      std::vector<int> x;
      std::vector<char> in_x(m, 0);
      for (int i = m, s = xs; i > 0; --i) {
        const int c = static_cast<int>(comps[i - 1].size());
        if (!reach[i - 1][s]) {
          in_x[i - 1] = 1;
          s -= c;
        }
      }
      std::vector<int> z;
      for (int i = 0; i < m; ++i) {
        auto& dst = in_x[i] ? x : z;
        dst.insert(dst.end(), comps[i].begin(), comps[i].end());
      }
      return assemble(g, p, std::move(x), pick, std::move(z));
    }
    // Next combination of ys elements from n.
    int i = ys - 1;
    while (i >= 0 && pick[i] == n - ys + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < ys; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

using Config = std::vector<Edge>;

Config map_config(const Config& c, const std::vector<int>& perm) {
  Config out;
  out.reserve(c.size());
  for (const auto& e : c) out.emplace_back(perm[e.u], perm[e.v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void validate_construction(const ExtremalParams& p) {
  if (p.k < 2 || p.delta < p.k || p.n <= p.delta + 1) {
    throw std::invalid_argument("extremal parameters need delta >= k >= 2 and n > delta + 1");
  }
}

void validate_certified_range(const ExtremalParams& p) {
  if (p.k < 3 || p.delta < p.k || p.n <= p.delta + 1) {
    throw std::invalid_argument("theorem parameters need delta >= k >= 3 and n > delta + 1");
  }
}

std::int64_t threshold_F(int k, int delta) {
  if (k < 3 || delta < k) throw std::invalid_argument("F(k,delta) needs delta >= k >= 3");
  const std::int64_t K = k;
  const std::int64_t D = delta;
  return (K * K + 2 * K - 3) * D * D - (2 * K * K * K - K * K - 17 * K + 8) * D + K * K * K * K -
         3 * K * K * K - 8 * K * K + 23 * K + 4;
}

std::int64_t q_threshold(const ExtremalParams& p) {
  return 2 * (static_cast<std::int64_t>(p.n) - p.delta + p.k - 3);
}

int removal_bound(const ExtremalParams& p) { return (p.x_size() * p.y_size()) / 4; }

ExtremalGraph build_A(const ExtremalParams& p) {
  validate_construction(p);
  ExtremalGraph out;
  out.graph = join(complete(p.y_size()), disjoint_union(complete(p.x_size()), complete(p.z_size())));
  out.partition.y = range(0, p.k - 1);
  out.partition.x = range(p.k - 1, p.delta + 1);
  out.partition.z = range(p.delta + 1, p.n);
  refine_partition(out.graph, p, out.partition);
  return out;
}

Graph build_M(int n, int k) {
  if (k <= 1 || n <= 2 * k + 1) throw std::invalid_argument("M_k(n) needs k > 1 and n > 2k + 1");
  return join(complete(k), disjoint_union(complete(n - 2 * k), empty(k)));
}

Graph build_L(int n, int k) {
  if (k < 1 || n < k + 2) throw std::invalid_argument("L_k(n) needs k >= 1 and n >= k + 2");
  return join(complete(1), disjoint_union(complete(n - k - 1), complete(k)));
}

void refine_partition(const Graph& g, const ExtremalParams& p, VertexPartition& part) {
  part.y1.clear();
  part.y2.clear();
  part.z1.clear();
  part.z2.clear();
  const int full_z = p.n - p.delta + p.k - 3;
  for (int v : part.y) (g.degree(v) == p.n - 1 ? part.y1 : part.y2).push_back(v);
  for (int v : part.z) (g.degree(v) == full_z ? part.z1 : part.z2).push_back(v);
}

const char* to_string(FamilyClass c) {
  switch (c) {
    case FamilyClass::kA1: return "A1";
    case FamilyClass::kA2: return "A2";
    case FamilyClass::kSubgraph: return "subgraph";
  }
  return "?";
}

FamilyMember make_member(const ExtremalParams& p, std::vector<Edge> removed) {
  auto base = build_A(p);
  const int bound = removal_bound(p);
  if (static_cast<int>(removed.size()) > bound + 1) {
    throw std::invalid_argument("removed-edge set larger than the second family allows");
  }
  std::set<Edge> seen;
  for (const auto& raw : removed) {
    const Edge e(raw.u, raw.v);
    if (e.u < 0 || e.v >= p.n || e.u == e.v) throw std::invalid_argument("removed edge out of range");
    if (e.u >= p.k - 1 && e.u <= p.delta) throw std::invalid_argument("removed edge touches X");
    if (e.v >= p.k - 1 && e.v <= p.delta) throw std::invalid_argument("removed edge touches X");
    if (!seen.insert(e).second) throw std::invalid_argument("duplicate removed edge");
    base.graph.remove_edge(e.u, e.v);
  }
  FamilyMember m;
  m.params = p;
  m.removed.assign(seen.begin(), seen.end());
  m.family = static_cast<int>(m.removed.size()) <= bound ? FamilyClass::kA1 : FamilyClass::kA2;
  m.partition = std::move(base.partition);
  refine_partition(base.graph, p, m.partition);
  const auto prof = degree_profile(base.graph);
  m.connected = prof.connected;
  m.min_degree_ok = prof.min_degree == p.delta;
  m.graph = std::move(base.graph);
  return m;
}

std::vector<OrbitRepresentative> enumerate_Eprime_orbits(const ExtremalParams& p, int size) {
  validate_construction(p);
  if (size < 0 || size > removal_bound(p) + 1) throw std::invalid_argument("orbit size out of range");
  const int a = p.y_size();
  const int b = std::min(p.z_size(), 2 * size + 1);
  const int v = a + b;
  std::vector<Edge> pairs;
  for (int j = 1; j < v; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const int pc = static_cast<int>(pairs.size());
  if (static_cast<double>(binomial(pc, size)) * factorial(a) * factorial(b) > kOrbitSearchBudget) {
    throw std::length_error("orbit enumeration too large");
  }

  // All (Sym(Y) x Sym(Z')) permutations of the shrunken vertex set.
  std::vector<std::vector<int>> group;
  std::vector<int> py = range(0, a);
  do {
    std::vector<int> pz = range(a, v);
    do {
      std::vector<int> perm(py);
      perm.insert(perm.end(), pz.begin(), pz.end());
      group.push_back(std::move(perm));
    } while (std::next_permutation(pz.begin(), pz.end()));
  } while (std::next_permutation(py.begin(), py.end()));

  std::map<Config, std::uint64_t> orbit_count;
  std::vector<int> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Config c;
    for (int idx : pick) c.push_back(pairs[idx]);
    Config best = c;
    for (const auto& perm : group) best = std::min(best, map_config(c, perm));
    ++orbit_count[best];
    int i = size - 1;
    while (i >= 0 && pick[i] == pc - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }

  const int z_first = p.delta + 1;
  std::vector<OrbitRepresentative> out;
  for (const auto& [config, count] : orbit_count) {
    std::set<int> support_z;
    std::set<int> support_y;
    std::vector<std::string> types;
    OrbitRepresentative rep;
    for (const auto& e : config) {
      const bool uy = e.u < a;
      const bool vy = e.v < a;
      (uy ? support_y : support_z).insert(e.u);
      (vy ? support_y : support_z).insert(e.v);
      types.push_back(uy && vy ? "YY" : (uy || vy ? "YZ" : "ZZ"));
      auto lift = [&](int s) { return s < a ? s : z_first + (s - a); };
      rep.edges.emplace_back(lift(e.u), lift(e.v));
    }
    std::sort(rep.edges.begin(), rep.edges.end());
    std::sort(types.begin(), types.end());
    const int bz = static_cast<int>(support_z.size());
    const u128 full = static_cast<u128>(count / binomial(b, bz)) * binomial(p.z_size(), bz);
    rep.orbit_size = static_cast<std::uint64_t>(full);
    for (std::size_t i = 0; i < types.size(); ++i) rep.pattern += (i ? "," : "") + types[i];
    if (types.empty()) rep.pattern = "none";
    rep.pattern += " |Y|=" + std::to_string(support_y.size()) + " |Z|=" + std::to_string(bz);
    out.push_back(std::move(rep));
  }
  return out;
}

std::optional<FamilyMember> classify_membership(const Graph& g, int k, int delta, MembershipMode mode) {
  const ExtremalParams p{g.order(), k, delta};
  try {
    validate_construction(p);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  auto exact = find_skeleton(g, p);
  if (mode == MembershipMode::kExact) {
    if (exact && exact->family != FamilyClass::kSubgraph) return exact;
    return std::nullopt;
  }
  if (exact) return exact;
  return find_cut_partition(g, p);
}

}  // namespace qconn
