#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qconn/graph.hpp"

namespace qconn {

/// Order n, connectivity target k and minimum degree delta of the extremal
/// graph A(n,k,delta) = K_{k-1} v (K_{delta-k+2} u K_{n-delta-1}).
struct ExtremalParams {
  int n = 0;
  int k = 0;
  int delta = 0;

  int x_size() const { return delta - k + 2; }
  int y_size() const { return k - 1; }
  int z_size() const { return n - delta - 1; }

  friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

/// Throws std::invalid_argument unless delta >= k >= 2 and n > delta + 1.
void validate_construction(const ExtremalParams& p);

/// Throws std::invalid_argument unless delta >= k >= 3 and n > delta + 1.
void validate_certified_range(const ExtremalParams& p);

/// Vertex classes of A(n,k,delta) carried from the construction, plus the
/// degree refinement of Y and Z measured on the actual graph.
struct VertexPartition {
  std::vector<int> x;
  std::vector<int> y;
  std::vector<int> z;
  std::vector<int> y1;  // d = n-1
  std::vector<int> y2;  // d <= n-2
  std::vector<int> z1;  // d = n-delta+k-3
  std::vector<int> z2;  // d <= n-delta+k-4
};

/// (k^2+2k-3) delta^2 - (2k^3-k^2-17k+8) delta + k^4-3k^3-8k^2+23k+4.
/// Throws unless delta >= k >= 3.
std::int64_t threshold_F(int k, int delta);

/// 2(n - delta + k - 3).
std::int64_t q_threshold(const ExtremalParams& p);

/// floor((delta-k+2)(k-1)/4): the largest |E'| admitted by the first family.
int removal_bound(const ExtremalParams& p);

struct ExtremalGraph {
  Graph graph;
  VertexPartition partition;
};

/// Labels: Y = [0, k-1), X = [k-1, delta+1), Z = [delta+1, n).
ExtremalGraph build_A(const ExtremalParams& p);

/// K_k v (K_{n-2k} u coK_k); requires k > 1 and n > 2k + 1.
Graph build_M(int n, int k);

/// K_1 v (K_{n-k-1} u K_k); requires k >= 1 and n >= k + 2.
Graph build_L(int n, int k);

/// Fills y1/y2/z1/z2 from the degrees of g.
void refine_partition(const Graph& g, const ExtremalParams& p, VertexPartition& part);

enum class FamilyClass { kA1, kA2, kSubgraph };

const char* to_string(FamilyClass c);

struct FamilyMember {
  ExtremalParams params;
  /// E': missing edges with both endpoints in Y u Z.
  std::vector<Edge> removed;
  Graph graph;
  FamilyClass family = FamilyClass::kA1;
  VertexPartition partition;
  /// Missing X-X or X-Y edges; only ever non-empty in subgraph mode.
  std::vector<Edge> missing_skeleton;
  bool connected = false;
  /// delta(G) == delta, as the main theorem requires.
  bool min_degree_ok = false;

  /// Members outside the theorem's hypotheses are kept but flagged.
  bool flagged() const { return !connected || !min_degree_ok; }
};

/// A(n,k,delta) - E'. Throws std::invalid_argument for an edge touching X,
/// duplicate edges, or more than removal_bound + 1 edges.
FamilyMember make_member(const ExtremalParams& p, std::vector<Edge> removed);

struct OrbitRepresentative {
  /// Removed-edge set in the labels of build_A(p).
  std::vector<Edge> edges;
  /// Number of size-|edges| configurations in the orbit at full scale.
  std::uint64_t orbit_size = 0;
  /// Edge types, e.g. "YY,ZZ", with the Y and Z support sizes.
  std::string pattern;
};

/// One representative per orbit of `size`-edge removal sets inside Y u Z
/// under permutations of Y and of Z. Orbits are computed on an instance with
/// |Z| capped at 2*size+1 and lifted. Throws for size outside
/// [0, removal_bound + 1] or when the shrunken search is too large.
std::vector<OrbitRepresentative> enumerate_Eprime_orbits(const ExtremalParams& p, int size);

enum class MembershipMode {
  /// G is isomorphic to A(n,k,delta) - E' with |E'| <= removal_bound + 1.
  kExact,
  /// G is isomorphic to a spanning subgraph of A(n,k,delta).
  kSubgraph,
};

/// Decides membership without general isomorphism search. The returned
/// member keeps the labels of g; `removed` and the partition are evidence in
/// those labels. Empty when g does not belong. In kExact mode the class is
/// kA1 or kA2; in kSubgraph mode kSubgraph marks graphs that fit the X/Y/Z
/// skeleton but fall outside both families.
std::optional<FamilyMember> classify_membership(const Graph& g, int k, int delta,
                                                MembershipMode mode = MembershipMode::kExact);

}  // namespace qconn
