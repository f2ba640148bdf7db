#pragma once

#include <array>
#include <string>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {

/// Which named graph a classified graph was matched to.
struct FamilyTag {
  enum class Kind { Base, KollarSarnak, GuoMohar, Sporadic };
  Kind kind;
  int parameter;  ///< k for the families, the registry id for sporadics

  std::string to_string() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Vertex labels for B(k), KS(k) and GM(k): cycle C_i occupies 4i..4i+3 as
// (w_i, w'_i, b_i, b'_i).
inline int w_vertex(int i) { return 4 * i; }
inline int w_prime_vertex(int i) { return 4 * i + 1; }
inline int b_vertex(int i) { return 4 * i + 2; }
inline int b_prime_vertex(int i) { return 4 * i + 3; }

/// Path of k induced 4-cycles; k >= 2.
Graph base_graph(int k);
/// B(k) plus w_0 w'_0 and b_{k-1} b'_{k-1}.
Graph kollar_sarnak(int k);
/// B(k) plus w_0 b_{k-1} and w'_0 b'_{k-1}.
Graph guo_mohar(int k);

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
/// Outer cycle 0..n-1, spokes i ~ n+i, inner i ~ i+k (indices n+...).
Graph generalized_petersen(int n, int k);
/// Cayley graph of Z_n; `connection` lists positive representatives of +-s.
Graph circulant(int n, const std::vector<int>& connection);
Graph cube();
Graph petersen();
Graph heawood();
Graph moebius_kantor();
Graph desargues();
/// Cayley graph of Z_4 x Z_4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
Graph shrikhande();
/// The 6-regular graph on 16 vertices with smallest eigenvalue -2 that is not
/// Shrikhande and has a triangle decomposition; its automorphism group has order 6.
Graph exceptional_host();
/// K3 box K3 on (x, y) = 3x + y, plus v01 = 9, v02 = 10, v12 = 11, where
/// v_ij is joined to the six vertices with first coordinate in {i, j}.
Graph k3_box_k3_plus();

/// Replaces each vertex of `vertices` by a triangle; corner i of the new
/// triangle takes the i-th neighbour in ascending label order. The original
/// vertex keeps its label as corner 0, the other corners are appended.
Graph truncate(const Graph& g, const std::vector<int>& vertices);
/// As truncate(), but corner_orders[j] permutes which neighbour each corner of
/// the j-th truncated vertex receives.
Graph truncate(const Graph& g, const std::vector<int>& vertices,
               const std::vector<std::array<int, 3>>& corner_orders);

struct SporadicEntry {
  int id = 0;
  int order = 0;
  bool bipartite = false;
  std::string description;
  std::string recipe;
  Graph graph;
  /// graph6 of the canonical form of `graph`.
  std::string graph6;
};

/// The 14 sporadic graphs, built once on first use.
const std::vector<SporadicEntry>& sporadic_registry();
/// Throws std::out_of_range unless 1 <= id <= 14.
const SporadicEntry& sporadic(int id);
/// JSON array of {id, n, bipartite, description, graph6}.
std::string registry_json();

}  // namespace specgap
