#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specgap {

inline constexpr int kMaxVertices = 64;

/// One adjacency row: bit u is set iff the vertex is adjacent to u.
using Row = std::uint64_t;

/// A vertex permutation; perm[v] is the image of v.
using Permutation = std::vector<int>;

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 64 vertices stored as bitset rows.
///
/// Rows are kept symmetric and loop-free by construction; bits at or
/// above order() are always clear.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept;

  bool has_edge(int u, int v) const noexcept {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1U;
  }
  Row row(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const Row> rows() const noexcept {
    return {adj_.data(), static_cast<std::size_t>(n_)};
  }
  Row vertex_mask() const noexcept;

  int degree(int v) const noexcept;
  std::vector<int> neighbours(int v) const;
  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Relabels vertex v as perm[v].
  Graph permuted(std::span<const int> perm) const;
  /// Subgraph induced by the vertices of `mask`, relabeled in increasing order.
  Graph induced(Row mask) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<Row, kMaxVertices> adj_{};
};

inline Row bit(int v) noexcept { return Row{1} << v; }

/// Calls f(v) for every set bit v of `mask`, lowest first.
template <typename F>
void for_each_bit(Row mask, F&& f) {
  while (mask != 0) {
    const int v = __builtin_ctzll(mask);
    mask &= mask - 1;
    f(v);
  }
}

inline int popcount(Row mask) noexcept { return __builtin_popcountll(mask); }

/// Raised by parse_graph6; offset() is the index of the offending byte.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. A trailing newline (and CR) is tolerated, as is
/// the optional ">>graph6<<" header.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

struct Bipartition {
  Row classes[2] = {0, 0};
  int colour(int v) const noexcept { return (classes[1] >> v) & 1U ? 1 : 0; }
};

/// Two-colouring with vertex 0 (and the smallest vertex of every other
/// component) in class 0; nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_connected(const Graph& g);
/// Connected components as vertex masks ordered by their smallest vertex.
std::vector<Row> components(const Graph& g);
std::vector<int> degrees(const Graph& g);
bool is_regular(const Graph& g, int d);

/// Vertices of g come first, then those of h.
Graph disjoint_union(const Graph& g, const Graph& h);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

bool is_automorphism(const Graph& g, std::span<const int> perm);
bool is_permutation(std::span<const int> perm, int n);

}  // namespace specgap
