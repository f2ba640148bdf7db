#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "specgap/graph.hpp"
#include "specgap/transforms.hpp"

namespace specgap {

using Triangle = std::array<int, 3>;

/// All triangles with sorted corners, in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);

/// Edge-disjoint triangles covering every edge of the host exactly once.
struct TriangleDecomposition {
  std::vector<Triangle> triangles;  ///< sorted corners, sorted list
  friend bool operator==(const TriangleDecomposition&, const TriangleDecomposition&) = default;
};

bool is_triangle_decomposition(const Graph& host, const TriangleDecomposition& d);

struct DecompositionOptions {
  /// Stop after this many decompositions; nullopt enumerates all.
  std::optional<std::size_t> limit;
  /// Keep one decomposition per orbit of Aut(host).
  bool up_to_automorphism = false;
};

/// Exact cover of the edges by triangles (dancing links, branching on the
/// edge with the fewest remaining triangles).
std::vector<TriangleDecomposition> triangle_decompositions(const Graph& host,
                                                           const DecompositionOptions& options = {});

/// Points are host vertices, lines are the triangles.
Geometry decomposition_to_geometry(const Graph& host, const TriangleDecomposition& d);

/// Incidence graphs of the geometries of all triangle decompositions of a
/// 6-regular host, one per Aut(host)-orbit of decompositions, with
/// isomorphic outputs merged.
std::vector<Graph> girth6_pipeline(const Graph& host);

}  // namespace specgap
