#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {

/// G x K2. Vertex (x, i) is labeled 2x + i.
Graph bipartite_double(const Graph& g);

/// Same vertex set; u ~ v iff their distance in g is exactly 2.
Graph distance_two_graph(const Graph& g);

/// Vertices are the edges of g in the order of Graph::edges().
Graph line_graph(const Graph& g);

/// A point-line incidence structure whose lines have three points.
struct Geometry {
  int points = 0;
  std::vector<std::array<int, 3>> lines;
};

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks that every line has three distinct in-range points, no line is
/// repeated and two points share at most one line; with `require_regular`,
/// also that each point lies on exactly three lines. Throws GeometryError
/// naming the violation.
void validate_geometry(const Geometry& geom, bool require_regular);

/// Points 0..p-1 followed by lines p..p+l-1.
Graph incidence_graph(const Geometry& geom);

/// "p l" on the first line, then one line of three point indices per line.
std::string to_text(const Geometry& geom);
Geometry parse_geometry(std::string_view text);

}  // namespace specgap
