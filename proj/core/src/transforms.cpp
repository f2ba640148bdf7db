#include "specgap/transforms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace specgap {

Graph bipartite_double(const Graph& g) {
  Graph out(2 * g.order());
  for (const auto& [u, v] : g.edges()) {
    out.add_edge(2 * u, 2 * v + 1);
    out.add_edge(2 * u + 1, 2 * v);
  }
  return out;
}

Graph distance_two_graph(const Graph& g) {
  Graph out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    Row reach = 0;
    for_each_bit(g.row(v), [&](int u) { reach |= g.row(u); });
    reach &= ~g.row(v) & ~bit(v);
    for_each_bit(reach, [&](int u) {
      if (u > v) out.add_edge(v, u);
    });
  }
  return out;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw std::invalid_argument("line graph would exceed 64 vertices");
  }
  const int m = static_cast<int>(edges.size());
  Graph out(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) out.add_edge(i, j);
    }
  }
  return out;
}

void validate_geometry(const Geometry& geom, bool require_regular) {
  if (geom.points < 0) throw GeometryError("negative point count");
  std::set<std::array<int, 3>> seen;
  std::set<std::pair<int, int>> pairs;
  std::vector<int> lines_through(static_cast<std::size_t>(geom.points), 0);
  for (std::size_t i = 0; i < geom.lines.size(); ++i) {
    auto line = geom.lines[i];
    for (int p : line) {
      if (p < 0 || p >= geom.points) {
        throw GeometryError("line " + std::to_string(i) + " has point " + std::to_string(p) +
                            " outside 0.." + std::to_string(geom.points - 1));
      }
    }
    std::sort(line.begin(), line.end());
    if (line[0] == line[1] || line[1] == line[2]) {
      throw GeometryError("line " + std::to_string(i) + " does not have three distinct points");
    }
    if (!seen.insert(line).second) {
      throw GeometryError("line " + std::to_string(i) + " is a duplicate");
    }
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (!pairs.emplace(line[a], line[b]).second) {
          throw GeometryError("points " + std::to_string(line[a]) + " and " +
                              std::to_string(line[b]) + " lie on two lines");
        }
      }
    }
    for (int p : line) ++lines_through[p];
  }
  if (require_regular) {
    for (int p = 0; p < geom.points; ++p) {
      if (lines_through[p] != 3) {
        throw GeometryError("point " + std::to_string(p) + " lies on " +
                            std::to_string(lines_through[p]) + " lines, not 3");
      }
    }
  }
}

Graph incidence_graph(const Geometry& geom) {
  validate_geometry(geom, false);
  const int total = geom.points + static_cast<int>(geom.lines.size());
  if (total > kMaxVertices) throw GeometryError("incidence graph would exceed 64 vertices");
  Graph out(total);
  for (std::size_t i = 0; i < geom.lines.size(); ++i) {
    for (int p : geom.lines[i]) out.add_edge(p, geom.points + static_cast<int>(i));
  }
  return out;
}

std::string to_text(const Geometry& geom) {
  std::ostringstream out;
  out << geom.points << ' ' << geom.lines.size() << '\n';
  for (const auto& line : geom.lines) out << line[0] << ' ' << line[1] << ' ' << line[2] << '\n';
  return out.str();
}

Geometry parse_geometry(std::string_view text) {
  std::istringstream in{std::string(text)};
  Geometry geom;
  std::size_t count = 0;
  if (!(in >> geom.points >> count)) throw GeometryError("missing 'p l' header");
  geom.lines.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto& line = geom.lines[i];
    if (!(in >> line[0] >> line[1] >> line[2])) {
      throw GeometryError("line " + std::to_string(i) + " is missing or malformed");
    }
  }
  std::string extra;
  if (in >> extra) throw GeometryError("trailing data after " + std::to_string(count) + " lines");
  return geom;
}

}  // namespace specgap
