#include "specgap/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "specgap/canon.hpp"
#include "specgap/decomp.hpp"
#include "specgap/transforms.hpp"

namespace specgap {

std::string FamilyTag::to_string() const {
  switch (kind) {
    case Kind::Base:
      return "B(" + std::to_string(parameter) + ")";
    case Kind::KollarSarnak:
      return "KS(" + std::to_string(parameter) + ")";
    case Kind::GuoMohar:
      return "GM(" + std::to_string(parameter) + ")";
    case Kind::Sporadic:
      return "sporadic #" + std::to_string(parameter);
  }
  return "?";
}

namespace {

void check_family_parameter(int k) {
  if (k < 2) throw std::invalid_argument("family parameter k must be at least 2");
  if (4 * k > kMaxVertices) throw std::invalid_argument("family graph would exceed 64 vertices");
}

}  // namespace

Graph base_graph(int k) {
  check_family_parameter(k);
  Graph g(4 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(w_vertex(i), b_vertex(i));
    g.add_edge(w_prime_vertex(i), b_prime_vertex(i));
    g.add_edge(w_vertex(i), b_prime_vertex(i));
    g.add_edge(w_prime_vertex(i), b_vertex(i));
    if (i + 1 < k) {
      g.add_edge(b_vertex(i), w_vertex(i + 1));
      g.add_edge(b_prime_vertex(i), w_prime_vertex(i + 1));
    }
  }
  return g;
}

Graph kollar_sarnak(int k) {
  Graph g = base_graph(k);
  g.add_edge(w_vertex(0), w_prime_vertex(0));
  g.add_edge(b_vertex(k - 1), b_prime_vertex(k - 1));
  return g;
}

Graph guo_mohar(int k) {
  Graph g = base_graph(k);
  g.add_edge(w_vertex(0), b_vertex(k - 1));
  g.add_edge(w_prime_vertex(0), b_prime_vertex(k - 1));
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative part size");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw std::invalid_argument("generalized Petersen needs n >= 3 and 1 <= k < n/2");
  }
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + k) % n);
  }
  return g;
}

Graph circulant(int n, const std::vector<int>& connection) {
  if (n < 1) throw std::invalid_argument("circulant needs n >= 1");
  Graph g(n);
  for (int s : connection) {
    if (s <= 0 || s >= n) throw std::invalid_argument("connection element outside 1..n-1");
    for (int i = 0; i < n; ++i) {
      const int j = (i + s) % n;
      if (!g.has_edge(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

Graph cube() {
  Graph g(8);
  for (int v = 0; v < 8; ++v) {
    for (int b = 0; b < 3; ++b) {
      const int u = v ^ (1 << b);
      if (u > v) g.add_edge(v, u);
    }
  }
  return g;
}

Graph petersen() { return generalized_petersen(5, 2); }

Graph heawood() {
  Graph g = cycle(14);
  for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
  return g;
}

Graph moebius_kantor() { return generalized_petersen(8, 3); }

Graph desargues() { return generalized_petersen(10, 3); }

Graph shrikhande() {
  Graph g(16);
  const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (const auto& s : steps) {
        const int u = 4 * a + b;
        const int v = 4 * ((a + s[0]) % 4) + (b + s[1]) % 4;
        if (!g.has_edge(u, v)) g.add_edge(u, v);
      }
    }
  }
  return g;
}

Graph k3_box_k3_plus() {
  Graph g(12);
  for (int u = 0; u < 9; ++u) {
    for (int v = u + 1; v < 9; ++v) {
      if (u / 3 == v / 3 || u % 3 == v % 3) g.add_edge(u, v);
    }
  }
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int j = 0; j < 3; ++j) {
    for (int u = 0; u < 9; ++u) {
      if (u / 3 == pairs[j][0] || u / 3 == pairs[j][1]) g.add_edge(9 + j, u);
    }
  }
  return g;
}

Graph truncate(const Graph& g, const std::vector<int>& vertices) {
  return truncate(g, vertices, std::vector<std::array<int, 3>>(vertices.size(), {0, 1, 2}));
}

Graph truncate(const Graph& g, const std::vector<int>& vertices,
               const std::vector<std::array<int, 3>>& corner_orders) {
  if (corner_orders.size() != vertices.size()) {
    throw std::invalid_argument("one corner order is needed per truncated vertex");
  }
  const int n = g.order();
  if (n + 2 * static_cast<int>(vertices.size()) > kMaxVertices) {
    throw std::invalid_argument("truncation would exceed 64 vertices");
  }
  // end[{u, v}] is the vertex carrying u's end of the edge uv.
  std::map<std::pair<int, int>, int> end;
  Graph out(n + 2 * static_cast<int>(vertices.size()));
  Row seen = 0;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    const int v = vertices[j];
    if (v < 0 || v >= n) throw std::invalid_argument("truncated vertex out of range");
    if (seen & bit(v)) throw std::invalid_argument("vertex truncated twice");
    seen |= bit(v);
    if (g.degree(v) != 3) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " does not have degree 3");
    }
    auto order = corner_orders[j];
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2}) {
      throw std::invalid_argument("corner order is not a permutation of 0, 1, 2");
    }
    const auto nb = g.neighbours(v);
    const int corners[3] = {v, n + 2 * static_cast<int>(j), n + 2 * static_cast<int>(j) + 1};
    for (int i = 0; i < 3; ++i) end[{v, nb[order[i]]}] = corners[i];
    out.add_edge(corners[0], corners[1]);
    out.add_edge(corners[0], corners[2]);
    out.add_edge(corners[1], corners[2]);
  }
  auto at = [&](int u, int v) {
    auto it = end.find({u, v});
    return it == end.end() ? u : it->second;
  };
  for (const auto& [u, v] : g.edges()) out.add_edge(at(u, v), at(v, u));
  return out;
}

Graph exceptional_host() { return parse_graph6("OGL_gsZP}_[@cjpETGdWB"); }

namespace {

Graph desargues_mate() {
  const Graph reference = desargues();
  for (auto& g : girth6_pipeline(line_graph(complete(5)))) {
    if (!are_isomorphic(g, reference)) return g;
  }
  throw std::logic_error("no cospectral mate among the decompositions of L(K5)");
}

Graph circulant_incidence() {
  Geometry geom{12, {}};
  for (int a = 0; a < 12; ++a) geom.lines.push_back({a, (a + 1) % 12, (a + 3) % 12});
  validate_geometry(geom, true);
  return incidence_graph(geom);
}

Graph exceptional_incidence() {
  auto out = girth6_pipeline(exceptional_host());
  if (out.size() != 1) throw std::logic_error("exceptional host should have one decomposition");
  return out.front();
}

std::vector<SporadicEntry> build_registry() {
  const Graph k33 = complete_bipartite(3, 3);
  const Graph petersen_truncated = truncate(petersen(), {0});
  const Graph cube_truncated = truncate(cube(), {0, 3, 5, 6});

  std::vector<SporadicEntry> rows = {
      {1, 4, false, "Complete graph K4", "complete(4)", complete(4), {}},
      {2, 10, false, "Petersen graph", "generalized_petersen(5,2)", petersen(), {}},
      {3, 10, false, "K3,3 with two white vertices truncated",
       "truncate(complete_bipartite(3,3), {0,1})", truncate(k33, {0, 1}), {}},
      {4, 12, false, "Petersen with one vertex truncated", "truncate(petersen(), {0})",
       petersen_truncated, {}},
      {5, 12, false, "K3,3 with three white vertices truncated",
       "truncate(complete_bipartite(3,3), {0,1,2})", truncate(k33, {0, 1, 2}), {}},
      {6, 14, true, "Heawood graph", "heawood()", heawood(), {}},
      {7, 16, true, "Moebius-Kantor graph, generalized Petersen G(8,3)",
       "generalized_petersen(8,3)", moebius_kantor(), {}},
      {8, 16, false, "Cube with four white vertices truncated",
       "truncate(cube(), {0,3,5,6})", cube_truncated, {}},
      {9, 20, true, "Desargues graph, generalized Petersen G(10,3)",
       "generalized_petersen(10,3)", desargues(), {}},
      {10, 20, true, "Cospectral mate for the Desargues graph",
       "girth6_pipeline(line_graph(complete(5))), the output not isomorphic to desargues()",
       desargues_mate(), {}},
      {11, 24, true, "Bipartite double of either 12-vertex example",
       "bipartite_double(truncate(petersen(), {0}))", bipartite_double(petersen_truncated), {}},
      {12, 24, true, "Bicirculant",
       "incidence_graph of the triangles {a,a+1,a+3} of circulant(12,{1,2,3})",
       circulant_incidence(), {}},
      {13, 32, true, "Incidence graph of the triangle decomposition of a 6-regular graph",
       "girth6_pipeline(exceptional_host())", exceptional_incidence(), {}},
      {14, 32, true, "Bipartite double of cube with four vertices truncated",
       "bipartite_double(truncate(cube(), {0,3,5,6}))", bipartite_double(cube_truncated), {}},
  };
  for (auto& row : rows) row.graph6 = canonical_form(row.graph).bytes;
  return rows;
}

}  // namespace

const std::vector<SporadicEntry>& sporadic_registry() {
  static const std::vector<SporadicEntry> registry = build_registry();
  return registry;
}

const SporadicEntry& sporadic(int id) {
  if (id < 1 || id > 14) throw std::out_of_range("sporadic id must be in 1..14");
  return sporadic_registry()[static_cast<std::size_t>(id - 1)];
}

std::string registry_json() {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : sporadic_registry()) {
    out.push_back({{"id", row.id},
                   {"n", row.order},
                   {"bipartite", row.bipartite},
                   {"description", row.description},
                   {"graph6", row.graph6}});
  }
  return out.dump(2);
}

}  // namespace specgap
