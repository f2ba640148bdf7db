#include "specgap/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "specgap/canon.hpp"

namespace specgap {

namespace {

struct Invariant {
  int triangles = 0;
  int squares = 0;
  auto operator<=>(const Invariant&) const = default;
};

Invariant edge_invariant(const Graph& g, int u, int v) {
  Invariant inv;
  inv.triangles = popcount(g.row(u) & g.row(v));
  const Row others_v = g.row(v) & ~bit(u);
  for_each_bit(g.row(u) & ~bit(v), [&](int a) { inv.squares += popcount(g.row(a) & others_v & ~bit(a)); });
  return inv;
}

// Edge uv is reducible when deleting u and v and joining the two remaining
// neighbours of each leaves a simple graph. Connectivity is not required.
bool reducible(const Graph& g, int u, int v) {
  const Row ends_u = g.row(u) & ~bit(v);
  const Row ends_v = g.row(v) & ~bit(u);
  const int a = __builtin_ctzll(ends_u);
  const int b = 63 - __builtin_clzll(ends_u);
  const int c = __builtin_ctzll(ends_v);
  const int d = 63 - __builtin_clzll(ends_v);
  if (g.has_edge(a, b) || g.has_edge(c, d)) return false;
  return !(a == c && b == d);
}

Graph insert_edge(const Graph& g, const Edge& e1, const Edge& e2) {
  const int n = g.order();
  Graph out(n + 2);
  for (const auto& [u, v] : g.edges()) {
    if (Edge{u, v} != e1 && Edge{u, v} != e2) out.add_edge(u, v);
  }
  out.add_edge(e1.first, n);
  out.add_edge(n, e1.second);
  out.add_edge(e2.first, n + 1);
  out.add_edge(n + 1, e2.second);
  out.add_edge(n, n + 1);
  return out;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

// One representative per Aut(g)-orbit of unordered pairs of distinct edges.
std::vector<std::pair<Edge, Edge>> edge_pair_representatives(const Graph& g,
                                                             const std::vector<Permutation>& gens) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> index(static_cast<std::size_t>(g.order() * g.order()), -1);
  for (int i = 0; i < m; ++i) {
    index[edges[i].first * g.order() + edges[i].second] = i;
    index[edges[i].second * g.order() + edges[i].first] = i;
  }
  auto pair_id = [m](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * m + j;
  };
  std::vector<int> parent(static_cast<std::size_t>(m * m));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& gen : gens) {
    std::vector<int> image(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) image[i] = index[gen[edges[i].first] * g.order() + gen[edges[i].second]];
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) unite(parent, pair_id(i, j), pair_id(image[i], image[j]));
    }
  }
  std::vector<std::pair<Edge, Edge>> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (find(parent, pair_id(i, j)) == pair_id(i, j)) out.emplace_back(edges[i], edges[j]);
    }
  }
  return out;
}

bool same_edge_orbit(const Graph& g, const std::vector<Permutation>& gens, Edge from, Edge to) {
  auto norm = [](Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; };
  from = norm(from);
  to = norm(to);
  if (from == to) return true;
  std::vector<Edge> frontier{from};
  std::vector<Edge> seen{from};
  while (!frontier.empty()) {
    const Edge e = frontier.back();
    frontier.pop_back();
    for (const auto& gen : gens) {
      const Edge f = norm({gen[e.first], gen[e.second]});
      if (f == to) return true;
      if (std::find(seen.begin(), seen.end(), f) == seen.end()) {
        seen.push_back(f);
        frontier.push_back(f);
      }
    }
  }
  (void)g;
  return false;
}

// Canonical-augmentation test for a child whose newest edge joins the last
// two vertices. Fills `search` on acceptance.
bool accept(const Graph& child, CanonicalSearch& search) {
  const int x = child.order() - 2;
  const int y = child.order() - 1;
  const Invariant mine = edge_invariant(child, x, y);
  std::vector<Edge> ties;
  for (const auto& [u, v] : child.edges()) {
    const Invariant inv = edge_invariant(child, u, v);
    if (inv > mine) continue;
    if (u == x && v == y) {
      ties.emplace_back(u, v);
      continue;
    }
    if (!reducible(child, u, v)) continue;
    if (inv < mine) return false;
    ties.emplace_back(u, v);
  }
  search = canonical_search(child);
  if (ties.size() == 1) return true;
  const auto& lab = search.form.relabeling;
  auto key = [&](const Edge& e) { return std::minmax(lab[e.first], lab[e.second]); };
  const Edge best = *std::min_element(ties.begin(), ties.end(),
                                      [&](const Edge& a, const Edge& b) { return key(a) < key(b); });
  return same_edge_orbit(child, search.generators, best, {x, y});
}

bool passes(const Graph& g, const CubicFilter& filter) {
  if (filter.bipartite_only && !is_bipartite(g)) return false;
  if (filter.min_girth > 0) {
    const auto gi = girth(g);
    if (gi && *gi < filter.min_girth) return false;
  }
  return true;
}

struct Node {
  Graph graph;
  CanonicalSearch search;
};

class Generator {
 public:
  Generator(int n, const CubicFilter& filter, const std::function<void(const Graph&)>& visit)
      : n_(n), filter_(filter), visit_(visit) {}

  void expand(const Node& node) const {
    if (node.graph.order() == n_) {
      if (is_connected(node.graph) && passes(node.graph, filter_)) {
        visit_(node.graph.permuted(node.search.form.relabeling));
      }
      return;
    }
    for (const auto& [e1, e2] : edge_pair_representatives(node.graph, node.search.generators)) {
      Node child{insert_edge(node.graph, e1, e2), {}};
      if (can_connect(child.graph) && accept(child.graph, child.search)) expand(child);
    }
  }

  // Nodes at order `level`, in generation order.
  void collect(const Node& node, int level, std::vector<Node>& out) const {
    if (node.graph.order() == level) {
      out.push_back(node);
      return;
    }
    for (const auto& [e1, e2] : edge_pair_representatives(node.graph, node.search.generators)) {
      Node child{insert_edge(node.graph, e1, e2), {}};
      if (can_connect(child.graph) && accept(child.graph, child.search)) collect(child, level, out);
    }
  }

 private:
  // Each insertion merges at most two components.
  bool can_connect(const Graph& g) const {
    return static_cast<int>(components(g).size()) - 1 <= (n_ - g.order()) / 2;
  }

  int n_;
  CubicFilter filter_;
  const std::function<void(const Graph&)>& visit_;
};

void check_order(int n) {
  if (n % 2 != 0) throw std::invalid_argument("no cubic graph has an odd number of vertices");
  if (n < 4 || n > 20) throw std::invalid_argument("cubic graph generation supports 4 <= n <= 20");
}

// Appends `count` diamonds (K4 minus an edge) in a chain from p to q; p may
// equal q.
Graph with_diamond_chain(const Graph& g, int p, int q, int count) {
  Graph out(g.order() + 4 * count);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  int previous = p;
  for (int i = 0; i < count; ++i) {
    const int a = g.order() + 4 * i;
    out.add_edge(previous, a);
    out.add_edge(a, a + 1);
    out.add_edge(a, a + 2);
    out.add_edge(a + 1, a + 2);
    out.add_edge(a + 1, a + 3);
    out.add_edge(a + 2, a + 3);
    previous = a + 3;
  }
  out.add_edge(previous, q);
  return out;
}

Graph ring_of_diamonds(int count) {
  Graph g = with_diamond_chain(Graph(1), 0, 0, count);
  // Drop the anchor vertex and close the chain on itself.
  Graph out(4 * count);
  for (const auto& [u, v] : g.edges()) {
    if (u != 0) out.add_edge(u - 1, v - 1);
  }
  out.add_edge(0, 4 * count - 1);
  return out;
}

// Connected cubic graphs without a reducible edge on at most n vertices.
//
// Such a graph is K4 or is built from a cubic multigraph M by replacing each
// edge with a chain of at least one diamond (a ring of diamonds when M is
// empty). M on v vertices needs 3v/2 diamonds, so for n <= 20 it has at most
// two vertices: the theta graph or the dumbbell.
std::vector<Graph> irreducible_cubic_graphs(int n) {
  std::vector<Graph> out{complete(4)};
  for (int k = 2; 4 * k <= n; ++k) out.push_back(ring_of_diamonds(k));
  for (int d = 3; 2 + 4 * d <= n; ++d) {
    for (int d1 = d - 2; d1 >= 1; --d1) {
      for (int d2 = std::min(d1, d - d1 - 1); d2 >= 1; --d2) {
        const int d3 = d - d1 - d2;
        if (d3 > d2) continue;
        out.push_back(with_diamond_chain(
            with_diamond_chain(with_diamond_chain(Graph(2), 0, 1, d1), 0, 1, d2), 0, 1, d3));
      }
    }
    for (int bridge = 1; bridge <= d - 2; ++bridge) {
      for (int l1 = d - bridge - 1; l1 >= 1; --l1) {
        const int l2 = d - bridge - l1;
        if (l2 > l1) continue;
        out.push_back(with_diamond_chain(
            with_diamond_chain(with_diamond_chain(Graph(2), 0, 0, l1), 0, 1, bridge), 1, 1, l2));
      }
    }
  }
  return out;
}

// Cubic graphs without a reducible edge are the disjoint unions of the
// connected ones, so those unions seed the generation tree. Unions with too
// many components to end up connected at order n are skipped.
std::vector<Node> roots(int n) {
  const auto atoms = irreducible_cubic_graphs(n);
  std::vector<Node> out;
  std::function<void(std::size_t, const Graph&, int)> extend = [&](std::size_t first,
                                                                   const Graph& g, int parts) {
    if (parts > 0 && parts - 1 <= (n - g.order()) / 2) out.push_back({g, {}});
    for (std::size_t i = first; i < atoms.size(); ++i) {
      if (g.order() + atoms[i].order() <= n) extend(i, disjoint_union(g, atoms[i]), parts + 1);
    }
  };
  extend(0, Graph(0), 0);
  for (auto& node : out) node.search = canonical_search(node.graph);
  return out;
}

}  // namespace

void for_each_cubic_graph(int n, const CubicFilter& filter,
                          const std::function<void(const Graph&)>& visit) {
  check_order(n);
  const Generator gen(n, filter, visit);
  for (const auto& node : roots(n)) gen.expand(node);
}

namespace {

// Runs body(worker, i) for i in [0, count), handing out indices dynamically.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(int, std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = next++; i < count; i = next++) body(w, i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

std::vector<Graph> cubic_graphs(int n, const CubicFilter& filter, int jobs) {
  check_order(n);
  std::vector<Graph> out;
  jobs = std::max(1, jobs);
  if (jobs == 1 || n <= 10) {
    for_each_cubic_graph(n, filter, [&](const Graph& g) { out.push_back(g); });
  } else {
    std::vector<Node> frontier;
    const std::function<void(const Graph&)> none = [](const Graph&) {};
    const Generator splitter(n, filter, none);
    const int split = std::max(10, n - 6);
    for (const auto& node : roots(n)) {
      if (node.graph.order() <= split) {
        splitter.collect(node, split, frontier);
      } else {
        frontier.push_back(node);
      }
    }
    std::vector<std::vector<Graph>> parts(static_cast<std::size_t>(jobs));
    parallel_for(frontier.size(), jobs, [&](int w, std::size_t i) {
      auto& part = parts[static_cast<std::size_t>(w)];
      const std::function<void(const Graph&)> keep = [&part](const Graph& g) { part.push_back(g); };
      Generator(n, filter, keep).expand(frontier[i]);
    });
    for (auto& part : parts) {
      for (auto& g : part) out.push_back(std::move(g));
    }
  }
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(to_graph6(out[i]), i);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             keys.end());
  std::vector<Graph> sorted;
  sorted.reserve(keys.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::size_t GapReport::total_graphs() const {
  std::size_t total = 0;
  for (const auto& [n, count] : graphs_per_order) total += count;
  return total;
}

std::optional<FamilyTag> identify(const Graph& g) {
  const std::string form = canonical_form(g).bytes;
  const int n = g.order();
  if (n % 4 == 0 && n >= 8) {
    const int k = n / 4;
    if (canonical_form(kollar_sarnak(k)).bytes == form) {
      return FamilyTag{FamilyTag::Kind::KollarSarnak, k};
    }
    if (canonical_form(guo_mohar(k)).bytes == form) return FamilyTag{FamilyTag::Kind::GuoMohar, k};
  }
  for (const auto& row : sporadic_registry()) {
    if (row.order == n && row.graph6 == form) return FamilyTag{FamilyTag::Kind::Sporadic, row.id};
  }
  return std::nullopt;
}

GapReport classify_gap(int n_max, int jobs) {
  if (n_max < 4 || n_max > 20) throw std::invalid_argument("classification supports 4 <= n_max <= 20");
  GapReport report;
  report.n_max = n_max;
  for (int n = 4; n <= n_max; n += 2) {
    const auto graphs = cubic_graphs(n, {}, jobs);
    report.graphs_per_order[n] = graphs.size();
    report.survivors_per_order[n] = 0;
    std::vector<std::optional<GapCertificate>> certs(graphs.size());
    parallel_for(graphs.size(), std::max(1, jobs), [&](int, std::size_t i) {
      auto cert = certify_gap(graphs[i]);
      if (cert.verdict) certs[i] = std::move(cert);
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (!certs[i]) continue;
      ++report.survivors_per_order[n];
      report.survivors.push_back(
          {n, certs[i]->graph6, is_bipartite(graphs[i]), identify(graphs[i]), std::move(*certs[i])});
    }
  }
  return report;
}

namespace {

std::string describe(const std::optional<FamilyTag>& tag) {
  if (!tag) return "unclassified";
  switch (tag->kind) {
    case FamilyTag::Kind::KollarSarnak:
      return "Kollar-Sarnak graph " + tag->to_string();
    case FamilyTag::Kind::GuoMohar:
      return "Guo-Mohar graph " + tag->to_string();
    case FamilyTag::Kind::Sporadic:
      return sporadic(tag->parameter).description + " (" + tag->to_string() + ")";
    case FamilyTag::Kind::Base:
      return tag->to_string();
  }
  return "?";
}

}  // namespace

std::string report_json(const GapReport& report) {
  nlohmann::ordered_json out;
  out["n_max"] = report.n_max;
  out["total_graphs"] = report.total_graphs();
  auto orders = nlohmann::ordered_json::array();
  for (const auto& [n, count] : report.graphs_per_order) {
    orders.push_back({{"n", n}, {"graphs", count}, {"survivors", report.survivors_per_order.at(n)}});
  }
  out["orders"] = orders;
  auto survivors = nlohmann::ordered_json::array();
  for (const auto& entry : report.survivors) {
    survivors.push_back({{"n", entry.n},
                         {"graph6", entry.graph6},
                         {"bipartite", entry.bipartite},
                         {"tag", entry.tag ? entry.tag->to_string() : "unclassified"},
                         {"certificate", nlohmann::ordered_json::parse(certificate_json(entry.certificate))}});
  }
  out["survivors"] = survivors;
  return out.dump(2);
}

std::string report_table(const GapReport& report) {
  std::ostringstream out;
  std::size_t width = std::string("Description").size();
  for (const auto& entry : report.survivors) width = std::max(width, describe(entry.tag).size());
  const int column = static_cast<int>(width + 2);
  out << std::left << std::setw(10) << "Vertices" << std::setw(11) << "Bipartite" << std::setw(column)
      << "Description" << "graph6\n";
  for (const auto& entry : report.survivors) {
    out << std::left << std::setw(10) << entry.n << std::setw(11) << (entry.bipartite ? "yes" : "")
        << std::setw(column) << describe(entry.tag) << entry.graph6 << '\n';
  }
  out << '\n' << std::left << std::setw(10) << "n" << std::setw(10) << "graphs" << "survivors\n";
  for (const auto& [n, count] : report.graphs_per_order) {
    out << std::left << std::setw(10) << n << std::setw(10) << count
        << report.survivors_per_order.at(n) << '\n';
  }
  out << "total " << report.total_graphs() << " graphs, " << report.survivors.size()
      << " without eigenvalues in (-1,1)\n";
  return out.str();
}

}  // namespace specgap
