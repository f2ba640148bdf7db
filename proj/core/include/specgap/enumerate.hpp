#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specgap/families.hpp"
#include "specgap/graph.hpp"
#include "specgap/spectra.hpp"

namespace specgap {

struct CubicFilter {
  bool bipartite_only = false;
  int min_girth = 0;
};

/// Connected cubic graphs on n vertices, one per isomorphism class, in
/// canonical labeling and delivered in generation order.
///
/// Generation runs over all simple cubic graphs, connected or not. Roots are
/// disjoint unions of irreducible graphs: K4, rings of diamonds, and diamond
/// chains on the theta and dumbbell multigraphs. A step inserts an edge
/// between the subdivision vertices of two distinct edges; a child is kept
/// only when the inserted edge lies in the automorphism orbit of its
/// canonical reducible edge, and insertions are taken once per orbit of the
/// parent's automorphism group.
/// Needs even n with 4 <= n <= 20.
void for_each_cubic_graph(int n, const CubicFilter& filter,
                          const std::function<void(const Graph&)>& visit);

/// As for_each_cubic_graph, split over `jobs` threads and sorted by graph6.
std::vector<Graph> cubic_graphs(int n, const CubicFilter& filter = {}, int jobs = 1);

struct GapEntry {
  int n = 0;
  std::string graph6;
  bool bipartite = false;
  std::optional<FamilyTag> tag;  ///< nullopt means unclassified
  GapCertificate certificate;
};

struct GapReport {
  int n_max = 0;
  std::map<int, std::size_t> graphs_per_order;
  std::map<int, std::size_t> survivors_per_order;
  std::vector<GapEntry> survivors;

  std::size_t total_graphs() const;
};

/// Certifies every connected cubic graph with 4 <= n <= n_max and tags the
/// survivors against KS(k), GM(k) and the sporadic registry.
GapReport classify_gap(int n_max, int jobs = 1);

/// Survivor tag for a gap graph, or nullopt when it matches nothing known.
std::optional<FamilyTag> identify(const Graph& g);

std::string report_json(const GapReport& report);
/// Columns: vertices, bipartite mark, description, graph6.
std::string report_table(const GapReport& report);

}  // namespace specgap
