#pragma once

#include <string>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {

/// Label-invariant encoding of a graph.
///
/// `bytes` is the graph6 string of the canonically relabeled graph, so two
/// graphs are isomorphic iff their bytes agree. `relabeling[v]` is the
/// canonical position of vertex v.
struct CanonicalForm {
  std::string bytes;
  Permutation relabeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes == b.bytes;
  }
};

/// Canonical form together with the automorphisms met during the search.
/// The automorphisms generate the full automorphism group.
struct CanonicalSearch {
  CanonicalForm form;
  std::vector<Permutation> generators;
  long leaves = 0;
};

/// Individualisation-refinement search for the lexicographically smallest
/// relabeled adjacency matrix (rows compared as 64-bit words), with orbit
/// pruning and backjumping on discovered automorphisms.
CanonicalSearch canonical_search(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// Orbits of the group generated by `generators` on {0..n-1}; orbit[v] is
/// the smallest vertex of v's orbit.
std::vector<int> orbits(const std::vector<Permutation>& generators, int n);

}  // namespace specgap
