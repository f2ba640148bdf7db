#pragma once

#include <string>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {

/// Every automorphism when n <= 32 (identity first); for larger graphs only
/// a generating set found by the canonical labeling search.
std::vector<Permutation> automorphisms(const Graph& g);

/// Order of the group generated by `generators` on {0..n-1}, by closure.
std::size_t group_order(const std::vector<Permutation>& generators, int n);

/// A vertex permutation of order at most 2, with flags computed against a
/// graph. Build through make_involution; the flags are never taken as input.
struct Involution {
  Permutation perm;
  bool automorphism = false;
  bool fixed_point_free = false;
  bool swaps_colour_classes = false;
  bool no_vertex_adjacent_to_image = false;

  /// All four conditions under which the orbits form a Kronecker quotient.
  bool valid() const {
    return automorphism && fixed_point_free && swaps_colour_classes && no_vertex_adjacent_to_image;
  }
};

/// Throws std::invalid_argument unless perm is a permutation of g's vertices
/// with perm∘perm = id.
Involution make_involution(const Graph& g, const Permutation& perm);

/// All colour-swapping, fixed-point-free involutive automorphisms with
/// v not adjacent to its image, found by backtracking over partial matchings.
/// Requires g connected and bipartite.
std::vector<Involution> kronecker_involutions(const Graph& g);

/// Orbits {v, sigma(v)} numbered by their smaller vertex in ascending order.
/// Throws unless sigma.valid().
Graph quotient(const Graph& g, const Involution& sigma);

/// Non-isomorphic non-bipartite H with bipartite_double(H) isomorphic to g.
/// Requires g connected, bipartite and cubic.
std::vector<Graph> preimages(const Graph& g);

/// "(0 5)(1 4)" style; fixed points omitted, "()" for the identity.
std::string to_cycle_notation(const Permutation& perm);

}  // namespace specgap
