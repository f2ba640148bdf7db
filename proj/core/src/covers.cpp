#include "specgap/covers.hpp"

#include <set>
#include <stdexcept>

#include "specgap/canon.hpp"

namespace specgap {

namespace {

constexpr int kFullListingLimit = 32;

// Vertices in BFS order, component by component, so that each vertex after
// the first of its component has an already-placed neighbour.
std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  Row placed = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (placed & bit(s)) continue;
    placed |= bit(s);
    const std::size_t start = order.size();
    order.push_back(s);
    for (std::size_t i = start; i < order.size(); ++i) {
      for_each_bit(g.row(order[i]) & ~placed, [&](int u) {
        placed |= bit(u);
        order.push_back(u);
      });
    }
  }
  return order;
}

class AutomorphismLister {
 public:
  explicit AutomorphismLister(const Graph& g) : g_(g), order_(bfs_order(g)) {
    image_.assign(static_cast<std::size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v) same_degree_[v] = 0;
    for (int v = 0; v < g.order(); ++v) {
      for (int u = 0; u < g.order(); ++u) {
        if (g.degree(u) == g.degree(v)) same_degree_[v] |= bit(u);
      }
    }
  }

  std::vector<Permutation> run() {
    extend(0, 0);
    return std::move(found_);
  }

 private:
  void extend(std::size_t depth, Row used) {
    if (depth == order_.size()) {
      found_.push_back(image_);
      return;
    }
    const int v = order_[depth];
    Row candidates = same_degree_[v] & ~used;
    for (std::size_t i = 0; i < depth && candidates; ++i) {
      const int w = order_[i];
      if (g_.has_edge(v, w)) {
        candidates &= g_.row(image_[w]);
      } else {
        candidates &= ~g_.row(image_[w]);
      }
    }
    for_each_bit(candidates, [&](int u) {
      image_[v] = u;
      extend(depth + 1, used | bit(u));
    });
    image_[v] = -1;
  }

  const Graph& g_;
  std::vector<int> order_;
  Permutation image_;
  Row same_degree_[kMaxVertices] = {};
  std::vector<Permutation> found_;
};

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a∘b)(v) = a(b(v))
  Permutation out(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) out[v] = a[b[v]];
  return out;
}

class InvolutionSearch {
 public:
  InvolutionSearch(const Graph& g, const Bipartition& parts) : g_(g) {
    const int n = g.order();
    sigma_.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      domain_[v] = parts.classes[1 - parts.colour(v)] & ~g.row(v);
    }
  }

  std::vector<Involution> run() {
    search();
    return std::move(found_);
  }

 private:
  void search() {
    const int n = g_.order();
    int pick = -1;
    int best = kMaxVertices + 1;
    for (int v = 0; v < n; ++v) {
      if (sigma_[v] != -1) continue;
      const int size = popcount(domain_[v]);
      if (size < best) {
        best = size;
        pick = v;
      }
    }
    if (pick == -1) {
      if (is_automorphism(g_, sigma_)) found_.push_back(make_involution(g_, sigma_));
      return;
    }
    if (best == 0) return;
    for_each_bit(domain_[pick], [&](int u) {
      Row saved[kMaxVertices];
      std::copy(domain_, domain_ + n, saved);
      if (assign(pick, u)) search();
      std::copy(saved, saved + n, domain_);
      sigma_[pick] = -1;
      sigma_[u] = -1;
    });
  }

  // Pairs v with u and narrows the domains of their neighbours; false when
  // some domain becomes empty.
  bool assign(int v, int u) {
    if (sigma_[u] != -1 || !(domain_[u] & bit(v))) return false;
    sigma_[v] = u;
    sigma_[u] = v;
    domain_[v] = bit(u);
    domain_[u] = bit(v);
    const Row taken = bit(u) | bit(v);
    for (int x = 0; x < g_.order(); ++x) {
      if (x != u && x != v) domain_[x] &= ~taken;
    }
    for_each_bit(g_.row(v), [&](int x) { domain_[x] &= g_.row(u); });
    for_each_bit(g_.row(u), [&](int x) { domain_[x] &= g_.row(v); });
    for (int x = 0; x < g_.order(); ++x) {
      if (sigma_[x] == -1 && domain_[x] == 0) return false;
      if (sigma_[x] != -1 && !(domain_[x] & bit(sigma_[x]))) return false;
    }
    return true;
  }

  const Graph& g_;
  Permutation sigma_;
  Row domain_[kMaxVertices] = {};
  std::vector<Involution> found_;
};

}  // namespace

std::vector<Permutation> automorphisms(const Graph& g) {
  if (g.order() > kFullListingLimit) return canonical_search(g).generators;
  auto all = AutomorphismLister(g).run();
  // The identity maps the first BFS vertex to itself and comes first only
  // when it is the smallest candidate; put it in front explicitly.
  Permutation identity(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) identity[v] = v;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == identity) {
      std::swap(all[0], all[i]);
      break;
    }
  }
  return all;
}

std::size_t group_order(const std::vector<Permutation>& generators, int n) {
  Permutation identity(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) identity[v] = v;
  std::set<Permutation> seen{identity};
  std::vector<Permutation> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& gen : generators) {
        auto q = compose(gen, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

Involution make_involution(const Graph& g, const Permutation& perm) {
  if (!is_permutation(perm, g.order())) {
    throw std::invalid_argument("not a permutation of the graph's vertices");
  }
  for (int v = 0; v < g.order(); ++v) {
    if (perm[perm[v]] != v) throw std::invalid_argument("permutation is not an involution");
  }
  Involution out;
  out.perm = perm;
  out.automorphism = is_automorphism(g, perm);
  out.fixed_point_free = true;
  out.no_vertex_adjacent_to_image = true;
  for (int v = 0; v < g.order(); ++v) {
    if (perm[v] == v) out.fixed_point_free = false;
    if (g.has_edge(v, perm[v])) out.no_vertex_adjacent_to_image = false;
  }
  const auto parts = bipartition(g);
  out.swaps_colour_classes = false;
  if (parts && is_connected(g)) {
    out.swaps_colour_classes = true;
    for (int v = 0; v < g.order(); ++v) {
      if (parts->colour(perm[v]) == parts->colour(v)) out.swaps_colour_classes = false;
    }
  }
  return out;
}

std::vector<Involution> kronecker_involutions(const Graph& g) {
  const auto parts = bipartition(g);
  if (!parts) throw std::invalid_argument("graph is not bipartite");
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
  return InvolutionSearch(g, *parts).run();
}

Graph quotient(const Graph& g, const Involution& sigma) {
  if (static_cast<int>(sigma.perm.size()) != g.order()) {
    throw std::invalid_argument("involution size does not match the graph");
  }
  // Recheck rather than trust the caller's flags.
  const Involution checked = make_involution(g, sigma.perm);
  if (!checked.automorphism) throw std::invalid_argument("involution is not an automorphism");
  if (!checked.fixed_point_free) throw std::invalid_argument("involution has a fixed point");
  if (!checked.swaps_colour_classes) {
    throw std::invalid_argument("involution does not exchange the colour classes");
  }
  if (!checked.no_vertex_adjacent_to_image) {
    throw std::invalid_argument("some vertex is adjacent to its image");
  }
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (index[v] == -1) index[v] = index[sigma.perm[v]] = next++;
  }
  Graph out(next);
  for (const auto& [u, v] : g.edges()) {
    if (!out.has_edge(index[u], index[v])) out.add_edge(index[u], index[v]);
  }
  return out;
}

std::vector<Graph> preimages(const Graph& g) {
  if (!is_regular(g, 3)) throw std::invalid_argument("graph is not cubic");
  std::vector<Graph> out;
  std::set<std::string> forms;
  for (const auto& sigma : kronecker_involutions(g)) {
    Graph h = quotient(g, sigma);
    if (forms.insert(canonical_form(h).bytes).second) out.push_back(std::move(h));
  }
  return out;
}

std::string to_cycle_notation(const Permutation& perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t v = 0; v < perm.size(); ++v) {
    if (done[v] || perm[v] == static_cast<int>(v)) continue;
    out += '(';
    std::size_t x = v;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace specgap
