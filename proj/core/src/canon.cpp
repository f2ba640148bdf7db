#include "specgap/canon.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace specgap {
namespace {

using Cells = std::vector<Row>;
using LeafRows = std::array<Row, kMaxVertices>;

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<int> parent;
};

// Splits every cell by the number of neighbours each vertex has in the
// splitter, fragments ordered by increasing count. The splitter queue holds
// vertex sets rather than cell indices so the result is label-invariant.
void refine(const Graph& g, Cells& cells, std::deque<Row> queue) {
  std::vector<std::pair<int, Row>> buckets;
  while (!queue.empty()) {
    const Row splitter = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Row cell = cells[i];
      if ((cell & (cell - 1)) == 0) continue;
      buckets.clear();
      for_each_bit(cell, [&](int v) {
        const int c = popcount(g.row(v) & splitter);
        auto it = std::find_if(buckets.begin(), buckets.end(),
                               [c](const auto& b) { return b.first == c; });
        if (it == buckets.end()) {
          buckets.emplace_back(c, bit(v));
        } else {
          it->second |= bit(v);
        }
      });
      if (buckets.size() == 1) continue;
      std::sort(buckets.begin(), buckets.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      cells[i] = buckets[0].second;
      for (std::size_t k = 1; k < buckets.size(); ++k) {
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i + k), buckets[k].second);
      }
      for (const auto& b : buckets) queue.push_back(b.second);
      i += buckets.size() - 1;
    }
  }
}

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalSearch run() {
    CanonicalSearch result;
    if (n_ == 0) {
      result.form.bytes = to_graph6(g_);
      return result;
    }
    Cells cells{g_.vertex_mask()};
    refine(g_, cells, {g_.vertex_mask()});
    search(cells, 0);

    result.form.relabeling = best_lab_;
    Graph canon(n_);
    for (int v = 0; v < n_; ++v) {
      for_each_bit(best_rows_[v] >> v, [&](int d) { canon.add_edge(v, v + d); });
    }
    result.form.bytes = to_graph6(canon);
    result.generators = std::move(autos_);
    result.leaves = leaves_;
    return result;
  }

 private:
  // Returns the depth of the node that should continue with its next child.
  int search(const Cells& cells, int depth) {
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, depth);

    std::size_t target = 0;
    while ((cells[target] & (cells[target] - 1)) == 0) ++target;
    const Row cell = cells[target];

    std::vector<int> explored;
    std::size_t autos_seen = static_cast<std::size_t>(-1);
    std::vector<int> orbit_of;

    Row remaining = cell;
    while (remaining != 0) {
      const int v = __builtin_ctzll(remaining);
      remaining &= remaining - 1;

      if (!explored.empty()) {
        if (autos_seen != autos_.size()) {
          orbit_of = stabiliser_orbits(depth);
          autos_seen = autos_.size();
        }
        const bool equivalent = std::any_of(explored.begin(), explored.end(),
                                            [&](int u) { return orbit_of[u] == orbit_of[v]; });
        if (equivalent) continue;
      }
      explored.push_back(v);

      Cells child = cells;
      child[target] = cell & ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
      refine(g_, child, {bit(v)});

      path_.push_back(v);
      const int resume = search(child, depth + 1);
      path_.pop_back();
      if (resume < depth) return resume;
    }
    return depth - 1;
  }

  // Orbits of the automorphisms found so far that fix the current path.
  std::vector<int> stabiliser_orbits(int depth) {
    UnionFind uf(n_);
    for (const auto& a : autos_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = a[path_[i]] == path_[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, a[v]);
    }
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[v] = uf.find(v);
    return out;
  }

  int leaf(const Cells& cells, int depth) {
    ++leaves_;
    Permutation lab(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) lab[__builtin_ctzll(cells[i])] = i;
    LeafRows rows{};
    for (int v = 0; v < n_; ++v) {
      Row r = 0;
      for_each_bit(g_.row(v), [&](int u) { r |= bit(lab[u]); });
      rows[lab[v]] = r;
    }

    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_rows_ = best_rows_ = rows;
      first_path_ = best_path_ = path_;
      return depth - 1;
    }

    const auto equal_rows = [&](const LeafRows& other) {
      return std::equal(rows.begin(), rows.begin() + n_, other.begin());
    };
    if (equal_rows(first_rows_)) return record_automorphism(first_lab_, lab, first_path_, depth);
    if (equal_rows(best_rows_)) return record_automorphism(best_lab_, lab, best_path_, depth);

    if (std::lexicographical_compare(rows.begin(), rows.begin() + n_, best_rows_.begin(),
                                     best_rows_.begin() + n_)) {
      best_lab_ = lab;
      best_rows_ = rows;
      best_path_ = path_;
    }
    return depth - 1;
  }

  // The leaves reached by `other_path` and the current path carry the same
  // relabeled graph, so gamma = lab^-1 . other_lab is an automorphism. When
  // it maps the other path onto the current one up to their divergence
  // point, the current subtree there is an image of an explored subtree.
  int record_automorphism(const Permutation& other_lab, const Permutation& lab,
                          const std::vector<int>& other_path, int depth) {
    Permutation inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inverse[lab[v]] = v;
    Permutation gamma(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) gamma[v] = inverse[other_lab[v]];
    autos_.push_back(gamma);

    std::size_t common = 0;
    while (common < path_.size() && common < other_path.size() &&
           path_[common] == other_path[common]) {
      ++common;
    }
    if (common < path_.size() && common < other_path.size() &&
        gamma[other_path[common]] == path_[common]) {
      return static_cast<int>(common);
    }
    return depth - 1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  Permutation first_lab_, best_lab_;
  LeafRows first_rows_{}, best_rows_{};
  std::vector<int> first_path_, best_path_;
  std::vector<Permutation> autos_;
  long leaves_ = 0;
};

}  // namespace

CanonicalSearch canonical_search(const Graph& g) { return Searcher(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_search(g).form; }

Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_form(g).bytes); }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  auto dg = degrees(g);
  auto dh = degrees(h);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g).bytes == canonical_form(h).bytes;
}

std::vector<int> orbits(const std::vector<Permutation>& generators, int n) {
  UnionFind uf(n);
  for (const auto& a : generators) {
    for (int v = 0; v < n; ++v) uf.unite(v, a[v]);
  }
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[v] = uf.find(v);
  return out;
}

}  // namespace specgap
