#include "specgap/decomp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "specgap/canon.hpp"

namespace specgap {

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (int u = 0; u < g.order(); ++u) {
    for_each_bit(g.row(u) >> u >> 1, [&](int dv) {
      const int v = u + 1 + dv;
      const Row common = g.row(u) & g.row(v);
      for_each_bit(common >> v >> 1, [&](int dw) { out.push_back({u, v, v + 1 + dw}); });
    });
  }
  return out;
}

bool is_triangle_decomposition(const Graph& host, const TriangleDecomposition& d) {
  Graph covered(host.order());
  for (const auto& t : d.triangles) {
    for (int i = 0; i < 3; ++i) {
      const int a = t[i];
      const int b = t[(i + 1) % 3];
      if (a < 0 || b < 0 || a >= host.order() || b >= host.order() || a == b) return false;
      if (!host.has_edge(a, b) || covered.has_edge(a, b)) return false;
      covered.add_edge(a, b);
    }
  }
  return covered == host;
}

namespace {

// Knuth's dancing links over an exact-cover matrix: columns are host edges,
// rows are triangles.
class DancingLinks {
 public:
  DancingLinks(int columns, const std::vector<std::array<int, 3>>& rows) {
    const std::size_t total = 1 + static_cast<std::size_t>(columns) + 3 * rows.size();
    left_.resize(total);
    right_.resize(total);
    up_.resize(total);
    down_.resize(total);
    column_.resize(total);
    row_.resize(total, -1);
    size_.assign(static_cast<std::size_t>(columns) + 1, 0);

    for (int c = 0; c <= columns; ++c) {
      left_[c] = c == 0 ? columns : c - 1;
      right_[c] = c == columns ? 0 : c + 1;
      up_[c] = down_[c] = c;
      column_[c] = c;
    }
    int node = columns + 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int first = node;
      for (int k = 0; k < 3; ++k, ++node) {
        const int c = rows[r][k] + 1;
        column_[node] = c;
        row_[node] = static_cast<int>(r);
        up_[node] = up_[c];
        down_[node] = c;
        down_[up_[c]] = node;
        up_[c] = node;
        ++size_[c];
        left_[node] = k == 0 ? first + 2 : node - 1;
        right_[node] = k == 2 ? first : node + 1;
      }
    }
  }

  template <typename Visit>
  void solve(Visit&& visit) {
    stopped_ = false;
    search(visit);
  }

 private:
  void cover(int c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (int i = down_[c]; i != c; i = down_[i]) {
      for (int j = right_[i]; j != i; j = right_[j]) {
        down_[up_[j]] = down_[j];
        up_[down_[j]] = up_[j];
        --size_[column_[j]];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[c]; i != c; i = up_[i]) {
      for (int j = left_[i]; j != i; j = left_[j]) {
        ++size_[column_[j]];
        down_[up_[j]] = j;
        up_[down_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  template <typename Visit>
  void search(Visit& visit) {
    if (stopped_) return;
    if (right_[0] == 0) {
      if (!visit(chosen_)) stopped_ = true;
      return;
    }
    int best = right_[0];
    for (int c = right_[best]; c != 0; c = right_[c]) {
      if (size_[c] < size_[best]) best = c;
    }
    if (size_[best] == 0) return;
    cover(best);
    for (int r = down_[best]; r != best && !stopped_; r = down_[r]) {
      chosen_.push_back(row_[r]);
      for (int j = right_[r]; j != r; j = right_[j]) cover(column_[j]);
      search(visit);
      for (int j = left_[r]; j != r; j = left_[j]) uncover(column_[j]);
      chosen_.pop_back();
    }
    uncover(best);
  }

  std::vector<int> left_, right_, up_, down_, column_, row_, size_;
  std::vector<int> chosen_;
  bool stopped_ = false;
};

std::vector<Triangle> normalised(std::vector<Triangle> tris) {
  for (auto& t : tris) std::sort(t.begin(), t.end());
  std::sort(tris.begin(), tris.end());
  return tris;
}

std::vector<Triangle> image(const std::vector<Triangle>& tris, const Permutation& perm) {
  std::vector<Triangle> out;
  out.reserve(tris.size());
  for (const auto& t : tris) out.push_back({perm[t[0]], perm[t[1]], perm[t[2]]});
  return normalised(std::move(out));
}

}  // namespace

std::vector<TriangleDecomposition> triangle_decompositions(const Graph& host,
                                                           const DecompositionOptions& options) {
  std::vector<TriangleDecomposition> out;
  const auto edges = host.edges();
  if (edges.empty() || edges.size() % 3 != 0) return out;

  std::map<Edge, int> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = static_cast<int>(i);
  const auto tris = triangles(host);
  std::vector<std::array<int, 3>> rows;
  rows.reserve(tris.size());
  for (const auto& t : tris) {
    rows.push_back({edge_index.at({t[0], t[1]}), edge_index.at({t[0], t[2]}),
                    edge_index.at({t[1], t[2]})});
  }

  std::vector<Permutation> generators;
  if (options.up_to_automorphism) generators = canonical_search(host).generators;
  std::set<std::vector<Triangle>> seen;

  DancingLinks dlx(static_cast<int>(edges.size()), rows);
  dlx.solve([&](const std::vector<int>& chosen) {
    std::vector<Triangle> picked;
    picked.reserve(chosen.size());
    for (int r : chosen) picked.push_back(tris[r]);
    picked = normalised(std::move(picked));
    if (options.up_to_automorphism) {
      if (seen.contains(picked)) return true;
      std::deque<std::vector<Triangle>> queue{picked};
      seen.insert(picked);
      while (!queue.empty()) {
        const auto current = std::move(queue.front());
        queue.pop_front();
        for (const auto& gen : generators) {
          auto next = image(current, gen);
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
      }
    }
    out.push_back({std::move(picked)});
    return !options.limit || out.size() < *options.limit;
  });
  return out;
}

Geometry decomposition_to_geometry(const Graph& host, const TriangleDecomposition& d) {
  if (!is_triangle_decomposition(host, d)) {
    throw std::invalid_argument("not a triangle decomposition of the host");
  }
  Geometry geom{host.order(), d.triangles};
  // Edge-disjoint triangles cannot share two points.
  validate_geometry(geom, false);
  return geom;
}

std::vector<Graph> girth6_pipeline(const Graph& host) {
  if (!is_regular(host, 6)) throw std::invalid_argument("girth-6 pipeline needs a 6-regular host");
  std::vector<Graph> out;
  std::set<std::string> forms;
  DecompositionOptions options;
  options.up_to_automorphism = true;
  for (const auto& d : triangle_decompositions(host, options)) {
    Graph g = incidence_graph(decomposition_to_geometry(host, d));
    if (forms.insert(canonical_form(g).bytes).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace specgap
