#include "specgap/graph.hpp"

#include <algorithm>
#include <deque>

namespace specgap {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside [0, 64]");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::size() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

Row Graph::vertex_mask() const noexcept {
  return n_ == kMaxVertices ? ~Row{0} : (Row{1} << n_) - 1;
}

int Graph::degree(int v) const noexcept { return popcount(adj_[v]); }

std::vector<int> Graph::neighbours(int v) const {
  std::vector<int> out;
  for_each_bit(adj_[v], [&](int u) { out.push_back(u); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] >> u, [&](int d) { out.emplace_back(u, u + d); });
  }
  return out;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (!is_permutation(perm, n_)) {
    throw std::invalid_argument("not a permutation of the vertex set");
  }
  Graph out(n_);
  for (int v = 0; v < n_; ++v) {
    Row r = 0;
    for_each_bit(adj_[v], [&](int u) { r |= bit(perm[u]); });
    out.adj_[perm[v]] = r;
  }
  return out;
}

Graph Graph::induced(Row mask) const {
  mask &= vertex_mask();
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for_each_bit(mask, [&](int v) { index[v] = k++; });
  Graph out(k);
  for_each_bit(mask, [&](int v) {
    for_each_bit(adj_[v] & mask, [&](int u) { out.adj_[index[v]] |= bit(index[u]); });
  });
  return out;
}

// --- graph6 -----------------------------------------------------------------

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw Graph6Error("byte outside the range 63..126", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t start = 0;
  if (text.starts_with(kHeader)) start = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  std::size_t pos = start;
  if (pos >= text.size()) throw Graph6Error("missing order header", pos);

  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw Graph6Error("order exceeds 64", pos);
    }
    if (pos + 4 > text.size()) throw Graph6Error("truncated order header", pos);
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, pos + i);
    if (n < 63) throw Graph6Error("non-minimal order header", pos);
    pos += 4;
  } else {
    n = sextet(text, pos);
    pos += 1;
  }
  if (n > kMaxVertices) throw Graph6Error("order " + std::to_string(n) + " exceeds 64", start);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (bits + 5) / 6;
  if (text.size() - pos != nbytes) {
    throw Graph6Error("expected " + std::to_string(nbytes) + " edge bytes, found " +
                          std::to_string(text.size() - pos),
                      std::min(text.size(), pos + nbytes));
  }

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + nbytes - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((sextet(text, last) & pad_mask) != 0) {
      throw Graph6Error("nonzero padding bits", last);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// --- structure ----------------------------------------------------------------

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[source] = 0;
  Row frontier = bit(source);
  Row seen = frontier;
  for (int d = 1; frontier != 0; ++d) {
    Row next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.row(v); });
    next &= ~seen;
    for_each_bit(next, [&](int v) { dist[v] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (2 * dist[v] + 1 >= best) break;
      for_each_bit(g.row(v), [&](int u) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      });
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

std::vector<Row> components(const Graph& g) {
  std::vector<Row> out;
  Row unseen = g.vertex_mask();
  while (unseen != 0) {
    const int s = __builtin_ctzll(unseen);
    Row comp = bit(s);
    Row frontier = comp;
    while (frontier != 0) {
      Row next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.row(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition part;
  for (Row comp : components(g)) {
    const int s = __builtin_ctzll(comp);
    Row side[2] = {bit(s), 0};
    Row frontier = side[0];
    int c = 0;
    while (frontier != 0) {
      Row next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.row(v); });
      if (next & side[c]) return std::nullopt;
      c ^= 1;
      frontier = next & ~side[c];
      side[c] |= next;
    }
    if (side[0] & side[1]) return std::nullopt;
    part.classes[0] |= side[0];
    part.classes[1] |= side[1];
  }
  return part;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<int> degrees(const Graph& g) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  return out;
}

bool is_regular(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

bool is_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  Row seen = 0;
  for (int x : perm) {
    if (x < 0 || x >= n || (seen & bit(x))) return false;
    seen |= bit(x);
  }
  return true;
}

bool is_automorphism(const Graph& g, std::span<const int> perm) {
  if (!is_permutation(perm, g.order())) return false;
  for (int v = 0; v < g.order(); ++v) {
    Row image = 0;
    for_each_bit(g.row(v), [&](int u) { image |= bit(perm[u]); });
    if (image != g.row(perm[v])) return false;
  }
  return true;
}

}  // namespace specgap
