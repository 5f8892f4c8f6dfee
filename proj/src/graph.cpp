#include "chordspec/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace chordspec {

namespace {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) {
    if (v < 0 || v >= Graph::kMaxOrder) throw std::out_of_range("vertex outside [0, 64)");
    bits_ |= bit(v);
  }
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  VertexSet s;
  for (Vertex v = first; v < last; ++v) s = s.with(v);
  return s;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g(static_cast<int>(rows.size()));
  g.adj_.assign(rows.begin(), rows.end());
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

VertexSet Graph::vertices() const { return VertexSet::range(0, order()); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (std::uint64_t b = adj_[u] & ~((bit(u) << 1) - 1); b != 0; b &= b - 1) {
      out.emplace_back(u, std::countr_zero(b));
    }
  }
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(order()) + ")");
  }
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] |= bit(v);
  g.adj_[v] |= bit(u);
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.adj_[u] &= ~bit(v);
  g.adj_[v] &= ~bit(u);
  return g;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw std::invalid_argument("permutation size mismatch");
  Graph g(order());
  for (Vertex u = 0; u < order(); ++u) {
    for (std::uint64_t b = adj_[u]; b != 0; b &= b - 1) {
      g.adj_[perm[u]] |= bit(perm[std::countr_zero(b)]);
    }
  }
  return g;
}

Graph Graph::induced(VertexSet s) const {
  auto keep = s.members();
  std::vector<int> index(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    index[keep[i]] = static_cast<int>(i);
  }
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::uint64_t b = adj_[keep[i]] & s.bits(); b != 0; b &= b - 1) {
      g.adj_[i] |= bit(index[std::countr_zero(b)]);
    }
  }
  return g;
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) { return g.with_edge(u, v); }

int edges_within(const Graph& g, VertexSet s) {
  int twice = 0;
  for (Vertex v : s.members()) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

int edges_between(const Graph& g, VertexSet s, VertexSet t) {
  if (!(s & t).empty()) throw std::invalid_argument("edges_between requires disjoint sets");
  int count = 0;
  for (Vertex v : s.members()) count += (g.neighbors(v) & t).size();
  return count;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  check_order(n1 + g2.order());
  std::vector<std::uint64_t> rows(g1.rows().begin(), g1.rows().end());
  for (auto row : g2.rows()) rows.push_back(row << n1);
  return Graph::from_rows(rows);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  check_order(n);
  const std::uint64_t left = VertexSet::range(0, n1).bits();
  const std::uint64_t right = VertexSet::range(n1, n).bits();
  std::vector<std::uint64_t> rows;
  rows.reserve(n);
  for (auto row : g1.rows()) rows.push_back(row | right);
  for (auto row : g2.rows()) rows.push_back((row << n1) | left);
  return Graph::from_rows(rows);
}

Graph add_pendant(const Graph& g, Vertex a) {
  if (a < 0 || a >= g.order()) throw std::out_of_range("pendant anchor outside the graph");
  const int n = g.order();
  check_order(n + 1);
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  rows[a] |= bit(n);
  rows.push_back(bit(a));
  return Graph::from_rows(rows);
}

Graph identify(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
  if (u < 0 || u >= g1.order()) throw std::out_of_range("identify: u outside G1");
  if (v < 0 || v >= g2.order()) throw std::out_of_range("identify: v outside G2");
  const int n1 = g1.order();
  const int n = n1 + g2.order() - 1;
  check_order(n);
  std::vector<Vertex> relabel(g2.order());
  for (Vertex w = 0, next = n1; w < g2.order(); ++w) relabel[w] = (w == v) ? u : next++;

  std::vector<Edge> edges = g1.edges();
  for (auto [a, b] : g2.edges()) edges.emplace_back(relabel[a], relabel[b]);
  return Graph::from_edges(n, edges);
}

Graph complete(int n) {
  check_order(n);
  std::vector<std::uint64_t> rows(n);
  const std::uint64_t all = VertexSet::range(0, n).bits();
  for (Vertex v = 0; v < n; ++v) rows[v] = all & ~bit(v);
  return Graph::from_rows(rows);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t unseen = g.vertices().bits();
  while (unseen != 0) {
    std::uint64_t comp = unseen & -unseen;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= g.rows()[std::countr_zero(b)];
      frontier = next & ~comp;
      comp |= next;
    }
    out.emplace_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("connectivity of the empty graph is undefined");
  return components(g).size() == 1;
}

}  // namespace chordspec
