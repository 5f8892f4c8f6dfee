#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace chordspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Subset of {0, ..., 63} stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members);

  static VertexSet range(Vertex first, Vertex last);  // [first, last)

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }

  VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  std::vector<Vertex> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Values are immutable: every combinator returns a new graph. Adjacency is
/// kept as one neighbor bitmask per vertex, so neighbor sets iterate in
/// increasing order.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list; rejects loops and out-of-range ends.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);
  /// Wraps raw adjacency rows. Rows must already be symmetric and loop-free.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;

  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }
  VertexSet vertices() const;

  std::span<const std::uint64_t> rows() const { return adj_; }
  std::vector<Edge> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  /// Relabels so that vertex v becomes perm[v].
  Graph permuted(std::span<const Vertex> perm) const;
  Graph induced(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> adj_;
};

inline Graph empty(int n) { return Graph(n); }
Graph add_edge(const Graph& g, Vertex u, Vertex v);

int edges_within(const Graph& g, VertexSet s);
int edges_between(const Graph& g, VertexSet s, VertexSet t);

/// G1 keeps its labels, G2 is shifted by |G1|.
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
/// The pendant vertex gets label |G|.
Graph add_pendant(const Graph& g, Vertex a);
/// Merges u of G1 with v of G2. The merged vertex keeps label u; the other
/// vertices of G2 follow |G1| in increasing order with v removed.
Graph identify(const Graph& g1, Vertex u, const Graph& g2, Vertex v);

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

}  // namespace chordspec
