#include "chordspec/families.hpp"

#include <stdexcept>
#include <string>

namespace chordspec {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Triangles on (hub, first + 2i, first + 2i + 1) for i < k.
void add_triangles(std::vector<Edge>& edges, Vertex hub, Vertex first, int k) {
  for (int i = 0; i < k; ++i) {
    const Vertex x = first + 2 * i;
    edges.emplace_back(hub, x);
    edges.emplace_back(hub, x + 1);
    edges.emplace_back(x, x + 1);
  }
}

}  // namespace

Graph complete_bipartite(int s, int t) {
  require(s >= 0 && t >= 0, "complete_bipartite: negative part size");
  return join(empty(s), empty(t));
}

Graph friendship(int k) {
  require(k >= 1, "friendship: k must be at least 1");
  std::vector<Edge> edges;
  add_triangles(edges, 0, 1, k);
  return Graph::from_edges(2 * k + 1, edges);
}

Graph friendship_pendant(int k) { return add_pendant(friendship(k), 0); }

Graph k2a_bullet_f(int a, int k) {
  require(a >= 2 && k >= 1, "k2a_bullet_f: requires a >= 2 and k >= 1");
  const int n = a + 2 * k + 2;
  std::vector<Edge> edges;
  for (Vertex side = 0; side < 2; ++side) {
    for (Vertex w = 2; w < a + 2; ++w) edges.emplace_back(side, w);
  }
  add_triangles(edges, 2, a + 2, k);
  return Graph::from_edges(n, edges);
}

Graph k2a_star_f(int a, int k) {
  require(a >= 2 && k >= 1, "k2a_star_f: requires a >= 2 and k >= 1");
  const int n = a + 2 * k + 2;
  std::vector<Edge> edges;
  for (Vertex side = 0; side < 2; ++side) {
    for (Vertex w = 2; w < a + 2; ++w) edges.emplace_back(side, w);
  }
  add_triangles(edges, 0, a + 2, k);
  return Graph::from_edges(n, edges);
}

}  // namespace chordspec
