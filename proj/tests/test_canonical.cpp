#include <doctest.h>

#include <random>

#include "chordspec/canonical.hpp"
#include "chordspec/families.hpp"
#include "oracles.hpp"

using namespace chordspec;

namespace {

Graph cartesian_square_k4() {
  std::vector<Edge> edges;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      if (a / 4 == b / 4 || a % 4 == b % 4) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(16, edges);
}

// Cayley graph on Z4 x Z4 with connection set +-(1,0), +-(0,1), +-(1,1).
Graph shrikhande() {
  std::vector<Edge> edges;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      const int dx = ((b / 4 - a / 4) % 4 + 4) % 4;
      const int dy = ((b % 4 - a % 4) % 4 + 4) % 4;
      const bool step = (dx == 0 && (dy == 1 || dy == 3)) || (dy == 0 && (dx == 1 || dx == 3)) ||
                        (dx == dy && (dx == 1 || dx == 3));
      if (step) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(16, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  return Graph::from_edges(10, edges);
}

Graph hypercube(int d) {
  std::vector<Edge> edges;
  for (int a = 0; a < (1 << d); ++a) {
    for (int k = 0; k < d; ++k) {
      const int b = a ^ (1 << k);
      if (a < b) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(1 << d, edges);
}

bool is_automorphism(const Graph& g, const std::vector<Vertex>& map) {
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(map[u], map[v])) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("invariance under random relabeling") {
  std::mt19937_64 rng(17);
  std::vector<Graph> samples{petersen(), shrikhande(), cartesian_square_k4(), hypercube(4), hypercube(5),
                             complete_bipartite(3, 4), cycle(12), Graph(9), complete(10)};
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 30);
    samples.push_back(oracle::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100));
  }
  for (const auto& g : samples) {
    const GraphId id = canonical_form(g);
    for (int k = 0; k < 5; ++k) {
      const Graph h = g.permuted(oracle::random_permutation(rng, g.order()));
      CHECK(canonical_form(h) == id);
      CHECK(isomorphic(g, h));
    }
  }
}

TEST_CASE("canonical graph is a relabeling") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 12), 0.5);
    const Graph c = canonical_graph(g);
    if (g.order() <= 8) CHECK(oracle::min_code(c) == oracle::min_code(g));
    CHECK(c.size() == g.size());
    CHECK(canonical_graph(c) == c);
  }
}

TEST_CASE("distinguishes cospectral regular graphs") {
  CHECK_FALSE(isomorphic(shrikhande(), cartesian_square_k4()));
  CHECK_FALSE(isomorphic(cycle(6), disjoint_union(complete(3), complete(3))));
  const Graph star = complete_bipartite(1, 4);
  const Graph square_plus_point = disjoint_union(cycle(4), Graph(1));
  CHECK_FALSE(isomorphic(star, square_plus_point));
}

TEST_CASE("agrees with exhaustive canonical codes") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const Graph h = oracle::random_graph(rng, n, 0.5);
    CHECK(isomorphic(g, h) == (oracle::min_code(g) == oracle::min_code(h)));
  }
}

TEST_CASE("recorded automorphisms are automorphisms") {
  for (const auto& g : {petersen(), shrikhande(), hypercube(4), complete_bipartite(2, 5), cycle(9)}) {
    const auto lab = canonical_labeling(g);
    CHECK_FALSE(lab.automorphisms.empty());
    for (const auto& aut : lab.automorphisms) CHECK(is_automorphism(g, aut));
  }
}

TEST_CASE("vertex orbits") {
  const Graph p = path(4);
  CHECK(same_orbit(p, 0, 3));
  CHECK(same_orbit(p, 1, 2));
  CHECK_FALSE(same_orbit(p, 0, 1));
  const Graph k = complete_bipartite(2, 4);
  CHECK(same_orbit(k, 0, 1));
  CHECK(same_orbit(k, 2, 5));
  CHECK_FALSE(same_orbit(k, 0, 2));
  CHECK(same_orbit(petersen(), 0, 7));
}

TEST_CASE("initial cells constrain the labeling") {
  const Graph p = path(3);
  const std::vector<VertexSet> end{VertexSet{0}};
  const std::vector<VertexSet> mid{VertexSet{1}};
  CHECK(canonical_labeling(p, end).certificate != canonical_labeling(p, mid).certificate);
  const std::vector<VertexSet> bad{VertexSet{0, 1}, VertexSet{1}};
  CHECK_THROWS_AS(canonical_labeling(p, bad), std::invalid_argument);
}

}
