#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "chordspec/graph.hpp"

namespace chordspec {

/// Isomorphism-class identifier: the graph6 string of the canonical relabeling.
struct GraphId {
  std::string canon;

  friend auto operator<=>(const GraphId&, const GraphId&) = default;
};

struct CanonicalLabeling {
  /// order[p] is the vertex placed at canonical position p.
  std::vector<Vertex> order;
  /// Adjacency rows of the relabeled graph; row p belongs to order[p].
  std::vector<std::uint64_t> certificate;
  /// Automorphisms discovered during the search, as maps v -> image.
  /// They generate a subgroup of Aut(G) that may be proper.
  std::vector<std::vector<Vertex>> automorphisms;
};

/// Individualization-refinement search for the lexicographically least
/// certificate. `cells` is an ordered initial colouring; empty means the
/// unit partition. Relabelings that preserve the colouring produce the
/// same certificate.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexSet> cells = {});

Graph canonical_graph(const Graph& g);
GraphId canonical_form(const Graph& g);
bool isomorphic(const Graph& g, const Graph& h);

/// True iff some automorphism of g maps u to v.
bool same_orbit(const Graph& g, Vertex u, Vertex v);

}  // namespace chordspec

template <>
struct std::hash<chordspec::GraphId> {
  std::size_t operator()(const chordspec::GraphId& id) const noexcept {
    return std::hash<std::string>{}(id.canon);
  }
};
