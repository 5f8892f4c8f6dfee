#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chordspec/graph.hpp"

namespace chordspec {

/// A cycle listed once around (closing edge implied) plus a chord.
struct ChordedWitness {
  std::vector<Vertex> cycle;
  Edge chord;
};

/// Checks every witness invariant against g independently of the detector.
bool is_valid_witness(const Graph& g, const ChordedWitness& w);

using PathPair = std::pair<std::vector<Vertex>, std::vector<Vertex>>;

/// Two u-v paths with no common internal vertex, by unit-capacity
/// vertex-split max-flow. Each path runs from u to v inclusive.
std::optional<PathPair> two_disjoint_paths(const Graph& g, Vertex u, Vertex v);

/// Scans edges in lexicographic order; for the first edge uv whose removal
/// leaves two internally disjoint u-v paths, returns their union as the cycle
/// and uv as the chord.
std::optional<ChordedWitness> find_chorded_cycle(const Graph& g);

inline constexpr int kOracleMaxOrder = 12;
inline constexpr long long kOracleMaxExtensions = 10'000'000;

/// Enumerates simple cycles by DFS and looks for one whose vertex set
/// induces more edges than its length. Throws std::invalid_argument for
/// n > 12 and std::runtime_error past 10^7 path extensions.
bool has_chorded_cycle_oracle(const Graph& g);

/// e(G) < 2n - 3, or G has a chorded cycle.
bool posa_bound_holds(const Graph& g);

}  // namespace chordspec
