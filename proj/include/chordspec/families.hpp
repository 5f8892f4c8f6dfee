#pragma once

#include "chordspec/graph.hpp"

namespace chordspec {

/// K_{s,t}: parts {0..s-1} and {s..s+t-1}.
Graph complete_bipartite(int s, int t);

/// F_k: hub 0, triangle i on {0, 2i-1, 2i}.
Graph friendship(int k);

/// F_k with a pendant vertex 2k+1 hanging from the hub.
Graph friendship_pendant(int k);

/// K_{2,a} with a vertex of its a-side identified with the hub of F_k.
///
/// Labels: 0,1 are the 2-side; 2 is the merged vertex; 3..a+1 the rest of
/// the a-side; a+2..a+2k+1 the friendship leaves (pairs form triangles).
Graph k2a_bullet_f(int a, int k);

/// K_{2,a} with a vertex of its 2-side identified with the hub of F_k.
///
/// Labels: 0 is the merged vertex; 1 the other 2-side vertex; 2..a+1 the
/// a-side; a+2..a+2k+1 the friendship leaves.
Graph k2a_star_f(int a, int k);

}  // namespace chordspec
