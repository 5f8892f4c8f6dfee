#include "chordspec/enumerate.hpp"

#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "chordspec/canonical.hpp"

namespace chordspec {

namespace {

void check_range(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration supports 1 <= n <= 10, got " + std::to_string(n));
  }
}

// (degree, sum of neighbour degrees), packed; any isomorphism invariant works.
std::uint64_t vertex_invariant(std::span<const std::uint64_t> rows, Vertex v) {
  std::uint64_t neighbour_degrees = 0;
  for (std::uint64_t b = rows[v]; b != 0; b &= b - 1) {
    neighbour_degrees += std::popcount(rows[std::countr_zero(b)]);
  }
  return (static_cast<std::uint64_t>(std::popcount(rows[v])) << 32) | neighbour_degrees;
}

bool orbit_via_generators(const CanonicalLabeling& lab, Vertex a, Vertex b) {
  const int n = static_cast<int>(lab.order.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& aut : lab.automorphisms) {
    for (int x = 0; x < n; ++x) parent[find(x)] = find(aut[x]);
  }
  return find(a) == find(b);
}

}  // namespace

std::vector<Graph> canonical_children(const Graph& parent) {
  const int k = parent.order();
  if (k + 1 > Graph::kMaxOrder) throw std::invalid_argument("canonical_children: order limit");
  const Vertex fresh = k;
  std::vector<std::uint64_t> rows(k + 1);
  std::array<std::uint64_t, Graph::kMaxOrder> inv{};
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Graph> out;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (Vertex x = 0; x < k; ++x) rows[x] = parent.rows()[x] | (((mask >> x) & 1U) << fresh);
    rows[fresh] = mask;

    std::uint64_t best = 0;
    for (Vertex x = 0; x <= k; ++x) {
      inv[x] = vertex_invariant(rows, x);
      best = std::max(best, inv[x]);
    }
    if (inv[fresh] != best) continue;

    const Graph child = Graph::from_rows(rows);
    const CanonicalLabeling lab = canonical_labeling(child);
    bool unique = true;
    for (Vertex x = 0; x < k && unique; ++x) unique = inv[x] != best;
    if (!unique) {
      // Deletion vertex: the maximal-invariant vertex placed last canonically.
      Vertex target = -1;
      for (int pos = k; pos >= 0 && target < 0; --pos) {
        if (inv[lab.order[pos]] == best) target = lab.order[pos];
      }
      if (target != fresh && !orbit_via_generators(lab, fresh, target) &&
          !same_orbit(child, fresh, target)) {
        continue;
      }
    }
    if (seen.insert(lab.certificate).second) out.push_back(child);
  }
  return out;
}

std::vector<Graph> subtree_roots(int n) {
  check_range(n);
  std::vector<Graph> level{Graph(1)};
  const int depth = std::min(n, kSubtreeDepth);
  for (int order = 1; order < depth; ++order) {
    std::vector<Graph> next;
    for (const auto& g : level) {
      auto kids = canonical_children(g);
      next.insert(next.end(), kids.begin(), kids.end());
    }
    level = std::move(next);
  }
  return level;
}

void for_each_in_subtree(const Graph& root, int n, bool connected_only,
                         const std::function<void(const Graph&)>& visit) {
  if (root.order() == n) {
    if (!connected_only || is_connected(root)) visit(root);
    return;
  }
  for (const auto& child : canonical_children(root)) for_each_in_subtree(child, n, connected_only, visit);
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
  for (const auto& root : subtree_roots(n)) for_each_in_subtree(root, n, connected_only, visit);
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
  std::vector<Graph> out;
  for_each_graph(n, connected_only, [&out](const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_classes(int n) {
  std::uint64_t count = 0;
  for_each_graph(n, false, [&count](const Graph&) { ++count; });
  return count;
}

}  // namespace chordspec
