#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "chordspec/graph.hpp"

namespace chordspec {

inline constexpr int kMaxEnumerationOrder = 10;
inline constexpr int kSubtreeDepth = 5;

/// One-vertex extensions of `parent` accepted by canonical augmentation:
/// the new vertex (label |parent|) must lie in the orbit of the canonical
/// deletion vertex of the child, and children are deduplicated per parent.
/// Emitted in increasing order of the new vertex's neighbour mask.
std::vector<Graph> canonical_children(const Graph& parent);

/// Roots of the work units for order n: every class of order
/// min(n, kSubtreeDepth), in emission order.
std::vector<Graph> subtree_roots(int n);

/// Visits the order-n descendants of `root` depth-first.
void for_each_in_subtree(const Graph& root, int n, bool connected_only,
                         const std::function<void(const Graph&)>& visit);

/// Exactly one graph per isomorphism class of order n, 1 <= n <= 10.
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit);
std::vector<Graph> all_graphs(int n, bool connected_only = false);
std::uint64_t count_classes(int n);

/// Runs `visit` over every class of order n with up to `jobs` workers. Each
/// work unit gets its own accumulator from `make`; the returned vector is in
/// unit order, so merged results do not depend on scheduling.
template <typename Acc, typename Make, typename Visit>
std::vector<Acc> sweep_subtrees(int n, bool connected_only, int jobs, Make make, Visit visit) {
  const auto roots = subtree_roots(n);
  std::vector<Acc> results;
  results.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) results.push_back(make());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < roots.size() && !failed; i = next++) {
        Acc& acc = results[i];
        for_each_in_subtree(roots[i], n, connected_only, [&](const Graph& g) { visit(acc, g); });
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(roots.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace chordspec
