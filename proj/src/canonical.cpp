#include "chordspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "chordspec/graph6.hpp"

namespace chordspec {

namespace {

constexpr int kNoJump = INT_MAX;

struct OrderedPartition {
  std::array<std::uint64_t, Graph::kMaxOrder> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), rows_(g.rows()) {}

  CanonicalLabeling run(std::span<const VertexSet> initial) {
    OrderedPartition root;
    std::uint64_t covered = 0;
    for (VertexSet cell : initial) {
      if (cell.empty()) continue;
      if ((cell.bits() & covered) != 0) throw std::invalid_argument("initial cells overlap");
      covered |= cell.bits();
      root.cells[root.count++] = cell.bits();
    }
    const std::uint64_t all = VertexSet::range(0, n_).bits();
    if ((covered & ~all) != 0) throw std::invalid_argument("initial cells exceed the vertex range");
    if (covered != all) root.cells[root.count++] = all & ~covered;

    std::vector<std::uint64_t> splitters(root.cells.begin(), root.cells.begin() + root.count);
    refine(root, splitters);
    if (n_ > 0) search(root, 0);

    CanonicalLabeling out;
    out.order.assign(best_order_.begin(), best_order_.begin() + n_);
    out.certificate.assign(best_cert_.begin(), best_cert_.begin() + n_);
    out.automorphisms = std::move(automorphisms_);
    return out;
  }

 private:
  // Splits cells by neighbour counts into each splitter until equitable.
  // Fragments are ordered by increasing count, which keeps the refinement
  // equivariant under relabeling.
  void refine(OrderedPartition& p, std::vector<std::uint64_t>& queue) const {
    std::array<std::uint64_t, Graph::kMaxOrder + 1> bucket{};
    for (std::size_t head = 0; head < queue.size() && !p.discrete(n_); ++head) {
      const std::uint64_t splitter = queue[head];
      for (int ci = 0; ci < p.count; ++ci) {
        const std::uint64_t cell = p.cells[ci];
        if ((cell & (cell - 1)) == 0) continue;
        int lo = INT_MAX;
        int hi = -1;
        for (std::uint64_t b = cell; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          const int c = std::popcount(rows_[v] & splitter);
          bucket[c] |= std::uint64_t{1} << v;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) {
          bucket[lo] = 0;
          continue;
        }
        std::array<std::uint64_t, Graph::kMaxOrder> frags{};
        int nfrags = 0;
        for (int k = lo; k <= hi; ++k) {
          if (bucket[k] != 0) frags[nfrags++] = bucket[k];
          bucket[k] = 0;
        }
        std::copy_backward(p.cells.begin() + ci + 1, p.cells.begin() + p.count,
                           p.cells.begin() + p.count + nfrags - 1);
        std::copy(frags.begin(), frags.begin() + nfrags, p.cells.begin() + ci);
        p.count += nfrags - 1;
        queue.insert(queue.end(), frags.begin(), frags.begin() + nfrags);
        ci += nfrags - 1;
      }
    }
  }

  // Returns the tree level to backtrack to, or kNoJump.
  int search(const OrderedPartition& p, int level) {
    if (p.discrete(n_)) return leaf(p, level);

    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const std::uint64_t cell = p.cells[target];

    std::uint64_t explored = 0;
    std::size_t auts_seen = SIZE_MAX;
    std::array<int, Graph::kMaxOrder> orbit{};
    for (std::uint64_t b = cell; b != 0; b &= b - 1) {
      const int w = std::countr_zero(b);
      if (explored != 0) {
        if (auts_seen != automorphisms_.size()) {
          stabiliser_orbits(level, orbit);
          auts_seen = automorphisms_.size();
        }
        bool redundant = false;
        for (std::uint64_t e = explored; e != 0; e &= e - 1) {
          if (orbit[std::countr_zero(e)] == orbit[w]) {
            redundant = true;
            break;
          }
        }
        if (redundant) continue;
      }

      OrderedPartition child = p;
      std::copy_backward(child.cells.begin() + target + 1, child.cells.begin() + child.count,
                         child.cells.begin() + child.count + 1);
      child.cells[target] = std::uint64_t{1} << w;
      child.cells[target + 1] = cell & ~(std::uint64_t{1} << w);
      ++child.count;
      std::vector<std::uint64_t> queue{std::uint64_t{1} << w};
      refine(child, queue);

      path_[level] = w;
      const int jump = search(child, level + 1);
      explored |= std::uint64_t{1} << w;
      if (jump < level) return jump;
    }
    return kNoJump;
  }

  int leaf(const OrderedPartition& p, int level) {
    std::array<Vertex, Graph::kMaxOrder> order{};
    std::array<int, Graph::kMaxOrder> position{};
    for (int i = 0; i < n_; ++i) {
      order[i] = std::countr_zero(p.cells[i]);
      position[order[i]] = i;
    }
    std::array<std::uint64_t, Graph::kMaxOrder> cert{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = 0;
      for (std::uint64_t b = rows_[order[i]]; b != 0; b &= b - 1) {
        row |= std::uint64_t{1} << position[std::countr_zero(b)];
      }
      cert[i] = row;
    }

    const auto cmp = has_best_ ? std::lexicographical_compare_three_way(
                                     cert.begin(), cert.begin() + n_, best_cert_.begin(),
                                     best_cert_.begin() + n_)
                               : std::strong_ordering::less;
    if (cmp < 0) {
      has_best_ = true;
      best_cert_ = cert;
      best_order_ = order;
      best_path_ = path_;
      best_depth_ = level;
      return kNoJump;
    }
    if (cmp > 0) return kNoJump;

    std::vector<Vertex> aut(n_);
    for (int i = 0; i < n_; ++i) aut[order[i]] = best_order_[i];
    automorphisms_.push_back(std::move(aut));
    int common = 0;
    while (common < level && common < best_depth_ && path_[common] == best_path_[common]) ++common;
    return common;
  }

  // Orbits of the group generated by stored automorphisms that fix
  // path_[0..level) pointwise.
  void stabiliser_orbits(int level, std::array<int, Graph::kMaxOrder>& orbit) const {
    std::iota(orbit.begin(), orbit.begin() + n_, 0);
    auto find = [&orbit](int x) {
      while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
      return x;
    };
    for (const auto& aut : automorphisms_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) fixes = aut[path_[i]] == path_[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(aut[v]);
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) orbit[v] = find(v);
  }

  int n_;
  std::span<const std::uint64_t> rows_;
  bool has_best_ = false;
  std::array<std::uint64_t, Graph::kMaxOrder> best_cert_{};
  std::array<Vertex, Graph::kMaxOrder> best_order_{};
  std::array<Vertex, Graph::kMaxOrder> best_path_{};
  int best_depth_ = 0;
  std::array<Vertex, Graph::kMaxOrder> path_{};
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexSet> cells) {
  return Canonizer(g).run(cells);
}

Graph canonical_graph(const Graph& g) {
  const auto labeling = canonical_labeling(g);
  return Graph::from_rows(labeling.certificate);
}

GraphId canonical_form(const Graph& g) { return GraphId{to_graph6(canonical_graph(g))}; }

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_labeling(g).certificate == canonical_labeling(h).certificate;
}

bool same_orbit(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  if (g.degree(u) != g.degree(v)) return false;
  const std::array<VertexSet, 1> cu{VertexSet{u}};
  const std::array<VertexSet, 1> cv{VertexSet{v}};
  return canonical_labeling(g, cu).certificate == canonical_labeling(g, cv).certificate;
}

}  // namespace chordspec
