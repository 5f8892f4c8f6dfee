#include "chordspec/chorded.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace chordspec {

namespace {

// Node 2x is x_in, 2x+1 is x_out.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, Vertex source, Vertex sink)
      : nodes_(2 * g.order()), cap_(nodes_ * nodes_, 0), flow_(nodes_ * nodes_, 0) {
    for (Vertex x = 0; x < g.order(); ++x) {
      cap(2 * x, 2 * x + 1) = (x == source || x == sink) ? 2 : 1;
    }
    for (auto [a, b] : g.edges()) {
      cap(2 * a + 1, 2 * b) = 1;
      cap(2 * b + 1, 2 * a) = 1;
    }
    source_ = 2 * source + 1;
    sink_ = 2 * sink;
  }

  // BFS augmentation; returns the flow value, capped at `limit`.
  int max_flow(int limit) {
    int value = 0;
    std::vector<int> parent(nodes_);
    while (value < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source_] = source_;
      std::vector<int> queue{source_};
      for (std::size_t head = 0; head < queue.size() && parent[sink_] < 0; ++head) {
        const int x = queue[head];
        for (int y = 0; y < nodes_; ++y) {
          if (parent[y] < 0 && residual(x, y) > 0) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
      if (parent[sink_] < 0) break;
      for (int y = sink_; y != source_; y = parent[y]) {
        flow(parent[y], y) += 1;
        flow(y, parent[y]) -= 1;
      }
      ++value;
    }
    return value;
  }

  // Peels one source-sink path off the flow, as graph vertices.
  std::vector<Vertex> take_path() {
    std::vector<Vertex> path{source_ / 2};
    int x = source_;
    while (x != sink_) {
      int next = 0;
      while (flow(x, next) <= 0) ++next;
      flow(x, next) -= 1;
      flow(next, x) += 1;
      if (next % 2 == 0 && next != sink_) {  // x_in -> x_out is internal to a vertex
        flow(next, next + 1) -= 1;
        flow(next + 1, next) += 1;
        x = next + 1;
      } else {
        x = next;
      }
      path.push_back(next / 2);
    }
    return path;
  }

 private:
  int& cap(int a, int b) { return cap_[a * nodes_ + b]; }
  int& flow(int a, int b) { return flow_[a * nodes_ + b]; }
  int residual(int a, int b) { return cap(a, b) - flow(a, b); }

  int nodes_;
  std::vector<int> cap_;
  std::vector<int> flow_;
  int source_ = 0;
  int sink_ = 0;
};

}  // namespace

bool is_valid_witness(const Graph& g, const ChordedWitness& w) {
  const auto& c = w.cycle;
  const int len = static_cast<int>(c.size());
  if (len < 4) return false;
  std::uint64_t seen = 0;
  for (Vertex x : c) {
    if (x < 0 || x >= g.order() || ((seen >> x) & 1U)) return false;
    seen |= std::uint64_t{1} << x;
  }
  for (int i = 0; i < len; ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % len])) return false;
  }
  const auto [a, b] = w.chord;
  const auto ia = std::find(c.begin(), c.end(), a);
  const auto ib = std::find(c.begin(), c.end(), b);
  if (ia == c.end() || ib == c.end() || a == b) return false;
  const int gap = static_cast<int>(std::abs(ia - ib));
  if (gap == 1 || gap == len - 1) return false;
  return g.adjacent(a, b);
}

std::optional<PathPair> two_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw std::out_of_range("two_disjoint_paths: vertex outside the graph");
  }
  if (u == v) throw std::invalid_argument("two_disjoint_paths: endpoints must differ");
  SplitFlow flow(g, u, v);
  if (flow.max_flow(2) < 2) return std::nullopt;
  auto first = flow.take_path();
  auto second = flow.take_path();
  if (first.size() > second.size() || (first.size() == second.size() && first > second)) {
    std::swap(first, second);
  }
  return PathPair{std::move(first), std::move(second)};
}

std::optional<ChordedWitness> find_chorded_cycle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    // Every vertex on a chorded cycle through chord uv has degree >= 2, and
    // u, v themselves need degree >= 3.
    if (g.degree(u) < 3 || g.degree(v) < 3) continue;
    const auto paths = two_disjoint_paths(g.without_edge(u, v), u, v);
    if (!paths) continue;
    ChordedWitness w;
    w.cycle = paths->first;
    w.cycle.insert(w.cycle.end(), paths->second.rbegin() + 1, paths->second.rend() - 1);
    w.chord = {u, v};
    return w;
  }
  return std::nullopt;
}

namespace {

class CycleOracle {
 public:
  explicit CycleOracle(const Graph& g) : g_(g) {}

  bool run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      start_ = s;
      allowed_ = g_.vertices().bits() & ~((std::uint64_t{2} << s) - 1);
      if (extend(s, std::uint64_t{1} << s, 1, 0)) return true;
    }
    return false;
  }

 private:
  // Path start_ ... last with vertex mask `on`, `len` vertices, `inside`
  // edges of G induced by the path's vertex set.
  bool extend(Vertex last, std::uint64_t on, int len, int inside) {
    if (++extensions_ > kOracleMaxExtensions) {
      throw std::runtime_error("chorded-cycle oracle exceeded its path budget");
    }
    const std::uint64_t nbrs = g_.rows()[last];
    if (len >= 3 && ((nbrs >> start_) & 1U) && inside > len) return true;
    for (std::uint64_t b = nbrs & allowed_ & ~on; b != 0; b &= b - 1) {
      const Vertex w = std::countr_zero(b);
      const int added = std::popcount(g_.rows()[w] & on);
      if (extend(w, on | (std::uint64_t{1} << w), len + 1, inside + added)) return true;
    }
    return false;
  }

  const Graph& g_;
  Vertex start_ = 0;
  std::uint64_t allowed_ = 0;
  long long extensions_ = 0;
};

}  // namespace

bool has_chorded_cycle_oracle(const Graph& g) {
  if (g.order() > kOracleMaxOrder) throw std::invalid_argument("chorded-cycle oracle supports n <= 12");
  return CycleOracle(g).run();
}

bool posa_bound_holds(const Graph& g) {
  return g.size() < 2 * g.order() - 3 || find_chorded_cycle(g).has_value();
}

}  // namespace chordspec
