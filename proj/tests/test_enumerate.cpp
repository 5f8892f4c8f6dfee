#include <doctest.h>

#include <set>
#include <unordered_set>

#include "chordspec/canonical.hpp"
#include "chordspec/enumerate.hpp"
#include "chordspec/graph6.hpp"
#include "oracles.hpp"

using namespace chordspec;

TEST_SUITE("enumerate") {

TEST_CASE("class counts match Burnside") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(count_classes(n) == oracle::burnside_count(n));
  }
}

TEST_CASE("known class counts") {
  const std::uint64_t expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(count_classes(n) == expected[n - 1]);
  const std::uint64_t connected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) CHECK(all_graphs(n, true).size() == connected[n - 1]);
}

TEST_CASE("emitted set equals brute-force dedup") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto expected = oracle::brute_force_classes(n);
    std::set<std::uint64_t> emitted;
    for (const auto& g : all_graphs(n)) emitted.insert(oracle::min_code(g));
    CHECK(emitted == expected);
  }
}

TEST_CASE("stream is isomorph-free") {
  for (int n = 1; n <= 7; ++n) {
    std::unordered_set<GraphId> seen;
    std::size_t total = 0;
    for (const auto& g : all_graphs(n)) {
      seen.insert(canonical_form(g));
      ++total;
    }
    CHECK(seen.size() == total);
  }
}

TEST_CASE("connected stream is the filtered full stream") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::string> filtered, direct;
    for (const auto& g : all_graphs(n)) {
      if (is_connected(g)) filtered.push_back(to_graph6(g));
    }
    for (const auto& g : all_graphs(n, true)) direct.push_back(to_graph6(g));
    CHECK(filtered == direct);
  }
}

TEST_CASE("emission order is deterministic") {
  std::vector<std::string> a, b;
  for (const auto& g : all_graphs(7)) a.push_back(to_graph6(g));
  for (const auto& g : all_graphs(7)) b.push_back(to_graph6(g));
  CHECK(a == b);
}

TEST_CASE("parallel sweep matches the serial stream") {
  auto collect = [](int jobs) {
    auto parts = sweep_subtrees<std::vector<std::string>>(
        7, false, jobs, [] { return std::vector<std::string>{}; },
        [](std::vector<std::string>& acc, const Graph& g) { acc.push_back(to_graph6(g)); });
    std::vector<std::string> flat;
    for (auto& p : parts) flat.insert(flat.end(), p.begin(), p.end());
    return flat;
  };
  std::vector<std::string> serial;
  for (const auto& g : all_graphs(7)) serial.push_back(to_graph6(g));
  CHECK(collect(1) == serial);
  CHECK(collect(4) == serial);
}

TEST_CASE("sweep propagates exceptions") {
  auto boom = [] {
    sweep_subtrees<int>(6, false, 3, [] { return 0; }, [](int& acc, const Graph&) {
      if (++acc == 3) throw std::runtime_error("boom");
    });
  };
  CHECK_THROWS_AS(boom(), std::runtime_error);
}

TEST_CASE("children of a parent are pairwise non-isomorphic extensions") {
  for (const auto& parent : all_graphs(5)) {
    std::unordered_set<GraphId> ids;
    for (const auto& child : canonical_children(parent)) {
      CHECK(child.order() == 6);
      CHECK(child.induced(VertexSet::range(0, 5)) == parent);
      ids.insert(canonical_form(child));
    }
    CHECK(ids.size() == canonical_children(parent).size());
  }
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(count_classes(0), std::invalid_argument);
  CHECK_THROWS_AS(all_graphs(11), std::invalid_argument);
}

}
