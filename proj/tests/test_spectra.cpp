#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "chordspec/enumerate.hpp"
#include "chordspec/families.hpp"
#include "chordspec/spectra.hpp"
#include "oracles.hpp"

using namespace chordspec;

namespace {

IntPolynomial ip(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  for (long x : ascending) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(complete(3)) == ip({-2, -3, 0, 1}));
  CHECK(char_poly(cycle(4)) == ip({0, 0, -4, 0, 1}));
  CHECK(char_poly(path(2)) == ip({-1, 0, 1}));
  CHECK(char_poly(Graph(3)) == ip({0, 0, 0, 1}));
  CHECK(char_poly(complete_bipartite(2, 4)) == ip({0, 0, 0, 0, -8, 0, 1}));
  CHECK(char_poly(complete(40))[0] == -39);  // (x-39)(x+1)^39 at 0
}

TEST_CASE("characteristic polynomial roots are the spectrum") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.5);
    const auto roots = real_roots(to_rational(char_poly(g)));
    const auto s = spectrum(g);
    REQUIRE(static_cast<int>(roots.size()) == g.order());
    for (int i = 0; i < g.order(); ++i) CHECK(roots[i] == doctest::Approx(s.values(i)).epsilon(1e-7));
  }
}

TEST_CASE("Jacobi agrees with Eigen's solver") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 20), 0.4);
    const auto a = adjacency_matrix(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a, Eigen::EigenvaluesOnly);
    const auto mine = eigen_decomposition(g);
    CHECK(mine.converged);
    for (int i = 0; i < g.order(); ++i) {
      CHECK(std::abs(mine.values(i) - ref.eigenvalues()(g.order() - 1 - i)) < 1e-10);
    }
    CHECK(max_residual(a, mine) < 1e-9);
  }
}

TEST_CASE("power iteration confirms the radius") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_connected_graph(rng, 2 + static_cast<int>(rng() % 15), 0.3);
    CHECK(std::abs(spectral_radius_power(g) - spectral_radius(g)) < 1e-8);
  }
  CHECK(spectral_radius_power(complete_bipartite(2, 4)) == doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("spectrum traces and bounds") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.5);
    const auto s = spectrum(g);
    CHECK(s.accuracy < 1e-9);
    CHECK(std::abs(s.values.sum()) < 1e-9);
    CHECK(std::abs(s.values.squaredNorm() - 2.0 * g.size()) < 1e-9);
    int max_degree = 0;
    for (Vertex v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
    CHECK(s.values(0) >= 2.0 * g.size() / g.order() - 1e-12);
    CHECK(s.values(0) <= max_degree + 1e-12);
  }
  CHECK(spectral_radius(cycle(7)) == doctest::Approx(2.0));
  CHECK(spectral_radius(complete(6)) == doctest::Approx(5.0));
  CHECK_THROWS_AS(spectrum(Graph(0)), std::invalid_argument);
}

TEST_CASE("Perron vector") {
  const auto p = perron(complete_bipartite(2, 4));
  CHECK(p.rho == doctest::Approx(std::sqrt(8.0)));
  CHECK((p.vector.array() > 0).all());
  CHECK(p.vector.norm() == doctest::Approx(1.0));
  CHECK(p.argmax == 0);  // tie between 0 and 1 goes to the least index
  CHECK(perron(add_pendant(cycle(5), 3)).argmax == 3);
  CHECK_THROWS_AS(perron(Graph(3)), std::invalid_argument);
}

TEST_CASE("exact signs at square roots") {
  // K_{2,4}: det(x I - A) = x^6 - 8x^4.
  CHECK(sign_at_sqrt(char_poly(complete_bipartite(2, 4)), 8).sign == 0);
  CHECK(sign_at_sqrt(char_poly(complete(3)), 4).sign == 0);   // 2 is a root
  CHECK(sign_at_sqrt(char_poly(complete(3)), 5).sign == 1);
  CHECK(sign_at_sqrt(char_poly(complete(3)), 3).sign == -1);  // x^3 - 3x - 2 at sqrt 3 = -2
  const auto s = sign_at_sqrt(char_poly(complete(3)), 3);
  CHECK(s.a == -2);
  CHECK(s.b == 0);
  CHECK_THROWS_AS(sign_at_sqrt(char_poly(complete(3)), 0), std::invalid_argument);
}

TEST_CASE("exact eigenvalue counts") {
  const auto k = count_eigs_above(complete_bipartite(2, 4), 8);
  CHECK(k.above == 0);
  CHECK(k.multiplicity == 1);
  CHECK(k.is_eigenvalue());
  const auto c = count_eigs_above(disjoint_union(complete_bipartite(2, 4), complete_bipartite(2, 4)), 8);
  CHECK(c.multiplicity == 2);
  CHECK(count_eigs_above(complete(5), 16).multiplicity == 1);
  CHECK(count_eigs_above(complete(5), 3).above == 1);
  CHECK(count_eigs_above(cycle(6), 1).above == 1);
  CHECK(count_eigs_above(cycle(6), 1).multiplicity == 2);
}

TEST_CASE("threshold decisions") {
  for (int n = 6; n <= 20; ++n) {
    const auto d = spectral_threshold(complete_bipartite(2, n - 2), 2 * n - 4);
    CHECK(d.exact);
    CHECK(d.meets);
    CHECK(d.on_threshold);
  }
  const auto far = spectral_threshold(complete(6), 8);
  CHECK_FALSE(far.exact);
  CHECK(far.meets);
  CHECK_FALSE(spectral_threshold(cycle(8), 8).meets);
}

TEST_CASE("numeric and exact signs agree") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : all_graphs(n)) {
      const auto agree = sqrt_sign_consistent(g, spectrum(g), std::max(1, 2 * n - 4));
      if (agree) CHECK(*agree);
    }
  }
}

TEST_CASE("equitable partitions and quotients") {
  const Graph k = complete_bipartite(2, 4);
  const Partition sides({VertexSet{0, 1}, VertexSet::range(2, 6)});
  CHECK(is_equitable(k, sides));
  const auto q = quotient_matrix(k, sides);
  CHECK(q.dim == 2);
  CHECK(q(0, 0) == 0);
  CHECK(q(0, 1) == 4);
  CHECK(q(1, 0) == 2);
  CHECK(q.trace() == 0);
  CHECK(q.cell_sizes == std::vector<int>{2, 4});
  const auto ev = quotient_eigenvalues(q);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(std::sqrt(8.0)));
  CHECK(ev[1] == doctest::Approx(-std::sqrt(8.0)));
  CHECK(verify_quotient_lift(k, sides));

  const Partition lopsided({VertexSet{0, 2}, VertexSet{1, 3, 4, 5}});
  CHECK_FALSE(is_equitable(k, lopsided));
  CHECK(quotient_matrix(k, lopsided)(0, 0) == 1);
  CHECK(quotient_matrix(k, lopsided)(1, 1) == Rational(6, 4));
  CHECK_THROWS_AS(verify_quotient_lift(k, lopsided), std::invalid_argument);
  CHECK_THROWS_AS(is_equitable(k, Partition({VertexSet{0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(is_equitable(k, Partition({VertexSet{0, 1, 2}, VertexSet::range(2, 6)})), std::invalid_argument);
}

TEST_CASE("quotient eigenvalues lift for orbit partitions") {
  // Orbits of a vertex-transitive-plus-hub graph: wheel W_6.
  Graph w = join(Graph(1), cycle(6));
  const Partition p({VertexSet{0}, VertexSet::range(1, 7)});
  CHECK(is_equitable(w, p));
  CHECK(verify_quotient_lift(w, p));
  CHECK(quotient_eigenvalues(quotient_matrix(w, p))[0] == doctest::Approx(1.0 + std::sqrt(7.0)));
}

TEST_CASE("Kelmans rotation") {
  CHECK(kelmans_rotate(path(4), 1, 2) == Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}));
  CHECK(kelmans_rotate(complete(4), 0, 1) == complete(4));
  CHECK_THROWS_AS(kelmans_rotate(path(4), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(kelmans_rotate(path(4), 1, 4), std::out_of_range);
}

TEST_CASE("gamma star") {
  // K_{2,4}: u* = 0, A = {2..5}, B = {1}; |A| + 2e(A) + e(A,B) = 4 + 0 + 4.
  CHECK(gamma_star(complete_bipartite(2, 4)) == 8);
  // K_5: A = V - u*, B empty.
  CHECK(gamma_star(complete(5)) == 4 + 12);
  CHECK_THROWS_AS(gamma_star(Graph(4)), std::invalid_argument);
}

TEST_CASE("Perron argmax is scale invariant") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_connected_graph(rng, 2 + static_cast<int>(rng() % 10), 0.3);
    const Eigen::MatrixXd a = adjacency_matrix(g);
    const auto base = perron_vector(a);
    const auto scaled = perron_vector(3.5 * a);
    CHECK(scaled.argmax == base.argmax);
    CHECK(scaled.rho / base.rho == doctest::Approx(3.5));
  }
}

}
