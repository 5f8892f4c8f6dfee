#include "chordspec/spectra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chordspec {

namespace {

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("spectrum of the empty graph is undefined");
}

// Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
// The divisions are exact for integer input. `rows[i]` lists the nonzero
// (column, value) entries of row i, so each step costs O(nnz * n).
template <typename T>
Polynomial<T> faddeev_leverrier(int n, const std::vector<std::vector<std::pair<int, T>>>& rows) {
  std::vector<T> coeff(n + 1, T(0));
  coeff[n] = T(1);
  std::vector<T> m(n * n, T(0));
  std::vector<T> am(n * n, T(0));
  for (int i = 0; i < n; ++i) m[i * n + i] = T(1);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        T sum(0);
        for (const auto& [l, a] : rows[i]) sum += a * m[l * n + j];
        am[i * n + j] = std::move(sum);
      }
    }
    T trace(0);
    for (int i = 0; i < n; ++i) trace += am[i * n + i];
    coeff[n - k] = -trace / T(k);
    m.swap(am);
    for (int i = 0; i < n; ++i) m[i * n + i] += coeff[n - k];
  }
  return Polynomial<T>(std::move(coeff));
}

}  // namespace

void Partition::validate(const Graph& g) const {
  std::uint64_t seen = 0;
  for (const auto& cell : cells_) {
    if (cell.empty()) throw std::invalid_argument("partition has an empty cell");
    if ((cell.bits() & seen) != 0) throw std::invalid_argument("partition cells overlap");
    seen |= cell.bits();
  }
  if (VertexSet(seen) != g.vertices()) throw std::invalid_argument("partition does not cover V(G)");
}

Rational QuotientMatrix::trace() const {
  Rational t(0);
  for (int i = 0; i < dim; ++i) t += (*this)(i, i);
  return t;
}

Eigen::MatrixXd QuotientMatrix::dense() const {
  Eigen::MatrixXd b(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) b(i, j) = static_cast<double>((*this)(i, j));
  }
  return b;
}

SymmetricEigen<double> eigen_decomposition(const Graph& g) {
  require_nonempty(g);
  return jacobi_eigen(adjacency_matrix<double>(g));
}

Spectrum spectrum(const Graph& g) {
  const auto a = adjacency_matrix<double>(g);
  require_nonempty(g);
  const auto eig = jacobi_eigen(a);
  Spectrum s;
  s.values = eig.values;
  s.accuracy = std::max(max_residual(a, eig), 1e-15);
  return s;
}

double spectral_radius(const Graph& g) { return spectrum(g).values(0); }

double spectral_radius_power(const Graph& g) {
  require_nonempty(g);
  return power_iteration(adjacency_matrix<double>(g)).value;
}

PerronData perron(const Graph& g) {
  require_nonempty(g);
  if (!is_connected(g)) throw std::invalid_argument("Perron vector requires a connected graph");
  return perron_vector(adjacency_matrix<double>(g));
}

CharPoly char_poly(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<std::pair<int, BigInt>>> rows(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v).members()) rows[v].emplace_back(w, BigInt(1));
  }
  return faddeev_leverrier<BigInt>(n, rows);
}

RatPolynomial char_poly(const QuotientMatrix& q) {
  std::vector<std::vector<std::pair<int, Rational>>> rows(q.dim);
  for (int i = 0; i < q.dim; ++i) {
    for (int j = 0; j < q.dim; ++j) {
      if (q(i, j) != 0) rows[i].emplace_back(j, q(i, j));
    }
  }
  return faddeev_leverrier<Rational>(q.dim, rows);
}

SqrtSign sign_at_sqrt(const CharPoly& p, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("sign_at_sqrt: m must be positive");
  SqrtSign out;
  out.m = m;
  const std::int64_t root = isqrt_exact(m);
  if (root >= 0) {
    out.a = p(BigInt(root));
    out.b = 0;
    out.sign = sign_of(out.a);
    return out;
  }
  std::tie(out.a, out.b) = p.at_sqrt(BigInt(m));
  out.sign = sign_of_surd(out.a, out.b, BigInt(m));
  return out;
}

EigsAbove count_eigs_above(const Graph& g, std::int64_t m) {
  const auto count = count_roots_above_sqrt(to_rational(char_poly(g)), m);
  return EigsAbove{count.above, count.at};
}

bool is_equitable(const Graph& g, const Partition& p) {
  p.validate(g);
  for (const auto& cell : p.cells()) {
    const auto members = cell.members();
    for (const auto& other : p.cells()) {
      const int expected = (g.neighbors(members.front()) & other).size();
      for (Vertex v : members) {
        if ((g.neighbors(v) & other).size() != expected) return false;
      }
    }
  }
  return true;
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
  p.validate(g);
  QuotientMatrix q;
  q.dim = p.size();
  q.entries.reserve(q.dim * q.dim);
  for (const auto& row : p.cells()) {
    q.cell_sizes.push_back(row.size());
    for (const auto& col : p.cells()) {
      const int edge_ends = row == col ? 2 * edges_within(g, row) : edges_between(g, row, col);
      q.entries.emplace_back(edge_ends, row.size());
    }
  }
  return q;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) { return real_roots(char_poly(q)); }

bool verify_quotient_lift(const Graph& g, const Partition& p) {
  if (!is_equitable(g, p)) throw std::invalid_argument("verify_quotient_lift requires an equitable partition");
  const auto lifted = quotient_eigenvalues(quotient_matrix(g, p));
  if (static_cast<int>(lifted.size()) != p.size()) return false;  // complex quotient eigenvalues
  const auto spec = spectrum(g);
  constexpr double tol = 1e-8;
  for (double mu : lifted) {
    if ((spec.values.array() - mu).abs().minCoeff() > tol) return false;
  }
  if (is_connected(g) && std::abs(lifted.front() - spec.values(0)) > tol) return false;
  return true;
}

Graph kelmans_rotate(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw std::out_of_range("kelmans_rotate: vertex outside the graph");
  }
  if (u == v) throw std::invalid_argument("kelmans_rotate: u and v must differ");
  const VertexSet moved = g.neighbors(v) - g.neighbors(u).with(u);
  Graph out = g;
  for (Vertex w : moved.members()) out = out.without_edge(v, w).with_edge(u, w);
  return out;
}

int gamma_star(const Graph& g) {
  const Vertex top = perron(g).argmax;
  const VertexSet a = g.neighbors(top);
  const VertexSet b = g.vertices() - a.with(top);
  return a.size() + 2 * edges_within(g, a) + edges_between(g, a, b);
}

ThresholdDecision spectral_threshold(const Graph& g, double rho, std::int64_t m, double band) {
  ThresholdDecision d;
  d.rho = rho;
  const double threshold = std::sqrt(static_cast<double>(m));
  if (std::abs(rho - threshold) > band) {
    d.meets = rho > threshold;
    return d;
  }
  const auto exact = count_eigs_above(g, m);
  d.exact = true;
  d.meets = exact.above > 0 || exact.is_eigenvalue();
  d.on_threshold = exact.above == 0 && exact.is_eigenvalue();
  return d;
}

ThresholdDecision spectral_threshold(const Graph& g, std::int64_t m, double band) {
  return spectral_threshold(g, spectral_radius(g), m, band);
}

std::optional<bool> sqrt_sign_consistent(const Graph& g, const Spectrum& s, std::int64_t m,
                                         double band) {
  const double threshold = std::sqrt(static_cast<double>(m));
  int above = 0;
  for (double lambda : s.values) {
    if (std::abs(lambda - threshold) <= band) return std::nullopt;
    if (lambda > threshold) ++above;
  }
  const int numeric = above % 2 == 0 ? 1 : -1;
  return sign_at_sqrt(char_poly(g), m).sign == numeric;
}

}  // namespace chordspec
