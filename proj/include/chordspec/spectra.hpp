#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chordspec/eigensolver.hpp"
#include "chordspec/graph.hpp"
#include "chordspec/polynomial.hpp"

namespace chordspec {

template <typename Scalar = double>
DenseMatrix<Scalar> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n, n);
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = Scalar(1);
  return a;
}

struct Spectrum {
  Eigen::VectorXd values;  // descending
  double accuracy = 0;     // max eigenpair residual, an absolute error bound
};

struct PerronData {
  Eigen::VectorXd vector;  // positive, unit 2-norm
  double rho = 0;
  Vertex argmax = 0;
};

/// det(xI - A), exact.
using CharPoly = IntPolynomial;

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<VertexSet> cells) : cells_(std::move(cells)) {}

  const std::vector<VertexSet>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  const VertexSet& operator[](int i) const { return cells_[i]; }

  /// Throws std::invalid_argument unless the cells are nonempty, disjoint and cover V(g).
  void validate(const Graph& g) const;

 private:
  std::vector<VertexSet> cells_;
};

struct QuotientMatrix {
  int dim = 0;
  std::vector<Rational> entries;  // row-major
  std::vector<int> cell_sizes;

  const Rational& operator()(int i, int j) const { return entries[i * dim + j]; }
  Rational trace() const;
  Eigen::MatrixXd dense() const;
};

/// p(sqrt(m)) = a + b*sqrt(m) with its exact sign.
struct SqrtSign {
  BigInt a;
  BigInt b;
  std::int64_t m = 0;
  int sign = 0;
};

struct EigsAbove {
  int above = 0;         // eigenvalues strictly greater than sqrt(m), with multiplicity
  int multiplicity = 0;  // multiplicity of sqrt(m) as an eigenvalue
  bool is_eigenvalue() const { return multiplicity > 0; }
};

SymmetricEigen<double> eigen_decomposition(const Graph& g);
Spectrum spectrum(const Graph& g);
double spectral_radius(const Graph& g);
/// Independent power-iteration route for the same quantity.
double spectral_radius_power(const Graph& g);

/// Perron vector of a nonnegative irreducible symmetric matrix; argmax ties
/// (entries within 1e-10 of the maximum) go to the least index.
template <typename Derived>
PerronData perron_vector(const Eigen::MatrixBase<Derived>& a) {
  const auto eig = jacobi_eigen(a.template cast<double>());
  PerronData out;
  out.rho = eig.values(0);
  out.vector = eig.vectors.col(0);
  if (out.vector.sum() < 0) out.vector = -out.vector;
  out.vector.normalize();
  const double top = out.vector.maxCoeff();
  for (Eigen::Index i = 0; i < out.vector.size(); ++i) {
    if (out.vector(i) >= top - 1e-10) {
      out.argmax = static_cast<Vertex>(i);
      break;
    }
  }
  return out;
}

/// Rejects disconnected graphs.
PerronData perron(const Graph& g);

/// Faddeev-LeVerrier in exact integers, O(e n^2) big-integer operations.
CharPoly char_poly(const Graph& g);
RatPolynomial char_poly(const QuotientMatrix& q);

SqrtSign sign_at_sqrt(const CharPoly& p, std::int64_t m);

/// Exact count via Sturm sequences.
EigsAbove count_eigs_above(const Graph& g, std::int64_t m);

bool is_equitable(const Graph& g, const Partition& p);
QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);
/// Real eigenvalues of an equitable quotient, descending, from exact
/// root isolation on its characteristic polynomial.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);
/// Every quotient eigenvalue is an adjacency eigenvalue (within 1e-8) and,
/// for connected graphs, the largest ones agree (within 1e-8).
bool verify_quotient_lift(const Graph& g, const Partition& p);

/// Moves the edges vw, w in N(v) \ (N(u) + u), over to u.
Graph kelmans_rotate(const Graph& g, Vertex u, Vertex v);

/// |A| + 2e(A) + e(A,B) with u* the Perron argmax, A = N(u*), B the rest.
int gamma_star(const Graph& g);

/// Decision for rho(G) >= sqrt(m). Outside the band the numeric radius is
/// trusted; inside it the exact Sturm count decides.
struct ThresholdDecision {
  bool meets = false;
  bool on_threshold = false;  // rho == sqrt(m) exactly; only known when exact
  bool exact = false;
  double rho = 0;
};
inline constexpr double kDecisionBand = 1e-6;
ThresholdDecision spectral_threshold(const Graph& g, std::int64_t m, double band = kDecisionBand);
ThresholdDecision spectral_threshold(const Graph& g, double rho, std::int64_t m,
                                     double band = kDecisionBand);

/// Compares the parity of the numeric eigenvalue count above sqrt(m) with the
/// exact sign of det(sqrt(m) I - A). Empty when some eigenvalue lies inside
/// the band, where numerics are not trusted.
std::optional<bool> sqrt_sign_consistent(const Graph& g, const Spectrum& s, std::int64_t m,
                                         double band = kDecisionBand);

}  // namespace chordspec
