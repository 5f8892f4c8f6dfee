#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chordspec {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename T>
int sign_of(const T& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

/// Exact sign of A + B*sqrt(m), m > 0 not a perfect square.
template <typename T>
int sign_of_surd(const T& a, const T& b, const T& m) {
  const int sa = sign_of(a);
  const int sb = sign_of(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const T lhs = a * a;
  const T rhs = b * b * m;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

std::int64_t isqrt_exact(std::int64_t m);  // -1 when m is not a perfect square

/// Dense univariate polynomial, coefficients in ascending powers.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> ascending) : c_(ascending) { trim(); }
  explicit Polynomial(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial monomial(const T& coeff, int power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = coeff;
    return Polynomial(std::move(c));
  }

  template <typename U>
  static Polynomial convert(const Polynomial<U>& p) {
    std::vector<T> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return Polynomial(std::move(c));
  }

  const std::vector<T>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& leading() const { return c_.back(); }
  T operator[](int power) const { return power <= degree() ? c_[power] : T(0); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double evaluate(double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
    return static_cast<double>(acc);
  }

  /// p(sqrt(m)) = first + second * sqrt(m).
  std::pair<T, T> at_sqrt(const T& m) const {
    T even(0);
    T odd(0);
    T power(1);
    for (std::size_t i = 0; i < c_.size(); i += 2) {
      even += c_[i] * power;
      if (i + 1 < c_.size()) odd += c_[i + 1] * power;
      power *= m;
    }
    return {even, odd};
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    std::vector<T> c = c_;
    const T lead = leading();
    for (auto& x : c) x /= lead;
    return Polynomial(std::move(c));
  }

  Polynomial operator-() const {
    std::vector<T> c = c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder; T must be a field.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem = num.c_;
    const int dd = den.degree();
    if (num.degree() < dd) return {Polynomial{}, num};
    std::vector<T> quot(num.degree() - dd + 1, T(0));
    for (int k = num.degree() - dd; k >= 0; --k) {
      const T factor = rem[k + dd] / den.leading();
      quot[k] = factor;
      for (int j = 0; j <= dd; ++j) rem[k + j] -= factor * den.c_[j];
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

RatPolynomial polynomial_gcd(RatPolynomial a, RatPolynomial b);

struct SquarefreeFactor {
  RatPolynomial factor;  // monic, squarefree
  int multiplicity;
};

/// Yun's algorithm: p = lead * prod factor_i^multiplicity_i.
std::vector<SquarefreeFactor> squarefree_decomposition(const RatPolynomial& p);

/// Sturm chain p, p', -rem(p, p'), ... for squarefree p.
std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p);

int sign_changes(const std::vector<int>& signs);
int variations_at(const std::vector<RatPolynomial>& chain, const Rational& x);
int variations_at_infinity(const std::vector<RatPolynomial>& chain, bool positive);
/// Variations at sqrt(m), m not a perfect square, evaluated exactly.
int variations_at_sqrt(const std::vector<RatPolynomial>& chain, const Rational& m);

/// Distinct real roots in (lo, hi] of a squarefree polynomial.
int count_roots(const std::vector<RatPolynomial>& chain, const Rational& lo, const Rational& hi);

/// Real roots with multiplicity, descending. Roots are isolated exactly and
/// polished in floating point to about 1e-14 relative.
std::vector<double> real_roots(const RatPolynomial& p);

/// Number of roots (with multiplicity) strictly greater than sqrt(m), and
/// the multiplicity of sqrt(m) itself as a root.
struct SqrtRootCount {
  int above = 0;
  int at = 0;
};
SqrtRootCount count_roots_above_sqrt(const RatPolynomial& p, std::int64_t m);

}  // namespace chordspec
