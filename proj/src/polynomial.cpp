#include "chordspec/polynomial.hpp"

#include <cmath>

namespace chordspec {

std::int64_t isqrt_exact(std::int64_t m) {
  if (m < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r * r == m ? r : -1;
}

RatPolynomial to_rational(const IntPolynomial& p) { return RatPolynomial::convert(p); }

RatPolynomial polynomial_gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const RatPolynomial& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  const RatPolynomial f = p.monic();
  const RatPolynomial df = f.derivative();
  const RatPolynomial a0 = polynomial_gcd(f, df);
  RatPolynomial b = divmod(f, a0).first;
  RatPolynomial c = divmod(df, a0).first;
  RatPolynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const RatPolynomial a = polynomial_gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    if (a.degree() > 0) out.push_back({a, i});
  }
  return out;
}

std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
  std::vector<RatPolynomial> chain{p};
  if (p.degree() < 1) return chain;
  chain.push_back(p.derivative());
  while (true) {
    auto rem = divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(-rem);
  }
  return chain;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at(const std::vector<RatPolynomial>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_of(q(x)));
  return sign_changes(signs);
}

int variations_at_infinity(const std::vector<RatPolynomial>& chain, bool positive) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = sign_of(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

int variations_at_sqrt(const std::vector<RatPolynomial>& chain, const Rational& m) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    const auto [a, b] = q.at_sqrt(m);
    signs.push_back(sign_of_surd(a, b, m));
  }
  return sign_changes(signs);
}

int count_roots(const std::vector<RatPolynomial>& chain, const Rational& lo, const Rational& hi) {
  return variations_at(chain, lo) - variations_at(chain, hi);
}

namespace {

// Cauchy bound: all roots of p lie in (-bound, bound).
Rational root_bound(const RatPolynomial& p) {
  Rational worst(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p[i] / p.leading());
    if (r > worst) worst = r;
  }
  return worst + 1;
}

double polish(const RatPolynomial& f, const Rational& lo, const Rational& hi) {
  if (f(hi) == 0) return static_cast<double>(hi);
  const int hi_sign = sign_of(f(hi));
  double a = static_cast<double>(lo);
  double b = static_cast<double>(hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double v = f.evaluate(mid);
    if (v == 0) return mid;
    if ((v > 0 ? 1 : -1) == hi_sign) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> real_roots(const RatPolynomial& p) {
  std::vector<double> roots;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    const auto chain = sturm_chain(factor);
    const Rational bound = root_bound(factor);
    std::vector<std::pair<Rational, Rational>> pending{{-bound, bound}};
    while (!pending.empty()) {
      auto [lo, hi] = pending.back();
      pending.pop_back();
      const int count = count_roots(chain, lo, hi);
      if (count == 0) continue;
      if (count == 1) {
        const double r = polish(factor, lo, hi);
        for (int k = 0; k < multiplicity; ++k) roots.push_back(r);
        continue;
      }
      const Rational mid = (lo + hi) / 2;
      pending.emplace_back(lo, mid);
      pending.emplace_back(mid, hi);
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

SqrtRootCount count_roots_above_sqrt(const RatPolynomial& p, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("count_roots_above_sqrt: m must be positive");
  SqrtRootCount out;
  const std::int64_t s = isqrt_exact(m);
  const Rational mq(m);
  for (auto [factor, multiplicity] : squarefree_decomposition(p)) {
    int above = 0;
    if (s >= 0) {
      const Rational root(s);
      if (factor(root) == 0) {
        out.at += multiplicity;
        factor = divmod(factor, RatPolynomial{-root, Rational(1)}).first;
      }
      const auto chain = sturm_chain(factor);
      above = variations_at(chain, root) - variations_at_infinity(chain, true);
    } else {
      const auto [a, b] = factor.at_sqrt(mq);
      if (a == 0 && b == 0) {
        out.at += multiplicity;
        factor = divmod(factor, RatPolynomial{-mq, Rational(0), Rational(1)}).first;
      }
      const auto chain = sturm_chain(factor);
      above = variations_at_sqrt(chain, mq) - variations_at_infinity(chain, true);
    }
    out.above += multiplicity * above;
  }
  return out;
}

}  // namespace chordspec
