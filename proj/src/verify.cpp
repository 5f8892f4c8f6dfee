#include "chordspec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chordspec/canonical.hpp"
#include "chordspec/chorded.hpp"
#include "chordspec/enumerate.hpp"
#include "chordspec/families.hpp"
#include "chordspec/graph6.hpp"
#include "chordspec/spectra.hpp"

namespace chordspec {

namespace {

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct SweepTally {
  std::uint64_t scanned = 0;
  std::uint64_t hits = 0;
  std::uint64_t exact = 0;
  std::uint64_t sign_checks = 0;
  std::uint64_t sign_mismatches = 0;
  std::vector<std::string> exceptional;
  std::vector<std::string> counterexamples;
};

SweepTally merge(const std::vector<SweepTally>& parts) {
  SweepTally total;
  for (const auto& p : parts) {
    total.scanned += p.scanned;
    total.hits += p.hits;
    total.exact += p.exact;
    total.sign_checks += p.sign_checks;
    total.sign_mismatches += p.sign_mismatches;
    total.exceptional.insert(total.exceptional.end(), p.exceptional.begin(), p.exceptional.end());
    total.counterexamples.insert(total.counterexamples.end(), p.counterexamples.begin(),
                                 p.counterexamples.end());
  }
  std::sort(total.exceptional.begin(), total.exceptional.end());
  std::sort(total.counterexamples.begin(), total.counterexamples.end());
  return total;
}

void fill(VerificationReport& r, SweepTally&& t) {
  r.classes_scanned = t.scanned;
  r.condition_hits = t.hits;
  r.exact_decisions = t.exact;
  r.sign_checks = t.sign_checks;
  r.sign_mismatches = t.sign_mismatches;
  r.exceptional = std::move(t.exceptional);
  r.counterexamples = std::move(t.counterexamples);
}

// False when rho(g) >= sqrt(m); records the decision path.
bool below_threshold(VerificationReport& r, const Graph& g, std::int64_t m, const std::string& label) {
  const auto d = spectral_threshold(g, m);
  if (d.exact) ++r.exact_decisions;
  if (d.meets) {
    r.failures.push_back(label + ": rho = " + std::to_string(d.rho) + " is not below sqrt(" +
                         std::to_string(m) + ")");
  }
  return !d.meets;
}

void sign_cross_check(VerificationReport& r, const Graph& g, std::int64_t m) {
  const auto agree = sqrt_sign_consistent(g, spectrum(g), m);
  if (!agree) return;
  ++r.sign_checks;
  if (!*agree) {
    ++r.sign_mismatches;
    r.failures.push_back(to_graph6(g) + ": exact sign at sqrt(" + std::to_string(m) + ") disagrees with numerics");
  }
}

bool quotient_equals(const QuotientMatrix& q, const std::vector<std::vector<long>>& expected) {
  if (q.dim != static_cast<int>(expected.size())) return false;
  for (int i = 0; i < q.dim; ++i) {
    for (int j = 0; j < q.dim; ++j) {
      if (q(i, j) != Rational(expected[i][j])) return false;
    }
  }
  return true;
}

// Integer polynomial from a rational one known to have integer coefficients.
std::optional<IntPolynomial> integral(const RatPolynomial& p) {
  std::vector<BigInt> c;
  for (const auto& x : p.coeffs()) {
    if (denominator(x) != 1) return std::nullopt;
    c.push_back(numerator(x));
  }
  return IntPolynomial(std::move(c));
}

void finish(VerificationReport& r, const Stopwatch& clock) {
  if (r.verdict.empty()) r.verdict = (r.counterexamples.empty() && r.failures.empty()) ? "pass" : "fail";
  r.runtime_ms = clock.elapsed_ms();
}

}  // namespace

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["parameters"] = parameters;
  j["classes_scanned"] = classes_scanned;
  j["condition_hits"] = condition_hits;
  j["exact_decisions"] = exact_decisions;
  j["exceptional"] = exceptional;
  j["counterexamples"] = counterexamples;
  j["failures"] = failures;
  j["tolerance"] = tolerance;
  j["sign_checks"] = sign_checks;
  j["sign_mismatches"] = sign_mismatches;
  j["runtime_ms"] = runtime_ms;
  j["verdict"] = verdict;
  return j;
}

VerificationReport verify_theorem(const TheoremOptions& options) {
  const int n = options.n;
  const int lowest = options.exploratory ? 4 : 6;
  if (n < lowest || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("verify theorem: n must lie in [" + std::to_string(lowest) + ", 10]");
  }
  Stopwatch clock;
  const std::int64_t m = options.threshold.value_or(2 * n - 4);
  const Graph extremal = complete_bipartite(2, n - 2);
  const auto extremal_cert = canonical_labeling(extremal).certificate;

  VerificationReport r;
  r.claim = "theorem";
  r.parameters["n"] = n;
  r.parameters["threshold"] = m;
  r.parameters["detector"] = options.use_oracle ? "oracle" : "max-flow";
  r.tolerance = kDecisionBand;

  auto visit = [&](SweepTally& t, const Graph& g) {
    ++t.scanned;
    const auto spec = spectrum(g);
    const auto d = spectral_threshold(g, spec.values(0), m);
    if (d.exact) ++t.exact;
    if (options.check_signs) {
      if (const auto agree = sqrt_sign_consistent(g, spec, m)) {
        ++t.sign_checks;
        if (!*agree) ++t.sign_mismatches;
      }
    }
    if (!d.meets) return;
    ++t.hits;
    const bool chorded = options.use_oracle ? has_chorded_cycle_oracle(g) : find_chorded_cycle(g).has_value();
    if (chorded) return;
    if (g.size() == extremal.size() && canonical_labeling(g).certificate == extremal_cert) {
      t.exceptional.push_back(to_graph6(g));
    } else {
      t.counterexamples.push_back(to_graph6(g));
    }
  };
  fill(r, merge(sweep_subtrees<SweepTally>(n, false, options.jobs, [] { return SweepTally{}; }, visit)));

  if (r.sign_mismatches > 0) r.failures.push_back(std::to_string(r.sign_mismatches) + " exact/numeric sign mismatches");
  if (options.exploratory && n < 6) {
    r.verdict = "exploratory";
  } else if (r.exceptional.size() != 1) {
    r.failures.push_back("expected exactly one exceptional class (K_{2,n-2}), found " +
                         std::to_string(r.exceptional.size()));
  }
  finish(r, clock);
  return r;
}

VerificationReport verify_posa(int n, int jobs, std::optional<int> min_edges) {
  if (n < 4 || n > 9) throw std::invalid_argument("verify posa: n must lie in [4, 9]");
  Stopwatch clock;
  const int threshold = min_edges.value_or(2 * n - 3);
  VerificationReport r;
  r.claim = "posa";
  r.parameters["n"] = n;
  r.parameters["min_edges"] = threshold;

  auto visit = [&](SweepTally& t, const Graph& g) {
    ++t.scanned;
    if (g.size() < threshold) return;
    ++t.hits;
    const auto w = find_chorded_cycle(g);
    if (!w || !is_valid_witness(g, *w)) t.counterexamples.push_back(to_graph6(g));
  };
  fill(r, merge(sweep_subtrees<SweepTally>(n, false, jobs, [] { return SweepTally{}; }, visit)));
  finish(r, clock);
  return r;
}

VerificationReport verify_lemma3(int k_max) {
  if (k_max < 1) throw std::invalid_argument("verify lemma3: k_max must be at least 1");
  Stopwatch clock;
  VerificationReport r;
  r.claim = "lemma3";
  r.parameters["k_max"] = k_max;
  r.tolerance = 1e-10;
  for (int k = 1; k <= k_max; ++k) {
    const Graph g = friendship(k);
    ++r.classes_scanned;
    ++r.condition_hits;
    const double root = std::sqrt(1.0 + 8.0 * k);
    std::vector<double> expected{0.5 + 0.5 * root};
    expected.insert(expected.end(), k - 1, 1.0);
    expected.insert(expected.end(), k, -1.0);
    expected.push_back(0.5 - 0.5 * root);
    std::sort(expected.begin(), expected.end(), std::greater<>());
    const auto spec = spectrum(g);
    double worst = 0;
    for (std::size_t i = 0; i < expected.size(); ++i) worst = std::max(worst, std::abs(spec.values(i) - expected[i]));
    if (worst > r.tolerance) {
      r.counterexamples.push_back(to_graph6(g));
      r.failures.push_back("k=" + std::to_string(k) + ": max deviation " + std::to_string(worst));
    }
  }
  finish(r, clock);
  return r;
}

VerificationReport verify_lemma5(int n_max) {
  if (n_max < 6) throw std::invalid_argument("verify lemma5: n_max must be at least 6");
  Stopwatch clock;
  VerificationReport r;
  r.claim = "lemma5";
  r.parameters["n_max"] = n_max;
  r.tolerance = kDecisionBand;
  for (int n = 6; n <= n_max; n += 2) {
    const Graph g = friendship_pendant((n - 2) / 2);
    const std::string label = "n=" + std::to_string(n);
    ++r.classes_scanned;
    ++r.condition_hits;
    const std::size_t before = r.failures.size();
    const std::int64_t m = 2 * n - 4;

    below_threshold(r, g, m, label);
    sign_cross_check(r, g, m);
    const Partition cells({VertexSet{0}, VertexSet::range(1, n - 1), VertexSet{n - 1}});
    if (!is_equitable(g, cells)) {
      r.failures.push_back(label + ": 3-cell partition is not equitable");
    } else {
      const auto q = quotient_matrix(g, cells);
      if (!quotient_equals(q, {{0, n - 2, 1}, {1, 1, 0}, {1, 0, 0}})) r.failures.push_back(label + ": quotient mismatch");
      if (!verify_quotient_lift(g, cells)) r.failures.push_back(label + ": quotient eigenvalues do not lift");
      const auto f = integral(char_poly(q));
      if (!f) {
        r.failures.push_back(label + ": quotient polynomial is not integral");
      } else {
        if (sign_at_sqrt(*f, m).sign != 1) r.failures.push_back(label + ": f(sqrt(2n-4)) is not positive");
        if ((*f)(BigInt(2)) != BigInt(7 - 2 * n)) r.failures.push_back(label + ": f(2) != 7-2n");
      }
    }
    if (r.failures.size() != before) r.counterexamples.push_back(to_graph6(g));
  }
  finish(r, clock);
  return r;
}

VerificationReport verify_lemma6(int n_max) {
  if (n_max < 6) throw std::invalid_argument("verify lemma6: n_max must be at least 6");
  Stopwatch clock;
  VerificationReport r;
  r.claim = "lemma6";
  r.parameters["n_max"] = n_max;
  r.tolerance = kDecisionBand;
  for (int n = 6; n <= n_max; ++n) {
    for (int a = 2; a + 4 <= n; ++a) {
      if ((n - a - 2) % 2 != 0) continue;
      const int k = (n - a - 2) / 2;
      const std::int64_t m = 2 * n - 4;
      const std::string label = "(n,a,k)=(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(k) + ")";
      const Graph bullet = k2a_bullet_f(a, k);
      const Graph star = k2a_star_f(a, k);
      r.classes_scanned += 2;
      r.condition_hits += 2;
      const std::size_t before = r.failures.size();

      below_threshold(r, bullet, m, label + " bullet");
      below_threshold(r, star, m, label + " star");
      sign_cross_check(r, bullet, m);
      sign_cross_check(r, star, m);

      const Partition cells({VertexSet{2}, VertexSet::range(a + 2, n), VertexSet{0, 1}, VertexSet::range(3, a + 2)});
      if (!is_equitable(bullet, cells)) {
        r.failures.push_back(label + ": 4-cell partition is not equitable");
      } else {
        const auto q = quotient_matrix(bullet, cells);
        if (!quotient_equals(q, {{0, n - a - 2, 2, 0}, {1, 1, 0, 0}, {1, 0, 0, a - 1}, {0, 0, 2, 0}})) {
          r.failures.push_back(label + ": quotient mismatch");
        }
        if (q.trace() != 1) r.failures.push_back(label + ": quotient trace != 1");
        if (!verify_quotient_lift(bullet, cells)) r.failures.push_back(label + ": quotient eigenvalues do not lift");
        const auto f = integral(char_poly(q));
        if (!f) {
          r.failures.push_back(label + ": quotient polynomial is not integral");
        } else {
          const auto at = sign_at_sqrt(*f, 2 * a);
          if (at.b != 0 || at.a != BigInt(2 * a - 2 * n + 4)) r.failures.push_back(label + ": f(sqrt(2a)) != 2a-2n+4");
          if (sign_at_sqrt(*f, m).sign != 1) r.failures.push_back(label + ": f(sqrt(2n-4)) is not positive");
        }
      }
      if (r.failures.size() != before) {
        r.counterexamples.push_back(to_graph6(bullet));
        r.counterexamples.push_back(to_graph6(star));
      }
    }
  }
  finish(r, clock);
  return r;
}

}  // namespace chordspec
