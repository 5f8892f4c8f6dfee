#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chordspec {

struct VerificationReport {
  std::string claim;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::uint64_t classes_scanned = 0;
  std::uint64_t condition_hits = 0;
  std::uint64_t exact_decisions = 0;  // threshold decisions settled by the exact path
  std::vector<std::string> exceptional;
  std::vector<std::string> counterexamples;
  std::vector<std::string> failures;  // human-readable reasons, one per failed check
  double tolerance = 0;
  std::uint64_t sign_checks = 0;      // exact-vs-numeric sign comparisons performed
  std::uint64_t sign_mismatches = 0;
  std::int64_t runtime_ms = 0;
  std::string verdict;  // "pass", "fail" or "exploratory"

  bool passed() const { return verdict != "fail"; }
  nlohmann::ordered_json to_json() const;
};

struct TheoremOptions {
  int n = 6;
  int jobs = 1;
  /// Hypothesis is rho >= sqrt(threshold); defaults to 2n - 4.
  std::optional<std::int64_t> threshold;
  /// Decide chorded cycles with the enumeration oracle instead of max-flow.
  bool use_oracle = false;
  /// Cross-check every class's exact sign of det(sqrt(m) I - A) against numerics.
  bool check_signs = false;
  /// Allow n = 4, 5; the report then carries verdict "exploratory".
  bool exploratory = false;
};

/// Every class of order n whose spectral radius reaches the threshold has a
/// chorded cycle, except exactly the class of K_{2,n-2}.
VerificationReport verify_theorem(const TheoremOptions& options);

/// Every class of order n with at least `min_edges` (default 2n - 3) edges has
/// a chorded cycle.
VerificationReport verify_posa(int n, int jobs = 1, std::optional<int> min_edges = std::nullopt);

VerificationReport verify_lemma3(int k_max);
VerificationReport verify_lemma5(int n_max);
VerificationReport verify_lemma6(int n_max);

}  // namespace chordspec
