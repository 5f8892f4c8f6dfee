#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "chordspec/chorded.hpp"
#include "chordspec/enumerate.hpp"
#include "chordspec/families.hpp"
#include "chordspec/graph6.hpp"
#include "chordspec/spectra.hpp"
#include "chordspec/verify.hpp"

namespace cs = chordspec;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

using UsageError = std::runtime_error;

std::vector<cs::Graph> read_graphs(const std::string& source) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (source != "-") {
    file.open(source);
    if (!file) throw UsageError("cannot open " + source);
    in = &file;
  }
  std::vector<cs::Graph> out;
  std::string line;
  int number = 0;
  while (std::getline(*in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(cs::from_graph6(line));
    } catch (const std::invalid_argument& e) {
      throw UsageError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError("no graph6 input");
  return out;
}

std::string format_rho(const cs::Graph& g, std::optional<std::int64_t> threshold) {
  const std::int64_t m = threshold.value_or(std::max<std::int64_t>(0, 2 * g.order() - 4));
  const auto d = cs::spectral_threshold(g, m);
  std::ostringstream out;
  out << std::fixed << std::setprecision(12) << d.rho;
  if (d.exact) {
    const char* rel = d.on_threshold ? "=" : (d.meets ? ">" : "<");
    out << " (" << rel << " sqrt(" << m << "), exact-threshold)";
  }
  return out.str();
}

std::string format_witness(const cs::ChordedWitness& w) {
  std::ostringstream out;
  out << "cycle";
  for (auto v : w.cycle) out << ' ' << v;
  out << " chord " << w.chord.first << ' ' << w.chord.second;
  return out.str();
}

int emit_report(const cs::VerificationReport& r, const std::string& json_path) {
  const std::string text = r.to_json().dump(2);
  if (json_path.empty() || json_path == "-") {
    std::cout << text << '\n';
  } else {
    std::ofstream out(json_path);
    if (!out) throw UsageError("cannot write " + json_path);
    out << text << '\n';
    std::cout << r.claim << ": " << r.verdict << " (" << r.classes_scanned << " scanned, "
              << r.counterexamples.size() << " counterexamples)\n";
  }
  return r.verdict == "fail" ? kExitCounterexample : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral conditions for chorded cycles: graph tools and verification campaigns"};
  app.require_subcommand(1);

  int gen_n = 0;
  bool gen_connected = false;
  auto* gen = app.add_subcommand("gen", "Stream one graph6 line per isomorphism class of order n");
  gen->add_option("--n", gen_n, "Order, 1..10")->required();
  gen->add_flag("--connected", gen_connected, "Connected classes only");

  std::string input = "-";
  std::optional<std::int64_t> rho_threshold;
  auto* rho = app.add_subcommand("rho", "Spectral radius; flags exact decisions near sqrt(2n-4)");
  rho->add_option("input", input, "graph6 file, or - for stdin");
  rho->add_option("--threshold", rho_threshold, "Compare against sqrt(M) instead of sqrt(2n-4)");

  auto* spec = app.add_subcommand("spectrum", "All adjacency eigenvalues, descending");
  spec->add_option("input", input, "graph6 file, or - for stdin");

  bool witness = false;
  auto* chorded = app.add_subcommand("chorded", "Report whether a chorded cycle exists");
  chorded->add_option("input", input, "graph6 file, or - for stdin");
  chorded->add_flag("--witness", witness, "Print the cycle and chord");

  std::string family_name;
  std::optional<int> fam_a, fam_k, fam_n;
  auto* family = app.add_subcommand("family", "Emit a family member as graph6");
  family->add_option("name", family_name, "k2a | friendship | friendship-pendant | bullet | star")
      ->required()
      ->check(CLI::IsMember({"k2a", "friendship", "friendship-pendant", "bullet", "star"}));
  family->add_option("--a", fam_a, "Size of the a-side of K_{2,a}");
  family->add_option("--k", fam_k, "Number of friendship triangles");
  family->add_option("--n", fam_n, "Total order (derives the missing parameter)");

  std::string claim;
  std::optional<int> v_n, v_nmax, v_kmax;
  std::optional<std::int64_t> v_threshold;
  std::optional<int> v_min_edges;
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::string json_path;
  bool oracle = false, explore = false, signs = false;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign and print its JSON report");
  verify->add_option("claim", claim, "theorem | posa | lemma3 | lemma5 | lemma6")
      ->required()
      ->check(CLI::IsMember({"theorem", "posa", "lemma3", "lemma5", "lemma6"}));
  verify->add_option("--n", v_n, "Order (theorem, posa)");
  verify->add_option("--n-max", v_nmax, "Largest order (lemma5, lemma6)");
  verify->add_option("--k-max", v_kmax, "Largest k (lemma3)");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--json", json_path, "Write the report here instead of stdout");
  verify->add_option("--threshold", v_threshold, "theorem: hypothesis rho >= sqrt(M)");
  verify->add_option("--min-edges", v_min_edges, "posa: edge threshold");
  verify->add_flag("--oracle", oracle, "theorem: decide chorded cycles by cycle enumeration");
  verify->add_flag("--check-signs", signs, "theorem: cross-check exact signs against numerics");
  verify->add_flag("--explore", explore, "theorem: allow n = 4, 5 without a pass/fail claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen) {
      cs::for_each_graph(gen_n, gen_connected, [](const cs::Graph& g) { std::cout << cs::to_graph6(g) << '\n'; });
      return kExitPass;
    }
    if (*rho) {
      for (const auto& g : read_graphs(input)) std::cout << format_rho(g, rho_threshold) << '\n';
      return kExitPass;
    }
    if (*spec) {
      std::cout << std::setprecision(12);
      for (const auto& g : read_graphs(input)) {
        const auto s = cs::spectrum(g);
        for (Eigen::Index i = 0; i < s.values.size(); ++i) {
          // Avoid printing -0.
          const double x = std::abs(s.values(i)) < 1e-13 ? 0.0 : s.values(i);
          std::cout << (i ? " " : "") << x;
        }
        std::cout << '\n';
      }
      return kExitPass;
    }
    if (*chorded) {
      for (const auto& g : read_graphs(input)) {
        const auto w = cs::find_chorded_cycle(g);
        if (!w) {
          std::cout << "none\n";
        } else {
          std::cout << (witness ? format_witness(*w) : std::string("chorded")) << '\n';
        }
      }
      return kExitPass;
    }
    if (*family) {
      if (family_name == "friendship" || family_name == "friendship-pendant") {
        const bool pendant = family_name == "friendship-pendant";
        int k = 0;
        if (fam_k) {
          k = *fam_k;
        } else if (fam_n) {
          const int rest = *fam_n - (pendant ? 2 : 1);
          if (rest < 2 || rest % 2) throw UsageError("no " + family_name + " graph of order " + std::to_string(*fam_n));
          k = rest / 2;
        } else {
          throw UsageError(family_name + " needs --k or --n");
        }
        std::cout << cs::to_graph6(pendant ? cs::friendship_pendant(k) : cs::friendship(k)) << '\n';
        return kExitPass;
      }
      if (family_name == "k2a") {
        int a = 0;
        if (fam_a) {
          a = *fam_a;
        } else if (fam_n) {
          a = *fam_n - 2;
        } else {
          throw UsageError("k2a needs --a or --n");
        }
        if (a < 1) throw UsageError("k2a needs a >= 1");
        std::cout << cs::to_graph6(cs::complete_bipartite(2, a)) << '\n';
        return kExitPass;
      }
      // bullet, star: n = a + 2k + 2, any two parameters determine the third.
      int given = (fam_a ? 1 : 0) + (fam_k ? 1 : 0) + (fam_n ? 1 : 0);
      if (given < 2) throw UsageError(family_name + " needs two of --a, --k, --n");
      int a = fam_a.value_or(0), k = fam_k.value_or(0);
      if (!fam_a) a = *fam_n - 2 * k - 2;
      if (!fam_k) {
        if ((*fam_n - a - 2) % 2) throw UsageError("n - a - 2 must be even");
        k = (*fam_n - a - 2) / 2;
      }
      if (fam_n && *fam_n != a + 2 * k + 2) throw UsageError("inconsistent parameters: need n = a + 2k + 2");
      const cs::Graph g = family_name == "bullet" ? cs::k2a_bullet_f(a, k) : cs::k2a_star_f(a, k);
      std::cout << cs::to_graph6(g) << '\n';
      return kExitPass;
    }
    if (*verify) {
      cs::VerificationReport r;
      if (claim == "theorem") {
        cs::TheoremOptions o;
        o.n = v_n.value_or(6);
        o.jobs = jobs;
        o.threshold = v_threshold;
        o.use_oracle = oracle;
        o.check_signs = signs;
        o.exploratory = explore;
        r = cs::verify_theorem(o);
      } else if (claim == "posa") {
        r = cs::verify_posa(v_n.value_or(6), jobs, v_min_edges);
      } else if (claim == "lemma3") {
        r = cs::verify_lemma3(v_kmax.value_or(20));
      } else if (claim == "lemma5") {
        r = cs::verify_lemma5(v_nmax.value_or(40));
      } else {
        r = cs::verify_lemma6(v_nmax.value_or(40));
      }
      return emit_report(r, json_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "chordspec: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
