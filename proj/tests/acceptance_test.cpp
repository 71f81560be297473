#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "pnrule/cli.hpp"
#include "pnrule/evaluation.hpp"
#include "pnrule/fuzzification.hpp"
#include "pnrule/fuzzy.hpp"
#include "pnrule/fuzzyowl.hpp"
#include "pnrule/learner.hpp"
#include "pnrule/reasoner.hpp"
#include "pnrule/refinement.hpp"
#include "support/bed_oracle.hpp"
#include "support/random_kb.hpp"

namespace fs = std::filesystem;
using namespace pnrule;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / "pnrule_acceptance" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string data(const std::string& name) { return (fs::path(PNRULE_TEST_DATA_DIR) / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Best mean F1 over the sweep written by `eval --sweep`.
double best_sweep_f1(const fs::path& dir, std::string& best_line) {
  std::istringstream in(slurp(dir / "sweep.tsv"));
  double best = -1.0;
  for (std::string line; std::getline(in, line);) {
    const double f1 = std::stod(line.substr(line.rfind('\t') + 1));
    if (f1 > best) {
      best = f1;
      best_line = line;
    }
  }
  return best;
}

Outcome end_to_end(std::vector<std::string> args, const std::string& name, double min_f1, double max_seconds) {
  const auto dir = scratch(name);
  args.insert(args.begin(), "eval");
  for (const auto* extra : {"--sweep", "--out"}) args.emplace_back(extra);
  args.push_back(dir.string());
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli_main(args, out, err);
  const double elapsed = seconds_since(start);
  if (code != kExitOk) return {false, "eval failed: " + err.str()};
  std::string best_line;
  const double f1 = best_sweep_f1(dir, best_line);
  std::replace(best_line.begin(), best_line.end(), '\t', ' ');
  return {f1 >= min_f1 && elapsed < max_seconds,
          fmt::format("best macro F1 {:.4f} ({}) >= {:.2f}, {:.1f}s < {:.0f}s", f1, best_line, min_f1, elapsed,
                      max_seconds)};
}

Outcome iris() {
  return end_to_end({"--csv", data("iris.csv"), "--target-column", "class", "--positive", "Iris-versicolor",
                     "--positive", "Iris-virginica"},
                    "iris", 0.85, 600);
}

Outcome wine() { return end_to_end({"--csv", data("wine.csv"), "--target-column", "class"}, "wine", 0.82, 1200); }

// Six positives and k = 3 false positives share A; B separates the false
// positives, C marks the remaining negatives.
Outcome n_stage_value() {
  KnowledgeBase::Builder b;
  for (const auto* c : {"A", "B", "C"}) b.declare_class(c);
  LearningTask task;
  task.target = "T";
  for (int i = 0; i < 6; ++i) {
    const auto name = fmt::format("p{}", i);
    b.declare_individual(name).add_class_assertion(name, "A");
    task.labels[name] = Label::Positive;
  }
  for (int i = 0; i < 8; ++i) {
    const auto name = fmt::format("n{}", i);
    b.declare_individual(name);
    if (i < 3) {
      b.add_class_assertion(name, "A").add_class_assertion(name, "B");
    } else {
      b.add_class_assertion(name, "C");
    }
    task.labels[name] = Label::Negative;
  }
  const KnowledgeBase kb = std::move(b).build();
  const auto positives = task.individuals_with(kb, Label::Positive);

  LearningTask p_only = task;
  p_only.run_n_stage = false;
  const Hypothesis pn = pn_owl(kb, task);
  const Hypothesis p = pn_owl(kb, p_only);
  const Reasoner r(kb, task.conjunction);
  const auto everyone = kb.all_individuals();
  const double f1_pn = compute_metrics(r, pn, everyone, task).f1;
  const double f1_p = compute_metrics(r, p, everyone, task).f1;

  // Exhaustive: every individual's value recomputed one by one.
  IndividualSet covered;
  for (auto a : everyone) {
    if (hypothesis_value(r, pn, a) > 0.0) covered.push_back(a);
  }
  const bool exact = covered == positives && coverage(r, pn) == positives;
  return {f1_pn > f1_p && exact && !pn.n_rules.empty(),
          fmt::format("PN F1 {:.4f} > P-only F1 {:.4f}, {} N-rule(s), coverage == positives: {}", f1_pn, f1_p,
                      pn.n_rules.size(), exact)};
}

Outcome bed_oracle() {
  std::mt19937_64 rng(2024);
  const Logic logics[] = {Logic::Goedel, Logic::Lukasiewicz, Logic::Product};
  std::size_t checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto kb = testing::random_kb(rng, {8, 4, 2, 2, 1});
    const Logic logic = logics[trial % 3];
    const Reasoner r(kb, logic);
    const testing::BedOracle oracle(kb, logic);
    for (int k = 0; k < 5; ++k) {
      const auto c = testing::random_concept(rng, kb, 2);
      for (std::size_t a = 0; a < kb.individual_count(); ++a) {
        ++checks;
        if (r.bed(individual_at(a), c) != oracle.bed(a, c)) {
          return {false, fmt::format("trial {}: {} differs on {}", trial, c.key(), kb.individuals()[a])};
        }
      }
    }
  }
  return {true, fmt::format("1000 KBs, {} exact agreements", checks)};
}

Outcome truth_axioms() {
  constexpr double eps = 1e-12;
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i / 20.0);
  std::size_t violations = 0;
  std::string first;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok && violations++ == 0) first = what;
  };
  for (auto logic : {Logic::Lukasiewicz, Logic::Goedel, Logic::Product}) {
    const auto name = std::string(to_string(logic));
    for (double x : grid) {
      check(std::abs(tnorm(logic, x, 1.0) - x) <= eps, name + " t-norm identity");
      check(std::abs(tconorm(logic, x, 0.0) - x) <= eps, name + " t-conorm identity");
      for (double y : grid) {
        check(std::abs(tnorm(logic, x, y) - tnorm(logic, y, x)) <= eps, name + " t-norm commutativity");
        check(std::abs(tconorm(logic, x, y) - tconorm(logic, y, x)) <= eps, name + " t-conorm commutativity");
        for (double z : grid) {
          check(std::abs(tnorm(logic, x, tnorm(logic, y, z)) - tnorm(logic, tnorm(logic, x, y), z)) <= eps,
                name + " t-norm associativity");
          check(std::abs(tconorm(logic, x, tconorm(logic, y, z)) - tconorm(logic, tconorm(logic, x, y), z)) <= eps,
                name + " t-conorm associativity");
          if (x <= y) {
            check(tnorm(logic, x, z) <= tnorm(logic, y, z) + eps, name + " t-norm monotonicity");
            check(tconorm(logic, x, z) <= tconorm(logic, y, z) + eps, name + " t-conorm monotonicity");
          }
          if (logic == Logic::Lukasiewicz) {
            const bool lhs = tnorm(logic, x, y) <= z + eps;
            const bool rhs = y <= implication(logic, x, z) + eps;
            check(lhs == rhs, "lukasiewicz residuation");
          }
        }
      }
    }
  }
  return {violations == 0, violations == 0 ? "3 families on the 21^3 grid, residuation holds"
                                           : fmt::format("{} violations, first: {}", violations, first)};
}

Outcome anti_monotonicity() {
  std::mt19937_64 rng(99);
  int samples = 0;
  while (samples < 500) {
    const auto kb = testing::random_kb(rng, {8, 4, 2, 2, 1});
    if (kb.individual_count() == 0) continue;
    const Refiner rho(kb, testing::grid_families(kb), 4, 2);
    const Reasoner r(kb);
    Concept c = Concept::top();
    const int walk = testing::uniform_int(rng, 0, 3);
    for (int step = 0; step < walk; ++step) {
      const auto next = rho.refine(c);
      if (next.empty()) break;
      c = next[testing::uniform_int(rng, 0, static_cast<int>(next.size()) - 1)];
    }
    const auto refinements = rho.refine(c);
    if (refinements.empty()) continue;
    const auto& d = refinements[testing::uniform_int(rng, 0, static_cast<int>(refinements.size()) - 1)];
    const auto a = individual_at(testing::uniform_int(rng, 0, static_cast<int>(kb.individual_count()) - 1));
    if (r.bed(a, d) > r.bed(a, c)) {
      return {false, fmt::format("bed({}, {}) > bed({}, {})", kb.name(a), d.key(), kb.name(a), c.key())};
    }
    ++samples;
  }
  return {true, "500 samples with bed(a,D) <= bed(a,C)"};
}

Outcome fcm() {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v;
    const int n = testing::uniform_int(rng, 8, 60);
    std::uniform_real_distribution<double> u(-50, 50);
    for (int i = 0; i < n; ++i) v.push_back(u(rng));
    const auto k = static_cast<std::size_t>(testing::uniform_int(rng, 2, 7));
    const auto result = fuzzy_cmeans(v, {k, 2.0, 1e-6, 300});
    for (double e : result.trace.row_sum_error) {
      if (e > 1e-9) return {false, fmt::format("row sum error {} in trial {}", e, trial)};
    }
    const auto& j = result.trace.objective;
    for (std::size_t i = 1; i < j.size(); ++i) {
      if (j[i] > j[i - 1] * (1 + 1e-12)) return {false, fmt::format("objective increased in trial {}", trial)};
    }
  }
  const std::vector<double> two = {1.0, 1.1, 0.9, 5.0, 5.1, 4.9};
  const auto c = cmeans_centroids(two, {2, 2.0, 0.05, 100});
  const bool close = std::abs(c[0] - 1.0) <= 0.05 && std::abs(c[1] - 5.0) <= 0.05;
  return {close, fmt::format("50 random runs stable, two-cluster centroids ({:.5f}, {:.5f})", c[0], c[1])};
}

Outcome metrics() {
  const auto perfect = metrics_from_counts(7, 0, 7);
  const auto half = metrics_from_counts(5, 5, 10);
  const auto nothing = metrics_from_counts(0, 0, 10);
  const bool trivial = perfect.precision == 1.0 && perfect.recall == 1.0 && perfect.f1 == 1.0 &&
                       half.precision == 0.5 && half.recall == 0.5 && half.f1 == 0.5 && nothing.precision == 0.0 &&
                       nothing.recall == 0.0 && nothing.f1 == 0.0;
  if (!trivial) return {false, "trivial examples"};

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto kb = testing::random_kb(rng, {8, 4, 2, 2, 0});
    if (kb.individual_count() == 0) {
      --trial;
      continue;
    }
    Hypothesis h;
    h.target = "T";
    const int rules = testing::uniform_int(rng, 0, 3);
    for (int i = 0; i < rules; ++i) {
      h.p_rules.push_back({testing::random_concept(rng, kb, 2), "T", testing::uniform_int(rng, 1, 10) / 10.0});
    }
    if (testing::coin(rng)) h.n_rules.push_back({testing::random_concept(rng, kb, 1), "FALSEP_T", 1.0});
    LearningTask labels;
    IndividualSet test;
    for (std::size_t a = 0; a < kb.individual_count(); ++a) {
      if (testing::coin(rng)) labels.labels[kb.individuals()[a]] = Label::Positive;
      if (testing::coin(rng, 0.7)) test.push_back(individual_at(a));
    }
    const Reasoner r(kb);
    const auto m = compute_metrics(r, h, test, labels);
    const auto covered = coverage(r, h);
    IndividualSet covered_test;
    std::set_intersection(covered.begin(), covered.end(), test.begin(), test.end(), std::back_inserter(covered_test));
    if (m.tp + m.fp != covered_test.size()) return {false, fmt::format("TP+FP != coverage in trial {}", trial)};
    const double lo = std::min(m.precision, m.recall);
    const double hi = std::max(m.precision, m.recall);
    if (m.f1 < lo - 1e-12 || m.f1 > hi + 1e-12 || m.f1 > (m.precision + m.recall) / 2 + 1e-12) {
      return {false, fmt::format("F1 bounds violated in trial {}", trial)};
    }
  }
  return {true, "trivial examples exact, 200 random configurations"};
}

Outcome golden_export() {
  const ValueRange range{1, 6};
  FuzzySetFamily f{"hasBiRads", {}, range};
  f.sets.push_back(FuzzyDatatype::left_shoulder(2.780, 3.997, range, "hasBiRads_low"));
  f.sets.push_back(FuzzyDatatype::triangular(2.780, 3.997, 5.022, range, "hasBiRads_medium"));
  f.sets.push_back(FuzzyDatatype::right_shoulder(3.997, 5.022, range, "hasBiRads_high"));
  Hypothesis h;
  h.target = "Severe";
  h.p_rules.push_back({Concept::some("hasBiRads", f.sets[1]), "Severe", 0.965068});
  const std::string text = export_fuzzyowl(h, {f});
  const std::string golden = "(define-fuzzy-concept hasBiRads_medium triangular(1,6,2.780,3.997,5.022))\n";
  return {text.find(golden) != std::string::npos, "verbatim define-fuzzy-concept line"};
}

Outcome determinism() {
  std::vector<std::string> contents;
  for (const auto* name : {"det1", "det2"}) {
    const auto dir = scratch(name);
    std::ostringstream out, err;
    const int code = cli_main({"eval", "--csv", data("iris.csv"), "--target-column", "class", "--seed", "7", "--out",
                               dir.string()},
                              out, err);
    if (code != kExitOk) return {false, "eval failed: " + err.str()};
    contents.push_back(slurp(dir / "records.tsv") + slurp(dir / "report.txt"));
  }
  return {contents[0] == contents[1] && !contents[0].empty(), "records.tsv and report.txt byte identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 iris end-to-end", iris},
      {"2 wine end-to-end", wine},
      {"3 n-stage value", n_stage_value},
      {"4 bed oracle equivalence", bed_oracle},
      {"5 truth-function axioms", truth_axioms},
      {"6 refinement anti-monotonicity", anti_monotonicity},
      {"7 fuzzy c-means", fcm},
      {"8 metric identities", metrics},
      {"9 export golden line", golden_export},
      {"10 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
