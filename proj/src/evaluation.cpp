#include "pnrule/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <ostream>
#include <random>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pnrule/error.hpp"
#include "pnrule/learner.hpp"

namespace pnrule {

FoldPlan make_folds(const KnowledgeBase& kb, const LearningTask& task, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw ValidationError(fmt::format("need at least 2 folds, got {}", k));
  IndividualSet positives = task.individuals_with(kb, Label::Positive);
  IndividualSet negatives = task.individuals_with(kb, Label::Negative);
  if (positives.size() < k) {
    throw ValidationError(
        fmt::format("{} positives cannot give each of {} folds a positive example", positives.size(), k));
  }
  std::mt19937_64 rng(seed);
  std::shuffle(positives.begin(), positives.end(), rng);
  std::shuffle(negatives.begin(), negatives.end(), rng);

  FoldPlan plan{std::vector<IndividualSet>(k), seed, true};
  std::size_t next = 0;
  for (const auto* group : {&positives, &negatives}) {
    for (auto a : *group) {
      plan.folds[next].push_back(a);
      next = (next + 1) % k;
    }
  }
  for (auto& f : plan.folds) std::sort(f.begin(), f.end());
  return plan;
}

KnowledgeBase train_view(const KnowledgeBase& kb, const IndividualSet& test_fold) {
  return kb.without_assertions_involving(test_fold);
}

MetricsRow metrics_from_counts(std::size_t tp, std::size_t fp, std::size_t positives) {
  MetricsRow m{tp, fp, positives};
  m.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  m.recall = positives == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(positives);
  m.f1 = m.precision + m.recall == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

MetricsRow compute_metrics(const Reasoner& full, const Hypothesis& h, const IndividualSet& test,
                           const LearningTask& labels) {
  const auto values = hypothesis_values(full, h);
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t positives = 0;
  for (auto a : test) {
    auto it = labels.labels.find(full.kb().name(a));
    const bool positive = it != labels.labels.end() && it->second == Label::Positive;
    const bool covered = values[index(a)] > 0.0;
    positives += positive;
    tp += positive && covered;
    fp += !positive && covered;
  }
  return metrics_from_counts(tp, fp, positives);
}

namespace {

FoldResult run_fold(const KnowledgeBase& kb, const LearningTask& task, const IndividualSet& test, std::size_t fold) {
  const auto start = std::chrono::steady_clock::now();
  const KnowledgeBase train = train_view(kb, test);
  LearningTask train_task = task;
  for (auto a : test) train_task.labels.erase(kb.name(a));
  const Hypothesis h = pn_owl(train, train_task);

  const Reasoner full(kb, h.conjunction);
  FoldResult result;
  result.fold = fold;
  result.metrics = compute_metrics(full, h, test, task);
  result.p_rules = h.p_rules.size();
  result.n_rules = h.n_rules.size();
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

MetricsReport cross_validate(const KnowledgeBase& kb, const LearningTask& task, const CrossValidationOptions& opts) {
  task.validate(kb);
  const FoldPlan plan = make_folds(kb, task, opts.folds, opts.seed);

  MetricsReport report;
  report.target = task.target;
  report.folds.resize(plan.folds.size());
  const std::size_t jobs = std::max<std::size_t>(1, opts.jobs);
  for (std::size_t first = 0; first < plan.folds.size(); first += jobs) {
    const std::size_t last = std::min(plan.folds.size(), first + jobs);
    std::vector<std::future<FoldResult>> pending;
    for (std::size_t f = first; f < last; ++f) {
      pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                   [&, f] { return run_fold(kb, task, plan.folds[f], f); }));
    }
    for (std::size_t f = first; f < last; ++f) report.folds[f] = pending[f - first].get();
  }

  for (const auto& f : report.folds) {
    report.precision += f.metrics.precision;
    report.recall += f.metrics.recall;
    report.f1 += f.metrics.f1;
  }
  const auto n = static_cast<double>(report.folds.size());
  report.precision /= n;
  report.recall /= n;
  report.f1 /= n;
  return report;
}

void write_records(std::ostream& out, const std::vector<MetricsReport>& reports, bool with_timings) {
  for (const auto& r : reports) {
    for (const auto& f : r.folds) {
      fmt::print(out, "{}\t{}\t{}\t{}\t{:.6f}\t{:.6f}\t{:.6f}\t{:.3f}\n", r.target, f.fold, f.metrics.tp, f.metrics.fp,
                 f.metrics.precision, f.metrics.recall, f.metrics.f1, with_timings ? f.seconds : 0.0);
    }
  }
}

void write_table(std::ostream& out, const std::vector<MetricsReport>& reports, bool with_timings) {
  fmt::print(out, "{:<24} {:>5} {:>5} {:>5} {:>9} {:>9} {:>9} {:>7} {:>7} {:>9}\n", "target", "fold", "tp", "fp",
             "precision", "recall", "f1", "p_rules", "n_rules", "seconds");
  for (const auto& r : reports) {
    for (const auto& f : r.folds) {
      fmt::print(out, "{:<24} {:>5} {:>5} {:>5} {:>9.3f} {:>9.3f} {:>9.3f} {:>7} {:>7} {:>9.3f}\n", r.target, f.fold,
                 f.metrics.tp, f.metrics.fp, f.metrics.precision, f.metrics.recall, f.metrics.f1, f.p_rules,
                 f.n_rules, with_timings ? f.seconds : 0.0);
    }
    fmt::print(out, "{:<24} {:>5} {:>5} {:>5} {:>9.3f} {:>9.3f} {:>9.3f}\n", r.target, "macro", "", "", r.precision,
               r.recall, r.f1);
  }
  if (reports.size() > 1) {
    double p = 0.0, rc = 0.0;
    for (const auto& r : reports) {
      p += r.precision;
      rc += r.recall;
    }
    const auto n = static_cast<double>(reports.size());
    fmt::print(out, "{:<24} {:>5} {:>5} {:>5} {:>9.3f} {:>9.3f} {:>9.3f}\n", "average", "", "", "", p / n, rc / n,
               mean_f1(reports));
  }
}

double mean_f1(const std::vector<MetricsReport>& reports) {
  if (reports.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : reports) sum += r.f1;
  return sum / static_cast<double>(reports.size());
}

}  // namespace pnrule
