#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pnrule/kb.hpp"
#include "pnrule/reasoner.hpp"
#include "pnrule/task.hpp"

namespace pnrule {

/// Partition of the labelled individuals into k test folds.
struct FoldPlan {
  std::vector<IndividualSet> folds;
  std::uint64_t seed = 0;
  bool stratified = true;
};

/// Stratified shuffle-split: positives and non-positives are shuffled
/// separately (seeded) and dealt round-robin, the non-positives continuing
/// where the positives stopped. Throws ValidationError for k < 2 or fewer
/// than k positives.
FoldPlan make_folds(const KnowledgeBase& kb, const LearningTask& task, std::size_t k, std::uint64_t seed);

/// The knowledge base a fold trains on: declarations kept, every assertion
/// involving a test individual removed.
KnowledgeBase train_view(const KnowledgeBase& kb, const IndividualSet& test_fold);

struct MetricsRow {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t positives = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Precision, recall and F1 from counts; 0/0 gives 0 throughout.
MetricsRow metrics_from_counts(std::size_t tp, std::size_t fp, std::size_t positives);

/// Crisp counts of covered positives and non-positives among `test`.
/// `labels` decides who is positive; everything else is non-positive.
MetricsRow compute_metrics(const Reasoner& full, const Hypothesis& h, const IndividualSet& test,
                           const LearningTask& labels);

struct FoldResult {
  std::size_t fold = 0;
  MetricsRow metrics;
  double seconds = 0.0;
  std::size_t p_rules = 0;
  std::size_t n_rules = 0;
};

struct MetricsReport {
  std::string target;
  std::vector<FoldResult> folds;
  double precision = 0.0;  ///< macro averages over folds
  double recall = 0.0;
  double f1 = 0.0;
};

struct CrossValidationOptions {
  std::size_t folds = 5;
  std::uint64_t seed = 42;
  std::size_t jobs = 1;  ///< folds evaluated concurrently
};

/// k-fold cross-validation: each fold trains on train_view and is scored on
/// the held-out individuals against the full knowledge base.
MetricsReport cross_validate(const KnowledgeBase& kb, const LearningTask& task, const CrossValidationOptions& opts);

/// Line-delimited records, tab separated:
/// `target fold tp fp precision recall f1 seconds`. Timings are written as 0
/// unless `with_timings` is set so repeated runs are byte identical.
void write_records(std::ostream& out, const std::vector<MetricsReport>& reports, bool with_timings);
/// Human-readable table with per-fold rows and macro averages.
void write_table(std::ostream& out, const std::vector<MetricsReport>& reports, bool with_timings);

/// Mean of per-target macro F1.
double mean_f1(const std::vector<MetricsReport>& reports);

}  // namespace pnrule
