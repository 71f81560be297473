#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pnrule/evaluation.hpp"
#include "pnrule/kb.hpp"
#include "pnrule/task.hpp"

namespace pnrule {

/// Process exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `pnrule` command line (`args` excludes the program name).
/// Subcommands: convert, learn, predict, eval, export.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

/// One fuzzification setting of an evaluation sweep.
struct SweepPoint {
  Fuzzification method = Fuzzification::Uniform;
  std::size_t sets = 3;
  std::vector<MetricsReport> reports;  ///< one per target
  double mean_f1 = 0.0;
};

/// Cross-validates every task under every (method, sets) pair. Points come
/// back in the order given.
std::vector<SweepPoint> sweep(const KnowledgeBase& kb, const std::vector<LearningTask>& tasks,
                              const std::vector<std::pair<Fuzzification, std::size_t>>& grid,
                              const CrossValidationOptions& options);

/// Uniform and c-means, each with 3, 5 and 7 sets.
std::vector<std::pair<Fuzzification, std::size_t>> default_sweep_grid();

/// Index of the point with the highest mean F1 (first on ties).
std::size_t best_point(const std::vector<SweepPoint>& points);

}  // namespace pnrule
