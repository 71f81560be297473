#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "pnrule/task.hpp"

namespace pnrule {

/// Settings of a CLI run. `task` carries every learning parameter (labels and
/// target are filled in from the examples); the rest is plumbing.
struct RunConfig {
  LearningTask task;
  std::filesystem::path kb;
  std::filesystem::path examples;
  std::filesystem::path out;
  std::size_t folds = 5;
  std::size_t jobs = 1;
};

/// Applies `key = value` lines to `config`. `#` starts a comment. Keys:
///
///   kb, examples, out, target, folds, jobs, seed,
///   fuzzification (uniform|cmeans), fuzzy_sets,
///   cmeans_fuzzifier, cmeans_epsilon, cmeans_max_iterations,
///   conjunction, gci (lukasiewicz|goedel|product), backtrack,
///   n_stage (true|false),
///   p_theta, p_eta, p_max_conjuncts, p_max_depth,
///   n_theta, n_eta, n_max_conjuncts, n_max_depth
///
/// Unknown keys and malformed values throw ParseError.
void parse_config(std::istream& in, RunConfig& config, const std::string& source = "<config>");
void load_config(const std::filesystem::path& path, RunConfig& config);

/// Sets one key; throws ValidationError for unknown keys or bad values.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);

void write_config(std::ostream& out, const RunConfig& config);

}  // namespace pnrule
