#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pnrule/fuzzification.hpp"
#include "pnrule/task.hpp"

namespace pnrule {

/// A learnt hypothesis with the fuzzy sets it was learnt with, as stored by
/// `learn` and read back by `predict` and `export`.
struct HypothesisFile {
  Hypothesis hypothesis;
  std::vector<FuzzySetFamily> families;

  friend bool operator==(const HypothesisFile&, const HypothesisFile&) = default;
};

/// JSON with every parameter and degree at full precision.
std::string hypothesis_to_json(const HypothesisFile& file);
/// Throws ParseError for malformed documents.
HypothesisFile hypothesis_from_json(std::string_view text, const std::string& source = "<json>");

void save_hypothesis(const std::filesystem::path& path, const HypothesisFile& file);
HypothesisFile load_hypothesis(const std::filesystem::path& path);

}  // namespace pnrule
