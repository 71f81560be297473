#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pnrule/fuzzy.hpp"
#include "pnrule/kb.hpp"
#include "pnrule/task.hpp"

namespace pnrule {

/// Ordered fuzzy partition of one numeric property: a left shoulder, zero or
/// more triangles and a right shoulder with strictly increasing peaks.
struct FuzzySetFamily {
  std::string property;
  std::vector<FuzzyDatatype> sets;
  ValueRange range;

  friend bool operator==(const FuzzySetFamily&, const FuzzySetFamily&) = default;
};

/// Linguistic labels for a family of `k` sets: low/medium/high for 3, with
/// veryLow/veryHigh added for 5 and extremelyLow/extremelyHigh for 7.
/// Other sizes fall back to low/high (k = 2) or `level<i>`.
std::vector<std::string> set_labels(std::size_t k);

/// Exported name of a set: `<property>_<label>`.
std::string fuzzy_set_name(std::string_view property, std::string_view label);

/// Equal-width partition with peaks at min + i*(max-min)/(k-1).
/// Throws ValidationError for k < 3 or fewer than two distinct values.
FuzzySetFamily uniform_partition(std::span<const double> values, std::size_t k, std::string property = {});

struct CMeansConfig {
  std::size_t k = 3;
  double fuzzifier = 2.0;
  double epsilon = 0.05;         ///< bound on the largest membership change
  std::size_t max_iterations = 100;
};

/// Diagnostics of one clustering run, one entry per iteration.
struct CMeansTrace {
  std::vector<double> objective;       ///< J_m after each centroid update
  std::vector<double> row_sum_error;   ///< max |Σ_j u_ij - 1| of the membership matrix used
  std::vector<double> max_change;      ///< max |Δu_ij| between consecutive matrices
  bool converged = false;
};

struct CMeansResult {
  std::vector<double> centroids;  ///< sorted
  CMeansTrace trace;
};

/// One-dimensional fuzzy c-means on the distinct values of `values`,
/// weighted by multiplicity. Initial centroids are k quantile-spaced distinct
/// values. Throws ValidationError when there are fewer than k distinct values
/// or the configuration is invalid.
CMeansResult fuzzy_cmeans(std::span<const double> values, const CMeansConfig& cfg);
std::vector<double> cmeans_centroids(std::span<const double> values, const CMeansConfig& cfg);

/// Shoulders at the outermost centroids and triangles around the inner ones.
/// Throws ValidationError for fewer than two or non-increasing centroids.
FuzzySetFamily centroids_to_family(std::span<const double> centroids, ValueRange range, std::string property);

/// Families for every numeric data property of `kb` with at least two
/// distinct values, built from the values asserted in `kb`. C-means falls
/// back to a uniform partition when a property has fewer distinct values than
/// the requested set count (the partition keeps k sets).
std::vector<FuzzySetFamily> build_families(const KnowledgeBase& kb, Fuzzification method, std::size_t k,
                                           const CMeansParams& cmeans = {});

}  // namespace pnrule
