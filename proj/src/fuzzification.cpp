#include "pnrule/fuzzification.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pnrule/error.hpp"

namespace pnrule {

std::vector<std::string> set_labels(std::size_t k) {
  switch (k) {
    case 2: return {"low", "high"};
    case 3: return {"low", "medium", "high"};
    case 5: return {"veryLow", "low", "medium", "high", "veryHigh"};
    case 7: return {"extremelyLow", "veryLow", "low", "medium", "high", "veryHigh", "extremelyHigh"};
    default: break;
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(fmt::format("level{}", i));
  return labels;
}

std::string fuzzy_set_name(std::string_view property, std::string_view label) {
  return fmt::format("{}_{}", property, label);
}

namespace {

FuzzySetFamily family_from_peaks(const std::vector<double>& peaks, ValueRange range, std::string property) {
  const std::size_t k = peaks.size();
  const auto labels = set_labels(k);
  FuzzySetFamily family{std::move(property), {}, range};
  for (std::size_t i = 0; i < k; ++i) {
    auto name = fuzzy_set_name(family.property, labels[i]);
    if (i == 0) {
      family.sets.push_back(FuzzyDatatype::left_shoulder(peaks[0], peaks[1], range, std::move(name)));
    } else if (i + 1 == k) {
      family.sets.push_back(FuzzyDatatype::right_shoulder(peaks[k - 2], peaks[k - 1], range, std::move(name)));
    } else {
      family.sets.push_back(
          FuzzyDatatype::triangular(peaks[i - 1], peaks[i], peaks[i + 1], range, std::move(name)));
    }
  }
  return family;
}

struct WeightedValues {
  std::vector<double> x;
  std::vector<double> w;
};

WeightedValues distinct_weighted(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  WeightedValues out;
  for (double v : sorted) {
    if (!out.x.empty() && out.x.back() == v) {
      out.w.back() += 1.0;
    } else {
      out.x.push_back(v);
      out.w.push_back(1.0);
    }
  }
  return out;
}

using Matrix = std::vector<std::vector<double>>;  // [value][cluster]

Matrix memberships(const std::vector<double>& x, const std::vector<double>& c, double m) {
  const double exponent = 2.0 / (m - 1.0);
  Matrix u(x.size(), std::vector<double>(c.size(), 0.0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t zeros = 0;
    for (double cj : c) zeros += (x[i] == cj);
    if (zeros > 0) {
      for (std::size_t j = 0; j < c.size(); ++j) u[i][j] = x[i] == c[j] ? 1.0 / static_cast<double>(zeros) : 0.0;
      continue;
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
      const double dij = std::abs(x[i] - c[j]);
      double sum = 0.0;
      for (double cl : c) sum += std::pow(dij / std::abs(x[i] - cl), exponent);
      u[i][j] = 1.0 / sum;
    }
  }
  return u;
}

std::vector<double> update_centroids(const WeightedValues& data, const Matrix& u, double m,
                                     const std::vector<double>& previous) {
  std::vector<double> c(previous.size(), 0.0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < data.x.size(); ++i) {
      const double um = data.w[i] * std::pow(u[i][j], m);
      num += um * data.x[i];
      den += um;
    }
    c[j] = den > 0.0 ? num / den : previous[j];
  }
  return c;
}

double objective(const WeightedValues& data, const Matrix& u, const std::vector<double>& c, double m) {
  double j_m = 0.0;
  for (std::size_t i = 0; i < data.x.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const double d = data.x[i] - c[j];
      j_m += data.w[i] * std::pow(u[i][j], m) * d * d;
    }
  }
  return j_m;
}

double row_sum_error(const Matrix& u) {
  double worst = 0.0;
  for (const auto& row : u) {
    double s = 0.0;
    for (double v : row) s += v;
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

double max_difference(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
  }
  return worst;
}

}  // namespace

FuzzySetFamily uniform_partition(std::span<const double> values, std::size_t k, std::string property) {
  if (k < 3) throw ValidationError(fmt::format("uniform partition needs at least 3 sets, got {}", k));
  if (values.empty()) throw ValidationError("uniform partition of an empty value set");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!(*lo < *hi)) throw ValidationError("uniform partition of a degenerate range (all values identical)");
  const double low = *lo;
  const double high = *hi;
  std::vector<double> peaks(k);
  for (std::size_t i = 0; i < k; ++i) {
    peaks[i] = low + static_cast<double>(i) * (high - low) / static_cast<double>(k - 1);
  }
  peaks.back() = high;
  return family_from_peaks(peaks, {low, high}, std::move(property));
}

CMeansResult fuzzy_cmeans(std::span<const double> values, const CMeansConfig& cfg) {
  if (cfg.k < 2) throw ValidationError("c-means needs k >= 2");
  if (!(cfg.fuzzifier > 1.0)) throw ValidationError("c-means fuzzifier must be > 1");
  if (!(cfg.epsilon > 0.0)) throw ValidationError("c-means epsilon must be > 0");
  if (cfg.max_iterations == 0) throw ValidationError("c-means needs at least one iteration");
  const auto data = distinct_weighted(values);
  if (data.x.size() < cfg.k) {
    throw ValidationError(fmt::format("c-means with k={} on {} distinct values", cfg.k, data.x.size()));
  }

  const std::size_t n = data.x.size();
  std::vector<double> c(cfg.k);
  for (std::size_t j = 0; j < cfg.k; ++j) {
    const auto pos = static_cast<std::size_t>(
        std::llround(static_cast<double>(j) * static_cast<double>(n - 1) / static_cast<double>(cfg.k - 1)));
    c[j] = data.x[pos];
  }

  CMeansResult result;
  Matrix u = memberships(data.x, c, cfg.fuzzifier);
  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    c = update_centroids(data, u, cfg.fuzzifier, c);
    result.trace.objective.push_back(objective(data, u, c, cfg.fuzzifier));
    result.trace.row_sum_error.push_back(row_sum_error(u));
    Matrix next = memberships(data.x, c, cfg.fuzzifier);
    const double change = max_difference(next, u);
    result.trace.max_change.push_back(change);
    u = std::move(next);
    if (change < cfg.epsilon) {
      result.trace.converged = true;
      break;
    }
  }
  std::sort(c.begin(), c.end());
  result.centroids = std::move(c);
  return result;
}

std::vector<double> cmeans_centroids(std::span<const double> values, const CMeansConfig& cfg) {
  return fuzzy_cmeans(values, cfg).centroids;
}

FuzzySetFamily centroids_to_family(std::span<const double> centroids, ValueRange range, std::string property) {
  if (centroids.size() < 2) throw ValidationError("a fuzzy set family needs at least two centroids");
  for (std::size_t i = 1; i < centroids.size(); ++i) {
    if (!(centroids[i - 1] < centroids[i])) {
      throw ValidationError(fmt::format("centroids not strictly increasing at {} ({} then {})", i,
                                        centroids[i - 1], centroids[i]));
    }
  }
  return family_from_peaks({centroids.begin(), centroids.end()}, range, std::move(property));
}

std::vector<FuzzySetFamily> build_families(const KnowledgeBase& kb, Fuzzification method, std::size_t k,
                                           const CMeansParams& cmeans) {
  std::vector<FuzzySetFamily> families;
  for (const auto& [property, kind] : kb.data_properties()) {
    if (kind != DataKind::Numeric) continue;
    const auto values = datatype_values(kb, property);
    if (values.empty()) continue;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (!(*lo < *hi)) continue;
    const ValueRange range{*lo, *hi};
    if (method == Fuzzification::CMeans) {
      const CMeansConfig cfg{k, cmeans.fuzzifier, cmeans.epsilon, cmeans.max_iterations};
      std::vector<double> distinct(values);
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      if (distinct.size() >= k) {
        auto centroids = cmeans_centroids(values, cfg);
        if (std::adjacent_find(centroids.begin(), centroids.end()) == centroids.end()) {
          families.push_back(centroids_to_family(centroids, range, property));
          continue;
        }
      }
    }
    families.push_back(uniform_partition(values, k, property));
  }
  return families;
}

}  // namespace pnrule
