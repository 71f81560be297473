#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace pnrule {

/// A truth degree. Kept as a plain double: all degrees come from finitely many
/// linear operations on assertion values, and comparisons are exact.
using Degree = double;

/// The three basic t-norm based fuzzy logics.
enum class Logic { Lukasiewicz, Goedel, Product };

std::string_view to_string(Logic logic);
Logic parse_logic(std::string_view text);

// ---- Truth-combination functions -------------------------------------------

Degree tnorm(Logic logic, Degree x, Degree y);
Degree tconorm(Logic logic, Degree x, Degree y);
/// Residuum of the family's t-norm.
Degree implication(Logic logic, Degree x, Degree y);
Degree negation(Logic logic, Degree x);

/// Final combiner of the positive and non-positive degrees: p if p > n, else 0.
/// Ties resolve to 0.
constexpr Degree aggregate_star(Degree p, Degree n) noexcept { return p > n ? p : 0.0; }

/// Aggregation operators of the classifier ensemble. Only max for the P- and
/// N-rule groups and star for the final combination are supported.
enum class Aggregator { Max, Star };

struct AggregationChoice {
  Aggregator positive = Aggregator::Max;
  Aggregator negative = Aggregator::Max;
  Aggregator final = Aggregator::Star;

  friend bool operator==(const AggregationChoice&, const AggregationChoice&) = default;
};

/// A data value attached to an individual by a datatype property.
using DataValue = std::variant<double, bool>;

/// Closed interval of an attribute's values.
struct ValueRange {
  double low = 0.0;
  double high = 0.0;

  friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

/// A fuzzy (or crisp) unary datatype predicate over a numeric or boolean
/// attribute. Parameters are validated on construction; evaluation is total.
class FuzzyDatatype {
 public:
  enum class Kind { LeftShoulder, RightShoulder, Triangular, Trapezoidal, EqualsBool, AtLeast, AtMost };

  static FuzzyDatatype left_shoulder(double a, double b, std::optional<ValueRange> range = {},
                                     std::string label = {});
  static FuzzyDatatype right_shoulder(double a, double b, std::optional<ValueRange> range = {},
                                      std::string label = {});
  static FuzzyDatatype triangular(double a, double b, double c, std::optional<ValueRange> range = {},
                                  std::string label = {});
  static FuzzyDatatype trapezoidal(double a, double b, double c, double d,
                                   std::optional<ValueRange> range = {}, std::string label = {});
  static FuzzyDatatype equals_bool(bool value);
  static FuzzyDatatype at_least(double v, std::string label = {});
  static FuzzyDatatype at_most(double v, std::string label = {});
  /// Any numeric kind from its parameter list; throws ValidationError when the
  /// arity does not match the kind.
  static FuzzyDatatype from_parameters(Kind kind, std::span<const double> params,
                                       std::optional<ValueRange> range = {}, std::string label = {});

  Kind kind() const noexcept { return kind_; }
  bool is_boolean() const noexcept { return kind_ == Kind::EqualsBool; }
  std::span<const double> parameters() const noexcept { return {params_.data(), arity_}; }
  bool bool_value() const noexcept { return bool_value_; }
  /// Range of the underlying attribute (defaults to the parameter extent).
  const ValueRange& range() const noexcept { return range_; }
  const std::string& label() const noexcept { return label_; }

  Degree membership(double v) const noexcept;
  Degree membership(bool v) const noexcept;
  /// Numeric datatypes give 0 on booleans and vice versa.
  Degree membership(const DataValue& v) const noexcept;

  /// Canonical text used for identity, e.g. `tri(0|5|10)` or `=true`.
  std::string key() const;

  friend bool operator==(const FuzzyDatatype&, const FuzzyDatatype&) = default;

 private:
  FuzzyDatatype(Kind kind, std::initializer_list<double> params, std::optional<ValueRange> range,
                std::string label);

  Kind kind_;
  std::array<double, 4> params_{};
  std::size_t arity_ = 0;
  bool bool_value_ = false;
  ValueRange range_;
  std::string label_;
};

std::string_view to_string(FuzzyDatatype::Kind kind);
/// Inverse of to_string(Kind); nullopt for unknown names.
std::optional<FuzzyDatatype::Kind> parse_datatype_kind(std::string_view text);

}  // namespace pnrule
