#include "pnrule/fuzzy.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pnrule/error.hpp"

namespace pnrule {

std::string_view to_string(Logic logic) {
  switch (logic) {
    case Logic::Lukasiewicz: return "lukasiewicz";
    case Logic::Goedel: return "goedel";
    case Logic::Product: return "product";
  }
  return "?";
}

Logic parse_logic(std::string_view text) {
  if (text == "lukasiewicz") return Logic::Lukasiewicz;
  if (text == "goedel" || text == "godel" || text == "min") return Logic::Goedel;
  if (text == "product") return Logic::Product;
  throw ValidationError(fmt::format("unknown fuzzy logic '{}'", text));
}

Degree tnorm(Logic logic, Degree x, Degree y) {
  switch (logic) {
    case Logic::Lukasiewicz:
      // 1 is the identity; x + 1 - 1 need not round back to x.
      if (x == 1.0) return y;
      if (y == 1.0) return x;
      return std::max(x + y - 1.0, 0.0);
    case Logic::Goedel: return std::min(x, y);
    case Logic::Product: return x * y;
  }
  return 0.0;
}

Degree tconorm(Logic logic, Degree x, Degree y) {
  switch (logic) {
    case Logic::Lukasiewicz: return std::min(x + y, 1.0);
    case Logic::Goedel: return std::max(x, y);
    case Logic::Product: return x + y - x * y;
  }
  return 0.0;
}

Degree implication(Logic logic, Degree x, Degree y) {
  switch (logic) {
    case Logic::Lukasiewicz: return std::min(1.0 - x + y, 1.0);
    case Logic::Goedel: return x <= y ? 1.0 : y;
    case Logic::Product: return x <= y ? 1.0 : y / x;
  }
  return 0.0;
}

Degree negation(Logic logic, Degree x) {
  if (logic == Logic::Lukasiewicz) return 1.0 - x;
  return x == 0.0 ? 1.0 : 0.0;
}

std::string_view to_string(FuzzyDatatype::Kind kind) {
  using K = FuzzyDatatype::Kind;
  switch (kind) {
    case K::LeftShoulder: return "left-shoulder";
    case K::RightShoulder: return "right-shoulder";
    case K::Triangular: return "triangular";
    case K::Trapezoidal: return "trapezoidal";
    case K::EqualsBool: return "equals";
    case K::AtLeast: return "at-least";
    case K::AtMost: return "at-most";
  }
  return "?";
}

std::optional<FuzzyDatatype::Kind> parse_datatype_kind(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(FuzzyDatatype::Kind::AtMost); ++i) {
    const auto kind = static_cast<FuzzyDatatype::Kind>(i);
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

FuzzyDatatype::FuzzyDatatype(Kind kind, std::initializer_list<double> params,
                             std::optional<ValueRange> range, std::string label)
    : kind_(kind), arity_(params.size()), label_(std::move(label)) {
  std::copy(params.begin(), params.end(), params_.begin());
  const auto p = parameters();
  for (double v : p) {
    if (!std::isfinite(v)) throw ValidationError(fmt::format("{}: non-finite parameter", to_string(kind)));
  }
  bool ordered = true;
  switch (kind) {
    case Kind::LeftShoulder:
    case Kind::RightShoulder: ordered = p[0] < p[1]; break;
    case Kind::Triangular: ordered = p[0] < p[1] && p[1] < p[2]; break;
    case Kind::Trapezoidal: ordered = p[0] < p[1] && p[1] <= p[2] && p[2] < p[3]; break;
    default: break;
  }
  if (!ordered) {
    throw ValidationError(fmt::format("{}({}): parameters out of order", to_string(kind), fmt::join(p, ",")));
  }
  if (range) {
    if (!(range->low <= range->high)) throw ValidationError("datatype range with low > high");
    if (p.front() < range->low || p.back() > range->high) {
      throw ValidationError(fmt::format("{}({}): parameters outside range [{},{}]", to_string(kind),
                                        fmt::join(p, ","), range->low, range->high));
    }
    range_ = *range;
  } else if (!p.empty()) {
    range_ = {p.front(), p.back()};
  }
}

FuzzyDatatype FuzzyDatatype::left_shoulder(double a, double b, std::optional<ValueRange> range,
                                           std::string label) {
  return {Kind::LeftShoulder, {a, b}, range, std::move(label)};
}

FuzzyDatatype FuzzyDatatype::right_shoulder(double a, double b, std::optional<ValueRange> range,
                                            std::string label) {
  return {Kind::RightShoulder, {a, b}, range, std::move(label)};
}

FuzzyDatatype FuzzyDatatype::triangular(double a, double b, double c, std::optional<ValueRange> range,
                                        std::string label) {
  return {Kind::Triangular, {a, b, c}, range, std::move(label)};
}

FuzzyDatatype FuzzyDatatype::trapezoidal(double a, double b, double c, double d,
                                         std::optional<ValueRange> range, std::string label) {
  return {Kind::Trapezoidal, {a, b, c, d}, range, std::move(label)};
}

FuzzyDatatype FuzzyDatatype::equals_bool(bool value) {
  FuzzyDatatype d{Kind::EqualsBool, {}, std::nullopt, value ? "true" : "false"};
  d.bool_value_ = value;
  return d;
}

FuzzyDatatype FuzzyDatatype::at_least(double v, std::string label) {
  return {Kind::AtLeast, {v}, std::nullopt, std::move(label)};
}

FuzzyDatatype FuzzyDatatype::at_most(double v, std::string label) {
  return {Kind::AtMost, {v}, std::nullopt, std::move(label)};
}

FuzzyDatatype FuzzyDatatype::from_parameters(Kind kind, std::span<const double> p,
                                             std::optional<ValueRange> range, std::string label) {
  static constexpr std::array<std::size_t, 7> arity = {2, 2, 3, 4, 0, 1, 1};
  if (kind == Kind::EqualsBool || p.size() != arity[static_cast<int>(kind)]) {
    throw ValidationError(fmt::format("{} does not take {} parameter(s)", to_string(kind), p.size()));
  }
  switch (kind) {
    case Kind::LeftShoulder: return left_shoulder(p[0], p[1], range, std::move(label));
    case Kind::RightShoulder: return right_shoulder(p[0], p[1], range, std::move(label));
    case Kind::Triangular: return triangular(p[0], p[1], p[2], range, std::move(label));
    case Kind::Trapezoidal: return trapezoidal(p[0], p[1], p[2], p[3], range, std::move(label));
    case Kind::AtLeast: return at_least(p[0], std::move(label));
    default: return at_most(p[0], std::move(label));
  }
}

Degree FuzzyDatatype::membership(double x) const noexcept {
  const double* p = params_.data();
  switch (kind_) {
    case Kind::LeftShoulder:
      if (x <= p[0]) return 1.0;
      if (x >= p[1]) return 0.0;
      return (p[1] - x) / (p[1] - p[0]);
    case Kind::RightShoulder:
      if (x <= p[0]) return 0.0;
      if (x >= p[1]) return 1.0;
      return (x - p[0]) / (p[1] - p[0]);
    case Kind::Triangular:
      if (x <= p[0] || x >= p[2]) return 0.0;
      if (x <= p[1]) return (x - p[0]) / (p[1] - p[0]);
      return (p[2] - x) / (p[2] - p[1]);
    case Kind::Trapezoidal:
      if (x <= p[0] || x >= p[3]) return 0.0;
      if (x < p[1]) return (x - p[0]) / (p[1] - p[0]);
      if (x <= p[2]) return 1.0;
      return (p[3] - x) / (p[3] - p[2]);
    case Kind::AtLeast: return x >= p[0] ? 1.0 : 0.0;
    case Kind::AtMost: return x <= p[0] ? 1.0 : 0.0;
    case Kind::EqualsBool: return 0.0;
  }
  return 0.0;
}

Degree FuzzyDatatype::membership(bool v) const noexcept {
  if (kind_ != Kind::EqualsBool) return 0.0;
  return v == bool_value_ ? 1.0 : 0.0;
}

Degree FuzzyDatatype::membership(const DataValue& v) const noexcept {
  return std::visit([this](auto x) { return membership(x); }, v);
}

std::string FuzzyDatatype::key() const {
  if (kind_ == Kind::EqualsBool) return bool_value_ ? "=true" : "=false";
  static constexpr std::array<std::string_view, 7> tags = {"ls", "rs", "tri", "trz", "eq", "ge", "le"};
  return fmt::format("{}{}({:.17g})", label_.empty() ? "" : label_ + ":", tags[static_cast<int>(kind_)],
                     fmt::join(parameters(), "|"));
}

}  // namespace pnrule
