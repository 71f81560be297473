#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pnrule/concept.hpp"
#include "pnrule/fuzzy.hpp"
#include "pnrule/kb.hpp"

namespace pnrule::testing {

// Brute-force evaluator: naive fixpoint over the subclass axioms per
// individual, no memoisation, membership functions written as min/max
// compositions and truth functions restated independently.
class BedOracle {
 public:
  BedOracle(const KnowledgeBase& kb, Logic conjunction) : kb_(kb), logic_(conjunction) {
    for (std::size_t i = 0; i < kb.individual_count(); ++i) {
      std::set<std::string> types;
      for (const auto& a : kb.class_assertions()) {
        if (index(a.individual) == i) types.insert(a.class_name);
      }
      for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [sub, super] : kb.subclass_axioms()) {
          if (types.contains(sub) && types.insert(super).second) changed = true;
        }
      }
      types_.push_back(std::move(types));
    }
  }

  double bed(std::size_t a, const Concept& c) const {
    switch (c.kind()) {
      case Concept::Kind::Top: return 1.0;
      case Concept::Kind::Atomic: return types_[a].contains(c.name()) ? 1.0 : 0.0;
      case Concept::Kind::SomeObject: {
        double best = 0.0;
        for (const auto& r : kb_.role_assertions()) {
          if (index(r.subject) == a && r.property == c.name()) best = std::max(best, bed(index(r.object), c.filler()));
        }
        return best;
      }
      case Concept::Kind::SomeData: {
        double best = 0.0;
        for (const auto& d : kb_.data_assertions()) {
          if (index(d.individual) == a && d.property == c.name()) best = std::max(best, membership(c.datatype(), d.value));
        }
        return best;
      }
      case Concept::Kind::And: {
        const auto parts = c.conjuncts();
        double acc = bed(a, parts.front());
        for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, bed(a, parts[i]));
        return acc;
      }
    }
    return 0.0;
  }

  static double membership(const FuzzyDatatype& d, const DataValue& value) {
    if (const bool* flag = std::get_if<bool>(&value)) {
      return d.kind() == FuzzyDatatype::Kind::EqualsBool && *flag == d.bool_value() ? 1.0 : 0.0;
    }
    const double x = std::get<double>(value);
    const auto p = d.parameters();
    switch (d.kind()) {
      case FuzzyDatatype::Kind::LeftShoulder: return std::clamp((p[1] - x) / (p[1] - p[0]), 0.0, 1.0);
      case FuzzyDatatype::Kind::RightShoulder: return std::clamp((x - p[0]) / (p[1] - p[0]), 0.0, 1.0);
      case FuzzyDatatype::Kind::Triangular:
        return std::max(0.0, std::min((x - p[0]) / (p[1] - p[0]), (p[2] - x) / (p[2] - p[1])));
      case FuzzyDatatype::Kind::Trapezoidal:
        return std::max(0.0, std::min({(x - p[0]) / (p[1] - p[0]), 1.0, (p[3] - x) / (p[3] - p[2])}));
      case FuzzyDatatype::Kind::AtLeast: return x >= p[0] ? 1.0 : 0.0;
      case FuzzyDatatype::Kind::AtMost: return x <= p[0] ? 1.0 : 0.0;
      case FuzzyDatatype::Kind::EqualsBool: return 0.0;
    }
    return 0.0;
  }

 private:
  double conj(double x, double y) const {
    switch (logic_) {
      case Logic::Lukasiewicz: return x == 1.0 ? y : y == 1.0 ? x : std::max(0.0, x + y - 1.0);
      case Logic::Goedel: return std::min(x, y);
      case Logic::Product: return x * y;
    }
    return 0.0;
  }

  const KnowledgeBase& kb_;
  Logic logic_;
  std::vector<std::set<std::string>> types_;
};

}  // namespace pnrule::testing
