#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "pnrule/concept.hpp"
#include "pnrule/fuzzification.hpp"
#include "pnrule/kb.hpp"

namespace pnrule::testing {

struct RandomKbShape {
  int max_individuals = 8;
  int max_classes = 4;
  int max_roles = 2;
  int max_numeric = 2;
  int max_boolean = 0;
};

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Small KB with random names, subclass axioms (cycles allowed), assertions and
// numeric values on a coarse grid in [0,10] so memberships hit breakpoints.
inline KnowledgeBase random_kb(std::mt19937_64& rng, const RandomKbShape& shape = {}) {
  KnowledgeBase::Builder b;
  const int n = uniform_int(rng, 1, shape.max_individuals);
  const int classes = uniform_int(rng, 0, shape.max_classes);
  const int roles = uniform_int(rng, 0, shape.max_roles);
  const int numeric = uniform_int(rng, 0, shape.max_numeric);
  const int boolean = uniform_int(rng, 0, shape.max_boolean);
  for (int c = 0; c < classes; ++c) b.declare_class("C" + std::to_string(c));
  for (int c = 0; c < classes; ++c) {
    for (int d = 0; d < classes; ++d) {
      if (c != d && coin(rng, 0.2)) b.add_subclass("C" + std::to_string(c), "C" + std::to_string(d));
    }
  }
  for (int r = 0; r < roles; ++r) b.declare_object_property("r" + std::to_string(r));
  for (int s = 0; s < numeric; ++s) b.declare_data_property("s" + std::to_string(s), DataKind::Numeric);
  for (int s = 0; s < boolean; ++s) b.declare_data_property("b" + std::to_string(s), DataKind::Boolean);
  for (int i = 0; i < n; ++i) b.declare_individual("i" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    const std::string a = "i" + std::to_string(i);
    for (int c = 0; c < classes; ++c) {
      if (coin(rng, 0.35)) b.add_class_assertion(a, "C" + std::to_string(c));
    }
    for (int r = 0; r < roles; ++r) {
      for (int j = 0; j < n; ++j) {
        if (coin(rng, 0.25)) b.add_role_assertion(a, "r" + std::to_string(r), "i" + std::to_string(j));
      }
    }
    for (int s = 0; s < numeric; ++s) {
      const int count = uniform_int(rng, 0, 2);
      for (int k = 0; k < count; ++k) {
        b.add_data_assertion(a, "s" + std::to_string(s), 0.5 * uniform_int(rng, 0, 20));
      }
    }
    for (int s = 0; s < boolean; ++s) {
      if (coin(rng, 0.7)) b.add_data_assertion(a, "b" + std::to_string(s), coin(rng));
    }
  }
  return std::move(b).build();
}

inline FuzzyDatatype random_datatype(std::mt19937_64& rng) {
  std::vector<double> p;
  const int kind = uniform_int(rng, 0, 3);
  const int arity = kind < 2 ? 2 : kind + 1;
  while (static_cast<int>(p.size()) < arity) {
    const double v = 0.5 * uniform_int(rng, 0, 20);
    if (std::find(p.begin(), p.end(), v) == p.end()) p.push_back(v);
  }
  std::sort(p.begin(), p.end());
  const ValueRange range{0.0, 10.0};
  switch (kind) {
    case 0: return FuzzyDatatype::left_shoulder(p[0], p[1], range, "ls");
    case 1: return FuzzyDatatype::right_shoulder(p[0], p[1], range, "rs");
    case 2: return FuzzyDatatype::triangular(p[0], p[1], p[2], range, "tri");
    default: return FuzzyDatatype::trapezoidal(p[0], p[1], p[2], p[3], range, "trz");
  }
}

// Random concept over the KB's alphabet with role depth <= depth.
inline Concept random_concept(std::mt19937_64& rng, const KnowledgeBase& kb, int depth, bool allow_and = true) {
  std::vector<int> options = {0};
  if (!kb.classes().empty()) options.push_back(1);
  if (depth > 0 && !kb.object_properties().empty()) options.push_back(2);
  std::vector<std::string> numeric, boolean;
  for (const auto& [p, k] : kb.data_properties()) (k == DataKind::Numeric ? numeric : boolean).push_back(p);
  if (depth > 0 && !numeric.empty()) options.push_back(3);
  if (depth > 0 && !boolean.empty()) options.push_back(5);
  if (allow_and) options.push_back(4);
  auto pick = [&](const std::vector<std::string>& v) { return v[uniform_int(rng, 0, static_cast<int>(v.size()) - 1)]; };
  switch (options[uniform_int(rng, 0, static_cast<int>(options.size()) - 1)]) {
    case 0: return Concept::top();
    case 1: return Concept::atomic(pick(kb.classes()));
    case 2: return Concept::some(pick(kb.object_properties()), random_concept(rng, kb, depth - 1));
    case 3: return Concept::some(pick(numeric), random_datatype(rng));
    case 5: return Concept::some(pick(boolean), FuzzyDatatype::equals_bool(coin(rng)));
    default: {
      std::vector<Concept> parts;
      const int count = uniform_int(rng, 2, 3);
      for (int i = 0; i < count; ++i) {
        parts.push_back(random_concept(rng, kb, depth, false));
      }
      return Concept::conjunction(std::move(parts));
    }
  }
}

// Families for every numeric property on the fixed [0,10] grid.
inline std::vector<FuzzySetFamily> grid_families(const KnowledgeBase& kb, std::size_t k = 3) {
  std::vector<FuzzySetFamily> out;
  const std::vector<double> span = {0.0, 10.0};
  for (const auto& [p, kind] : kb.data_properties()) {
    if (kind == DataKind::Numeric) out.push_back(uniform_partition(span, k, p));
  }
  return out;
}

}  // namespace pnrule::testing
