#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pnrule/fuzzification.hpp"
#include "pnrule/task.hpp"

namespace pnrule {

/// Families whose property occurs in a numeric data atom of some rule body,
/// in the order given.
std::vector<FuzzySetFamily> families_used(const Hypothesis& h, const std::vector<FuzzySetFamily>& families);

/// Fuzzy OWL textual syntax of a hypothesis:
///
///   (define-fuzzy-concept <name> <shape>(<k1>,<k2>,<params>))
///   (implies <body> <head> <degree>)
///
/// One definition per set of `families` (ranges in shortest form, parameters
/// with 3 decimals), then the P-rules and the N-rules in learned order with
/// 6-decimal degrees. Rule bodies use `(and ...)`, `(some <role> <filler>)`
/// and `(some <prop> <set>)`. An empty hypothesis gives only the comment
/// header. Throws Error for numeric datatypes without a label.
std::string export_fuzzyowl(const Hypothesis& h, const std::vector<FuzzySetFamily>& families);

/// Concept in the body syntax used by export_fuzzyowl.
std::string fuzzyowl_concept(const Concept& c);

struct FuzzyOwlDocument {
  Hypothesis hypothesis;
  std::vector<FuzzySetFamily> families;
};

/// Reads text produced by export_fuzzyowl. Parameters come back at the
/// exported precision; rules whose head is the false-positive class of the
/// target are N-rules. Throws ParseError on malformed input.
FuzzyOwlDocument parse_fuzzyowl(std::string_view text, const std::string& source = "<fuzzyowl>");

}  // namespace pnrule
