#include <gtest/gtest.h>

#include <filesystem>

#include "pnrule/error.hpp"
#include "pnrule/hypothesis_json.hpp"

namespace pnrule {
namespace {

HypothesisFile sample() {
  const ValueRange range{0.1, 7.9};
  FuzzySetFamily f{"len", {}, range};
  f.sets.push_back(FuzzyDatatype::left_shoulder(0.1, 4.0, range, "len_low"));
  f.sets.push_back(FuzzyDatatype::triangular(0.1, 4.0, 7.9, range, "len_medium"));
  f.sets.push_back(FuzzyDatatype::right_shoulder(4.0, 7.9, range, "len_high"));
  HypothesisFile file;
  file.families = {f};
  Hypothesis& h = file.hypothesis;
  h.target = "T";
  h.conjunction = Logic::Product;
  h.p_rules.push_back({Concept::conjunction({Concept::some("len", f.sets[1]), Concept::atomic("A"),
                                             Concept::some("r", Concept::some("b", FuzzyDatatype::equals_bool(false)))}),
                       "T", 1.0 / 3.0});
  h.p_rules.push_back({Concept::top(), "T", 0.1 + 0.2});
  h.n_rules.push_back({Concept::some("len", f.sets[2]), "FALSEP_T", 0.7});
  return file;
}

TEST(HypothesisJson, RoundTripExact) {
  const auto file = sample();
  const auto back = hypothesis_from_json(hypothesis_to_json(file));
  EXPECT_EQ(back, file);
  EXPECT_EQ(back.hypothesis.p_rules[0].degree, 1.0 / 3.0);
}

TEST(HypothesisJson, EmptyHypothesis) {
  HypothesisFile file;
  file.hypothesis.target = "T";
  EXPECT_EQ(hypothesis_from_json(hypothesis_to_json(file)), file);
}

TEST(HypothesisJson, RejectsMalformed) {
  EXPECT_THROW(hypothesis_from_json("{"), ParseError);
  EXPECT_THROW(hypothesis_from_json("{\"format\":\"other\"}"), ParseError);
  EXPECT_THROW(hypothesis_from_json("[]"), ParseError);
}

TEST(HypothesisJson, SaveLoad) {
  const auto path = std::filesystem::temp_directory_path() / "pnrule_json_test" / "h.json";
  save_hypothesis(path, sample());
  EXPECT_EQ(load_hypothesis(path), sample());
  std::filesystem::remove_all(path.parent_path());
}

}  // namespace
}  // namespace pnrule
