#include <gtest/gtest.h>

#include <sstream>

#include "pnrule/config.hpp"
#include "pnrule/error.hpp"

namespace pnrule {
namespace {

TEST(Config, DefaultsMatchParameterTable) {
  const RunConfig c;
  EXPECT_EQ(c.task.p_stage, (StageParams{0.1, 1.0, 5, 1}));
  EXPECT_EQ(c.task.n_stage, (StageParams{0.3, 0.2, 10, 1}));
  EXPECT_EQ(c.task.conjunction, Logic::Goedel);
  EXPECT_EQ(c.task.gci, Logic::Lukasiewicz);
  EXPECT_EQ(c.task.cmeans, (CMeansParams{2.0, 0.05, 100}));
  EXPECT_EQ(c.task.backtrack_size, 5u);
  EXPECT_EQ(c.folds, 5u);
}

TEST(Config, ParsesKeys) {
  std::istringstream in(
      "# run\n"
      "kb = data/kb.txt\n"
      "fuzzification = cmeans\nfuzzy_sets=7\n"
      "p_theta = 0.25  # inline\n"
      "n_stage = false\nconjunction = product\nseed = 99\nfolds = 3\n");
  RunConfig c;
  parse_config(in, c);
  EXPECT_EQ(c.kb, "data/kb.txt");
  EXPECT_EQ(c.task.fuzzification, Fuzzification::CMeans);
  EXPECT_EQ(c.task.fuzzy_sets, 7u);
  EXPECT_EQ(c.task.p_stage.theta, 0.25);
  EXPECT_FALSE(c.task.run_n_stage);
  EXPECT_EQ(c.task.conjunction, Logic::Product);
  EXPECT_EQ(c.task.seed, 99u);
  EXPECT_EQ(c.folds, 3u);
}

TEST(Config, RejectsUnknownAndMalformed) {
  RunConfig c;
  std::istringstream unknown("colour = red\n");
  EXPECT_THROW(parse_config(unknown, c), ParseError);
  std::istringstream noeq("folds 3\n");
  EXPECT_THROW(parse_config(noeq, c), ParseError);
  std::istringstream bad("folds = -3\n");
  EXPECT_THROW(parse_config(bad, c), ParseError);
  std::istringstream logic("gci = zadeh\n");
  EXPECT_THROW(parse_config(logic, c), ParseError);
}

TEST(Config, WriteParseRoundTrip) {
  RunConfig c;
  c.task.p_stage.eta = 0.75;
  c.task.fuzzification = Fuzzification::CMeans;
  c.jobs = 4;
  std::ostringstream out;
  write_config(out, c);
  RunConfig back;
  std::istringstream in(out.str());
  parse_config(in, back);
  EXPECT_EQ(back.task.p_stage, c.task.p_stage);
  EXPECT_EQ(back.task.fuzzification, c.task.fuzzification);
  EXPECT_EQ(back.jobs, 4u);
}

}  // namespace
}  // namespace pnrule
