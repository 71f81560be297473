#include <gtest/gtest.h>

#include <cmath>

#include "pnrule/error.hpp"
#include "pnrule/fuzzification.hpp"

namespace pnrule {
namespace {

TEST(Labels, PerSize) {
  EXPECT_EQ(set_labels(3), (std::vector<std::string>{"low", "medium", "high"}));
  EXPECT_EQ(set_labels(5), (std::vector<std::string>{"veryLow", "low", "medium", "high", "veryHigh"}));
  EXPECT_EQ(set_labels(7), (std::vector<std::string>{"extremelyLow", "veryLow", "low", "medium", "high", "veryHigh",
                                                     "extremelyHigh"}));
  EXPECT_EQ(fuzzy_set_name("hasAge", "veryHigh"), "hasAge_veryHigh");
}

TEST(UniformPartition, ThreeSetsOnZeroToTen) {
  const std::vector<double> v = {0, 3, 10};
  const auto f = uniform_partition(v, 3, "s");
  ASSERT_EQ(f.sets.size(), 3u);
  EXPECT_EQ(f.sets[0], FuzzyDatatype::left_shoulder(0, 5, ValueRange{0, 10}, "s_low"));
  EXPECT_EQ(f.sets[1], FuzzyDatatype::triangular(0, 5, 10, ValueRange{0, 10}, "s_medium"));
  EXPECT_EQ(f.sets[2], FuzzyDatatype::right_shoulder(5, 10, ValueRange{0, 10}, "s_high"));
  EXPECT_EQ(f.range, (ValueRange{0, 10}));
}

TEST(UniformPartition, FivePeaks) {
  const std::vector<double> v = {100, 0};
  const auto f = uniform_partition(v, 5, "s");
  EXPECT_EQ(f.sets[0].parameters()[0], 0.0);
  EXPECT_EQ(f.sets[1].parameters()[1], 25.0);
  EXPECT_EQ(f.sets[2].parameters()[1], 50.0);
  EXPECT_EQ(f.sets[3].parameters()[1], 75.0);
  EXPECT_EQ(f.sets[4].parameters()[1], 100.0);
}

TEST(UniformPartition, RuspiniSum) {
  const std::vector<double> v = {-2.5, 7.25};
  for (std::size_t k : {3u, 5u, 7u}) {
    const auto f = uniform_partition(v, k, "s");
    for (int i = 0; i <= 1000; ++i) {
      const double x = -2.5 + 9.75 * i / 1000.0;
      double sum = 0.0;
      bool positive = false;
      for (const auto& d : f.sets) {
        sum += d.membership(x);
        positive = positive || d.membership(x) > 0.0;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
      EXPECT_TRUE(positive);
    }
  }
}

TEST(UniformPartition, Errors) {
  const std::vector<double> same = {2, 2, 2};
  EXPECT_THROW(uniform_partition(same, 3), ValidationError);
  const std::vector<double> v = {0, 1};
  EXPECT_THROW(uniform_partition(v, 2), ValidationError);
}

// Fixed points from tests/oracles/fcm_oracle.py.
TEST(CMeans, TwoClusters) {
  const std::vector<double> v = {1.0, 1.1, 0.9, 5.0, 5.1, 4.9};
  const auto result = fuzzy_cmeans(v, {2, 2.0, 0.05, 100});
  ASSERT_EQ(result.centroids.size(), 2u);
  EXPECT_NEAR(result.centroids[0], 0.99999687, 0.05);
  EXPECT_NEAR(result.centroids[1], 5.00000313, 0.05);
  EXPECT_TRUE(result.trace.converged);
  const auto tight = fuzzy_cmeans(v, {2, 2.0, 1e-12, 1000});
  EXPECT_NEAR(tight.centroids[0], 0.99999687, 1e-6);
  EXPECT_NEAR(tight.centroids[1], 5.00000313, 1e-6);
}

TEST(CMeans, SymmetricPair) {
  const std::vector<double> v = {0.0, 10.0};
  const auto c = cmeans_centroids(v, {2, 2.0, 0.05, 100});
  EXPECT_NEAR(c[0] + c[1], 10.0, 1e-9);
  EXPECT_NEAR(c[0], 0.0, 1e-9);
}

TEST(CMeans, TraceInvariants) {
  std::vector<double> v;
  for (int i = 0; i < 60; ++i) v.push_back(std::sin(i * 0.7) * 3.0 + (i % 3) * 4.0);
  for (std::size_t k : {3u, 5u, 7u}) {
    const auto r = fuzzy_cmeans(v, {k, 2.0, 1e-6, 100});
    ASSERT_FALSE(r.trace.objective.empty());
    EXPECT_LE(r.trace.objective.size(), 100u);
    for (double e : r.trace.row_sum_error) EXPECT_LE(e, 1e-9);
    for (std::size_t i = 1; i < r.trace.objective.size(); ++i) {
      EXPECT_LE(r.trace.objective[i], r.trace.objective[i - 1] * (1 + 1e-12));
    }
    EXPECT_TRUE(std::is_sorted(r.centroids.begin(), r.centroids.end()));
  }
}

TEST(CMeans, Errors) {
  const std::vector<double> v = {1, 1, 2};
  EXPECT_THROW(fuzzy_cmeans(v, {3, 2.0, 0.05, 100}), ValidationError);
  EXPECT_THROW(fuzzy_cmeans(v, {2, 1.0, 0.05, 100}), ValidationError);
  EXPECT_THROW(fuzzy_cmeans(v, {2, 2.0, 0.0, 100}), ValidationError);
}

TEST(CentroidsToFamily, InteriorSetFromThreeCentroids) {
  const std::vector<double> c = {2.78, 3.997, 5.022};
  const auto f = centroids_to_family(c, {1, 6}, "hasBiRads");
  ASSERT_EQ(f.sets.size(), 3u);
  EXPECT_EQ(f.sets[0].kind(), FuzzyDatatype::Kind::LeftShoulder);
  EXPECT_EQ(f.sets[1], FuzzyDatatype::triangular(2.78, 3.997, 5.022, ValueRange{1, 6}, "hasBiRads_medium"));
  EXPECT_EQ(f.sets[2].kind(), FuzzyDatatype::Kind::RightShoulder);
  EXPECT_EQ(f.sets[2].label(), "hasBiRads_high");
}

TEST(CentroidsToFamily, TwoCentroids) {
  const std::vector<double> c = {1, 4};
  const auto f = centroids_to_family(c, {0, 5}, "s");
  ASSERT_EQ(f.sets.size(), 2u);
  EXPECT_EQ(f.sets[0], FuzzyDatatype::left_shoulder(1, 4, ValueRange{0, 5}, "s_low"));
  EXPECT_EQ(f.sets[1], FuzzyDatatype::right_shoulder(1, 4, ValueRange{0, 5}, "s_high"));
}

TEST(CentroidsToFamily, Errors) {
  const std::vector<double> dup = {1, 1, 3};
  EXPECT_THROW(centroids_to_family(dup, {0, 5}, "s"), ValidationError);
  const std::vector<double> one = {1};
  EXPECT_THROW(centroids_to_family(one, {0, 5}, "s"), ValidationError);
}

TEST(BuildFamilies, SkipsConstantAndBooleanProperties) {
  KnowledgeBase::Builder b;
  b.declare_data_property("s", DataKind::Numeric).declare_data_property("c", DataKind::Numeric);
  b.declare_data_property("flag", DataKind::Boolean);
  for (int i = 0; i < 6; ++i) {
    const auto name = "x" + std::to_string(i);
    b.declare_individual(name).add_data_assertion(name, "s", i * 1.5).add_data_assertion(name, "c", 2.0);
    b.add_data_assertion(name, "flag", i % 2 == 0);
  }
  const auto kb = std::move(b).build();
  for (auto method : {Fuzzification::Uniform, Fuzzification::CMeans}) {
    const auto fams = build_families(kb, method, 3);
    ASSERT_EQ(fams.size(), 1u);
    EXPECT_EQ(fams[0].property, "s");
    EXPECT_EQ(fams[0].sets.size(), 3u);
  }
  // Fewer distinct values than sets: c-means falls back to the uniform layout.
  const auto seven = build_families(kb, Fuzzification::CMeans, 7);
  EXPECT_EQ(seven[0], build_families(kb, Fuzzification::Uniform, 7)[0]);
}

}  // namespace
}  // namespace pnrule
