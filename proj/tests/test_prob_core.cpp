#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "unionprob/prob_core.hpp"

namespace unionprob {
namespace {

using testing::rel_diff;
using testing::VectorCorpus;

TEST(EventProbabilities, RejectsEmptyList) {
  EXPECT_THROW(EventProbabilities(std::vector<double>{}), InvalidInput);
}

TEST(EventProbabilities, NamesOffendingIndex) {
  try {
    EventProbabilities({0.1, 0.2, 1.5, 0.3});
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), 2u);
  }
  EXPECT_THROW(EventProbabilities({-0.0001}), InvalidInput);
  EXPECT_THROW(EventProbabilities({NAN}), InvalidInput);
}

TEST(EventProbabilities, BoundaryValuesAreLegal) {
  EXPECT_NO_THROW(EventProbabilities({0.0, 1.0}));
  EXPECT_THROW(EventProbabilities::uniform(0.5, 0), InvalidInput);
}

TEST(ExactUnion, WorkedTwoDeviceExample) {
  EXPECT_NEAR(exact_union({0.1, 0.3}), 0.37, 1e-15);
}

TEST(ExactUnion, SingleEvent) { EXPECT_DOUBLE_EQ(exact_union({0.5}), 0.5); }

TEST(ExactUnion, FourDevices) { EXPECT_NEAR(exact_union({0.1, 0.2, 0.2, 0.3}), 0.5968, 1e-15); }

TEST(ExactUnion, CertainEventShortCircuits) {
  EXPECT_EQ(exact_union({0.2, 1.0, 0.4}).value(), 1.0);
  EXPECT_EQ(exact_union({1.0}).value(), 1.0);
}

TEST(ExactUnion, ZeroProbabilitiesContributeNothing) {
  EXPECT_EQ(exact_union({0.0, 0.0}).value(), 0.0);
  EXPECT_DOUBLE_EQ(exact_union({0.0, 0.25, 0.0}), 0.25);
}

TEST(ExactUnion, TinyProbabilitiesKeepRelativeAccuracy) {
  // 1 - (1 - 1e-12)^1000 = 1e-9 - 4.995e-19 + ...
  const auto events = EventProbabilities::uniform(1e-12, 1000);
  const double expected = 1e-9 - 999.0 * 1000.0 / 2.0 * 1e-24;
  EXPECT_LT(rel_diff(exact_union(events), expected), 1e-12);
}

TEST(ExactUnionEqual, Examples) {
  EXPECT_NEAR(exact_union_equal(0.2, 2), 0.36, 1e-15);
  EXPECT_EQ(exact_union_equal(0.0, 17).value(), 0.0);
  EXPECT_EQ(exact_union_equal(1.0, 3).value(), 1.0);
}

TEST(ExactUnionEqual, MatchesRepeatedMultiplication) {
  // Oracle: multiply 0.99 into an accumulator 100 times.
  long double q = 1.0L;
  for (int i = 0; i < 100; ++i) q *= 0.99L;
  const double oracle = static_cast<double>(1.0L - q);
  EXPECT_LT(rel_diff(exact_union_equal(0.01, 100), oracle), 1e-14);
  EXPECT_LT(rel_diff(exact_union_equal(0.01, 100), 0.6339676587267705), 1e-14);
}

TEST(ExactUnionEqual, RejectsBadDomain) {
  EXPECT_THROW(exact_union_equal(1.1, 2), InvalidInput);
  EXPECT_THROW(exact_union_equal(-0.1, 2), InvalidInput);
  EXPECT_THROW(exact_union_equal(0.1, 0), InvalidInput);
}

TEST(MeanProbability, Examples) {
  EXPECT_NEAR(mean_probability({0.1, 0.3, 0.5}), 0.3, 1e-16);
  EXPECT_DOUBLE_EQ(mean_probability({0.5, 0.8, 0.2, 0.4}), 0.475);
  EXPECT_DOUBLE_EQ(mean_probability({0.7}), 0.7);
}

TEST(ExactUnionProperties, UnionBounds) {
  VectorCorpus corpus(11, 1, 40);
  for (int c = 0; c < 500; ++c) {
    const auto p = corpus.next();
    const double u = exact_union(EventProbabilities(p));
    const double max_p = *std::max_element(p.begin(), p.end());
    const double sum_p = std::accumulate(p.begin(), p.end(), 0.0);
    EXPECT_GE(u, max_p * (1 - 1e-15));
    EXPECT_LE(u, std::min(1.0, sum_p) * (1 + 1e-15));
  }
}

TEST(ExactUnionProperties, MatchesDirectProduct) {
  VectorCorpus corpus(12, 1, 60);
  for (int c = 0; c < 500; ++c) {
    const auto p = corpus.next();
    const double direct = static_cast<double>(testing::direct_complement_union(p));
    EXPECT_LT(rel_diff(exact_union(EventProbabilities(p)), direct), 1e-13);
  }
}

TEST(ExactUnionProperties, Monotone) {
  VectorCorpus corpus(13, 1, 20);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 0; c < 300; ++c) {
    auto p = corpus.next();
    const double before = exact_union(EventProbabilities(p));
    const std::size_t i = rng() % p.size();
    p[i] = p[i] + (1.0 - p[i]) * unit(rng);
    EXPECT_GE(exact_union(EventProbabilities(p)), before);
    p.push_back(unit(rng));
    EXPECT_GE(exact_union(EventProbabilities(p)), before);
  }
}

TEST(ExactUnionProperties, PermutationInvariant) {
  VectorCorpus corpus(14, 2, 50);
  std::mt19937_64 rng(5);
  for (int c = 0; c < 300; ++c) {
    auto p = corpus.next(0.0, 0.2);
    const double a = exact_union(EventProbabilities(p));
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_LE(rel_diff(a, exact_union(EventProbabilities(p))), 1e-12);
  }
}

TEST(ExactUnionProperties, CopiesMatchEqualForm) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 0; c < 300; ++c) {
    const double p = unit(rng) * (c % 3 == 0 ? 1e-6 : 1.0);
    const std::size_t n = 1 + rng() % 3000;
    EXPECT_LE(rel_diff(exact_union(EventProbabilities::uniform(p, n)), exact_union_equal(p, n)),
              1e-12)
        << "p=" << p << " n=" << n;
  }
}

TEST(ExactUnionProperties, MeanApproximationIsConservative) {
  VectorCorpus corpus(16, 1, 30);
  for (int c = 0; c < 1000; ++c) {
    const EventProbabilities events(corpus.next());
    EXPECT_GE(exact_union(events), exact_union_equal(mean_probability(events), events.size()));
  }
  const auto same = EventProbabilities::uniform(0.3, 7);
  EXPECT_LE(rel_diff(exact_union(same), exact_union_equal(mean_probability(same), 7)), 1e-15);
}

TEST(ExactUnion, MillionEventsStaysAccurate) {
  const auto events = EventProbabilities::uniform(1e-9, 1'000'000);
  EXPECT_LT(rel_diff(exact_union(events), -std::expm1(1e6 * std::log1p(-1e-9))), 1e-12);
}

}  // namespace
}  // namespace unionprob
