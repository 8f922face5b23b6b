#include <gtest/gtest.h>

#include <random>

#include "dgclique/oracle.hpp"
#include "dgclique/stretch.hpp"
#include "test_util.hpp"

namespace dgclique {
namespace {

using testing::random_times;
using testing::single_edge;

std::vector<TimeInterval> intervals_of(const CliqueSet& cliques) {
  std::vector<TimeInterval> out;
  for (const auto& c : cliques) out.push_back(c.interval);
  return out;
}

// Brute-force duration-wise maximal size-2 intervals for one edge.
std::vector<TimeInterval> oracle_intervals(const std::vector<Timestamp>& times,
                                           Timestamp delta, int gamma) {
  return intervals_of(
      oracle::duration_maximal_bruteforce(single_edge(times), 2, delta, gamma));
}

struct StretchCase {
  std::vector<Timestamp> times;
  Timestamp delta;
  int gamma;
  std::vector<TimeInterval> expected;
};

class StretchExamples : public ::testing::TestWithParam<StretchCase> {};

TEST_P(StretchExamples, MatchesFrozenValueAndOracle) {
  const auto& c = GetParam();
  auto got = stretch_times(c.times, c.delta, c.gamma);
  EXPECT_EQ(got, c.expected);
  EXPECT_EQ(oracle_intervals(c.times, c.delta, c.gamma), c.expected);
}

INSTANTIATE_TEST_SUITE_P(
    Frozen, StretchExamples,
    ::testing::Values(
        StretchCase{{5}, 2, 1, {{3, 7}}},
        StretchCase{{1, 2, 3}, 2, 2, {{0, 4}}},
        StretchCase{{1, 10}, 3, 2, {}},
        // 11 > 5 + 1 + 3 splits the runs.
        StretchCase{{4, 5, 11, 12}, 3, 2, {{2, 7}, {9, 14}}},
        // 8 == 4 + 1 + 3: the next window continues the run.
        StretchCase{{4, 5, 8, 9}, 3, 2, {{2, 11}}},
        // 9 > 4 + 1 + 3: windows [2,4] and [7,9] of tau are not adjacent.
        StretchCase{{4, 5, 9, 10}, 3, 2, {{2, 7}, {7, 12}}},
        StretchCase{{1, 2}, 2, 2, {{0, 3}}},
        StretchCase{{5}, 0, 1, {{5, 5}}},
        StretchCase{{0, 3, 6, 20}, 3, 1, {{-3, 9}, {17, 23}}},
        StretchCase{{0, 1, 7, 8, 9}, 2, 2, {{-1, 2}, {6, 10}}},
        // The refill after a split already holds gamma entries; the two
        // emitted cliques overlap.
        StretchCase{{0, 4, 6}, 4, 2, {{0, 4}, {2, 8}}}));

TEST(StretchEdge, EmitsSizeTwoCliquesInCanonicalOrder) {
  auto out = stretch_edge(9, 4, std::vector<Timestamp>{1, 2, 3}, 2, 2);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].members, (VertexSet{4, 9}));
  EXPECT_EQ(out[0].interval, (TimeInterval{0, 4}));
}

TEST(StretchEdge, TooFewOccurrences) {
  EXPECT_TRUE(stretch_times(std::vector<Timestamp>{1, 2}, 5, 3).empty());
}

TEST(StretchEdge, RejectsInvalidParameters) {
  std::vector<Timestamp> times{1};
  EXPECT_THROW(stretch_times(times, 1, 0), std::invalid_argument);
  EXPECT_THROW(stretch_times(times, -1, 1), std::invalid_argument);
}

TEST(StretchAll, SkipsLowFrequencyEdges) {
  auto n = testing::network_of(
      {{"a", "b", 1}, {"a", "b", 2}, {"a", "b", 3}, {"a", "c", 1}});
  EdgeOccurrenceIndex idx(n);
  auto out = stretch_all(idx, 2, 2);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].members, testing::ids_of(n, {"a", "b"}));
  EXPECT_EQ(out[0].interval, (TimeInterval{0, 4}));

  EXPECT_TRUE(stretch_all(idx, 2, 4).empty());
}

TEST(StretchAll, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(5);
  std::vector<EdgeOccurrenceIndex::Entry> entries;
  for (VertexId u = 0; u < 12; ++u) {
    for (VertexId v = u + 1; v < 12; ++v) {
      entries.push_back({u, v, random_times(rng, 200, 0.1)});
    }
  }
  EdgeOccurrenceIndex idx(std::move(entries));
  auto reference = stretch_all(idx, 6, 2, 1);
  EXPECT_FALSE(reference.empty());
  EXPECT_EQ(stretch_all(idx, 6, 2, 4), reference);
  EXPECT_EQ(stretch_all(idx, 6, 2, 1000), reference);
}

// Random single-edge sequences: every emitted interval is a valid
// clique, cannot be stretched by one unit, and the set equals brute force.
TEST(StretchProperties, RandomSequencesAgreeWithOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Timestamp> delta_dist(0, 6);
  std::uniform_int_distribution<int> gamma_dist(1, 4);
  std::uniform_real_distribution<double> density(0.05, 0.7);
  for (int trial = 0; trial < 400; ++trial) {
    const Timestamp delta = delta_dist(rng);
    const int gamma = gamma_dist(rng);
    auto times = random_times(rng, 30, density(rng));
    auto net = single_edge(times);
    SCOPED_TRACE(::testing::Message() << "trial " << trial << " delta "
                                      << delta << " gamma " << gamma);

    auto got = stretch_times(times, delta, gamma);
    const VertexSet ab{0, 1};
    for (const auto& iv : got) {
      ASSERT_TRUE(oracle::is_dg_clique(net, ab, iv, delta, gamma));
      ASSERT_FALSE(oracle::is_dg_clique(net, ab, {iv.start - 1, iv.end},
                                        delta, gamma));
      ASSERT_FALSE(oracle::is_dg_clique(net, ab, {iv.start, iv.end + 1},
                                        delta, gamma));
      ASSERT_GE(iv.duration(), delta);
    }
    ASSERT_EQ(got, oracle_intervals(times, delta, gamma));
  }
}

TEST(StretchProperties, BufferKeepsGammaEntriesWithinDelta) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Timestamp> delta_dist(0, 8);
  std::uniform_int_distribution<int> gamma_dist(1, 5);
  std::size_t observed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Timestamp delta = delta_dist(rng);
    const int gamma = gamma_dist(rng);
    if (gamma > delta + 1) continue;  // nothing can be emitted
    auto times = random_times(rng, 60, 0.3);
    stretch_times(times, delta, gamma, [&](std::span<const Timestamp> buf) {
      ++observed;
      for (std::size_t i = 1; i < buf.size(); ++i) ASSERT_LT(buf[i - 1], buf[i]);
      const auto g = static_cast<std::size_t>(gamma);
      for (std::size_t i = 0; i + g <= buf.size(); ++i) {
        ASSERT_LE(buf[i + g - 1] - buf[i], delta);
      }
    });
  }
  EXPECT_GT(observed, 0u);
}

TEST(StretchProperties, GammaOneGivesDeltaCliques) {
  // (delta, 1)-cliques are delta-cliques: one link per window suffices.
  std::vector<Timestamp> times{2, 4, 9, 10, 18};
  auto got = stretch_times(times, 3, 1);
  EXPECT_EQ(got, (std::vector<TimeInterval>{{-1, 7}, {6, 13}, {15, 21}}));
  EXPECT_EQ(got, oracle_intervals(times, 3, 1));
}

TEST(StretchMutation, DroppingRunSlackBreaksAgreement) {
  std::vector<Timestamp> times{4, 5, 8, 9};
  auto mutated = detail::stretch_times_with_slack(times, 3, 2, 0, {});
  EXPECT_NE(mutated, oracle_intervals(times, 3, 2));
}

}  // namespace
}  // namespace dgclique
