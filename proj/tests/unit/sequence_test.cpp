#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "graphex/error.hpp"
#include "graphex/sequence.hpp"
#include "graphex/simulate.hpp"
#include "graphex/verify.hpp"
#include "oracles.hpp"

namespace graphex {
namespace {

LabeledGraph small() {
  return LabeledGraph(1.0, {{0.2, 0.3, Component::W}, {0.1, 0.6, Component::W}, {0.3, 0.6, Component::S}});
}

LabeledGraph simulated(std::uint64_t seed, double s = 8.0) {
  return simulate(threeComponentGraphex(), SimConfig{s, 1e-3, seed, false}).graph;
}

TEST(JumpTimes, Examples) {
  EXPECT_EQ(jumpTimes(small()), (std::vector<double>{0.3, 0.6}));
  EXPECT_TRUE(jumpTimes(LabeledGraph(2.0, {})).empty());
  const LabeledGraph loop(1.0, {{0.4, 0.4, Component::S}});
  EXPECT_EQ(jumpTimes(loop), (std::vector<double>{0.4}));
}

TEST(GraphSequence, Example) {
  const auto seq = graphSequence(small());
  ASSERT_EQ(seq.length(), 2u);
  EXPECT_EQ(seq.jumpTimes, (std::vector<double>{0.3, 0.6}));
  EXPECT_EQ(seq.graphs[0], testing::graphOf({{0, 1}}));
  EXPECT_EQ(seq.graphs[1], testing::graphOf({{0, 1}, {2, 3}, {1, 3}}));
  ASSERT_EQ(seq.steps[1].size(), 2u);
  EXPECT_TRUE(seq.withoutJumpTimes().jumpTimes.empty());
  EXPECT_EQ(graphSequence(LabeledGraph(1.0, {})).length(), 0u);
}

TEST(GraphSequence, SimultaneousJumpsFormOneStep) {
  const LabeledGraph g(1.0, {{0.1, 0.5, Component::W}, {0.2, 0.5, Component::W}, {0.3, 0.7, Component::W}});
  const auto seq = graphSequence(g);
  ASSERT_EQ(seq.length(), 2u);
  EXPECT_EQ(seq.steps[0].size(), 2u);
  EXPECT_EQ(seq.graphs[0].edgeCount(), 2u);
}

TEST(GraphSequence, ElementsAreRestrictions) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = simulated(seed);
    const auto seq = graphSequence(g);
    ASSERT_EQ(seq.length(), jumpTimes(g).size());
    for (std::size_t k = 0; k < seq.length(); ++k) {
      const auto expected = forgetLabels(restrict(g, seq.jumpTimes[k]));
      EXPECT_EQ(stats(seq.graphs[k]), stats(expected));
      if (expected.vertexCount() <= 7) EXPECT_EQ(testing::isoKey(seq.graphs[k]), testing::isoKey(expected));
      if (k > 0) EXPECT_NE(seq.graphs[k], seq.graphs[k - 1]);
    }
  }
}

TEST(GraphSequence, NestedWithoutRelabeling) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto seq = graphSequence(simulated(seed, 12.0));
    for (std::size_t k = 1; k < seq.length(); ++k) {
      const auto before = seq.graphs[k - 1].edges();
      const auto after = seq.graphs[k].edges();
      ASSERT_LE(before.size(), after.size());
      const std::set<Edge> later(after.begin(), after.end());
      for (const auto& e : before) EXPECT_TRUE(later.count(e)) << "step " << k;
      for (const auto& e : seq.steps[k]) EXPECT_TRUE(later.count(e));
      EXPECT_EQ(after.size() - before.size(), seq.steps[k].size());
    }
  }
}

TEST(GraphSequence, MaxStepsTakesPrefix) {
  const auto g = simulated(3, 12.0);
  const auto full = graphSequence(g);
  ASSERT_GE(full.length(), 5u);
  const auto part = graphSequence(g, 5);
  ASSERT_EQ(part.length(), 5u);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(part.graphs[k], full.graphs[k]);
}

TEST(DilateMeasure, IdentityAndScaling) {
  const auto g = simulated(4);
  EXPECT_EQ(dilateMeasure(g, 1.0), g);
  const auto d = dilateMeasure(g, 2.0);
  EXPECT_DOUBLE_EQ(d.size(), 2.0 * g.size());
  const auto t = jumpTimes(g);
  const auto td = jumpTimes(d);
  ASSERT_EQ(t.size(), td.size());
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(td[i], 2.0 * t[i]);
  EXPECT_THROW(dilateMeasure(g, 0.0), Error);
  EXPECT_THROW(dilateMeasure(g, -1.0), Error);
}

TEST(DilateMeasure, SequenceInvariant) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = simulated(seed);
    const auto base = graphSequence(g).withoutJumpTimes();
    for (double c : {0.5, 2.0, 7.0}) {
      const auto seq = graphSequence(dilateMeasure(g, c));
      EXPECT_EQ(seq.withoutJumpTimes().graphs, base.graphs) << "c=" << c;
      EXPECT_EQ(seq.withoutJumpTimes().steps, base.steps) << "c=" << c;
    }
  }
}

// Any strictly increasing relabeling of the line leaves the sequence unchanged.
TEST(DilateMeasure, MonotoneTransformProbe) {
  auto phi = [](double x) { return x < 1.0 ? 3.0 * x : 3.0 + 0.25 * (x - 1.0); };
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = simulated(seed);
    std::vector<LabeledEdge> edges(g.edges().begin(), g.edges().end());
    for (auto& e : edges) {
      e.theta = phi(e.theta);
      e.thetaPrime = phi(e.thetaPrime);
    }
    const LabeledGraph warped(phi(g.size()), edges);
    EXPECT_EQ(graphSequence(warped).graphs, graphSequence(g).graphs);
  }
}

TEST(DilateGraphex, IdentityNormsAndEdgeCounts) {
  const Graphex gx = threeComponentGraphex();
  EXPECT_EQ(dilateGraphex(gx, 1.0), gx);
  for (double c : {0.5, 2.0, 7.0}) {
    const Graphex d = dilateGraphex(gx, c);
    EXPECT_NEAR(d.graphon.l1Norm(), c * c * gx.graphon.l1Norm(), 1e-9 * c * c);
    EXPECT_NEAR(d.isolatedRate, c * c * gx.isolatedRate, 1e-15);
    for (double s : {1.0, 5.0, 20.0}) {
      const auto a = expectedEdgeCounts(d, s);
      const auto b = expectedEdgeCounts(gx, c * s);
      EXPECT_NEAR(a.w, b.w, 1e-8 * b.w);
      EXPECT_NEAR(a.s, b.s, 1e-8 * b.s);
      EXPECT_NEAR(a.i, b.i, 1e-8 * b.i);
    }
  }
  EXPECT_THROW(dilateGraphex(gx, 0.0), Error);
}

}  // namespace
}  // namespace graphex
