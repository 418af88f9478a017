#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "graphex/error.hpp"
#include "graphex/simulate.hpp"
#include "graphex/verify.hpp"
#include "oracles.hpp"

namespace graphex {
namespace {

const Graphex kExp{0.0, StarSpec::zero(), GraphonSpec::expProduct()};
const Graphex kIsolated{0.1, StarSpec::zero(), GraphonSpec::zero()};
const Graphex kStar{0.0, StarSpec::exponential(0.5, 1.0), GraphonSpec::zero()};

struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

std::vector<double> edgeCounts(const Graphex& gx, double size, double eps, int reps, std::uint64_t base) {
  std::vector<double> out;
  for (int i = 0; i < reps; ++i) {
    SimConfig cfg;
    cfg.size = size;
    cfg.epsilon = eps;
    cfg.seed = base + static_cast<std::uint64_t>(i);
    out.push_back(static_cast<double>(simulate(gx, cfg).graph.edgeCount()));
  }
  return out;
}

// Direct construction: latent points on [0, s] x [0, V] and a Bernoulli trial
// for every distinct pair.
UnlabeledGraph bruteForceGraphon(const GraphonSpec& w, double size, double cutoff, Rng& rng) {
  const auto m = rng.poisson(size * cutoff);
  std::vector<double> marks(m);
  for (auto& x : marks) x = rng.uniform(0.0, cutoff);
  testing::EdgePairs edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (rng.uniform() < w.value(marks[i], marks[j])) edges.emplace_back(i, j);
    }
  }
  return testing::graphOf(edges);
}

TEST(ExpectedEdgeCounts, Examples) {
  const auto a = expectedEdgeCounts(kExp, 10.0);
  EXPECT_DOUBLE_EQ(a.w, 50.0);
  EXPECT_DOUBLE_EQ(a.s, 0.0);
  EXPECT_DOUBLE_EQ(a.i, 0.0);

  const Graphex fig{0.1, StarSpec::exponential(0.5, 1.0), GraphonSpec::inversePowerProduct(2.0, 2.0)};
  const auto b = expectedEdgeCounts(fig, 15.0);
  EXPECT_DOUBLE_EQ(b.w, 112.5);
  EXPECT_NEAR(b.s, 225.0 / (2.0 * std::numbers::e), 1e-12);
  EXPECT_NEAR(b.s, 41.39, 0.005);
  EXPECT_NEAR(b.i, 22.5, 1e-12);

  const auto z = expectedEdgeCounts(fig, 0.0);
  EXPECT_EQ(z.total(), 0.0);
}

TEST(Simulate, GraphonEdgeMean) {
  const auto m = moments(edgeCounts(kExp, 10.0, 1e-3, 1000, 1000));
  EXPECT_NEAR(m.mean, 50.0, 3.0 * m.se);
}

TEST(Simulate, IsolatedEdgesArePoisson) {
  std::vector<std::int64_t> counts;
  for (const double x : edgeCounts(kIsolated, 15.0, 1e-3, 1000, 5000)) counts.push_back(static_cast<std::int64_t>(x));
  const auto report = poissonGoodnessOfFit(counts, 22.5, 0.01);
  EXPECT_TRUE(report.pass) << report.observed << " vs " << report.threshold;
}

TEST(Simulate, StarEdgeMean) {
  const auto m = moments(edgeCounts(kStar, 15.0, 1e-3, 2000, 9000));
  EXPECT_NEAR(m.mean, 225.0 / (2.0 * std::numbers::e), 4.0 * m.se);
}

TEST(Simulate, LatentCountIsPoissonOfArea) {
  std::vector<double> counts;
  double cutoff = 0.0;
  for (int i = 0; i < 2000; ++i) {
    SimConfig cfg;
    cfg.size = 4.0;
    cfg.seed = 70000 + static_cast<std::uint64_t>(i);
    cfg.keepLatent = true;
    const auto res = simulate(kExp, cfg);
    cutoff = res.graphonCutoff;
    counts.push_back(static_cast<double>(res.latent.size()));
    for (const auto& p : res.latent) {
      ASSERT_GE(p.theta, 0.0);
      ASSERT_LE(p.theta, 4.0);
      ASSERT_LE(p.mark, cutoff);
    }
  }
  const auto m = moments(counts);
  EXPECT_NEAR(m.mean, 4.0 * cutoff, 4.0 * m.se);
}

TEST(Simulate, TruncationBudgetIsExpectedLoss) {
  // with a deliberately coarse budget the mean drops by exactly epsilon / 2
  const double eps = 10.0;
  const auto coarse = moments(edgeCounts(kExp, 10.0, eps, 2000, 20000));
  EXPECT_NEAR(coarse.mean, 50.0 - eps / 2.0, 4.0 * coarse.se);

  const auto fine = moments(edgeCounts(kExp, 10.0, 1e-3, 2000, 30000));
  const auto finer = moments(edgeCounts(kExp, 10.0, 1e-5, 2000, 40000));
  EXPECT_NEAR(fine.mean, finer.mean, 4.0 * std::hypot(fine.se, finer.se));
}

TEST(Simulate, MatchesBruteForceConstruction) {
  struct Case {
    GraphonSpec w;
    double size;
    double eps;
  };
  const std::array<Case, 3> cases{{{GraphonSpec::expProduct(), 6.0, 1e-3},
                                   {GraphonSpec::inversePowerProduct(1.5, 3.0), 3.0, 2.0},
                                   {GraphonSpec::compactUniform(0.6, 2.0), 4.0, 1e-3}}};
  for (const auto& c : cases) {
    const Graphex gx{0.0, StarSpec::zero(), c.w};
    const double cutoff = c.w.truncation(0.5 * c.eps / (c.size * c.size));
    const auto fast = ensemble(
        [&](Rng& rng) {
          SimConfig cfg;
          cfg.size = c.size;
          cfg.epsilon = c.eps;
          cfg.seed = rng.seed();
          return forgetLabels(simulate(gx, cfg).graph);
        },
        2000, 101, 1);
    const auto brute = ensemble([&](Rng& rng) { return bruteForceGraphon(c.w, c.size, cutoff, rng); }, 2000, 202, 1);
    for (const char* stat : {"e", "v", "triangles"}) {
      const auto report = twoSampleTest(fast, brute, stat, 0.01);
      EXPECT_TRUE(report.pass) << c.w.name() << " " << stat << ": " << report.observed << " > " << report.threshold;
    }
  }
}

TEST(Simulate, Deterministic) {
  const Graphex fig{0.1, StarSpec::exponential(0.5, 1.0), GraphonSpec::inversePowerProduct(2.0, 2.0)};
  SimConfig cfg;
  cfg.size = 8.0;
  cfg.seed = 99;
  EXPECT_EQ(simulate(fig, cfg).graph, simulate(fig, cfg).graph);
  cfg.seed = 100;
  EXPECT_NE(simulate(fig, cfg).graph, simulate(fig, SimConfig{8.0, 1e-3, 99, false}).graph);
}

TEST(Simulate, ComponentsAndLabels) {
  const Graphex fig{0.1, StarSpec::exponential(0.5, 1.0), GraphonSpec::inversePowerProduct(2.0, 2.0)};
  SimConfig cfg;
  cfg.size = 12.0;
  cfg.seed = 5;
  const auto g = simulate(fig, cfg).graph;
  std::array<int, 3> seen{};
  for (const auto& e : g.edges()) {
    seen[static_cast<int>(e.component)]++;
    ASSERT_LE(e.theta, e.thetaPrime);
    ASSERT_GE(e.theta, 0.0);
    ASSERT_LE(e.thetaPrime, 12.0);
  }
  EXPECT_GT(seen[0], 0);
  EXPECT_GT(seen[1], 0);
  EXPECT_GT(seen[2], 0);
  for (const auto& e : simulate(kIsolated, cfg).graph.edges()) EXPECT_EQ(e.component, Component::I);
}

TEST(Simulate, RejectsInvalidInput) {
  EXPECT_THROW(simulate(Graphex{}, SimConfig{}), Error);
  EXPECT_THROW(simulate(kExp, SimConfig{0.0, 1e-3, 0, false}), Error);
  EXPECT_THROW(simulate(kExp, SimConfig{1.0, 0.0, 0, false}), Error);
  const Graphex heavy{0.0, StarSpec::power(1.0, 1.0), GraphonSpec::zero()};
  EXPECT_THROW(simulate(heavy, SimConfig{}), Error);
}

TEST(SimulateProjective, Examples) {
  const Graphex fig{0.1, StarSpec::exponential(0.5, 1.0), GraphonSpec::inversePowerProduct(2.0, 2.0)};
  const std::array<double, 2> two{5.0, 10.0};
  const auto nested = simulateProjective(fig, two, 1e-3, 17);
  EXPECT_EQ(restrict(nested[1], 5.0), nested[0]);

  const std::array<double, 1> one{7.0};
  EXPECT_EQ(simulateProjective(fig, one, 1e-3, 18).front(), simulate(fig, SimConfig{7.0, 1e-3, 18, false}).graph);

  const std::array<double, 3> three{5.0, 10.0, 15.0};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto gs = simulateProjective(kExp, three, 1e-3, seed);
    ASSERT_LE(gs[0].edgeCount(), gs[1].edgeCount());
    ASSERT_LE(gs[1].edgeCount(), gs[2].edgeCount());
    ASSERT_EQ(restrict(gs[2], 5.0), gs[0]);
  }

  const std::array<double, 2> descending{10.0, 5.0};
  EXPECT_THROW(simulateProjective(kExp, descending, 1e-3, 1), Error);
}

}  // namespace
}  // namespace graphex
