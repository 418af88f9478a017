#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "graphex/error.hpp"
#include "graphex/graphon.hpp"
#include "graphex/rng.hpp"

namespace graphex {
namespace {

// Quadrature oracles over R+ and [0, V], split at a fixed knot so the
// compact-support family is never integrated across its edge.
constexpr double kKnot = 2.0;

double integrateInterval(const std::function<double(double)>& f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  if (a < kKnot && kKnot < b) {
    return gauss_kronrod<double, 61>::integrate(f, a, kKnot, 15, 1e-12) +
           gauss_kronrod<double, 61>::integrate(f, kKnot, b, 15, 1e-12);
  }
  return gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-12);
}

double integrateHalfLine(const std::function<double(double)>& f) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrateInterval(f, 0.0, kKnot) + integrator.integrate([&](double t) { return f(kKnot + t); });
}

double l1ByQuadrature(const GraphonSpec& w) {
  return integrateHalfLine([&](double x) { return integrateHalfLine([&](double y) { return w.value(x, y); }); });
}

double innerMassByQuadrature(const GraphonSpec& w, double v) {
  return integrateInterval([&](double x) { return integrateInterval([&](double y) { return w.value(x, y); }, 0.0, v); },
                           0.0, v);
}

std::vector<GraphonSpec> allKinds() {
  std::vector<double> px{0.0, 1.0, 0.5, 1.0, 0.0, 0.25, 0.5, 0.25, 1.0};
  return {GraphonSpec::zero(),
          GraphonSpec::expProduct(),
          GraphonSpec::expProduct(2.5),
          GraphonSpec::inversePowerProduct(2.0, 2.0),
          GraphonSpec::inversePowerProduct(1.5, 3.0),
          GraphonSpec::compactUniform(0.4, 2.0),
          GraphonSpec::pixel(PixelGraphon(3, px, 0.7))};
}

TEST(Graphon, EvaluationExamples) {
  EXPECT_DOUBLE_EQ(evalGraphon(GraphonSpec::expProduct(), 0.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(evalGraphon(GraphonSpec::inversePowerProduct(2.0, 2.0), 1.0, 1.0), 0.0625);
  EXPECT_DOUBLE_EQ(evalGraphon(GraphonSpec::compactUniform(0.3, 1.0), 0.5, 1.0), 0.3);
  EXPECT_DOUBLE_EQ(evalGraphon(GraphonSpec::compactUniform(0.3, 1.0), 0.5, 1.01), 0.0);
  EXPECT_DOUBLE_EQ(evalGraphon(GraphonSpec::zero(), 0.1, 0.2), 0.0);
}

TEST(Graphon, SymmetricAndBoundedEverywhere) {
  Rng rng(11);
  for (const auto& w : allKinds()) {
    for (int i = 0; i < 100; ++i) {
      const double x = rng.uniform(0.0, 6.0);
      const double y = rng.uniform(0.0, 6.0);
      const double v = evalGraphon(w, x, y);
      ASSERT_EQ(v, evalGraphon(w, y, x)) << w.name() << " at " << x << "," << y;
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
}

TEST(Graphon, NormExamples) {
  EXPECT_DOUBLE_EQ(graphonL1(GraphonSpec::expProduct()), 1.0);
  EXPECT_DOUBLE_EQ(graphonL1(GraphonSpec::pixel(PixelGraphon(2, {1, 1, 1, 1}, 0.5))), 1.0);
  EXPECT_DOUBLE_EQ(graphonL1(GraphonSpec::inversePowerProduct(2.0, 2.0)), 1.0);
  EXPECT_DOUBLE_EQ(graphonL1(GraphonSpec::compactUniform(0.5, 2.0)), 2.0);
  EXPECT_DOUBLE_EQ(graphonL1(GraphonSpec::zero()), 0.0);
}

TEST(Graphon, NormsMatchQuadrature) {
  for (const auto& w : {GraphonSpec::expProduct(), GraphonSpec::expProduct(1.7),
                        GraphonSpec::inversePowerProduct(2.0, 2.0), GraphonSpec::inversePowerProduct(1.5, 3.0),
                        GraphonSpec::inversePowerProduct(2.5, 2.0, 0.5)}) {
    EXPECT_NEAR(w.l1Norm(), l1ByQuadrature(w), 1e-7 * w.l1Norm()) << w.name();
  }
}

TEST(Graphon, MarginalSquaredNormMatchesQuadrature) {
  for (const auto& w : {GraphonSpec::expProduct(), GraphonSpec::inversePowerProduct(2.0, 2.0),
                        GraphonSpec::inversePowerProduct(1.5, 3.0, 2.0)}) {
    const double oracle = integrateHalfLine([&](double x) {
      const double mu = integrateHalfLine([&](double y) { return w.value(x, y); });
      return mu * mu;
    });
    EXPECT_NEAR(w.marginalSquaredNorm(), oracle, 1e-7 * oracle) << w.name();
  }
  const auto cu = GraphonSpec::compactUniform(0.4, 2.0);
  EXPECT_NEAR(cu.marginalSquaredNorm(), 0.4 * 0.4 * 8.0, 1e-12);
}

TEST(Graphon, NonIntegrableFamilies) {
  const auto heavy = GraphonSpec::inversePowerProduct(1.0, 2.0);
  EXPECT_THROW(heavy.l1Norm(), Error);
  try {
    heavy.l1Norm();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegrable);
  }
  try {
    heavy.truncation(1e-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationUnavailable);
  }
}

TEST(Graphon, TailMassMatchesQuadrature) {
  for (const auto& w : {GraphonSpec::expProduct(), GraphonSpec::inversePowerProduct(2.0, 2.0),
                        GraphonSpec::inversePowerProduct(1.5, 3.0), GraphonSpec::compactUniform(0.4, 2.0)}) {
    for (double v : {0.5, 1.0, 3.0, 10.0}) {
      const double oracle = 0.5 * (l1ByQuadrature(w) - innerMassByQuadrature(w, v));
      EXPECT_NEAR(w.tailMass(v), oracle, 1e-6) << w.name() << " V=" << v;
    }
  }
}

TEST(Graphon, TruncationMeetsBudgetTightly) {
  for (const auto& w : {GraphonSpec::expProduct(), GraphonSpec::expProduct(3.0),
                        GraphonSpec::inversePowerProduct(2.0, 2.0), GraphonSpec::inversePowerProduct(1.5, 3.0)}) {
    for (double budget : {1e-2, 1e-4, 1e-7}) {
      const double v = w.truncation(budget);
      EXPECT_LE(w.tailMass(v), budget * (1.0 + 1e-9)) << w.name();
      EXPECT_GT(w.tailMass(v * 0.99), budget) << w.name();
    }
  }
  EXPECT_DOUBLE_EQ(GraphonSpec::compactUniform(0.4, 2.0).truncation(1e-3), 2.0);
  EXPECT_DOUBLE_EQ(GraphonSpec::pixel(PixelGraphon(2, {0, 1, 1, 0}, 0.5)).truncation(1e-3), 1.0);
  EXPECT_THROW(GraphonSpec::expProduct().truncation(0.0), Error);
}

TEST(Graphon, EnvelopeDominates) {
  Rng rng(12);
  for (const auto& w : {GraphonSpec::expProduct(), GraphonSpec::inversePowerProduct(1.5, 3.0),
                        GraphonSpec::compactUniform(0.4, 2.0)}) {
    ASSERT_TRUE(w.hasEnvelope());
    for (int i = 0; i < 1000; ++i) {
      const double x = rng.uniform(0.0, 20.0);
      const double y = rng.uniform(0.0, 20.0);
      ASSERT_LE(w.value(x, y), w.envelope(x) * w.envelope(y) * (1.0 + 1e-12));
      ASSERT_GE(w.envelope(x), w.envelope(x + 0.5));
    }
  }
  EXPECT_FALSE(GraphonSpec::pixel(PixelGraphon(1, {0}, 1.0)).hasEnvelope());
}

TEST(Pixel, ValueAndSupport) {
  const PixelGraphon pg(2, {0, 1, 1, 0}, 0.5);
  EXPECT_EQ(pg.value(0.1, 0.7), 1.0);
  EXPECT_EQ(pg.value(0.1, 0.2), 0.0);
  EXPECT_EQ(pg.value(1.0, 0.2), 0.0);  // support is half-open
  EXPECT_EQ(pg.value(5.0, 5.0), 0.0);
  EXPECT_DOUBLE_EQ(pg.supportEdge(), 1.0);
  EXPECT_TRUE(pg.isBinary());
  EXPECT_FALSE(PixelGraphon(1, {0.5}, 1.0).isBinary());
}

TEST(Pixel, RejectsInvalidMatrices) {
  EXPECT_THROW(PixelGraphon(2, {0, 1, 0, 0}, 1.0), Error);      // asymmetric
  EXPECT_THROW(PixelGraphon(2, {0, 1.5, 1.5, 0}, 1.0), Error);  // above one
  EXPECT_THROW(PixelGraphon(2, {0, 1, 1, 0}, 0.0), Error);      // width
  EXPECT_THROW(PixelGraphon(2, {0, 1, 1}, 1.0), Error);         // shape
}

TEST(Graphon, DilationScalesNormBySquare) {
  for (double c : {0.5, 2.0, 7.0}) {
    for (const auto& w : allKinds()) {
      if (w.isZero()) continue;
      const auto d = w.dilated(c);
      EXPECT_NEAR(d.l1Norm(), c * c * w.l1Norm(), 1e-12 * c * c) << w.name();
      EXPECT_DOUBLE_EQ(d.value(1.3 * c, 0.4 * c), w.value(1.3, 0.4)) << w.name();
    }
  }
  EXPECT_EQ(GraphonSpec::expProduct().dilated(1.0), GraphonSpec::expProduct());
  EXPECT_THROW(GraphonSpec::expProduct().dilated(0.0), Error);
}

TEST(Graphon, BuiltinLookup) {
  EXPECT_EQ(GraphonSpec::builtin("exp-product", {}), GraphonSpec::expProduct());
  EXPECT_EQ(GraphonSpec::builtin("inverse-power-product", {2.0}), GraphonSpec::inversePowerProduct(2.0, 2.0));
  EXPECT_EQ(GraphonSpec::builtin("compact-uniform", {0.5, 1.0}), GraphonSpec::compactUniform(0.5, 1.0));
  EXPECT_THROW(GraphonSpec::builtin("nope", {}), Error);
  EXPECT_THROW(GraphonSpec::builtin("compact-uniform", {0.5}), Error);
}

TEST(Star, NormsAndTail) {
  const auto s = StarSpec::exponential(0.5, 1.0);
  EXPECT_DOUBLE_EQ(s.value(0.0), 0.5 * std::exp(-1.0));
  EXPECT_NEAR(s.l1Norm(), 1.0 / (2.0 * std::numbers::e), 1e-15);
  EXPECT_NEAR(s.l1Norm(), integrateHalfLine([&](double x) { return s.value(x); }), 1e-10);
  EXPECT_NEAR(s.squaredNorm(), integrateHalfLine([&](double x) { return s.value(x) * s.value(x); }), 1e-10);
  const auto p = StarSpec::power(2.0, 3.0, 1.5);
  EXPECT_NEAR(p.l1Norm(), integrateHalfLine([&](double x) { return p.value(x); }), 1e-9);
  EXPECT_NEAR(p.squaredNorm(), integrateHalfLine([&](double x) { return p.value(x) * p.value(x); }), 1e-9);
  for (const auto& star : {s, p}) {
    const double v = star.truncation(1e-5);
    EXPECT_NEAR(star.tailMass(v), 1e-5, 1e-12);
    EXPECT_NEAR(star.tailMass(2.0),
                integrateHalfLine([&](double x) { return star.value(x + 2.0); }), 1e-9);
  }
  try {
    StarSpec::power(1.0, 1.0).truncation(1e-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationUnavailable);
  }
}

TEST(Star, DilationScalesNormBySquare) {
  const auto s = StarSpec::exponential(0.5, 1.0);
  const auto d = s.dilated(3.0);
  EXPECT_NEAR(d.l1Norm(), 9.0 * s.l1Norm(), 1e-14);
  EXPECT_NEAR(d.value(6.0), 3.0 * s.value(2.0), 1e-15);
}

TEST(GraphexType, Nontriviality) {
  EXPECT_FALSE((Graphex{}.nontrivial()));
  EXPECT_TRUE((Graphex{0.1, {}, {}}.nontrivial()));
  EXPECT_TRUE((Graphex{0.0, StarSpec::exponential(0.5, 1.0), {}}.nontrivial()));
  EXPECT_TRUE((Graphex{0.0, {}, GraphonSpec::expProduct()}.nontrivial()));
  EXPECT_FALSE((Graphex{0.0, {}, GraphonSpec::pixel(PixelGraphon(2, {0, 0, 0, 0}, 1.0))}.nontrivial()));
}

}  // namespace
}  // namespace graphex
