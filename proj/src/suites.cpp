#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "graphex/error.hpp"
#include "graphex/estimate.hpp"
#include "graphex/sample.hpp"
#include "graphex/sequence.hpp"
#include "graphex/simulate.hpp"
#include "graphex/verify.hpp"

namespace graphex {

Graphex expProductGraphex() { return Graphex{0.0, StarSpec::zero(), GraphonSpec::expProduct()}; }

Graphex threeComponentGraphex() {
  return Graphex{0.1, StarSpec::exponential(0.5, 1.0), GraphonSpec::inversePowerProduct(2.0, 2.0)};
}

PrefixStats sequencePrefix(const Graphex& gx, std::size_t ell, double epsilon, Rng& rng) {
  if (ell == 0) throw Error(ErrorCode::InvalidArgument, "prefix length must be positive");
  const double rate = 0.5 * gx.graphon.l1Norm() + gx.star.l1Norm() + gx.isolatedRate;
  if (!(rate > 0.0)) throw Error(ErrorCode::InvalidArgument, "graphex is trivial");
  double size = std::sqrt(10.0 * static_cast<double>(ell) / rate);
  for (std::uint64_t attempt = 0; attempt < 40; ++attempt, size *= 2.0) {
    SimConfig cfg;
    cfg.size = size;
    cfg.epsilon = epsilon;
    cfg.seed = rng.child(attempt).seed();
    const GraphSequence seq = graphSequence(simulate(gx, cfg).graph, ell);
    if (seq.length() < ell) continue;
    const UnlabeledGraph& last = seq.graphs.back();
    PrefixStats out;
    out.e = static_cast<std::int64_t>(last.edgeCount());
    out.v = static_cast<std::int64_t>(last.vertexCount());
    const auto deg = last.degrees();
    out.maxDegree = static_cast<std::int64_t>(*std::max_element(deg.begin(), deg.end()));
    std::int64_t place = 1;
    const auto cap = static_cast<std::int64_t>(ell);
    for (const auto& step : seq.steps) {
      out.stepCode += (std::min<std::int64_t>(static_cast<std::int64_t>(step.size()), cap) - 1) * place;
      place *= cap;
    }
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "graph sequence never reached the requested length");
}

namespace {

constexpr double kDefaultEpsilon = 1e-3;

std::uint64_t armSeed(std::uint64_t seed, std::uint64_t arm) { return Rng(seed).child(arm).seed(); }

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

TestReport named(TestReport r, std::string_view suite, std::string test, std::string statistic,
                 std::uint64_t seedA, std::uint64_t seedB) {
  r.suite = std::string(suite);
  r.test = std::move(test);
  r.statistic = std::move(statistic);
  r.seedA = seedA;
  r.seedB = seedB;
  return r;
}

// Chi-square, or an exact comparison when both samples are one repeated value.
TestReport compareSamples(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                          double alpha) {
  try {
    return twoSampleChiSquare(a, b, alpha);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::DegenerateBins) throw;
    const bool constant = std::all_of(a.begin(), a.end(), [&](auto x) { return x == a.front(); }) &&
                          std::all_of(b.begin(), b.end(), [&](auto x) { return x == a.front(); });
    TestReport r;
    r.kind = TestKind::Exact;
    r.observed = constant ? 0.0 : 1.0;
    r.threshold = 0.0;
    r.pass = constant;
    r.replicates = std::min(a.size(), b.size());
    r.detail = "degenerate bins";
    return r;
  }
}

template <typename T, typename F>
std::vector<std::int64_t> column(const std::vector<T>& xs, F field) {
  std::vector<std::int64_t> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(static_cast<std::int64_t>(field(x)));
  return out;
}

void addBonferroni(std::vector<TestReport>& reports, std::string_view suite, double alpha) {
  double minP = 1.0;
  std::size_t count = 0;
  for (const auto& r : reports) {
    if (r.gating && r.kind == TestKind::ChiSquare && r.pValue >= 0.0) {
      minP = std::min(minP, r.pValue);
      ++count;
    }
  }
  if (count < 2) return;
  TestReport b;
  b.suite = std::string(suite);
  b.test = "bonferroni";
  b.statistic = "min p x tests";
  b.kind = TestKind::Bonferroni;
  b.observed = std::min(1.0, minP * static_cast<double>(count));
  b.threshold = alpha;
  b.pass = b.observed >= alpha;
  b.gating = false;
  b.replicates = count;
  reports.push_back(std::move(b));
}

// A random graphex from a small pool spanning every component kind.
Graphex randomGraphex(Rng& rng, std::size_t kind) {
  switch (kind % 5) {
    case 0:
      return Graphex{0.0, StarSpec::zero(), GraphonSpec::expProduct(rng.uniform(0.5, 2.0))};
    case 1:
      return threeComponentGraphex();
    case 2:
      return Graphex{0.0, StarSpec::zero(),
                     GraphonSpec::compactUniform(rng.uniform(0.2, 0.9), rng.uniform(0.5, 3.0))};
    case 3: {
      const std::size_t n = 5;
      std::vector<double> values(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          const double x = (i == j) ? 0.0 : (rng.bernoulli(0.6) ? 1.0 : 0.0);
          values[i * n + j] = x;
          values[j * n + i] = x;
        }
      }
      values[1] = values[n] = 1.0;
      return Graphex{0.0, StarSpec::zero(), GraphonSpec::pixel(PixelGraphon(n, values, rng.uniform(0.2, 1.0)))};
    }
    default:
      return Graphex{rng.uniform(0.05, 0.5), StarSpec::exponential(rng.uniform(0.2, 1.0), 0.0),
                     GraphonSpec::zero()};
  }
}

std::vector<TestReport> projectivitySuite(const SuiteConfig& cfg) {
  constexpr std::string_view suite = "projectivity";
  const std::size_t pairs = cfg.replicates.value_or(50);
  const double eps = cfg.epsilon.value_or(0.05);
  const Rng master(cfg.seed);
  std::size_t nestingFailures = 0;
  std::size_t singleFailures = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    Rng rng = master.child(i);
    const Graphex gx = cfg.model ? *cfg.model : randomGraphex(rng, i);
    const double top = rng.uniform(4.0, 12.0);
    std::vector<double> sizes{rng.uniform(0.1, 1.0) * top, rng.uniform(0.1, 1.0) * top, top};
    std::sort(sizes.begin(), sizes.end());
    const std::uint64_t seed = rng.nextU64();
    const auto graphs = simulateProjective(gx, sizes, eps, seed);
    for (std::size_t k = 0; k + 1 < graphs.size(); ++k) {
      if (!(restrict(graphs[k + 1], sizes[k]) == graphs[k])) ++nestingFailures;
      if (!(restrict(graphs.back(), sizes[k]) == graphs[k])) ++nestingFailures;
    }
    const std::array<double, 1> single{top};
    SimConfig sc;
    sc.size = top;
    sc.epsilon = eps;
    sc.seed = seed;
    if (!(simulateProjective(gx, single, eps, seed).front() == simulate(gx, sc).graph)) ++singleFailures;
  }
  std::vector<TestReport> out;
  TestReport nesting;
  nesting.kind = TestKind::Exact;
  nesting.observed = static_cast<double>(nestingFailures);
  nesting.threshold = 0.0;
  nesting.pass = nestingFailures == 0;
  nesting.replicates = pairs;
  nesting.detail = "restrict(G_s, r) == G_r mismatches";
  out.push_back(named(nesting, suite, "nesting", "mismatches", cfg.seed, cfg.seed));
  TestReport single = nesting;
  single.observed = static_cast<double>(singleFailures);
  single.pass = singleFailures == 0;
  single.detail = "single-size projective run vs direct simulation";
  out.push_back(named(single, suite, "single-size", "mismatches", cfg.seed, cfg.seed));
  return out;
}

struct ComponentCounts {
  double w = 0.0;
  double s = 0.0;
  double i = 0.0;
};

std::vector<ComponentCounts> componentEnsemble(const Graphex& gx, double size, double eps,
                                               std::size_t reps, std::uint64_t seed, unsigned threads) {
  const std::function<ComponentCounts(Rng&)> draw = [&](Rng& rng) {
    SimConfig sc;
    sc.size = size;
    sc.epsilon = eps;
    sc.seed = rng.seed();
    ComponentCounts c;
    const LabeledGraph g = simulate(gx, sc).graph;
    for (const auto& e : g.edges()) {
      if (e.component == Component::W) c.w += 1.0;
      if (e.component == Component::S) c.s += 1.0;
      if (e.component == Component::I) c.i += 1.0;
    }
    return c;
  };
  return replicate(reps, seed, draw, threads);
}

void componentTests(std::vector<TestReport>& out, const Graphex& gx, double size,
                    const std::vector<ComponentCounts>& counts, std::uint64_t seed, double alpha,
                    bool w, bool s, bool i) {
  constexpr std::string_view suite = "component-counts";
  const EdgeCounts mean = expectedEdgeCounts(gx, size);
  const EdgeCounts var = edgeCountVariances(gx, size);
  const std::string at = " s=" + fmt(size);
  auto values = [&](auto field) {
    std::vector<double> xs;
    xs.reserve(counts.size());
    for (const auto& c : counts) xs.push_back(field(c));
    return xs;
  };
  if (i && gx.isolatedRate > 0.0) {
    const auto xs = values([](const ComponentCounts& c) { return c.i; });
    std::vector<std::int64_t> ks(xs.begin(), xs.end());
    out.push_back(named(poissonGoodnessOfFit(ks, mean.i, alpha), suite,
                        "I-edges ~ Poisson(" + fmt(mean.i) + ")" + at, "count", seed, seed));
  }
  if (w && !gx.graphon.isZero()) {
    const auto xs = values([](const ComponentCounts& c) { return c.w; });
    out.push_back(named(meanWithinSE(xs, mean.w), suite, "W-edge mean" + at, "count", seed, seed));
    out.push_back(named(varianceWithinSE(xs, var.w), suite, "W-edge variance" + at, "count", seed, seed));
  }
  if (s && !gx.star.isZero()) {
    const auto xs = values([](const ComponentCounts& c) { return c.s; });
    out.push_back(named(meanWithinSE(xs, mean.s), suite, "S-edge mean" + at, "count", seed, seed));
    out.push_back(named(varianceWithinSE(xs, var.s), suite, "S-edge variance" + at, "count", seed, seed));
  }
}

std::vector<TestReport> componentCountsSuite(const SuiteConfig& cfg) {
  const std::size_t reps = cfg.replicates.value_or(2000);
  const double eps = cfg.epsilon.value_or(kDefaultEpsilon);
  std::vector<TestReport> out;
  if (cfg.model) {
    const double size = cfg.size.value_or(15.0);
    const std::uint64_t seed = armSeed(cfg.seed, 0);
    const auto counts = componentEnsemble(*cfg.model, size, eps, reps, seed, cfg.threads);
    componentTests(out, *cfg.model, size, counts, seed, cfg.alpha, true, true, true);
    return out;
  }
  const Graphex isolated{0.1, StarSpec::zero(), GraphonSpec::zero()};
  const Graphex graphon = expProductGraphex();
  const Graphex star{0.0, StarSpec::exponential(0.5, 1.0), GraphonSpec::zero()};
  const double sizeI = cfg.size.value_or(15.0);
  const double sizeW = cfg.size.value_or(10.0);
  const double sizeS = cfg.size.value_or(15.0);
  std::uint64_t seed = armSeed(cfg.seed, 0);
  componentTests(out, isolated, sizeI, componentEnsemble(isolated, sizeI, eps, reps, seed, cfg.threads),
                 seed, cfg.alpha, false, false, true);
  seed = armSeed(cfg.seed, 1);
  componentTests(out, graphon, sizeW, componentEnsemble(graphon, sizeW, eps, reps, seed, cfg.threads),
                 seed, cfg.alpha, true, false, false);
  seed = armSeed(cfg.seed, 2);
  componentTests(out, star, sizeS, componentEnsemble(star, sizeS, eps, reps, seed, cfg.threads), seed,
                 cfg.alpha, false, true, false);
  return out;
}

UnlabeledGraph simulateUnlabeled(const Graphex& gx, double size, double eps, std::uint64_t seed) {
  SimConfig sc;
  sc.size = size;
  sc.epsilon = eps;
  sc.seed = seed;
  return forgetLabels(simulate(gx, sc).graph);
}

std::vector<TestReport> invarianceSuite(const SuiteConfig& cfg, bool relabel) {
  const std::string_view suite = relabel ? "relabeling-invariance" : "sampling-invariance";
  const Graphex gx = cfg.model.value_or(expProductGraphex());
  const double s = cfg.size.value_or(30.0);
  const double r = cfg.probe.value_or(10.0);
  if (!(r > 0.0 && r <= s)) throw Error(ErrorCode::InvalidArgument, "need 0 < probe <= size");
  const std::size_t reps = cfg.replicates.value_or(2000);
  const double eps = cfg.epsilon.value_or(kDefaultEpsilon);
  const std::uint64_t seedA = armSeed(cfg.seed, 0);
  const std::uint64_t seedB = armSeed(cfg.seed, 1);

  const GraphGenerator derived = [&](Rng& rng) {
    const UnlabeledGraph big = simulateUnlabeled(gx, s, eps, rng.child(0).seed());
    Rng local = rng.child(1);
    if (relabel) {
      Rng labels = rng.child(2);
      return forgetLabels(restrict(randomLabel(big, s, labels), r));
    }
    return pSample(big, r / s, local);
  };
  const GraphGenerator direct = [&](Rng& rng) { return simulateUnlabeled(gx, r, eps, rng.seed()); };
  const auto a = ensemble(derived, reps, seedA, cfg.threads);
  const auto b = ensemble(direct, reps, seedB, cfg.threads);

  std::vector<TestReport> out;
  const std::string label = relabel ? "relabel(G_" + fmt(s) + ") restricted to " + fmt(r)
                                    : "pSample(G_" + fmt(s) + ", " + fmt(r) + "/" + fmt(s) + ")";
  for (const char* stat : {"e", "v", "triangles"}) {
    out.push_back(named(compareSamples(column(a, [stat](const StatVector& x) { return statistic(x, stat); }),
                                       column(b, [stat](const StatVector& x) { return statistic(x, stat); }),
                                       cfg.alpha),
                        suite, label + " vs G_" + fmt(r), stat, seedA, seedB));
  }
  addBonferroni(out, suite, cfg.alpha);
  return out;
}

std::vector<TestReport> couplingSuite(const SuiteConfig& cfg) {
  constexpr std::string_view suite = "coupling-bounds";
  const double eps = cfg.epsilon.value_or(kDefaultEpsilon);
  UnlabeledGraph g;
  std::uint64_t graphSeed = cfg.seed;
  if (cfg.graph) {
    g = *cfg.graph;
  } else {
    const Graphex gx = cfg.model.value_or(expProductGraphex());
    const Rng master(armSeed(cfg.seed, 0));
    if (cfg.targetVertices > 0) {
      const double s = cfg.size.value_or(15.0);
      bool found = false;
      for (std::uint64_t k = 0; k < 100000 && !found; ++k) {
        graphSeed = master.child(k).seed();
        g = simulateUnlabeled(gx, s, eps, graphSeed);
        found = g.vertexCount() == cfg.targetVertices;
      }
      if (!found) throw Error(ErrorCode::InvalidArgument, "no simulated graph with the target vertex count");
    } else {
      graphSeed = master.child(0).seed();
      g = simulateUnlabeled(gx, cfg.size.value_or(30.0), eps, graphSeed);
    }
  }
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "coupling suite needs a nonempty graph");
  std::vector<double> ratios = cfg.ratios;
  if (ratios.empty()) ratios.push_back(cfg.probe.value_or(3.0) / cfg.size.value_or(30.0));

  const std::size_t draws = cfg.replicates.value_or(cfg.draws);
  std::vector<TestReport> out;
  const std::string graphLabel = "v=" + std::to_string(g.vertexCount()) + " e=" + std::to_string(g.edgeCount());
  for (std::size_t idx = 0; idx < ratios.size(); ++idx) {
    const double ratio = ratios[idx];
    const std::uint64_t seed = armSeed(cfg.seed, 100 + idx);
    const std::function<std::array<char, 2>(Rng&)> draw = [&](Rng& rng) {
      const CouplingOutcome o = coupledSample(g, ratio, 1.0, rng);
      return std::array<char, 2>{static_cast<char>(o.agreeXH), static_cast<char>(o.agreeHM)};
    };
    const auto outcomes = replicate(draws, seed, draw, cfg.threads);
    std::size_t xh = 0;
    std::size_t hm = 0;
    for (const auto& o : outcomes) {
      xh += o[0] ? 0 : 1;
      hm += o[1] ? 0 : 1;
    }
    const std::string at = " r/s=" + fmt(ratio) + " " + graphLabel;
    out.push_back(named(frequencyBound(hm, draws, ratio), suite, "P(H!=M)" + at, "frequency", seed, graphSeed));
    out.push_back(named(frequencyBound(xh, draws, withoutReplacementBound(g.edgeCount(), g.vertexCount(), ratio)),
                        suite, "P(X!=H)" + at, "frequency", seed, graphSeed));
    TestReport tv;
    tv.kind = TestKind::Bound;
    tv.observed = binomialPoissonDistance(g.vertexCount(), ratio);
    tv.threshold = ratio;
    tv.pass = tv.observed <= tv.threshold;
    tv.replicates = 1;
    tv.detail = "exact total variation of the coupled counts";
    out.push_back(named(tv, suite, "TV(Bin,Poi)" + at, "distance", seed, graphSeed));
  }
  return out;
}

std::vector<double> defaultSizes(const SuiteConfig& cfg) {
  if (!cfg.sizes.empty()) return cfg.sizes;
  return {10.0, 20.0, 40.0};
}

bool fullTriple(const Graphex& gx) { return gx.isolatedRate > 0.0 || !gx.star.isZero(); }

std::vector<TestReport> estimatorSuite(const SuiteConfig& cfg) {
  constexpr std::string_view suite = "estimator-consistency";
  const Graphex gx = cfg.model.value_or(expProductGraphex());
  const auto sizes = defaultSizes(cfg);
  const bool triple = fullTriple(gx);
  const double r = cfg.probe.value_or(triple ? 3.0 : 5.0);
  const std::size_t reps = cfg.replicates.value_or(2000);
  const double eps = cfg.epsilon.value_or(kDefaultEpsilon);

  const std::uint64_t dataSeed = armSeed(cfg.seed, 0);
  const auto realization = simulateProjective(gx, sizes, eps, dataSeed);
  const std::uint64_t refSeed = armSeed(cfg.seed, 1);
  const auto reference = ensemble([&](Rng& rng) { return simulateUnlabeled(gx, r, eps, rng.seed()); }, reps,
                                  refSeed, cfg.threads);

  std::vector<TestReport> out;
  std::vector<double> edgeStatistic;
  std::vector<const char*> statsToTest{"e"};
  if (triple) statsToTest.push_back("v");
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const UnlabeledGraph g = forgetLabels(realization[k]);
    const PixelGraphon pg = dilatedEmpiricalGraphon(g, sizes[k]);
    const std::uint64_t seed = armSeed(cfg.seed, 2 + k);
    const auto sampled = ensemble([&](Rng& rng) { return generateFromPixel(pg, r, rng); }, reps, seed, cfg.threads);
    const bool last = k + 1 == sizes.size();
    for (const char* stat : statsToTest) {
      TestReport rep = named(
          compareSamples(column(sampled, [stat](const StatVector& x) { return statistic(x, stat); }),
                         column(reference, [stat](const StatVector& x) { return statistic(x, stat); }), cfg.alpha),
          suite, "uKEG(What_(G_s,s), " + fmt(r) + ") vs uKEG(W, " + fmt(r) + ") s=" + fmt(sizes[k]), stat, seed,
          refSeed);
      rep.gating = last;
      rep.detail += " e(G_s)=" + std::to_string(g.edgeCount()) + " v(G_s)=" + std::to_string(g.vertexCount());
      if (std::string_view(stat) == "e") edgeStatistic.push_back(rep.observed);
      out.push_back(std::move(rep));
    }
  }
  if (sizes.size() >= 2) {
    TestReport trend;
    trend.kind = TestKind::Trend;
    trend.observed = edgeStatistic.back();
    trend.threshold = edgeStatistic.front();
    trend.pass = trend.observed < trend.threshold;
    trend.replicates = reps;
    trend.detail = "chi-square at largest size below chi-square at smallest size";
    out.push_back(named(trend, suite, "discrepancy trend s=" + fmt(sizes.front()) + " -> " + fmt(sizes.back()), "e",
                        dataSeed, refSeed));
  }

  const double top = sizes.back();
  const std::uint64_t normSeed = armSeed(cfg.seed, 50);
  const std::function<double(Rng&)> ratio = [&](Rng& rng) {
    SimConfig sc;
    sc.size = top;
    sc.epsilon = eps;
    sc.seed = rng.seed();
    return 2.0 * static_cast<double>(simulate(gx, sc).graph.edgeCount()) / (top * top);
  };
  const auto ratios = replicate(cfg.normReplicates, normSeed, ratio, cfg.threads);
  const double mean = std::accumulate(ratios.begin(), ratios.end(), 0.0) / static_cast<double>(ratios.size());
  const double target = gx.graphon.l1Norm() + 2.0 * gx.star.l1Norm() + 2.0 * gx.isolatedRate;
  TestReport norm;
  norm.kind = TestKind::RelativeError;
  norm.observed = std::fabs(mean / target - 1.0);
  norm.threshold = 0.1;
  norm.pass = norm.observed <= norm.threshold;
  norm.replicates = cfg.normReplicates;
  norm.detail = "mean 2e/s^2=" + fmt(mean) + " target=" + fmt(target);
  out.push_back(named(norm, suite, "2e(G_s)/s^2 s=" + fmt(top), "2e/s^2", normSeed, normSeed));
  return out;
}

void prefixTests(std::vector<TestReport>& out, std::string_view suite, const std::string& label,
                 const std::vector<PrefixStats>& a, const std::vector<PrefixStats>& b, double alpha,
                 std::uint64_t seedA, std::uint64_t seedB, bool gating) {
  const std::array<std::pair<const char*, std::int64_t PrefixStats::*>, 3> fields{
      {{"e_l", &PrefixStats::e}, {"v_l", &PrefixStats::v}, {"steps", &PrefixStats::stepCode}}};
  for (const auto& [name, field] : fields) {
    TestReport rep = named(compareSamples(column(a, [field](const PrefixStats& p) { return p.*field; }),
                                          column(b, [field](const PrefixStats& p) { return p.*field; }), alpha),
                           suite, label, name, seedA, seedB);
    rep.gating = gating;
    out.push_back(std::move(rep));
  }
}

std::vector<PrefixStats> prefixEnsemble(const Graphex& gx, std::size_t ell, double eps, std::size_t reps,
                                        std::uint64_t seed, unsigned threads) {
  const std::function<PrefixStats(Rng&)> draw = [&](Rng& rng) { return sequencePrefix(gx, ell, eps, rng); };
  return replicate(reps, seed, draw, threads);
}

std::vector<TestReport> dilationSuite(const SuiteConfig& cfg) {
  constexpr std::string_view suite = "dilation-invariance";
  const double eps = cfg.epsilon.value_or(kDefaultEpsilon);
  std::vector<TestReport> out;

  // exact: sequences of a labeled graph and of its dilation coincide
  const std::array<double, 3> factors{0.5, 2.0, 7.0};
  const Rng master(armSeed(cfg.seed, 0));
  std::size_t mismatches = 0;
  constexpr std::size_t inputs = 100;
  for (std::size_t i = 0; i < inputs; ++i) {
    Rng rng = master.child(i);
    const Graphex gx = randomGraphex(rng, i);
    SimConfig sc;
    sc.size = rng.uniform(3.0, 10.0);
    sc.epsilon = 0.05;
    sc.seed = rng.nextU64();
    const LabeledGraph g = simulate(gx, sc).graph;
    const double c = factors[i % factors.size()];
    const GraphSequence base = graphSequence(g);
    const GraphSequence dilated = graphSequence(dilateMeasure(g, c));
    bool same = base.graphs == dilated.graphs && base.jumpTimes.size() == dilated.jumpTimes.size();
    for (std::size_t k = 0; same && k < base.jumpTimes.size(); ++k) {
      same = dilated.jumpTimes[k] == c * base.jumpTimes[k];
    }
    if (!same) ++mismatches;
  }
  TestReport exact;
  exact.kind = TestKind::Exact;
  exact.observed = static_cast<double>(mismatches);
  exact.threshold = 0.0;
  exact.pass = mismatches == 0;
  exact.replicates = inputs;
  exact.detail = "graphSequence(dilateMeasure(g, c)) vs graphSequence(g), c in {0.5, 2, 7}";
  out.push_back(named(exact, suite, "sequence under measure dilation", "mismatches", master.seed(), master.seed()));

  const Graphex gx = cfg.model.value_or(expProductGraphex());
  const double c = cfg.probe.value_or(2.0);
  const Graphex dilated = dilateGraphex(gx, c);
  const std::size_t reps = cfg.replicates.value_or(2000);
  const std::uint64_t seedA = armSeed(cfg.seed, 1);
  const std::uint64_t seedB = armSeed(cfg.seed, 2);
  const auto a = prefixEnsemble(gx, cfg.prefixLength, eps, reps, seedA, cfg.threads);
  const auto b = prefixEnsemble(dilated, cfg.prefixLength, eps, reps, seedB, cfg.threads);
  prefixTests(out, suite, "prefix l=" + std::to_string(cfg.prefixLength) + " gx vs dilate(gx, " + fmt(c) + ")", a, b,
              cfg.alpha, seedA, seedB, true);
  addBonferroni(out, suite, cfg.alpha);
  return out;
}

std::vector<TestReport> sequenceSuite(const SuiteConfig& cfg) {
  constexpr std::string_view suite = "sequence-consistency";
  const Graphex gx = cfg.model.value_or(expProductGraphex());
  const auto sizes = defaultSizes(cfg);
  const std::size_t reps = cfg.replicates.value_or(2000);
  const double eps = cfg.epsilon.value_or(kDefaultEpsilon);
  const std::size_t ell = cfg.prefixLength;

  const std::uint64_t dataSeed = armSeed(cfg.seed, 0);
  const auto realization = simulateProjective(gx, sizes, eps, dataSeed);
  const std::uint64_t refSeed = armSeed(cfg.seed, 1);
  const auto reference = prefixEnsemble(gx, ell, eps, reps, refSeed, cfg.threads);

  std::vector<TestReport> out;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const UnlabeledGraph g = forgetLabels(realization[k]);
    const Graphex estimate = pixelGraphex(empiricalGraphon(g));
    const std::uint64_t seed = armSeed(cfg.seed, 2 + k);
    const auto sampled = prefixEnsemble(estimate, ell, eps, reps, seed, cfg.threads);
    prefixTests(out, suite,
                "prefix l=" + std::to_string(ell) + " of uKEG(Wtilde_(G_s)) vs gx s=" + fmt(sizes[k]) +
                    " e(G_s)=" + std::to_string(g.edgeCount()),
                sampled, reference, cfg.alpha, seed, refSeed, k + 1 == sizes.size());
  }
  addBonferroni(out, suite, cfg.alpha);
  return out;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{
      "projectivity",          "sampling-invariance",   "relabeling-invariance", "coupling-bounds",
      "component-counts",      "estimator-consistency", "dilation-invariance",   "sequence-consistency"};
  return names;
}

std::vector<TestReport> runSuite(std::string_view name, const SuiteConfig& config) {
  if (name == "projectivity") return projectivitySuite(config);
  if (name == "sampling-invariance") return invarianceSuite(config, false);
  if (name == "relabeling-invariance") return invarianceSuite(config, true);
  if (name == "coupling-bounds") return couplingSuite(config);
  if (name == "component-counts") return componentCountsSuite(config);
  if (name == "estimator-consistency") return estimatorSuite(config);
  if (name == "dilation-invariance") return dilationSuite(config);
  if (name == "sequence-consistency") return sequenceSuite(config);
  throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(name) + "'");
}

}  // namespace graphex
