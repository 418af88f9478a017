#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "graphex/graph.hpp"
#include "graphex/graphon.hpp"
#include "graphex/rng.hpp"

namespace graphex {

struct StatVector {
  std::uint64_t e = 0;
  std::uint64_t v = 0;
  std::uint64_t triangles = 0;
  std::uint64_t maxDegree = 0;
  std::map<std::uint64_t, std::uint64_t> degreeHistogram;  // degree -> vertex count

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

/// Exact counts; triangles by sorted neighbour-list intersection, self-loops
/// ignored for triangles and counted twice in degrees.
StatVector stats(const UnlabeledGraph& g);

/// Integer statistic of a StatVector by name: "e", "v", "triangles", "maxDegree".
std::int64_t statistic(const StatVector& s, std::string_view name);

enum class TestKind {
  ChiSquare,
  KolmogorovSmirnov,
  MeanSE,
  VarianceSE,
  Bound,
  Exact,
  Trend,
  RelativeError,
  Bonferroni,
};

const char* toString(TestKind kind);

struct TestReport {
  std::string suite;
  std::string test;
  std::string statistic;
  TestKind kind = TestKind::ChiSquare;
  double observed = 0.0;
  double threshold = 0.0;
  double pValue = -1.0;  // negative when not applicable
  bool pass = false;
  /// Informational reports do not decide the suite outcome.
  bool gating = true;
  std::size_t replicates = 0;
  std::uint64_t seedA = 0;
  std::uint64_t seedB = 0;
  std::string detail;
};

/// Runs draw(child(i)) for i in [0, count) of Rng(masterSeed); result i is
/// stored at position i regardless of scheduling.
template <typename T>
std::vector<T> replicate(std::size_t count, std::uint64_t masterSeed,
                         const std::function<T(Rng&)>& draw, unsigned threads = 0) {
  std::vector<T> out(count);
  const Rng master(masterSeed);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng = master.child(i);
      out[i] = draw(rng);
    }
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          Rng rng = master.child(i);
          out[i] = draw(rng);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

using GraphGenerator = std::function<UnlabeledGraph(Rng&)>;

std::vector<StatVector> ensemble(const GraphGenerator& gen, std::size_t replicates,
                                 std::uint64_t masterSeed, unsigned threads = 0);

/// Two-sample chi-square on pooled bins of an integer statistic. Adjacent
/// values are merged until both samples expect at least 5 per cell; a short
/// final cell merges into its neighbour. Throws DegenerateBins below 2 cells.
TestReport twoSampleChiSquare(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                              double alpha);

TestReport twoSampleTest(std::span<const StatVector> a, std::span<const StatVector> b,
                         std::string_view statistic, double alpha);

/// Chi-square goodness of fit of counts to Poisson(mean), cells merged to an
/// expected count of at least 5 with the upper tail folded into the last cell.
TestReport poissonGoodnessOfFit(std::span<const std::int64_t> counts, double mean, double alpha);

/// |sample mean - expected| in standard errors against `sigmas`.
TestReport meanWithinSE(std::span<const double> values, double expected, double sigmas = 4.0);

/// |sample variance - expected| in asymptotic standard errors of the variance.
TestReport varianceWithinSE(std::span<const double> values, double expected, double sigmas = 4.0);

/// Empirical frequency failures/trials against bound + sigmas * binomial SE.
TestReport frequencyBound(std::size_t failures, std::size_t trials, double bound, double sigmas = 4.0);

/// One-sample Kolmogorov-Smirnov test against a continuous CDF.
TestReport ksOneSample(std::span<const double> values, const std::function<double(double)>& cdf,
                       double alpha);

/// Asymptotic Kolmogorov tail probability P(sqrt(n) D > x) with the
/// small-sample correction of Stephens.
double kolmogorovPValue(double d, std::size_t n);

/// Statistics of the l-th element of a graph sequence.
struct PrefixStats {
  std::int64_t e = 0;
  std::int64_t v = 0;
  std::int64_t maxDegree = 0;
  /// Edges added per step, each capped at l, packed base l.
  std::int64_t stepCode = 0;
};

/// Simulates gx at a size expected to hold about 10 l edges, doubling the
/// size with a fresh stream until the sequence has l elements.
PrefixStats sequencePrefix(const Graphex& gx, std::size_t ell, double epsilon, Rng& rng);

struct SuiteConfig {
  std::optional<Graphex> model;
  std::optional<std::size_t> replicates;
  std::uint64_t seed = 1;
  double alpha = 0.01;
  std::optional<double> epsilon;
  std::optional<double> size;
  std::optional<double> probe;
  std::vector<double> sizes;
  std::vector<double> ratios;
  std::size_t draws = 20000;
  std::optional<UnlabeledGraph> graph;
  std::size_t targetVertices = 0;
  std::size_t prefixLength = 5;
  std::size_t normReplicates = 200;
  unsigned threads = 0;
};

const std::vector<std::string>& suiteNames();

/// Throws UnknownSuite.
std::vector<TestReport> runSuite(std::string_view name, const SuiteConfig& config);

/// True when every gating report passes.
bool suitePassed(std::span<const TestReport> reports);

/// (0, 0, exp-product).
Graphex expProductGraphex();
/// W = (x+1)^-2 (y+1)^-2, S = exp(-(x+1))/2, I = 0.1.
Graphex threeComponentGraphex();

}  // namespace graphex
