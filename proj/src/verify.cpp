#include "graphex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "graphex/error.hpp"

namespace graphex {

const char* toString(TestKind kind) {
  switch (kind) {
    case TestKind::ChiSquare: return "chi-square";
    case TestKind::KolmogorovSmirnov: return "KS";
    case TestKind::MeanSE: return "mean-SE";
    case TestKind::VarianceSE: return "variance-SE";
    case TestKind::Bound: return "bound";
    case TestKind::Exact: return "exact";
    case TestKind::Trend: return "trend";
    case TestKind::RelativeError: return "relative-error";
    case TestKind::Bonferroni: return "bonferroni";
  }
  return "unknown";
}

StatVector stats(const UnlabeledGraph& g) {
  StatVector out;
  out.e = g.edgeCount();
  out.v = g.vertexCount();
  const auto deg = g.degrees();
  for (std::size_t d : deg) {
    ++out.degreeHistogram[d];
    out.maxDegree = std::max<std::uint64_t>(out.maxDegree, d);
  }
  // simple neighbour lists without loops, sorted
  auto adj = g.adjacency();
  for (std::size_t u = 0; u < adj.size(); ++u) {
    auto& list = adj[u];
    list.erase(std::remove(list.begin(), list.end(), static_cast<VertexId>(u)), list.end());
  }
  // each triangle u < v < w counted once at its lowest edge (u, v)
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    const auto& nu = adj[u];
    const auto& nv = adj[v];
    auto iu = std::upper_bound(nu.begin(), nu.end(), v);
    auto iv = std::upper_bound(nv.begin(), nv.end(), v);
    while (iu != nu.end() && iv != nv.end()) {
      if (*iu < *iv) {
        ++iu;
      } else if (*iv < *iu) {
        ++iv;
      } else {
        ++out.triangles;
        ++iu;
        ++iv;
      }
    }
  }
  return out;
}

std::int64_t statistic(const StatVector& s, std::string_view name) {
  if (name == "e") return static_cast<std::int64_t>(s.e);
  if (name == "v") return static_cast<std::int64_t>(s.v);
  if (name == "triangles") return static_cast<std::int64_t>(s.triangles);
  if (name == "maxDegree") return static_cast<std::int64_t>(s.maxDegree);
  throw Error(ErrorCode::InvalidArgument, "unknown statistic '" + std::string(name) + "'");
}

std::vector<StatVector> ensemble(const GraphGenerator& gen, std::size_t replicates,
                                 std::uint64_t masterSeed, unsigned threads) {
  if (replicates == 0) throw Error(ErrorCode::InvalidArgument, "ensemble needs at least one replicate");
  const std::function<StatVector(Rng&)> draw = [&gen](Rng& rng) { return stats(gen(rng)); };
  return replicate(replicates, masterSeed, draw, threads);
}

namespace {

double chiSquareUpperTail(double x, double df) {
  boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, std::max(x, 0.0)));
}

double chiSquareCritical(double alpha, double df) {
  boost::math::chi_squared dist(df);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

}  // namespace

TestReport twoSampleChiSquare(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                              double alpha) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::InvalidArgument, "two-sample test needs two nonempty samples");
  std::map<std::int64_t, std::pair<double, double>> counts;
  for (auto x : a) counts[x].first += 1.0;
  for (auto x : b) counts[x].second += 1.0;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double total = na + nb;
  const double smaller = std::min(na, nb);

  std::vector<std::pair<double, double>> cells;
  std::pair<double, double> open{0.0, 0.0};
  for (const auto& [value, c] : counts) {
    open.first += c.first;
    open.second += c.second;
    if ((open.first + open.second) * smaller / total >= 5.0) {
      cells.push_back(open);
      open = {0.0, 0.0};
    }
  }
  if (open.first + open.second > 0.0) {
    if (cells.empty()) {
      cells.push_back(open);
    } else {
      cells.back().first += open.first;
      cells.back().second += open.second;
    }
  }
  if (cells.size() < 2) {
    throw Error(ErrorCode::DegenerateBins, "pooled sample does not support two cells");
  }

  double chi2 = 0.0;
  for (const auto& [ca, cb] : cells) {
    const double pooled = ca + cb;
    const double ea = na * pooled / total;
    const double eb = nb * pooled / total;
    chi2 += (ca - ea) * (ca - ea) / ea + (cb - eb) * (cb - eb) / eb;
  }
  const double df = static_cast<double>(cells.size() - 1);

  TestReport r;
  r.kind = TestKind::ChiSquare;
  r.observed = chi2;
  r.threshold = chiSquareCritical(alpha, df);
  r.pValue = chiSquareUpperTail(chi2, df);
  r.pass = chi2 <= r.threshold;
  r.replicates = std::min(a.size(), b.size());
  r.detail = "cells=" + std::to_string(cells.size()) + " na=" + std::to_string(a.size()) +
             " nb=" + std::to_string(b.size());
  return r;
}

TestReport twoSampleTest(std::span<const StatVector> a, std::span<const StatVector> b,
                         std::string_view name, double alpha) {
  std::vector<std::int64_t> xa;
  std::vector<std::int64_t> xb;
  xa.reserve(a.size());
  xb.reserve(b.size());
  for (const auto& s : a) xa.push_back(statistic(s, name));
  for (const auto& s : b) xb.push_back(statistic(s, name));
  TestReport r = twoSampleChiSquare(xa, xb, alpha);
  r.statistic = std::string(name);
  return r;
}

TestReport poissonGoodnessOfFit(std::span<const std::int64_t> counts, double mean, double alpha) {
  if (counts.empty()) throw Error(ErrorCode::InvalidArgument, "goodness of fit needs a sample");
  if (!(mean > 0.0)) throw Error(ErrorCode::InvalidArgument, "poisson mean must be positive");
  const double n = static_cast<double>(counts.size());
  std::map<std::int64_t, double> observed;
  for (auto k : counts) observed[k] += 1.0;

  // cells [lo_i, lo_{i+1}); the last one is open-ended
  std::vector<std::int64_t> lower{0};
  std::vector<double> probs;
  double cellProb = 0.0;
  double cumulative = 0.0;
  double pk = std::exp(-mean);
  for (std::int64_t k = 0;; ++k) {
    if (k > 0) pk *= mean / static_cast<double>(k);
    cellProb += pk;
    cumulative += pk;
    const double remaining = std::max(0.0, 1.0 - cumulative);
    if (cellProb * n >= 5.0 && remaining * n >= 5.0) {
      probs.push_back(cellProb);
      lower.push_back(k + 1);
      cellProb = 0.0;
    } else if (remaining * n < 5.0 && static_cast<double>(k) > mean) {
      break;
    }
  }
  probs.push_back(std::max(0.0, 1.0 - std::accumulate(probs.begin(), probs.end(), 0.0)));
  if (probs.size() < 2) throw Error(ErrorCode::DegenerateBins, "poisson fit does not support two cells");

  std::vector<double> obs(probs.size(), 0.0);
  for (const auto& [k, c] : observed) {
    const auto it = std::upper_bound(lower.begin(), lower.end(), k);
    const auto cell = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - lower.begin()) - 1));
    obs[std::min(cell, probs.size() - 1)] += c;
  }
  double chi2 = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double expected = n * probs[i];
    chi2 += (obs[i] - expected) * (obs[i] - expected) / expected;
  }
  const double df = static_cast<double>(probs.size() - 1);
  TestReport r;
  r.kind = TestKind::ChiSquare;
  r.observed = chi2;
  r.threshold = chiSquareCritical(alpha, df);
  r.pValue = chiSquareUpperTail(chi2, df);
  r.pass = chi2 <= r.threshold;
  r.replicates = counts.size();
  r.detail = "cells=" + std::to_string(probs.size());
  return r;
}

TestReport meanWithinSE(std::span<const double> values, double expected, double sigmas) {
  if (values.size() < 2) throw Error(ErrorCode::InvalidArgument, "mean check needs two values");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : values) ss += (x - mean) * (x - mean);
  const double se = std::sqrt(ss / (n - 1.0) / n);
  TestReport r;
  r.kind = TestKind::MeanSE;
  r.observed = se > 0.0 ? std::fabs(mean - expected) / se : (mean == expected ? 0.0 : INFINITY);
  r.threshold = sigmas;
  r.pass = r.observed <= r.threshold;
  r.replicates = values.size();
  r.detail = "mean=" + std::to_string(mean) + " expected=" + std::to_string(expected) +
             " se=" + std::to_string(se);
  return r;
}

TestReport varianceWithinSE(std::span<const double> values, double expected, double sigmas) {
  if (values.size() < 4) throw Error(ErrorCode::InvalidArgument, "variance check needs four values");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double x : values) {
    const double d = (x - mean) * (x - mean);
    m2 += d;
    m4 += d * d;
  }
  const double var = m2 / (n - 1.0);
  m2 /= n;
  m4 /= n;
  const double se = std::sqrt(std::max(m4 - m2 * m2, 0.0) / n);
  TestReport r;
  r.kind = TestKind::VarianceSE;
  r.observed = se > 0.0 ? std::fabs(var - expected) / se : (var == expected ? 0.0 : INFINITY);
  r.threshold = sigmas;
  r.pass = r.observed <= r.threshold;
  r.replicates = values.size();
  r.detail = "variance=" + std::to_string(var) + " expected=" + std::to_string(expected) +
             " se=" + std::to_string(se);
  return r;
}

TestReport frequencyBound(std::size_t failures, std::size_t trials, double bound, double sigmas) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "frequency bound needs trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double se = std::sqrt(p * (1.0 - p) / n);
  TestReport r;
  r.kind = TestKind::Bound;
  r.observed = p;
  r.threshold = bound + sigmas * se;
  r.pass = r.observed <= r.threshold;
  r.replicates = trials;
  r.detail = "bound=" + std::to_string(bound) + " se=" + std::to_string(se);
  return r;
}

double kolmogorovPValue(double d, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

TestReport ksOneSample(std::span<const double> values, const std::function<double(double)>& cdf,
                       double alpha) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "KS test needs a sample");
  std::vector<double> xs(values.begin(), values.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  // critical value by bisection on the p-value
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorovPValue(mid, xs.size()) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  TestReport r;
  r.kind = TestKind::KolmogorovSmirnov;
  r.observed = d;
  r.threshold = hi;
  r.pValue = kolmogorovPValue(d, xs.size());
  r.pass = d <= hi;
  r.replicates = xs.size();
  return r;
}

bool suitePassed(std::span<const TestReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const TestReport& r) { return !r.gating || r.pass; });
}

}  // namespace graphex
