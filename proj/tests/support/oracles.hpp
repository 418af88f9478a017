#pragma once

// Brute-force reference implementations and random generators for tests.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "graphex/graph.hpp"
#include "graphex/rng.hpp"

namespace graphex::testing {

using EdgePairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

inline UnlabeledGraph graphOf(const EdgePairs& edges) { return UnlabeledGraph::fromEdges(edges); }

inline UnlabeledGraph triangle() { return graphOf({{0, 1}, {1, 2}, {0, 2}}); }

// G(n, p) without loops; isolated vertices vanish on construction.
inline UnlabeledGraph randomGraph(Rng& rng, std::size_t n, double p) {
  EdgePairs edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) edges.emplace_back(i, j);
    }
  }
  return graphOf(edges);
}

inline std::vector<VertexId> randomPermutation(Rng& rng, std::size_t n) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
  return perm;
}

struct BruteStats {
  std::uint64_t e = 0;
  std::uint64_t v = 0;
  std::uint64_t triangles = 0;
  std::uint64_t maxDegree = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;
};

// Adjacency-matrix counting; triangles by scanning every vertex triple.
inline BruteStats bruteStats(const UnlabeledGraph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  std::vector<std::uint64_t> deg(n, 0);
  BruteStats out;
  for (const auto& [u, v] : g.edges()) {
    a[u][v] = a[v][u] = 1;
    deg[u] += 1;
    deg[v] += 1;
    ++out.e;
  }
  out.v = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) out.triangles += a[i][j] * a[j][k] * a[i][k];
    }
  }
  for (auto d : deg) {
    out.maxDegree = std::max(out.maxDegree, d);
    out.histogram[d] += 1;
  }
  return out;
}

// Every loop-free graph on vertex set {0..n-1}, as edge lists.
inline std::vector<EdgePairs> allLabeledGraphs(std::size_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<EdgePairs> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    EdgePairs edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask >> b & 1u) edges.push_back(slots[b]);
    }
    out.push_back(std::move(edges));
  }
  return out;
}

// Isomorphism class key: lexicographically smallest sorted edge list over all
// vertex permutations. Feasible up to about 8 vertices.
inline EdgePairs isoKey(const UnlabeledGraph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgePairs best;
  bool first = true;
  do {
    EdgePairs mapped;
    for (const auto& [u, v] : g.edges()) {
      auto a = perm[u];
      auto b = perm[v];
      if (b < a) std::swap(a, b);
      mapped.emplace_back(a, b);
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Edge set induced by a vertex subset given as a bit mask, ids compacted.
inline UnlabeledGraph inducedByMask(const UnlabeledGraph& g, std::uint64_t mask) {
  EdgePairs edges;
  for (const auto& [u, v] : g.edges()) {
    if ((mask >> u & 1u) && (mask >> v & 1u)) edges.emplace_back(u, v);
  }
  return graphOf(edges);
}

using Law = std::map<EdgePairs, double>;

// Exact law of the p-sample of g up to isomorphism, by enumerating subsets.
inline Law pSampleLaw(const UnlabeledGraph& g, double p) {
  const std::size_t n = g.vertexCount();
  Law law;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto kept = static_cast<int>(__builtin_popcountll(mask));
    const double prob = std::pow(p, kept) * std::pow(1.0 - p, static_cast<double>(n) - kept);
    law[isoKey(inducedByMask(g, mask))] += prob;
  }
  return law;
}

// Law of sampling with q after sampling with p, again by nested enumeration.
inline Law composedSampleLaw(const UnlabeledGraph& g, double p, double q) {
  Law law;
  for (const auto& [key, prob] : pSampleLaw(g, p)) {
    for (const auto& [inner, innerProb] : pSampleLaw(graphOf(key), q)) law[inner] += prob * innerProb;
  }
  return law;
}

inline double lawDistance(const Law& a, const Law& b) {
  double tv = 0.0;
  std::map<EdgePairs, std::pair<double, double>> both;
  for (const auto& [k, v] : a) both[k].first = v;
  for (const auto& [k, v] : b) both[k].second = v;
  for (const auto& [k, v] : both) tv += std::fabs(v.first - v.second);
  return tv / 2.0;
}

// Pearson goodness of fit of observed class counts against an exact law;
// classes with expected count below 5 are pooled into one cell.
inline double goodnessOfFitPValue(const std::map<EdgePairs, std::size_t>& observed, const Law& law,
                                  std::size_t draws) {
  double stat = 0.0;
  double pooledObs = 0.0;
  double pooledExp = 0.0;
  int cells = 0;
  std::map<EdgePairs, std::size_t> obs = observed;
  for (const auto& [key, prob] : law) {
    const double expected = prob * static_cast<double>(draws);
    const double count = static_cast<double>(obs[key]);
    if (expected < 5.0) {
      pooledObs += count;
      pooledExp += expected;
      continue;
    }
    stat += (count - expected) * (count - expected) / expected;
    ++cells;
  }
  for (const auto& [key, count] : obs) {
    if (!law.count(key)) pooledObs += static_cast<double>(count);  // impossible class
  }
  if (pooledExp > 0.0) {
    stat += (pooledObs - pooledExp) * (pooledObs - pooledExp) / pooledExp;
    ++cells;
  } else if (pooledObs > 0.0) {
    return 0.0;
  }
  if (cells < 2) return 1.0;
  const boost::math::chi_squared dist(cells - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

// P(at least one edge) for the binary pixel graphon of a single edge with
// cell width w probed at size r: enumerate the Poisson slot count J and the
// probability that both rows receive a slot.
inline double singleEdgePixelHitProbability(double w, double r, std::size_t maxSlots = 200) {
  const double mean = 2.0 * w * r;
  double total = 0.0;
  double pmf = std::exp(-mean);
  for (std::size_t j = 0; j <= maxSlots; ++j) {
    if (j > 0) pmf *= mean / static_cast<double>(j);
    const double bothRows = j == 0 ? 0.0 : 1.0 - 2.0 * std::pow(0.5, static_cast<double>(j));
    total += pmf * bothRows;
  }
  return total;
}

}  // namespace graphex::testing
