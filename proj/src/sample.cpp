#include "graphex/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphex/error.hpp"

namespace graphex {
namespace {

std::vector<Edge> inducedEdges(const UnlabeledGraph& g, const std::vector<bool>& keep) {
  std::vector<Edge> out;
  for (const auto& [u, v] : g.edges()) {
    if (keep[u] && keep[v]) out.emplace_back(u, v);
  }
  return out;  // inherits the sorted order of g
}

UnlabeledGraph compact(const std::vector<Edge>& edges) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw(edges.begin(), edges.end());
  return UnlabeledGraph::fromEdges(raw);
}

std::vector<bool> membership(std::size_t n, const std::vector<VertexId>& list) {
  std::vector<bool> keep(n, false);
  for (VertexId v : list) keep[v] = true;
  return keep;
}

std::vector<double> binomialPmf(std::size_t n, double p) {
  std::vector<double> pmf(n + 1, 0.0);
  if (p <= 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (p >= 1.0) {
    pmf[n] = 1.0;
    return pmf;
  }
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  const double ln = std::lgamma(static_cast<double>(n) + 1.0);
  for (std::size_t k = 0; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    pmf[k] = std::exp(ln - std::lgamma(kk + 1.0) - std::lgamma(static_cast<double>(n - k) + 1.0) +
                      kk * lp + static_cast<double>(n - k) * lq);
  }
  return pmf;
}

std::vector<double> poissonPmf(double mean, std::size_t minLength) {
  const auto upper = static_cast<std::size_t>(std::ceil(mean + 12.0 * std::sqrt(mean) + 30.0));
  const std::size_t len = std::max(minLength, upper) + 1;
  std::vector<double> pmf(len, 0.0);
  if (mean <= 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  const double lm = std::log(mean);
  for (std::size_t k = 0; k < len; ++k) {
    const double kk = static_cast<double>(k);
    pmf[k] = std::exp(-mean + kk * lm - std::lgamma(kk + 1.0));
  }
  return pmf;
}

}  // namespace

UnlabeledGraph inducedSubgraph(const UnlabeledGraph& g, const std::vector<bool>& keep) {
  if (keep.size() != g.vertexCount()) {
    throw Error(ErrorCode::InvalidArgument, "keep mask must cover every vertex");
  }
  return compact(inducedEdges(g, keep));
}

UnlabeledGraph pSample(const UnlabeledGraph& g, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0,1]");
  if (g.empty()) return {};
  std::vector<bool> keep(g.vertexCount());
  for (std::size_t v = 0; v < keep.size(); ++v) keep[v] = rng.bernoulli(p);
  return canonicalize(inducedSubgraph(g, keep));
}

double binomialPoissonDistance(std::size_t n, double p) {
  const auto b = binomialPmf(n, p);
  const auto pois = poissonPmf(static_cast<double>(n) * p, n);
  double overlap = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) overlap += std::min(b[k], pois[k]);
  return std::max(0.0, 1.0 - overlap);
}

std::pair<std::size_t, std::size_t> coupledBinomialPoisson(std::size_t n, double p, Rng& rng) {
  const auto b = binomialPmf(n, p);
  const auto pois = poissonPmf(static_cast<double>(n) * p, n);
  std::vector<double> common(pois.size(), 0.0);
  double overlap = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    common[k] = std::min(b[k], pois[k]);
    overlap += common[k];
  }
  if (rng.uniform() < overlap) {
    const std::size_t k = rng.discrete(common);
    return {k, k};
  }
  std::vector<double> restB(b.size());
  std::vector<double> restP(pois.size());
  for (std::size_t k = 0; k < b.size(); ++k) restB[k] = std::max(0.0, b[k] - common[k]);
  for (std::size_t k = 0; k < pois.size(); ++k) restP[k] = std::max(0.0, pois[k] - common[k]);
  const std::size_t kb = rng.discrete(restB);
  const std::size_t kp = rng.discrete(restP);
  return {kb, kp};
}

CouplingOutcome coupledSample(const UnlabeledGraph& g, double r, double s, Rng& rng) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "coupled sampling needs a nonempty graph");
  if (!(r > 0.0 && r <= s)) throw Error(ErrorCode::InvalidArgument, "need 0 < r <= s");
  const std::size_t v = g.vertexCount();
  const double ratio = r / s;

  const auto [k, j] = coupledBinomialPoisson(v, ratio, rng);

  // L: first k entries of a uniform random permutation (without replacement)
  std::vector<VertexId> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto pick = i + static_cast<std::size_t>(rng.index(v - i));
    std::swap(perm[i], perm[pick]);
  }
  const std::vector<VertexId> without(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));

  // L~: entry i (0-based) keeps L_i with probability 1 - i/v, otherwise
  // repeats a uniformly chosen earlier entry of L. The result is an i.i.d.
  // uniform list, i.e. sampling with replacement.
  std::vector<VertexId> with(without);
  for (std::size_t i = 1; i < k; ++i) {
    const double repeat = static_cast<double>(i) / static_cast<double>(v);
    if (rng.uniform() < repeat) with[i] = without[rng.index(i)];
  }

  // Poisson list shares its prefix with L~ and extends it with fresh draws.
  std::vector<VertexId> poissonList(with.begin(), with.begin() + static_cast<std::ptrdiff_t>(std::min(j, k)));
  for (std::size_t i = k; i < j; ++i) poissonList.push_back(static_cast<VertexId>(rng.index(v)));

  const auto ex = inducedEdges(g, membership(v, without));
  const auto eh = inducedEdges(g, membership(v, with));
  const auto em = inducedEdges(g, membership(v, poissonList));

  CouplingOutcome out;
  out.agreeXH = ex == eh;
  out.agreeHM = eh == em;
  out.x = compact(ex);
  out.h = compact(eh);
  out.m = compact(em);
  out.binomialCount = k;
  out.poissonCount = j;
  return out;
}

double withoutReplacementBound(std::size_t edges, std::size_t vertices, double ratio) {
  const double e = static_cast<double>(edges);
  const double v = static_cast<double>(vertices);
  const double q = ratio;
  return 2.0 * e * (q * q * q + 2.0 * q * q * q / (v * v) + 3.0 * q * q / v + q / (v * v));
}

LabeledGraph randomLabel(const UnlabeledGraph& g, double s, Rng& rng) {
  if (!(s > 0.0)) throw Error(ErrorCode::InvalidArgument, "labeling size must be positive");
  std::vector<double> label(g.vertexCount());
  for (auto& x : label) x = rng.uniform(0.0, s);
  std::vector<LabeledEdge> edges;
  edges.reserve(g.edgeCount());
  for (const auto& [u, v] : g.edges()) edges.push_back({label[u], label[v], Component::W});
  return LabeledGraph(s, std::move(edges));
}

}  // namespace graphex
