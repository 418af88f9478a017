#include "graphex/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "graphex/error.hpp"
#include "graphex/rng.hpp"

namespace graphex {
namespace {

std::vector<LatentPoint> latentProcess(double size, double cutoff, Rng& rng) {
  std::vector<LatentPoint> points;
  if (cutoff <= 0.0 || size <= 0.0) return points;
  points.reserve(static_cast<std::size_t>(std::min(size * cutoff * 1.1 + 16.0, 1e9)));
  // marks of a rate-`size` Poisson process on [0, cutoff], generated in order
  double mark = 0.0;
  for (;;) {
    mark += rng.exponential(size);
    if (mark > cutoff) break;
    points.push_back({rng.uniform(0.0, size), mark});
  }
  return points;
}

// Every distinct pair (i, j) is an edge with probability W(mark_i, mark_j).
// With a nonincreasing envelope h (W <= h(x) h(y)) and marks in increasing
// order, candidates j > i are visited by geometric skipping against the
// running bound h_i h_j, so the cost is O(points + edges + candidates).
void graphonEdges(const GraphonSpec& w, std::span<const LatentPoint> points, Rng& rng,
                  std::vector<LabeledEdge>& out) {
  const std::size_t m = points.size();
  if (m < 2 || w.isZero()) return;

  if (!w.hasEnvelope()) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double p = w.value(points[i].mark, points[j].mark);
        if (p <= 0.0) continue;
        if (p >= 1.0 || rng.uniform() < p) {
          out.push_back({points[i].theta, points[j].theta, Component::W});
        }
      }
    }
    return;
  }

  std::vector<double> env(m);
  for (std::size_t k = 0; k < m; ++k) env[k] = w.envelope(points[k].mark);

  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double hi = env[i];
    if (hi <= 0.0) break;  // envelope is nonincreasing in the mark
    std::size_t j = i + 1;
    double bound = std::min(1.0, hi * env[j]);
    while (j < m && bound > 0.0) {
      if (bound < 1.0) {
        const std::uint64_t skip = rng.geometricFailures(bound);
        if (skip >= m - j) break;
        j += static_cast<std::size_t>(skip);
      }
      const double q = std::min(1.0, hi * env[j]);
      const double p = w.value(points[i].mark, points[j].mark);
      if (rng.uniform() * bound < p) {
        out.push_back({points[i].theta, points[j].theta, Component::W});
      }
      bound = q;
      ++j;
    }
  }
}

void starEdges(const StarSpec& star, std::span<const LatentPoint> points, double size,
               double cutoff, Rng& rng, std::vector<LabeledEdge>& out) {
  if (star.isZero()) return;
  for (const auto& pt : points) {
    if (pt.mark > cutoff) break;
    const std::uint64_t rays = rng.poisson(size * star.value(pt.mark));
    for (std::uint64_t k = 0; k < rays; ++k) {
      out.push_back({pt.theta, rng.uniform(0.0, size), Component::S});
    }
  }
}

void isolatedEdges(double rate, double size, Rng& rng, std::vector<LabeledEdge>& out) {
  if (rate <= 0.0) return;
  const std::uint64_t count = rng.poisson(size * size * rate);
  for (std::uint64_t k = 0; k < count; ++k) {
    const double a = rng.uniform(0.0, size);
    const double b = rng.uniform(0.0, size);
    out.push_back({a, b, Component::I});
  }
}

}  // namespace

SimResult simulate(const Graphex& gx, const SimConfig& cfg) {
  if (!(cfg.size > 0.0) || !std::isfinite(cfg.size)) {
    throw Error(ErrorCode::InvalidArgument, "simulation size must be positive");
  }
  if (!(cfg.epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (!(gx.isolatedRate >= 0.0) || !std::isfinite(gx.isolatedRate)) {
    throw Error(ErrorCode::InvalidArgument, "isolated-edge rate must be nonnegative");
  }
  if (!gx.nontrivial()) throw Error(ErrorCode::InvalidArgument, "graphex is trivial");

  const double area = cfg.size * cfg.size;
  const double budget = 0.5 * cfg.epsilon / area;  // per unit s^2, per component

  SimResult result;
  result.graphonCutoff = gx.graphon.isZero() ? 0.0 : gx.graphon.truncation(budget);
  result.starCutoff = gx.star.isZero() ? 0.0 : gx.star.truncation(budget);

  const Rng root(cfg.seed);
  Rng latentRng = root.child(kLatentStream);
  Rng graphonRng = root.child(kGraphonStream);
  Rng starRng = root.child(kStarStream);
  Rng isolatedRng = root.child(kIsolatedStream);

  std::vector<LatentPoint> latent =
      latentProcess(cfg.size, std::max(result.graphonCutoff, result.starCutoff), latentRng);

  std::vector<LabeledEdge> edges;
  const auto graphonPoints = std::span<const LatentPoint>(latent).first(static_cast<std::size_t>(
      std::upper_bound(latent.begin(), latent.end(), result.graphonCutoff,
                       [](double v, const LatentPoint& p) { return v < p.mark; }) -
      latent.begin()));
  graphonEdges(gx.graphon, graphonPoints, graphonRng, edges);
  starEdges(gx.star, latent, cfg.size, result.starCutoff, starRng, edges);
  isolatedEdges(gx.isolatedRate, cfg.size, isolatedRng, edges);

  result.graph = LabeledGraph(cfg.size, std::move(edges));
  if (cfg.keepLatent) result.latent = std::move(latent);
  return result;
}

std::vector<LabeledGraph> simulateProjective(const Graphex& gx, std::span<const double> sizes,
                                             double epsilon, std::uint64_t seed) {
  if (sizes.empty()) throw Error(ErrorCode::InvalidArgument, "no sizes given");
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (!(sizes[k] > 0.0) || (k > 0 && sizes[k] < sizes[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "sizes must be positive and ascending");
    }
  }
  SimConfig cfg;
  cfg.size = sizes.back();
  cfg.epsilon = epsilon;
  cfg.seed = seed;
  const LabeledGraph full = simulate(gx, cfg).graph;
  std::vector<LabeledGraph> out;
  out.reserve(sizes.size());
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) out.push_back(restrict(full, sizes[k]));
  out.push_back(full);
  return out;
}

EdgeCounts expectedEdgeCounts(const Graphex& gx, double s) {
  const double area = s * s;
  return {0.5 * area * gx.graphon.l1Norm(), area * gx.star.l1Norm(), area * gx.isolatedRate};
}

EdgeCounts edgeCountVariances(const Graphex& gx, double s) {
  const double area = s * s;
  const double cube = area * s;
  return {0.5 * area * gx.graphon.l1Norm() + cube * gx.graphon.marginalSquaredNorm(),
          area * gx.star.l1Norm() + cube * gx.star.squaredNorm(), area * gx.isolatedRate};
}

}  // namespace graphex
