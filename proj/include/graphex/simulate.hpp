#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphex/graph.hpp"
#include "graphex/graphon.hpp"

namespace graphex {

struct SimConfig {
  double size = 1.0;
  /// Budget on the expected number of edges lost by truncating the latent
  /// process, split evenly between the W and S components.
  double epsilon = 1e-3;
  std::uint64_t seed = 0;
  bool keepLatent = false;
};

/// A point (theta, mark) of the latent unit-rate Poisson process on
/// [0, size] x [0, V], listed in increasing mark order.
struct LatentPoint {
  double theta = 0.0;
  double mark = 0.0;
};

struct SimResult {
  LabeledGraph graph;
  std::vector<LatentPoint> latent;  // populated only with keepLatent
  double graphonCutoff = 0.0;
  double starCutoff = 0.0;
};

/// Child streams of Rng(seed) used by simulate.
enum SimStream : std::uint64_t { kLatentStream = 0, kGraphonStream = 1, kStarStream = 2, kIsolatedStream = 3 };

/// Size-s graphex process. One latent process feeds both the graphon edges
/// (each distinct pair thinned by W) and the star edges (Poisson(s S(mark))
/// rays per point with uniform far endpoints); isolated edges are a
/// Poisson(s^2 I) batch with uniform endpoints.
SimResult simulate(const Graphex& gx, const SimConfig& cfg);

/// Simulates once at sizes.back() and restricts to each size.
std::vector<LabeledGraph> simulateProjective(const Graphex& gx, std::span<const double> sizes,
                                             double epsilon, std::uint64_t seed);

struct EdgeCounts {
  double w = 0.0;
  double s = 0.0;
  double i = 0.0;
  double total() const { return w + s + i; }
};

/// (s^2/2 |W|_1, s^2 |S|_1, s^2 I).
EdgeCounts expectedEdgeCounts(const Graphex& gx, double s);

/// Per-component variances of the edge counts:
///   W: s^2/2 |W|_1 + s^3 int mu_W^2,  S: s^2 |S|_1 + s^3 |S|_2^2,  I: s^2 I.
EdgeCounts edgeCountVariances(const Graphex& gx, double s);

}  // namespace graphex
