#pragma once

#include <cstddef>
#include <vector>

#include "graphex/graph.hpp"
#include "graphex/rng.hpp"

namespace graphex {

/// Edge set of the subgraph induced by the kept vertices, compacted; vertices
/// left without edges disappear.
UnlabeledGraph inducedSubgraph(const UnlabeledGraph& g, const std::vector<bool>& keep);

/// Keep each vertex independently with probability p and return the induced
/// edge set with canonical ids.
UnlabeledGraph pSample(const UnlabeledGraph& g, double p, Rng& rng);

/// One joint draw of the three samplers compared by the coupling bounds:
///   x  Bin(v, r/s) vertices without replacement
///   h  Bin(v, r/s) vertices with replacement
///   m  Poisson(v r/s) vertices with replacement
/// The with/without replacement lists are coupled by substitution and the
/// Binomial/Poisson counts by a maximal coupling. Agreement is equality of the
/// induced edge sets in the ids of g.
struct CouplingOutcome {
  UnlabeledGraph x;
  UnlabeledGraph h;
  UnlabeledGraph m;
  bool agreeXH = true;
  bool agreeHM = true;
  std::size_t binomialCount = 0;
  std::size_t poissonCount = 0;
};

CouplingOutcome coupledSample(const UnlabeledGraph& g, double r, double s, Rng& rng);

/// Right-hand side of the with/without replacement bound
///   2e (q^3 + 2 q^3/v^2 + 3 q^2/v + q/v^2),  q = r/s.
double withoutReplacementBound(std::size_t edges, std::size_t vertices, double ratio);

/// Maximal coupling of Bin(n, p) and Poisson(n p): returns (K, J) with the
/// correct marginals and P(K != J) equal to their total variation distance.
std::pair<std::size_t, std::size_t> coupledBinomialPoisson(std::size_t n, double p, Rng& rng);

/// Total variation distance between Bin(n, p) and Poisson(n p).
double binomialPoissonDistance(std::size_t n, double p);

/// I.i.d. Uniform[0, s] label per vertex; all edges tagged W.
LabeledGraph randomLabel(const UnlabeledGraph& g, double s, Rng& rng);

}  // namespace graphex
