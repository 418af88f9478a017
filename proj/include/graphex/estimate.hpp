#pragma once

#include "graphex/graph.hpp"
#include "graphex/graphon.hpp"
#include "graphex/rng.hpp"

namespace graphex {

/// Adjacency matrix of g in canonical vertex order with cell width 1/v(g).
/// Throws EmptyGraph.
PixelGraphon empiricalGraphon(const UnlabeledGraph& g);

/// Same matrix with cell width 1/s, supported on [0, v(g)/s)^2.
PixelGraphon dilatedEmpiricalGraphon(const UnlabeledGraph& g, double s);

/// Size-r graph of the graphex process (0, 0, pg): Poisson(r n w) latent
/// slots, each assigned a uniformly chosen row. Slots are distinct vertices;
/// slots on the same row never connect to each other, other slot pairs connect
/// with probability matrix[row_a][row_b]. Slots left without edges vanish.
UnlabeledGraph generateFromPixel(const PixelGraphon& pg, double r, Rng& rng);

inline Graphex pixelGraphex(const PixelGraphon& pg) {
  return Graphex{0.0, StarSpec::zero(), GraphonSpec::pixel(pg)};
}

}  // namespace graphex
