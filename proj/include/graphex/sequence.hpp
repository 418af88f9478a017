#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "graphex/graph.hpp"
#include "graphex/graphon.hpp"

namespace graphex {

/// Distinct graphs taken by the restrictions of a labeled graph as the size
/// grows. Vertex ids are assigned in order of first appearance, so
/// graphs[k] is an edge subset of graphs[k + 1] without any relabeling and
/// steps[k] lists the edges added at jump k.
struct GraphSequence {
  std::vector<UnlabeledGraph> graphs;
  std::vector<std::vector<Edge>> steps;
  std::vector<double> jumpTimes;  // empty once stripped (unknown-size model)

  std::size_t length() const noexcept { return graphs.size(); }
  GraphSequence withoutJumpTimes() const;
};

/// Sorted distinct values of max(theta, theta') over the edges.
std::vector<double> jumpTimes(const LabeledGraph& g);

/// Builds at most maxSteps elements; edges sharing a jump time form one step.
GraphSequence graphSequence(const LabeledGraph& g,
                            std::size_t maxSteps = std::numeric_limits<std::size_t>::max());

/// Multiplies every label and the size by c.
LabeledGraph dilateMeasure(const LabeledGraph& g, double c);

/// (c^2 I, x -> c S(x/c), (x, y) -> W(x/c, y/c)).
Graphex dilateGraphex(const Graphex& gx, double c);

}  // namespace graphex
