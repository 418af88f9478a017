#include "graphex/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "graphex/error.hpp"

namespace graphex {

GraphSequence GraphSequence::withoutJumpTimes() const {
  GraphSequence out = *this;
  out.jumpTimes.clear();
  return out;
}

std::vector<double> jumpTimes(const LabeledGraph& g) {
  std::vector<double> times;
  times.reserve(g.edgeCount());
  for (const auto& e : g.edges()) times.push_back(e.thetaPrime);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

GraphSequence graphSequence(const LabeledGraph& g, std::size_t maxSteps) {
  std::vector<LabeledEdge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
    if (a.thetaPrime != b.thetaPrime) return a.thetaPrime < b.thetaPrime;
    return a.theta < b.theta;
  });

  GraphSequence seq;
  std::unordered_map<double, VertexId> ids;
  auto idOf = [&ids](double label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(ids.size()));
    return it->second;
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> cumulative;
  std::size_t k = 0;
  while (k < edges.size() && seq.graphs.size() < maxSteps) {
    const double tau = edges[k].thetaPrime;
    std::vector<Edge> step;
    for (; k < edges.size() && edges[k].thetaPrime == tau; ++k) {
      const VertexId a = idOf(edges[k].theta);
      const VertexId b = idOf(edges[k].thetaPrime);
      const Edge e = a <= b ? Edge{a, b} : Edge{b, a};
      step.push_back(e);
      cumulative.emplace_back(e.first, e.second);
    }
    seq.graphs.push_back(UnlabeledGraph::fromEdges(cumulative));
    seq.steps.push_back(std::move(step));
    seq.jumpTimes.push_back(tau);
  }
  return seq;
}

LabeledGraph dilateMeasure(const LabeledGraph& g, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "dilation must be positive");
  std::vector<LabeledEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) {
    e.theta *= c;
    e.thetaPrime *= c;
  }
  return LabeledGraph(g.size() * c, std::move(edges));
}

Graphex dilateGraphex(const Graphex& gx, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "dilation must be positive");
  return Graphex{c * c * gx.isolatedRate, gx.star.dilated(c), gx.graphon.dilated(c)};
}

}  // namespace graphex
