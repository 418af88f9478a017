#include "graphex/estimate.hpp"

#include <cmath>

#include "graphex/error.hpp"

namespace graphex {

PixelGraphon empiricalGraphon(const UnlabeledGraph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "empirical graphon of an empty graph");
  return dilatedEmpiricalGraphon(g, static_cast<double>(g.vertexCount()));
}

PixelGraphon dilatedEmpiricalGraphon(const UnlabeledGraph& g, double s) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "empirical graphon of an empty graph");
  if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorCode::InvalidArgument, "dilation must be positive");
  const UnlabeledGraph c = canonicalize(g);
  const std::size_t n = c.vertexCount();
  std::vector<double> values(n * n, 0.0);
  for (const auto& [u, v] : c.edges()) {
    values[u * n + v] = 1.0;
    values[v * n + u] = 1.0;
  }
  return PixelGraphon(n, std::move(values), 1.0 / s);
}

UnlabeledGraph generateFromPixel(const PixelGraphon& pg, double r, Rng& rng) {
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "probe size must be positive");
  const std::size_t n = pg.size();
  if (n == 0) return {};
  const std::uint64_t slots = rng.poisson(r * pg.supportEdge());
  std::vector<std::size_t> row(slots);
  for (auto& x : row) x = static_cast<std::size_t>(rng.index(n));

  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::size_t a = 0; a + 1 < row.size(); ++a) {
    for (std::size_t b = a + 1; b < row.size(); ++b) {
      if (row[a] == row[b]) continue;
      const double p = pg.at(row[a], row[b]);
      if (p <= 0.0) continue;
      if (p >= 1.0 || rng.uniform() < p) edges.emplace_back(a, b);
    }
  }
  return UnlabeledGraph::fromEdges(edges);
}

}  // namespace graphex
