#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphex {

/// Which sum of the generative construction produced an edge.
enum class Component : std::uint8_t { W, S, I };

char componentChar(Component c);

struct LabeledEdge {
  double theta = 0.0;
  double thetaPrime = 0.0;  // theta <= thetaPrime
  Component component = Component::W;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Finite symmetric simple point pattern on [0, size]^2; each undirected edge
/// is stored once with theta <= thetaPrime, sorted by (theta, thetaPrime).
class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Normalises endpoint order and sorts. Throws OutOfRange for labels outside
  /// [0, size] and InvalidArgument for duplicate edges.
  LabeledGraph(double size, std::vector<LabeledEdge> edges);

  double size() const noexcept { return size_; }
  std::span<const LabeledEdge> edges() const noexcept { return edges_; }
  std::size_t edgeCount() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  double size_ = 0.0;
  std::vector<LabeledEdge> edges_;
};

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;  // first <= second

/// Edge set over contiguous zero-based ids 0..n-1 (rendered 1..n in files).
/// Every vertex appears in at least one edge; self-loops are allowed.
class UnlabeledGraph {
 public:
  UnlabeledGraph() = default;

  /// Builds from pairs over arbitrary integer ids. Ids are compacted in
  /// increasing order, endpoints normalised and duplicates collapsed.
  static UnlabeledGraph fromEdges(std::span<const std::pair<std::uint64_t, std::uint64_t>> edges);

  std::size_t vertexCount() const noexcept { return n_; }
  std::size_t edgeCount() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Sorted neighbour lists; a self-loop lists the vertex once in its own list.
  std::vector<std::vector<VertexId>> adjacency() const;
  /// Degrees with a self-loop counting 2.
  std::vector<std::size_t> degrees() const;

  /// order[k] is the old id that becomes new id k; must be a permutation.
  UnlabeledGraph relabeled(std::span<const VertexId> order) const;

  friend bool operator==(const UnlabeledGraph&, const UnlabeledGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Keep exactly the edges with both labels <= r.
LabeledGraph restrict(const LabeledGraph& g, double r);

/// Deterministic vertex order: degree descending, then the sorted (descending)
/// neighbour-degree sequence, lexicographically smallest first, then rounds of
/// colour refinement on neighbour classes, then current id. order[k] is the id
/// placed at position k.
std::vector<VertexId> canonicalOrder(const UnlabeledGraph& g);

/// g relabeled by canonicalOrder(g).
UnlabeledGraph canonicalize(const UnlabeledGraph& g);

/// One vertex per distinct label, ids by canonicalOrder; components dropped.
UnlabeledGraph forgetLabels(const LabeledGraph& g);

}  // namespace graphex
