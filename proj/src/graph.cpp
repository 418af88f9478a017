#include "graphex/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphex/error.hpp"

namespace graphex {

char componentChar(Component c) {
  switch (c) {
    case Component::W: return 'W';
    case Component::S: return 'S';
    case Component::I: return 'I';
  }
  return '?';
}

LabeledGraph::LabeledGraph(double size, std::vector<LabeledEdge> edges)
    : size_(size), edges_(std::move(edges)) {
  if (!(size_ >= 0.0) || !std::isfinite(size_)) {
    throw Error(ErrorCode::OutOfRange, "graph size must be finite and nonnegative");
  }
  for (auto& e : edges_) {
    if (!(e.theta >= 0.0 && e.theta <= size_ && e.thetaPrime >= 0.0 && e.thetaPrime <= size_)) {
      throw Error(ErrorCode::OutOfRange, "edge label outside [0, size]");
    }
    if (e.thetaPrime < e.theta) std::swap(e.theta, e.thetaPrime);
  }
  std::sort(edges_.begin(), edges_.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
    if (a.theta != b.theta) return a.theta < b.theta;
    if (a.thetaPrime != b.thetaPrime) return a.thetaPrime < b.thetaPrime;
    return a.component < b.component;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].theta == edges_[i - 1].theta && edges_[i].thetaPrime == edges_[i - 1].thetaPrime) {
      throw Error(ErrorCode::InvalidArgument, "duplicate edge in labeled graph");
    }
  }
}

UnlabeledGraph UnlabeledGraph::fromEdges(
    std::span<const std::pair<std::uint64_t, std::uint64_t>> edges) {
  std::vector<std::uint64_t> ids;
  ids.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  UnlabeledGraph g;
  g.n_ = ids.size();
  g.edges_.reserve(edges.size());
  auto idOf = [&ids](std::uint64_t raw) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), raw) - ids.begin());
  };
  for (const auto& [u, v] : edges) {
    VertexId a = idOf(u);
    VertexId b = idOf(v);
    if (b < a) std::swap(a, b);
    g.edges_.emplace_back(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  return g;
}

std::vector<std::vector<VertexId>> UnlabeledGraph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(n_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    if (u != v) adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<std::size_t> UnlabeledGraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

UnlabeledGraph UnlabeledGraph::relabeled(std::span<const VertexId> order) const {
  if (order.size() != n_) throw Error(ErrorCode::InvalidArgument, "relabeling must cover every vertex");
  std::vector<VertexId> position(n_, static_cast<VertexId>(n_));
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= n_ || position[order[k]] != n_) {
      throw Error(ErrorCode::InvalidArgument, "relabeling is not a permutation");
    }
    position[order[k]] = static_cast<VertexId>(k);
  }
  UnlabeledGraph g;
  g.n_ = n_;
  g.edges_.reserve(edges_.size());
  for (const auto& [u, v] : edges_) {
    VertexId a = position[u];
    VertexId b = position[v];
    if (b < a) std::swap(a, b);
    g.edges_.emplace_back(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

LabeledGraph restrict(const LabeledGraph& g, double r) {
  if (!(r >= 0.0)) throw Error(ErrorCode::OutOfRange, "restriction size must be nonnegative");
  if (r > g.size()) throw Error(ErrorCode::OutOfRange, "restriction size exceeds graph size");
  std::vector<LabeledEdge> kept;
  for (const auto& e : g.edges()) {
    if (e.thetaPrime <= r) kept.push_back(e);
  }
  return LabeledGraph(r, std::move(kept));
}

namespace {

// Assigns dense ranks to vertices by sorting their keys; returns number of classes.
template <typename Key>
std::size_t rankByKey(const std::vector<Key>& keys, std::vector<std::size_t>& colour) {
  const std::size_t n = keys.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&keys](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  colour.assign(n, 0);
  std::size_t classes = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && keys[idx[k - 1]] < keys[idx[k]]) ++classes;
    colour[idx[k]] = classes;
  }
  return n == 0 ? 0 : classes + 1;
}

}  // namespace

std::vector<VertexId> canonicalOrder(const UnlabeledGraph& g) {
  const std::size_t n = g.vertexCount();
  const auto adj = g.adjacency();
  const auto deg = g.degrees();

  // Initial key: degree descending, then sorted-descending neighbour degrees
  // compared lexicographically. Negating turns both into ascending order.
  using InitialKey = std::pair<long long, std::vector<long long>>;
  std::vector<InitialKey> initial(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<long long> nd;
    nd.reserve(adj[v].size());
    for (VertexId w : adj[v]) nd.push_back(static_cast<long long>(deg[w]));
    std::sort(nd.begin(), nd.end(), std::greater<>());
    initial[v] = {-static_cast<long long>(deg[v]), std::move(nd)};
  }
  std::vector<std::size_t> colour;
  std::size_t classes = rankByKey(initial, colour);

  using RefineKey = std::pair<std::size_t, std::vector<std::size_t>>;
  while (classes < n) {
    std::vector<RefineKey> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> nc;
      nc.reserve(adj[v].size());
      for (VertexId w : adj[v]) nc.push_back(colour[w]);
      std::sort(nc.begin(), nc.end());
      keys[v] = {colour[v], std::move(nc)};
    }
    std::vector<std::size_t> next;
    const std::size_t refined = rankByKey(keys, next);
    colour = std::move(next);
    if (refined == classes) break;
    classes = refined;
  }

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&colour](VertexId a, VertexId b) { return colour[a] < colour[b]; });
  return order;
}

UnlabeledGraph canonicalize(const UnlabeledGraph& g) {
  const auto order = canonicalOrder(g);
  return g.relabeled(order);
}

UnlabeledGraph forgetLabels(const LabeledGraph& g) {
  std::vector<double> labels;
  labels.reserve(g.edgeCount() * 2);
  for (const auto& e : g.edges()) {
    labels.push_back(e.theta);
    labels.push_back(e.thetaPrime);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto idOf = [&labels](double x) {
    return static_cast<std::uint64_t>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
  };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  pairs.reserve(g.edgeCount());
  for (const auto& e : g.edges()) pairs.emplace_back(idOf(e.theta), idOf(e.thetaPrime));
  return canonicalize(UnlabeledGraph::fromEdges(pairs));
}

}  // namespace graphex
