#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace asdim {

using Vertex = std::int32_t;
using Dist = double;

inline constexpr Dist kInf = std::numeric_limits<Dist>::infinity();

/// Finite simple undirected graph with dense 0-based vertex ids.
/// Edges have length 1 unless an explicit positive weight vector is given.
/// Immutable after construction; safe to share across threads.
class Graph {
public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges,
  /// out-of-range endpoints or non-positive weights.
  Graph(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges,
        std::vector<double> weights = {});

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Canonical edge list: u < v per edge, lexicographically sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  /// Parallel to edges(); empty means every edge has length 1.
  const std::vector<double>& weights() const { return weights_; }
  bool unit_weights() const { return weights_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + adj_off_[v], adj_off_[v + 1] - adj_off_[v]};
  }
  /// Weight of the k-th incident edge of v, matching neighbors(v) order.
  double neighbor_weight(Vertex v, std::size_t k) const {
    return weights_.empty() ? 1.0 : adj_w_[adj_off_[v] + k];
  }

  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

private:
  Vertex n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<double> weights_;
  std::vector<std::size_t> adj_off_;
  std::vector<Vertex> adj_;
  std::vector<double> adj_w_;
};

enum class MetricMode { Ambient, InducedPath };

/// A graph together with an optional vertex restriction and a metric mode.
/// Ambient mode measures distances in the parent graph; InducedPath uses
/// only edges with both endpoints inside the restriction. The parent graph
/// must outlive the space.
class Space {
public:
  explicit Space(const Graph& g) : g_(&g), mode_(MetricMode::Ambient) {}

  Space(const Graph& g, std::vector<Vertex> vertices, MetricMode mode);

  const Graph& graph() const { return *g_; }
  MetricMode mode() const { return mode_; }
  bool restricted() const { return !member_.empty(); }

  /// Member vertices, sorted ascending. For an unrestricted space this is
  /// the full vertex range.
  const std::vector<Vertex>& vertices() const;

  std::size_t size() const {
    return restricted() ? vertices_.size() : static_cast<std::size_t>(g_->vertex_count());
  }

  bool contains(Vertex v) const {
    if (!g_->valid_vertex(v)) return false;
    return member_.empty() || member_[static_cast<std::size_t>(v)];
  }

  /// True when traversal may step onto v (always in ambient mode).
  bool traversable(Vertex v) const {
    return mode_ == MetricMode::Ambient || member_.empty() ||
           member_[static_cast<std::size_t>(v)];
  }

private:
  const Graph* g_;
  std::vector<Vertex> vertices_;
  mutable std::vector<Vertex> all_;  // lazily filled for unrestricted spaces
  std::vector<char> member_;
  MetricMode mode_;
};

/// Reusable scratch for repeated shortest-path searches on one graph.
/// Not thread-safe; use one instance per worker.
class Traversal {
public:
  explicit Traversal(const Graph& g)
      : dist_(static_cast<std::size_t>(g.vertex_count()), kInf),
        stamp_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  /// Visits every vertex v of the space with d(sources, v) <= radius,
  /// in nondecreasing distance order, calling visit(v, d) once per vertex.
  /// visit returning false aborts the search. Returns the number of
  /// vertices visited. Sources must lie in the space.
  template <typename F>
  std::size_t bounded(const Space& space, std::span<const Vertex> sources,
                      Dist radius, F&& visit);

  /// Distance to v during/after the latest bounded() call, kInf if unseen.
  Dist last_dist(Vertex v) const {
    std::size_t i = static_cast<std::size_t>(v);
    return stamp_[i] == round_ ? dist_[i] : kInf;
  }

private:
  template <typename F>
  std::size_t bfs(const Space& space, std::span<const Vertex> sources,
                  Dist radius, F&& visit);
  template <typename F>
  std::size_t dijkstra(const Space& space, std::span<const Vertex> sources,
                       Dist radius, F&& visit);

  std::vector<Dist> dist_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t round_ = 0;
  std::vector<Vertex> queue_;
  std::vector<std::pair<Dist, Vertex>> heap_;
};

/// Exact single-source distances in the space's metric; kInf for vertices
/// that are unreachable or outside the space. Throws if source is not a
/// member of the space.
std::vector<Dist> sssp(const Space& space, Vertex source);

/// As sssp, additionally filling parent[v] with the predecessor on one
/// shortest path (source's parent is itself; unreached vertices get -1).
std::vector<Dist> sssp_with_parents(const Space& space, Vertex source,
                                    std::vector<Vertex>& parent);

/// Connected components of the space, each sorted ascending, the list
/// ordered by minimum vertex id. InducedPath mode uses only edges inside
/// the restriction; ambient mode groups members by parent-graph component.
std::vector<std::vector<Vertex>> components(const Space& space);

/// Exact diameter of the vertex set s in the space's metric; kInf when a
/// pair is unreachable. Throws on an empty set or ids outside the space.
Dist set_diameter(const Space& space, std::span<const Vertex> s);

// ---- inline implementation ----

template <typename F>
std::size_t Traversal::bounded(const Space& space, std::span<const Vertex> sources,
                               Dist radius, F&& visit) {
  for (Vertex s : sources) {
    if (!space.contains(s)) throw std::invalid_argument("source not in space");
  }
  if (++round_ == 0) {  // stamp wrap: reset
    std::fill(stamp_.begin(), stamp_.end(), 0);
    round_ = 1;
  }
  if (space.graph().unit_weights())
    return bfs(space, sources, radius, visit);
  return dijkstra(space, sources, radius, visit);
}

template <typename F>
std::size_t Traversal::bfs(const Space& space, std::span<const Vertex> sources,
                           Dist radius, F&& visit) {
  const Graph& g = space.graph();
  queue_.clear();
  for (Vertex s : sources) {
    std::size_t i = static_cast<std::size_t>(s);
    if (stamp_[i] == round_) continue;
    stamp_[i] = round_;
    dist_[i] = 0.0;
    queue_.push_back(s);
  }
  std::size_t head = 0, visited = 0;
  while (head < queue_.size()) {
    Vertex v = queue_[head++];
    Dist d = dist_[static_cast<std::size_t>(v)];
    ++visited;
    if (!visit(v, d)) return visited;
    if (d + 1.0 > radius) continue;
    for (Vertex u : g.neighbors(v)) {
      std::size_t ui = static_cast<std::size_t>(u);
      if (stamp_[ui] == round_) continue;
      if (!space.traversable(u)) continue;
      stamp_[ui] = round_;
      dist_[ui] = d + 1.0;
      queue_.push_back(u);
    }
  }
  return visited;
}

template <typename F>
std::size_t Traversal::dijkstra(const Space& space, std::span<const Vertex> sources,
                                Dist radius, F&& visit) {
  const Graph& g = space.graph();
  heap_.clear();
  auto cmp = [](const std::pair<Dist, Vertex>& a, const std::pair<Dist, Vertex>& b) {
    return a.first > b.first || (a.first == b.first && a.second > b.second);
  };
  for (Vertex s : sources) {
    std::size_t i = static_cast<std::size_t>(s);
    if (stamp_[i] == round_ && dist_[i] == 0.0) continue;
    stamp_[i] = round_;
    dist_[i] = 0.0;
    heap_.emplace_back(0.0, s);
  }
  std::make_heap(heap_.begin(), heap_.end(), cmp);
  std::size_t visited = 0;
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), cmp);
    auto [d, v] = heap_.back();
    heap_.pop_back();
    std::size_t vi = static_cast<std::size_t>(v);
    if (d > dist_[vi] || stamp_[vi] != round_) continue;  // stale entry
    if (d > radius) break;
    ++visited;
    if (!visit(v, d)) return visited;
    for (std::size_t k = 0; k < g.neighbors(v).size(); ++k) {
      Vertex u = g.neighbors(v)[k];
      if (!space.traversable(u)) continue;
      Dist nd = d + g.neighbor_weight(v, k);
      if (nd > radius) continue;
      std::size_t ui = static_cast<std::size_t>(u);
      if (stamp_[ui] != round_ || nd < dist_[ui]) {
        stamp_[ui] = round_;
        dist_[ui] = nd;
        heap_.emplace_back(nd, u);
        std::push_heap(heap_.begin(), heap_.end(), cmp);
      }
    }
  }
  return visited;
}

}  // namespace asdim
