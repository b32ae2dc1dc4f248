#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "dilation/metric.hpp"

namespace dil {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Identifies the graph a distance matrix was computed from.
inline std::uint64_t graph_fingerprint(const MetricGraph& graph) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(graph.size());
  for (const Edge& e : graph.edges()) {
    mix(e.u);
    mix(e.v);
  }
  return h;
}

/// Shortest-path distances between all vertex pairs, updatable on edge insertion.
class ApspMatrix {
 public:
  ApspMatrix(std::size_t n, std::uint64_t fingerprint)
      : n_(n), fingerprint_(fingerprint), dist_(n * n, kInfinity) {
    for (std::size_t u = 0; u < n; ++u) dist_[u * n + u] = 0.0;
  }

  std::size_t size() const { return n_; }
  double operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  double& at(Vertex u, Vertex v) { return dist_[u * n_ + v]; }

  /// Fingerprint of the graph the matrix was built from (unchanged by insertions).
  std::uint64_t fingerprint() const { return fingerprint_; }
  /// Incremented on every insertion.
  std::uint64_t revision() const { return revision_; }

  /// Reflects a new edge (p, q) of length `len`: every pair takes the minimum of
  /// its current distance and the two routes through the new edge. O(n^2).
  void insert_edge(Vertex p, Vertex q, double len) {
    const std::size_t n = n_;
    // Rows p and q are overwritten during the sweep, so work from copies.
    std::vector<double> from_p(dist_.begin() + static_cast<std::ptrdiff_t>(p * n),
                               dist_.begin() + static_cast<std::ptrdiff_t>((p + 1) * n));
    std::vector<double> from_q(dist_.begin() + static_cast<std::ptrdiff_t>(q * n),
                               dist_.begin() + static_cast<std::ptrdiff_t>((q + 1) * n));
    for (std::size_t u = 0; u < n; ++u) {
      const double up = from_p[u];
      const double uq = from_q[u];
      if (up == kInfinity && uq == kInfinity) continue;
      double* row = &dist_[u * n];
      for (std::size_t v = 0; v < n; ++v) {
        // (a + b) + len is commutative in (a, b), which keeps the matrix exactly symmetric.
        const double via = std::min((up + from_q[v]) + len, (uq + from_p[v]) + len);
        if (via < row[v]) row[v] = via;
      }
    }
    ++revision_;
  }

  const std::vector<double>& data() const { return dist_; }

 private:
  std::size_t n_;
  std::uint64_t fingerprint_;
  std::uint64_t revision_ = 0;
  std::vector<double> dist_;
};

/// Adjacency lists with metric weights.
inline std::vector<std::vector<std::pair<Vertex, double>>> adjacency(const MetricGraph& graph) {
  std::vector<std::vector<std::pair<Vertex, double>>> adj(graph.size());
  for (const Edge& e : graph.edges()) {
    const double w = graph.length(e);
    adj[e.u].emplace_back(e.v, w);
    adj[e.v].emplace_back(e.u, w);
  }
  return adj;
}

/// One Dijkstra pass per source vertex.
inline ApspMatrix compute_apsp(const MetricGraph& graph) {
  const std::size_t n = graph.size();
  ApspMatrix apsp(n, graph_fingerprint(graph));
  const auto adj = adjacency(graph);

  using Entry = std::pair<double, Vertex>;
  std::vector<double> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    dist[s] = 0.0;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (auto [v, w] : adj[u]) {
        const double nd = d + w;
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.emplace(nd, v);
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) apsp.at(s, v) = dist[v];
  }
  // Symmetrise: the two directions of a path can round differently.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double m = std::min(apsp(u, v), apsp(v, u));
      apsp.at(u, v) = apsp.at(v, u) = m;
    }
  return apsp;
}

inline void insert_edge(ApspMatrix& apsp, Vertex p, Vertex q, double len) { apsp.insert_edge(p, q, len); }

struct DilationResult {
  double t = 1.0;
  Edge pair;
};

/// Maximum ratio dist(u,v) / d_M(u,v) over distinct pairs. Ties go to the
/// lexicographically smallest pair; a disconnected pair yields infinity at once.
inline DilationResult dilation(const ApspMatrix& apsp, const MetricSpace& space) {
  const std::size_t n = apsp.size();
  DilationResult best{-kInfinity, Edge{0, 1}};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double d = apsp(u, v);
      if (d == kInfinity) return {kInfinity, Edge{u, v}};
      const double ratio = d / space.distance(u, v);
      if (ratio > best.t) best = {ratio, Edge{u, v}};
    }
  }
  return best;
}

inline DilationResult dilation(const MetricGraph& graph) { return dilation(compute_apsp(graph), graph.space()); }

}  // namespace dil
