#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dilation/apsp.hpp"
#include "dilation/search.hpp"

namespace dil {

inline constexpr std::uint64_t kDefaultOracleCap = 2'000'000;

/// Thrown when exhaustive enumeration would exceed the subset cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  OracleCapExceeded(std::uint64_t subsets, std::uint64_t cap)
      : std::runtime_error("oracle would enumerate " + std::to_string(subsets) + " subsets, cap is " +
                           std::to_string(cap)),
        subsets_(subsets),
        cap_(cap) {}

  std::uint64_t subsets() const { return subsets_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t subsets_;
  std::uint64_t cap_;
};

/// C(m, k), saturating at `limit` + 1.
inline std::uint64_t binomial_capped(std::uint64_t m, std::uint64_t k, std::uint64_t limit) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (m - k + i) / i;
    if (acc > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

struct OracleResult {
  std::vector<Edge> edges;
  double t_star = kInfinity;
  std::uint64_t subsets_evaluated = 0;
};

/// Exact minimum dilation over all k-subsets of non-edges (all of them when
/// fewer than k exist). Ties keep the lexicographically first subset.
inline OracleResult exact_optimal(const MetricGraph& graph, std::size_t k, std::uint64_t cap = kDefaultOracleCap) {
  if (k < 1) throw std::invalid_argument("budget k must be at least 1");
  std::vector<Edge> pool;
  for (Vertex u = 0; u < graph.size(); ++u)
    for (Vertex v = u + 1; v < graph.size(); ++v)
      if (!graph.has_edge(u, v)) pool.emplace_back(u, v);
  const std::size_t depth = std::min(k, pool.size());
  const std::uint64_t subsets = binomial_capped(pool.size(), depth, cap);
  if (subsets > cap) {
    // Report the true count when it fits, the saturated bound otherwise.
    throw OracleCapExceeded(binomial_capped(pool.size(), depth, UINT64_MAX - 1), cap);
  }

  OracleResult best;
  const MetricSpace& space = graph.space();
  // stack[d] holds the distances after the first d chosen edges.
  std::vector<ApspMatrix> stack(depth + 1, compute_apsp(graph));
  std::vector<std::size_t> chosen(depth);

  auto evaluate = [&]() {
    ++best.subsets_evaluated;
    const double t = dilation(stack[depth], space).t;
    if (t < best.t_star) {
      best.t_star = t;
      best.edges.clear();
      for (std::size_t idx : chosen) best.edges.push_back(pool[idx]);
    }
  };

  if (depth == 0) {
    evaluate();
    return best;
  }
  auto recurse = [&](auto&& self, std::size_t level, std::size_t first) -> void {
    for (std::size_t i = first; i + (depth - level) <= pool.size(); ++i) {
      chosen[level] = i;
      stack[level + 1] = stack[level];
      stack[level + 1].insert_edge(pool[i].u, pool[i].v, space.distance(pool[i].u, pool[i].v));
      if (level + 1 == depth) {
        evaluate();
      } else {
        self(self, level + 1, i + 1);
      }
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

/// Exact answer to "is t* <= t".
inline bool exact_decide(const MetricGraph& graph, std::size_t k, double t, std::uint64_t cap = kDefaultOracleCap) {
  return exact_optimal(graph, k, cap).t_star <= t;
}

/// Oracle result in the common result shape.
inline AugmentationResult oracle_augment(const MetricGraph& graph, std::size_t k,
                                         std::uint64_t cap = kDefaultOracleCap) {
  const OracleResult exact = exact_optimal(graph, k, cap);
  AugmentationResult result;
  result.method = "oracle";
  result.certified_factor = 1.0;
  for (const Edge& e : exact.edges) result.edges.push_back({e.u, e.v, graph.length(e)});
  return detail::finish(graph, std::move(result));
}

}  // namespace dil
