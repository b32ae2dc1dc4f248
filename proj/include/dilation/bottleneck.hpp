#pragma once

#include <stdexcept>
#include <vector>

#include "dilation/apsp.hpp"
#include "dilation/search.hpp"

namespace dil {

struct BottleneckStep {
  Edge edge;
  double dilation_before = 0.0;
};

/// Repeatedly joins a pair attaining the current maximum dilation (ties to the
/// lexicographically smallest pair, disconnected pairs first). Stops early once
/// no pair can be improved: the graph is complete or its dilation is already 1.
inline AugmentationResult bottleneck_augment(const MetricGraph& graph, std::size_t k,
                                             std::vector<BottleneckStep>* steps = nullptr) {
  if (k < 1) throw std::invalid_argument("budget k must be at least 1");
  ApspMatrix apsp = compute_apsp(graph);
  MetricGraph current = graph;

  AugmentationResult result;
  result.method = "bottleneck";
  for (std::size_t i = 0; i < k && !current.complete(); ++i) {
    const DilationResult worst = dilation(apsp, graph.space());
    if (worst.t <= 1.0 || current.has_edge(worst.pair.u, worst.pair.v)) break;
    const double len = graph.space().distance(worst.pair.u, worst.pair.v);
    if (steps) steps->push_back({worst.pair, worst.t});
    apsp.insert_edge(worst.pair.u, worst.pair.v, len);
    current = current.with_edges({worst.pair});
    result.edges.push_back({worst.pair.u, worst.pair.v, len});
  }
  return detail::finish(graph, std::move(result));
}

}  // namespace dil
