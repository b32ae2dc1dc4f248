#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dilation/metric.hpp"
#include "dilation/search.hpp"

namespace dil {

enum class Family { kGreedyLowerBound, kBottleneckLowerBound };

/// A generated instance with its vertex labels and the known-good answer.
struct Construction {
  Family family;
  MetricGraph graph;
  std::vector<std::string> labels;      // labels[i] names vertex i
  double t_star_formula = 0.0;          // closed-form optimum (bottleneck family: its lower bound)
  std::vector<Edge> optimal_edges;      // edge set achieving the closed form
  std::vector<Edge> bottleneck_order;   // predicted bottleneck sequence (bottleneck family only)
  double bottleneck_dilation = 0.0;     // predicted bottleneck final dilation (bottleneck family only)

  Vertex index(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return i;
    throw std::out_of_range("no vertex labelled " + label);
  }

  std::map<std::string, Vertex> label_map() const {
    std::map<std::string, Vertex> out;
    for (std::size_t i = 0; i < labels.size(); ++i) out[labels[i]] = i;
    return out;
  }
};

namespace detail {

struct PathBuilder {
  std::vector<std::vector<double>> points;
  std::vector<std::string> labels;

  void add(std::string label, double x, double y) {
    labels.push_back(std::move(label));
    points.push_back({x, y});
  }

  std::vector<Edge> path_edges() const {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < points.size(); ++i) edges.emplace_back(i - 1, i);
    return edges;
  }
};

inline std::string lbl(char c, std::size_t i) { return std::string(1, c) + std::to_string(i); }

}  // namespace detail

/// Instance on which the greedy decision keeps adding edges up to (1-eps)(k+1) t*.
/// A path through 6k+3 points; requires k >= 2 (at k = 1 the points y1 and z1 coincide).
inline Construction gen_greedy_lb(std::size_t k, double h = 1e-4, double h_prime = 1e-8) {
  if (k < 2) throw std::invalid_argument("greedy lower-bound family needs k >= 2: at k = 1, y1 and z1 coincide");
  if (!(h > 0.0) || !(h_prime > 0.0)) throw std::invalid_argument("h and h' must be positive");
  if (!(h_prime < h)) throw std::invalid_argument("h' must be smaller than h");
  if (!(h * static_cast<double>(k) < 1.0)) throw std::invalid_argument("h must be smaller than 1/k");

  const double kd = static_cast<double>(k);
  detail::PathBuilder path;
  path.add("a1", 0.0, 2.0 * h);
  for (std::size_t i = 1; i <= k; ++i) {
    const double id = static_cast<double>(i);
    path.add(detail::lbl('b', i), 1.0, 2.0 * id * h);
    path.add(detail::lbl('c', i), 2.0, 2.0 * id * h);
    path.add(detail::lbl('d', i), kd + 3.0 + id, 2.0 * id * h);
    path.add(detail::lbl('e', i), kd + 3.0 + id, (2.0 * id + 1.0) * h);
    path.add(detail::lbl('f', i), 2.0, (2.0 * id + 1.0) * h - h_prime);
    path.add(detail::lbl('g', i), 1.0, (2.0 * id + 1.0) * h);
  }
  path.add("y1", 0.0, (2.0 * kd + 1.0) * h);
  path.add("z1", 0.0, 3.0 * h);

  Construction out{Family::kGreedyLowerBound, MetricGraph(MetricSpace::from_points(path.points), path.path_edges()),
                   path.labels, (2.0 + (4.0 * kd - 3.0) * h) / h, {}, {}, 0.0};
  for (std::size_t i = 1; i <= k; ++i)
    out.optimal_edges.emplace_back(out.index(detail::lbl('b', i)), out.index(detail::lbl('g', i)));
  return out;
}

/// Instance on which the bottleneck heuristic ends 2^k times above the optimum.
/// A path x0, y1, z1, ..., yk, zk, y(k+1), x1 of 2k+3 points with all edges of slope +-h.
///
/// With `perturb`, x0 and x1 move towards each other by h/1000 each and every
/// vertical pair (y_j, y_j+1) is shortened by a relative amount that halves per
/// step down from the top pair, so the heuristic's order is forced strictly.
inline Construction gen_bottleneck_lb(std::size_t k, double h = 1e-3, bool perturb = false) {
  if (k < 1) throw std::invalid_argument("bottleneck lower-bound family needs k >= 1");
  if (!(h > 0.0) || !(h < 1.0)) throw std::invalid_argument("h must lie in (0, 1)");

  const double top = std::ldexp(h, static_cast<int>(k) + 1);  // 2^(k+1) h
  const double delta = perturb ? h / 1000.0 : 0.0;
  const double x_fraction = 2.0 * delta / top;  // relative shrink of the (x0, x1) gap

  // Downward shift of y_j, accumulated so that pair (y_j, y_j+1) shrinks by
  // x_fraction / 2^(k - j + 1) of its own gap 2^j h.
  std::vector<double> shift(k + 2, 0.0);
  for (std::size_t j = 1; j <= k; ++j) {
    const double gap = std::ldexp(h, static_cast<int>(j));
    const double fraction = std::ldexp(x_fraction, -static_cast<int>(k - j + 1));
    shift[j + 1] = shift[j] + fraction * gap;
  }

  detail::PathBuilder path;
  path.add("x0", -1.0, h + delta);
  for (std::size_t i = 1; i <= k; ++i) {
    path.add(detail::lbl('y', i), 0.0, std::ldexp(h, static_cast<int>(i)) - shift[i]);
    path.add(detail::lbl('z', i), std::ldexp(1.0, static_cast<int>(i) - 1), 3.0 * std::ldexp(h, static_cast<int>(i) - 1));
  }
  path.add(detail::lbl('y', k + 1), 0.0, top - shift[k + 1]);
  path.add("x1", -1.0, top + h - delta);

  const double kd = static_cast<double>(k);
  Construction out{Family::kBottleneckLowerBound,
                   MetricGraph(MetricSpace::from_points(path.points), path.path_edges()),
                   path.labels,
                   std::sqrt(1.0 + h * h) / (std::pow(2.0, kd) * h),
                   {},
                   {},
                   std::sqrt(1.0 + h * h) / h};
  for (std::size_t i = 1; i <= k; ++i)
    out.optimal_edges.emplace_back(out.index(detail::lbl('y', i)), out.index(detail::lbl('y', i + 1)));
  out.bottleneck_order.emplace_back(out.index("x0"), out.index("x1"));
  for (std::size_t i = 2; i <= k; ++i) {
    const std::size_t lo = k - i + 2;
    out.bottleneck_order.emplace_back(out.index(detail::lbl('y', lo)), out.index(detail::lbl('y', lo + 1)));
  }
  return out;
}

/// Name of the generator behind gen_random, recorded alongside results.
inline constexpr const char* kRandomEngineName = "mt19937_64";

/// Uniform points in the unit square joined by their Euclidean minimum spanning
/// tree plus `extra` random further edges (default n/4).
inline MetricGraph gen_random(std::size_t n, std::uint64_t seed, std::optional<std::size_t> extra = std::nullopt) {
  if (n < 2) throw std::invalid_argument("random instance needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<std::vector<double>> pts(n);
  for (auto& p : pts) {
    const double x = coord(rng);
    const double y = coord(rng);
    p = {x, y};
  }
  auto space = MetricSpace::from_points(pts);
  auto edges = mst_edges(space);
  MetricGraph tree(space, edges);

  const std::size_t wanted = std::min(extra.value_or(n / 4), tree.non_edge_count());
  auto candidates = non_edges_sorted(tree);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (std::size_t i = 0; i < wanted; ++i) edges.push_back(candidates[i].edge());
  return MetricGraph(std::move(space), std::move(edges));
}

}  // namespace dil
