#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dilation/apsp.hpp"
#include "dilation/greedy.hpp"
#include "dilation/metric.hpp"
#include "dilation/select.hpp"

namespace dil {

/// Log-domain view of the candidate ratio set {d(u,v) / d(p,q)}.
/// Built over unordered distinct pairs, so |X| = |Y| = n(n-1)/2.
struct RatioSpace {
  std::vector<double> x;  // log d(u,v), ascending
  std::vector<double> y;  // -log d(p,q), ascending

  explicit RatioSpace(const MetricSpace& space) {
    const std::size_t n = space.size();
    x.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) x.push_back(std::log(space.distance(u, v)));
    std::sort(x.begin(), x.end());
    y.resize(x.size());
    std::transform(x.rbegin(), x.rend(), y.begin(), [](double l) { return -l; });
  }

  std::uint64_t count() const { return static_cast<std::uint64_t>(x.size()) * y.size(); }

  /// The rank-th smallest ratio (1-based, multiset order).
  double ratio(std::uint64_t rank, SelectStats* stats = nullptr) const {
    return std::exp(select_xy(x, y, rank, stats));
  }
};

/// One coarse-search probe at ratio t_i.
struct CoarseProbe {
  std::uint64_t rank = 0;
  double ratio = 0.0;
  Verdict low = Verdict::kNo;   // decision at (2/3) t_i
  Verdict high = Verdict::kNo;  // decision at n (k+1) t_i
  int outcome_case = 0;         // 1: go lower, 2: stop, 3: go higher
};

/// Bracket for t*: t_lo < t* <= t_hi.
struct SearchInterval {
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::vector<CoarseProbe> probes;
};

struct GridStep {
  double t = 0.0;
  Verdict verdict = Verdict::kNo;
};

struct AugmentationResult {
  std::string method;
  std::vector<EdgeCandidate> edges;
  double achieved_dilation = kInfinity;
  Edge dilation_pair;
  std::optional<double> certified_factor;  // (1+eps)(k+1) for the approximation; 1 for the exact solver
  std::optional<SearchInterval> interval;
  std::vector<GridStep> grid;
};

/// Decision used by the search. Values below 1 are answered NO without a sweep
/// (every graph has dilation >= 1, so t* > t >= t/(k+1) holds trivially).
inline DecisionOutcome probe_decision(const GreedyDecider& decider, std::size_t k, double t) {
  if (t < 1.0) return DecisionOutcome{Verdict::kNo, {}, std::nullopt, 0};
  return decider.decide(k, t);
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::size_t component_count(const MetricGraph& graph) {
  DisjointSets sets(graph.size());
  std::size_t components = graph.size();
  for (const Edge& e : graph.edges())
    if (sets.unite(e.u, e.v)) --components;
  return components;
}

inline AugmentationResult finish(const MetricGraph& graph, AugmentationResult result) {
  std::vector<Edge> added;
  for (const auto& c : result.edges) added.push_back(c.edge());
  const auto final_graph = graph.with_edges(added);
  const auto d = dilation(final_graph);
  result.achieved_dilation = d.t;
  result.dilation_pair = d.pair;
  return result;
}

}  // namespace detail

/// Minimum spanning tree of the complete metric graph (Kruskal in (length, u, v)
/// order), minus the edges already in `existing`.
inline std::vector<Edge> mst_edges(const MetricSpace& space, const std::vector<Edge>& existing = {}) {
  const std::size_t n = space.size();
  std::vector<EdgeCandidate> all;
  all.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v, space.distance(u, v)});
  std::sort(all.begin(), all.end(), candidate_less);

  detail::DisjointSets sets(n);
  std::vector<Edge> tree;
  for (const auto& c : all) {
    if (sets.unite(c.u, c.v)) {
      tree.push_back(c.edge());
      if (tree.size() == n - 1) break;
    }
  }
  std::vector<Edge> have = existing;
  for (auto& e : have) e = Edge(e.u, e.v);
  std::sort(have.begin(), have.end());
  std::vector<Edge> out;
  for (const Edge& e : tree)
    if (!std::binary_search(have.begin(), have.end(), e)) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

/// Binary search over the ranks of the ratio set, deciding at (2/3) t_i and
/// n (k+1) t_i per probe, until both answers bracket t* (the stopping case).
/// The result brackets t* within a factor (3/2) n (k+1)^2.
inline SearchInterval coarse_search(const GreedyDecider& decider, std::size_t k) {
  const MetricGraph& graph = decider.graph();
  if (k < 1) throw std::invalid_argument("budget k must be at least 1");
  const std::size_t components = detail::component_count(graph);
  if (components - 1 > k) {
    throw std::invalid_argument("graph has " + std::to_string(components) + " components; " + std::to_string(k) +
                                " edges cannot connect it, so no finite dilation is reachable");
  }
  const double n = static_cast<double>(graph.size());
  const double kp1 = static_cast<double>(k + 1);
  const RatioSpace ratios(graph.space());

  SearchInterval interval;
  std::uint64_t lo = 1;
  std::uint64_t hi = ratios.count();
  while (lo <= hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    CoarseProbe probe;
    probe.rank = mid;
    probe.ratio = ratios.ratio(mid);
    probe.low = probe_decision(decider, k, (2.0 / 3.0) * probe.ratio).verdict;
    probe.high = probe_decision(decider, k, n * kp1 * probe.ratio).verdict;

    if (probe.low == Verdict::kYes) {
      // t* <= (2/3) t_i < t_i. (YES at both ends is the same case; YES/NO is
      // contradictory and the YES, being constructive, wins.)
      probe.outcome_case = 1;
    } else if (probe.high == Verdict::kNo) {
      probe.outcome_case = 3;  // t* > n t_i
    } else {
      probe.outcome_case = 2;
    }
    interval.probes.push_back(probe);

    if (probe.outcome_case == 2) {
      interval.t_lo = (2.0 / 3.0) * probe.ratio / kp1;
      interval.t_hi = n * kp1 * probe.ratio;
      return interval;
    }
    if (probe.outcome_case == 1) {
      if (mid == 1) break;
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  throw std::logic_error("coarse search exhausted the ratio set without bracketing t* after " +
                         std::to_string(interval.probes.size()) + " probes");
}

inline SearchInterval coarse_search(const MetricGraph& graph, std::size_t k) {
  return coarse_search(GreedyDecider(graph), k);
}

/// Binary search on the multiplicative grid t_lo (1+eps)^j, j = 0..J, with the
/// top point at or above (k+1) t_hi, for adjacent NO/YES decisions.
inline AugmentationResult refine_search(const GreedyDecider& decider, std::size_t k, const SearchInterval& interval,
                                        double eps) {
  if (!(interval.t_lo < interval.t_hi)) throw std::invalid_argument("degenerate search interval");
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
  if (k < 1) throw std::invalid_argument("budget k must be at least 1");

  const double kp1 = static_cast<double>(k + 1);
  const double span = kp1 * interval.t_hi / interval.t_lo;
  auto steps = static_cast<std::int64_t>(std::ceil(std::log(span) / std::log1p(eps)));
  auto grid_t = [&](std::int64_t j) { return interval.t_lo * std::pow(1.0 + eps, static_cast<double>(j)); };
  while (grid_t(steps) < kp1 * interval.t_hi) ++steps;  // guard against rounding in the log

  AugmentationResult result;
  result.method = "greedy";
  result.certified_factor = (1.0 + eps) * kp1;
  result.interval = interval;

  auto run = [&](std::int64_t j) {
    auto outcome = probe_decision(decider, k, grid_t(j));
    result.grid.push_back({grid_t(j), outcome.verdict});
    return outcome;
  };

  DecisionOutcome yes = run(steps);
  if (yes.verdict != Verdict::kYes) {
    throw std::logic_error("decision at the top of the grid returned NO; the interval does not bracket t*");
  }
  std::int64_t hi = steps;
  std::int64_t lo = 0;
  DecisionOutcome bottom = run(lo);
  if (bottom.verdict == Verdict::kYes) {
    yes = std::move(bottom);
    hi = lo;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    auto outcome = run(mid);
    if (outcome.verdict == Verdict::kYes) {
      hi = mid;
      yes = std::move(outcome);
    } else {
      lo = mid;
    }
  }
  result.edges = yes.added_edges;
  return detail::finish(decider.graph(), std::move(result));
}

inline AugmentationResult refine_search(const MetricGraph& graph, std::size_t k, const SearchInterval& interval,
                                        double eps) {
  return refine_search(GreedyDecider(graph), k, interval, eps);
}

/// (1+eps)(k+1)-approximation for the minimum dilation reachable with k new edges.
inline AugmentationResult augment(const MetricGraph& graph, std::size_t k, double eps) {
  if (k < 1) throw std::invalid_argument("budget k must be at least 1");
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");

  const double kp1 = static_cast<double>(k + 1);
  if (graph.complete()) {
    AugmentationResult r;
    r.method = "greedy";
    r.certified_factor = (1.0 + eps) * kp1;
    return detail::finish(graph, std::move(r));
  }
  if (k + 1 >= graph.size()) {
    // The MST alone makes any graph an n-spanner, and n <= k+1 <= (k+1) t*.
    AugmentationResult r;
    r.method = "greedy";
    r.certified_factor = kp1;
    for (const Edge& e : mst_edges(graph.space(), graph.edges())) r.edges.push_back({e.u, e.v, graph.length(e)});
    return detail::finish(graph, std::move(r));
  }
  const GreedyDecider decider(graph);
  const SearchInterval interval = coarse_search(decider, k);
  return refine_search(decider, k, interval, eps);
}

}  // namespace dil
