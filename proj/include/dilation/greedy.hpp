#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dilation/apsp.hpp"
#include "dilation/metric.hpp"

namespace dil {

enum class Verdict { kYes, kNo };

inline const char* to_string(Verdict v) { return v == Verdict::kYes ? "YES" : "NO"; }

/// Result of one greedy sweep at a trial dilation t with budget k.
///
/// YES: at most k edges were added and the augmented graph has dilation at most
/// t (up to the relative tolerance). NO: the sweep stopped at its (k+1)-th
/// addition, which certifies that no k edges reach dilation t/(k+1).
struct DecisionOutcome {
  Verdict verdict = Verdict::kYes;
  std::vector<EdgeCandidate> added_edges;
  std::optional<double> final_dilation;  // YES only
  std::size_t processed_count = 0;
};

/// One processed candidate in a sweep.
struct TraceEntry {
  EdgeCandidate candidate;
  double graph_distance = 0.0;
  bool accepted = false;
};

/// Caches the base distance matrix and the sorted non-edges of a graph so that
/// repeated sweeps at different t only pay for a matrix copy and the sweep itself.
class GreedyDecider {
 public:
  explicit GreedyDecider(const MetricGraph& graph)
      : graph_(&graph), base_(compute_apsp(graph)), candidates_(non_edges_sorted(graph)) {}

  const MetricGraph& graph() const { return *graph_; }
  const ApspMatrix& base() const { return base_; }
  const std::vector<EdgeCandidate>& candidates() const { return candidates_; }

  /// Runs the sweep. Requires t >= 1; for t < 1 a YES could be unsound because
  /// existing edges already have ratio 1.
  DecisionOutcome decide(std::size_t k, double t, std::vector<TraceEntry>* trace = nullptr) const {
    if (!(t >= 1.0)) throw std::invalid_argument("sweep needs t >= 1, got " + std::to_string(t));
    if (k == 0) throw std::invalid_argument("budget k must be at least 1");

    DecisionOutcome out;
    ApspMatrix live = base_;
    const double threshold = t * (1.0 + kRelTol);
    for (const EdgeCandidate& c : candidates_) {
      ++out.processed_count;
      const double current = live(c.u, c.v);
      // Strict, with the slack on the rejection side: borderline edges stay out.
      const bool accept = current > threshold * c.length;
      if (trace) trace->push_back({c, current, accept});
      if (!accept) continue;
      out.added_edges.push_back(c);
      if (out.added_edges.size() == k + 1) {
        out.verdict = Verdict::kNo;
        return out;
      }
      live.insert_edge(c.u, c.v, c.length);
    }
    out.verdict = Verdict::kYes;
    out.final_dilation = dilation(live, graph_->space()).t;
    return out;
  }

 private:
  const MetricGraph* graph_;
  ApspMatrix base_;
  std::vector<EdgeCandidate> candidates_;
};

namespace detail {

inline void check_decide_args(std::size_t k, double t) {
  if (k < 1) throw std::invalid_argument("budget k must be at least 1");
  if (!(t > 1.0)) {
    throw std::invalid_argument("trial dilation t must exceed 1 (got " + std::to_string(t) +
                                "); dilation 1 means testing for completeness");
  }
}

}  // namespace detail

/// Greedy decision: YES means t* <= t, NO means t* > t / (k + 1).
inline DecisionOutcome greedy_decide(const MetricGraph& graph, std::size_t k, double t) {
  detail::check_decide_args(k, t);
  return GreedyDecider(graph).decide(k, t);
}

struct GreedyTrace {
  DecisionOutcome outcome;
  std::vector<TraceEntry> steps;
};

inline GreedyTrace greedy_trace(const MetricGraph& graph, std::size_t k, double t) {
  detail::check_decide_args(k, t);
  GreedyTrace out;
  out.outcome = GreedyDecider(graph).decide(k, t, &out.steps);
  return out;
}

}  // namespace dil
