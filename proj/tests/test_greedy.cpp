#include <gtest/gtest.h>

#include "dilation/constructions.hpp"
#include "dilation/greedy.hpp"
#include "dilation/oracle.hpp"
#include "support/oracles.hpp"

using namespace dil;

namespace {

MetricGraph triangle_minus_edge() { return MetricGraph(ref::equilateral(), {{0, 1}, {1, 2}}); }

}  // namespace

TEST(GreedyDecide, TriangleAddsMissingEdge) {
  const auto out = greedy_decide(triangle_minus_edge(), 1, 1.5);
  EXPECT_EQ(out.verdict, Verdict::kYes);
  ASSERT_EQ(out.added_edges.size(), 1u);
  EXPECT_EQ(out.added_edges[0].edge(), Edge(0, 2));
  ASSERT_TRUE(out.final_dilation);
  EXPECT_DOUBLE_EQ(*out.final_dilation, 1.0);
}

TEST(GreedyDecide, CompleteGraphNeedsNothing) {
  const auto g = ref::complete_graph(ref::equilateral());
  for (std::size_t k : {1u, 3u}) {
    for (double t : {1.01, 2.0, 100.0}) {
      const auto out = greedy_decide(g, k, t);
      EXPECT_EQ(out.verdict, Verdict::kYes);
      EXPECT_TRUE(out.added_edges.empty());
      EXPECT_EQ(out.processed_count, 0u);
    }
  }
}

TEST(GreedyDecide, GreedyConstructionSaysNo) {
  const double h = 1e-4;
  const auto c = gen_greedy_lb(2, h, 1e-8);
  const double t_star = (2 + 5 * h) / h;
  EXPECT_DOUBLE_EQ(c.t_star_formula, t_star);
  const auto out = greedy_decide(c.graph, 2, 0.9 * 3 * t_star);
  EXPECT_EQ(out.verdict, Verdict::kNo);
  EXPECT_EQ(out.added_edges.size(), 3u);
}

TEST(GreedyDecide, RejectsBadArguments) {
  const auto g = triangle_minus_edge();
  EXPECT_THROW(greedy_decide(g, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(greedy_decide(g, 1, 0.5), std::invalid_argument);
  EXPECT_THROW(greedy_decide(g, 0, 2.0), std::invalid_argument);
}

TEST(GreedyDecide, BorderlineEdgeIsNotAdded) {
  // Collinear: the path 0-1-2 has length exactly d(0,2), ratio 1.
  const MetricGraph g(MetricSpace::from_points({{0, 0}, {1, 0}, {2, 0}}), {{0, 1}, {1, 2}});
  GreedyDecider decider(g);
  const auto out = decider.decide(1, 1.0);
  EXPECT_EQ(out.verdict, Verdict::kYes);
  EXPECT_TRUE(out.added_edges.empty());
}

TEST(GreedyDecide, HugeBudgetIsYes) {
  const auto g = ref::random_graph(7, 2, 0);
  const auto out = greedy_decide(g, 1000, 1.0001);
  EXPECT_EQ(out.verdict, Verdict::kYes);
  EXPECT_LE(*out.final_dilation, 1.0001 * (1 + kRelTol));
}

TEST(GreedyTrace, TriangleAndComplete) {
  const auto tr = greedy_trace(triangle_minus_edge(), 1, 1.5);
  ASSERT_EQ(tr.steps.size(), 1u);
  EXPECT_TRUE(tr.steps[0].accepted);
  EXPECT_NEAR(tr.steps[0].graph_distance, 2.0, 1e-12);

  EXPECT_TRUE(greedy_trace(ref::complete_graph(ref::equilateral()), 1, 1.5).steps.empty());
}

TEST(GreedyTrace, ReplayReproducesFinalDilation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = ref::random_graph(8, seed, 2);
    const double t = 1.5 + 0.25 * static_cast<double>(seed % 6);
    const auto tr = greedy_trace(g, 2, t);
    auto live = compute_apsp(g);
    std::size_t accepted = 0;
    for (const auto& step : tr.steps) {
      // Every decision is taken against the matrix state preceding it.
      ASSERT_DOUBLE_EQ(step.graph_distance, live(step.candidate.u, step.candidate.v));
      ASSERT_EQ(step.accepted, step.graph_distance > t * (1 + kRelTol) * step.candidate.length);
      if (step.accepted) {
        ++accepted;
        if (accepted <= 2) live.insert_edge(step.candidate.u, step.candidate.v, step.candidate.length);
      }
    }
    if (tr.outcome.verdict == Verdict::kYes) {
      EXPECT_DOUBLE_EQ(*tr.outcome.final_dilation, dilation(live, g.space()).t);
    } else {
      EXPECT_EQ(accepted, 3u);
    }
  }
}

TEST(GreedyDecide, OutcomeInvariants) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = ref::random_graph(8, 50 + seed, 1);
    for (std::size_t k : {1u, 2u}) {
      const double t_star = exact_optimal(g, k).t_star;
      for (double f : {0.6, 0.9, 1.0, 1.2, 2.0, 3.5}) {
        const double t = std::max(1.0001, f * t_star);
        const auto out = greedy_decide(g, k, t);
        for (std::size_t i = 1; i < out.added_edges.size(); ++i)
          EXPECT_LE(out.added_edges[i - 1].length, out.added_edges[i].length);
        if (out.verdict == Verdict::kYes) {
          EXPECT_LE(out.added_edges.size(), k);
          std::vector<Edge> e;
          for (const auto& c : out.added_edges) e.push_back(c.edge());
          EXPECT_LE(ref::brute_dilation(g.with_edges(e)), t * (1 + 1e-9));
          EXPECT_GE(t * (1 + 1e-9), t_star);  // YES below t* would beat the optimum
        } else {
          EXPECT_EQ(out.added_edges.size(), k + 1);
          EXPECT_GT(t_star, t / static_cast<double>(k + 1) * (1 - 1e-9));
        }
        if (t >= static_cast<double>(k + 1) * t_star) {
          EXPECT_EQ(out.verdict, Verdict::kYes);
        }
      }
    }
  }
}
