#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dilation/constructions.hpp"
#include "dilation/oracle.hpp"
#include "dilation/search.hpp"

namespace dil {

struct BenchConfig {
  std::vector<std::size_t> sizes{25, 50, 100};
  std::size_t k = 1;
  std::size_t seeds = 3;
  double eps = 0.1;
  bool oracle = true;
  std::uint64_t oracle_cap = kDefaultOracleCap;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  double eps = 0.0;
  std::size_t edges_added = 0;
  double initial_dilation = 0.0;
  double achieved_dilation = 0.0;
  double seconds = 0.0;
  std::optional<double> oracle_t_star;

  std::optional<double> ratio() const {
    if (!oracle_t_star) return std::nullopt;
    return achieved_dilation / *oracle_t_star;
  }
};

/// Runs augment on seeded random instances; the oracle column is filled only
/// when its subset count fits under the cap.
inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (std::size_t n : cfg.sizes) {
    for (std::uint64_t seed = 1; seed <= cfg.seeds; ++seed) {
      const MetricGraph graph = gen_random(n, seed);
      BenchRow row;
      row.n = n;
      row.k = cfg.k;
      row.seed = seed;
      row.eps = cfg.eps;
      row.initial_dilation = dilation(graph).t;

      const auto start = std::chrono::steady_clock::now();
      const AugmentationResult result = augment(graph, cfg.k, cfg.eps);
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      row.edges_added = result.edges.size();
      row.achieved_dilation = result.achieved_dilation;

      if (cfg.oracle && binomial_capped(graph.non_edge_count(), cfg.k, cfg.oracle_cap) <= cfg.oracle_cap) {
        row.oracle_t_star = exact_optimal(graph, cfg.k, cfg.oracle_cap).t_star;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "n,k,seed,rng,eps,edges_added,initial_dilation,achieved_dilation,seconds,oracle_t_star,ratio\n";
  os.precision(10);
  for (const auto& r : rows) {
    os << r.n << ',' << r.k << ',' << r.seed << ',' << kRandomEngineName << ',' << r.eps << ',' << r.edges_added
       << ',' << r.initial_dilation << ',' << r.achieved_dilation << ',' << r.seconds << ',';
    if (r.oracle_t_star) os << *r.oracle_t_star;
    os << ',';
    if (auto ratio = r.ratio()) os << *ratio;
    os << '\n';
  }
}

}  // namespace dil
