// Command-line front end: dilation, decide, augment, oracle, gen, bench.
//
// Exit codes: 0 success (YES for decide), 10 NO from decide, 1 bad input,
// 2 usage error, 3 oracle cap exceeded, 4 internal failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dilation/dilation.hpp"
#include "dilation/io.hpp"

namespace {

using namespace dil;
using io::json;

constexpr int kExitNo = 10;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

std::uint64_t oracle_cap(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DILATION_ORACLE_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("DILATION_ORACLE_CAP is not a number: ") + env);
    }
  }
  return kDefaultOracleCap;
}

void print(const json& j) { std::cout << j.dump(2) << std::endl; }

std::string sidecar_path(const std::string& graph_path) {
  std::filesystem::path p(graph_path);
  return (p.parent_path() / (p.stem().string() + ".sidecar.json")).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dilation-minimising graph augmentation"};
  app.require_subcommand(1);

  std::string graph_path;
  bool strict = false;
  std::size_t k = 1;
  double t = 0.0;
  double eps = 0.1;
  std::string method = "greedy";
  std::optional<std::uint64_t> cap_flag;
  std::string trace_path;

  auto* dil_cmd = app.add_subcommand("dilation", "Print the dilation of a graph and a pair attaining it");
  dil_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
  dil_cmd->add_flag("--strict", strict, "Require the triangle inequality for matrix metrics");

  auto* decide = app.add_subcommand("decide", "Run the greedy decision procedure (exit 0 = YES, 10 = NO)");
  decide->add_option("graph", graph_path, "Graph JSON file")->required();
  decide->add_option("--k", k, "Edge budget")->required()->check(CLI::PositiveNumber);
  decide->add_option("--t", t, "Trial dilation (> 1)")->required();
  decide->add_option("--trace", trace_path, "Write the per-candidate sweep log as JSON lines");
  decide->add_flag("--strict", strict, "Require the triangle inequality for matrix metrics");

  auto* aug = app.add_subcommand("augment", "Choose at most k edges to add");
  aug->add_option("graph", graph_path, "Graph JSON file")->required();
  aug->add_option("--k", k, "Edge budget")->required()->check(CLI::PositiveNumber);
  aug->add_option("--eps", eps, "Grid resolution, 0 < eps <= 1")->check(CLI::Range(0.0, 1.0));
  aug->add_option("--method", method, "greedy | bottleneck | oracle")
      ->check(CLI::IsMember({"greedy", "bottleneck", "oracle"}));
  aug->add_option("--oracle-cap", cap_flag, "Subset cap for the exact solver (env DILATION_ORACLE_CAP)");
  aug->add_flag("--strict", strict, "Require the triangle inequality for matrix metrics");

  auto* orc = app.add_subcommand("oracle", "Exact solver; same as augment --method oracle");
  orc->add_option("graph", graph_path, "Graph JSON file")->required();
  orc->add_option("--k", k, "Edge budget")->required()->check(CLI::PositiveNumber);
  orc->add_option("--oracle-cap", cap_flag, "Subset cap (env DILATION_ORACLE_CAP)");
  orc->add_flag("--strict", strict, "Require the triangle inequality for matrix metrics");

  std::string family;
  double h = 0.0;
  std::optional<double> h_prime;
  bool perturb = false;
  std::string out_path;
  std::string sidecar_out;
  auto* gen = app.add_subcommand("gen", "Write one of the lower-bound constructions");
  gen->set_help_flag("--help", "Print this help message and exit");
  gen->add_option("--family", family, "greedy | bottleneck")->required()->check(CLI::IsMember({"greedy", "bottleneck"}));
  gen->add_option("--k", k, "Construction parameter k")->required()->check(CLI::PositiveNumber);
  gen->add_option("--h", h, "Vertical scale h (default 1e-4 greedy, 1e-3 bottleneck)");
  gen->add_option("--h-prime", h_prime, "Offset h' (greedy family; default h * 1e-4)");
  gen->add_flag("--perturb", perturb, "Force the bottleneck order (bottleneck family)");
  gen->add_option("-o,--output", out_path, "Graph file to write")->required();
  gen->add_option("--sidecar", sidecar_out, "Sidecar path (default <output stem>.sidecar.json)");

  BenchConfig bench_cfg;
  bool no_oracle = false;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Time augment on random instances and write CSV");
  bench->add_option("--sizes", bench_cfg.sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--k", bench_cfg.k, "Edge budget")->check(CLI::PositiveNumber);
  bench->add_option("--seeds", bench_cfg.seeds, "Seeds per size (1..seeds)");
  bench->add_option("--eps", bench_cfg.eps, "Grid resolution")->check(CLI::Range(0.0, 1.0));
  bench->add_flag("--no-oracle", no_oracle, "Skip the exact solver column");
  bench->add_option("--oracle-cap", cap_flag, "Subset cap for the oracle column");
  bench->add_option("-o,--output", csv_path, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dil_cmd) {
      print(io::to_json(dil::dilation(io::load_graph(graph_path, strict))));
      return 0;
    }
    if (*decide) {
      const MetricGraph graph = io::load_graph(graph_path, strict);
      const GreedyTrace traced = greedy_trace(graph, k, t);
      if (!trace_path.empty()) {
        std::ofstream trace(trace_path);
        if (!trace) throw io::FormatError("cannot write " + trace_path);
        for (const auto& step : traced.steps) trace << io::to_json(step).dump() << '\n';
      }
      print(io::to_json(traced.outcome, k, t));
      return traced.outcome.verdict == Verdict::kYes ? 0 : kExitNo;
    }
    if (*aug || *orc) {
      const MetricGraph graph = io::load_graph(graph_path, strict);
      if (*orc) method = "oracle";
      AugmentationResult result;
      if (method == "greedy") {
        result = augment(graph, k, eps);
      } else if (method == "bottleneck") {
        result = bottleneck_augment(graph, k);
      } else {
        result = oracle_augment(graph, k, oracle_cap(cap_flag));
      }
      // Independent recomputation before reporting.
      const auto check = dil::dilation(graph.with_edges([&] {
        std::vector<Edge> e;
        for (const auto& c : result.edges) e.push_back(c.edge());
        return e;
      }()));
      if (!(check.t == result.achieved_dilation)) {
        std::cerr << "error: reported dilation " << result.achieved_dilation << " does not match recomputed "
                  << check.t << '\n';
        return kExitInternal;
      }
      json out = io::to_json(result);
      out["k"] = k;
      if (method == "greedy") out["eps"] = eps;
      print(out);
      return 0;
    }
    if (*gen) {
      Construction c = family == "greedy"
                           ? gen_greedy_lb(k, h > 0 ? h : 1e-4, h_prime.value_or((h > 0 ? h : 1e-4) * 1e-4))
                           : gen_bottleneck_lb(k, h > 0 ? h : 1e-3, perturb);
      io::save_graph(out_path, c.graph);
      json side = io::sidecar(c);
      side["k"] = k;
      io::write_file(sidecar_out.empty() ? sidecar_path(out_path) : sidecar_out, side.dump(2) + "\n");
      return 0;
    }
    if (*bench) {
      bench_cfg.oracle = !no_oracle;
      bench_cfg.oracle_cap = oracle_cap(cap_flag);
      const auto rows = run_bench(bench_cfg);
      if (csv_path.empty()) {
        write_csv(std::cout, rows);
      } else {
        std::ofstream out(csv_path);
        if (!out) throw io::FormatError("cannot write " + csv_path);
        write_csv(out, rows);
      }
      return 0;
    }
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
