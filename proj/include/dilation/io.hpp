#pragma once

// JSON file formats shared by the CLI and the tests.

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dilation/bottleneck.hpp"
#include "dilation/constructions.hpp"
#include "dilation/greedy.hpp"
#include "dilation/search.hpp"

namespace dil::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite numbers as-is; infinity as the string "inf".
inline json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline json edge_list(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline json edge_list(const std::vector<EdgeCandidate>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline json to_json(const MetricGraph& graph) {
  json metric;
  if (graph.space().kind() == MetricSpace::Kind::kEuclidean) {
    metric = {{"type", "euclidean"}, {"points", graph.space().points()}};
  } else {
    metric = {{"type", "matrix"}, {"d", graph.space().matrix()}};
  }
  return {{"schema", kSchemaVersion}, {"metric", metric}, {"edges", edge_list(graph.edges())}};
}

inline MetricGraph graph_from_json(const json& doc, bool strict = false) {
  try {
    if (doc.contains("schema") && doc.at("schema").get<int>() != kSchemaVersion) {
      throw FormatError("unsupported schema version " + doc.at("schema").dump());
    }
    const json& metric = doc.at("metric");
    const std::string type = metric.at("type").get<std::string>();
    auto rows = [](const json& arr) {
      std::vector<std::vector<double>> out;
      for (const auto& row : arr) out.push_back(row.get<std::vector<double>>());
      return out;
    };
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw FormatError("edge entries must be [u, v] pairs, got " + e.dump());
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
      }
    }
    if (type == "euclidean") return MetricGraph(MetricSpace::from_points(rows(metric.at("points"))), std::move(edges));
    if (type == "matrix") return MetricGraph(MetricSpace::from_matrix(rows(metric.at("d")), strict), std::move(edges));
    throw FormatError("unknown metric type '" + type + "'");
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed graph JSON: ") + e.what());
  }
}

/// Canonical text form of a graph file.
inline std::string dump_graph(const MetricGraph& graph) { return to_json(graph).dump(2) + "\n"; }

inline MetricGraph parse_graph(const std::string& text, bool strict = false) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("graph file is not valid JSON: ") + e.what());
  }
  return graph_from_json(doc, strict);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

inline MetricGraph load_graph(const std::string& path, bool strict = false) {
  return parse_graph(read_file(path), strict);
}

inline void save_graph(const std::string& path, const MetricGraph& graph) { write_file(path, dump_graph(graph)); }

inline json to_json(const DilationResult& d) {
  return {{"schema", kSchemaVersion}, {"dilation", number(d.t)}, {"pair", {d.pair.u, d.pair.v}}};
}

inline json to_json(const DecisionOutcome& outcome, std::size_t k, double t) {
  json out = {{"schema", kSchemaVersion},
              {"verdict", to_string(outcome.verdict)},
              {"k", k},
              {"t", t},
              {"edges", edge_list(outcome.added_edges)},
              {"processed", outcome.processed_count}};
  out["final_dilation"] = outcome.final_dilation ? number(*outcome.final_dilation) : json(nullptr);
  return out;
}

inline json to_json(const TraceEntry& step) {
  return {{"u", step.candidate.u},
          {"v", step.candidate.v},
          {"length", step.candidate.length},
          {"graph_distance", number(step.graph_distance)},
          {"accepted", step.accepted}};
}

inline json to_json(const AugmentationResult& r) {
  json out = {{"schema", kSchemaVersion},
              {"method", r.method},
              {"edges", edge_list(r.edges)},
              {"achieved_dilation", number(r.achieved_dilation)},
              {"pair", {r.dilation_pair.u, r.dilation_pair.v}}};
  out["certified_factor"] = r.certified_factor ? json(*r.certified_factor) : json(nullptr);
  if (r.interval) {
    json probes = json::array();
    for (const auto& p : r.interval->probes) {
      probes.push_back({{"rank", p.rank},
                        {"ratio", p.ratio},
                        {"low", to_string(p.low)},
                        {"high", to_string(p.high)},
                        {"case", p.outcome_case}});
    }
    out["interval"] = {{"t_lo", r.interval->t_lo}, {"t_hi", r.interval->t_hi}, {"probes", probes}};
  }
  if (!r.grid.empty()) {
    json grid = json::array();
    for (const auto& g : r.grid) grid.push_back({{"t", g.t}, {"verdict", to_string(g.verdict)}});
    out["grid"] = grid;
  }
  return out;
}

inline const char* family_name(Family f) {
  return f == Family::kGreedyLowerBound ? "greedy" : "bottleneck";
}

/// Sidecar written next to a generated graph file.
inline json sidecar(const Construction& c) {
  json labels = json::object();
  for (std::size_t i = 0; i < c.labels.size(); ++i) labels[c.labels[i]] = i;
  json out = {{"schema", kSchemaVersion},
              {"family", family_name(c.family)},
              {"labels", labels},
              {"t_star_formula", c.t_star_formula},
              {"optimal_edges", edge_list(c.optimal_edges)}};
  if (c.family == Family::kBottleneckLowerBound) {
    out["bottleneck_order"] = edge_list(c.bottleneck_order);
    out["bottleneck_dilation"] = c.bottleneck_dilation;
  }
  return out;
}

}  // namespace dil::io
