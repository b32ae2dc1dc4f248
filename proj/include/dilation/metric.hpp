#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dil {

using Vertex = std::size_t;

/// Relative tolerance used for every dilation comparison in the library.
inline constexpr double kRelTol = 1e-9;

/// Unordered vertex pair, stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A candidate edge together with its metric length.
struct EdgeCandidate {
  Vertex u = 0;
  Vertex v = 0;
  double length = 0.0;

  Edge edge() const { return {u, v}; }

  friend bool operator==(const EdgeCandidate&, const EdgeCandidate&) = default;
};

/// Canonical candidate order: by length, then lexicographically by (u, v).
inline bool candidate_less(const EdgeCandidate& a, const EdgeCandidate& b) {
  if (a.length != b.length) return a.length < b.length;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

// One violated invariant found by validation.
struct Violation {
  enum class Kind { kSize, kAsymmetry, kNegative, kNonzeroDiagonal, kZeroDistance, kTriangle, kNotFinite };
  Kind kind;
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;  // middle vertex, triangle violations only
  std::string message;
};

using ValidationReport = std::vector<Violation>;

namespace detail {

inline std::string describe(const ValidationReport& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.size() && i < 5; ++i) {
    if (i) os << "; ";
    os << report[i].message;
  }
  if (report.size() > 5) os << "; ... (" << report.size() << " violations)";
  return os.str();
}

inline bool triangle_ok(double uw, double uv, double vw) {
  return uw <= uv + vw * (1.0 + kRelTol);
}

}  // namespace detail

/// Validates a raw distance matrix. Lists every violated invariant; never throws.
inline ValidationReport validate_matrix(const std::vector<std::vector<double>>& d, bool strict) {
  ValidationReport report;
  const std::size_t n = d.size();
  if (n < 2) {
    report.push_back({Violation::Kind::kSize, 0, 0, 0, "need at least 2 vertices"});
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) {
      report.push_back({Violation::Kind::kSize, i, 0, 0,
                        "row " + std::to_string(i) + " has " + std::to_string(d[i].size()) +
                            " entries, expected " + std::to_string(n)});
    }
  }
  if (!report.empty()) return report;

  for (std::size_t i = 0; i < n; ++i) {
    if (d[i][i] != 0.0) {
      report.push_back({Violation::Kind::kNonzeroDiagonal, i, i, 0,
                        "nonzero diagonal at (" + std::to_string(i) + "," + std::to_string(i) + ")"});
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = d[i][j];
      const double b = d[j][i];
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!std::isfinite(a) || !std::isfinite(b)) {
        report.push_back({Violation::Kind::kNotFinite, i, j, 0, "non-finite distance at " + at});
        continue;
      }
      if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), std::abs(b))) {
        report.push_back({Violation::Kind::kAsymmetry, i, j, 0, "asymmetry at " + at});
      }
      if (a < 0.0 || b < 0.0) {
        report.push_back({Violation::Kind::kNegative, i, j, 0, "negative distance at " + at});
      } else if (a == 0.0 || b == 0.0) {
        report.push_back({Violation::Kind::kZeroDistance, i, j, 0, "zero distance at " + at});
      }
    }
  }
  if (strict && report.empty()) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w = u + 1; w < n; ++w) {
        for (std::size_t v = 0; v < n; ++v) {
          if (v == u || v == w) continue;
          if (!detail::triangle_ok(d[u][w], d[u][v], d[v][w])) {
            report.push_back({Violation::Kind::kTriangle, u, w, v,
                              "triangle violation (" + std::to_string(u) + "," + std::to_string(w) +
                                  ") via " + std::to_string(v)});
            break;
          }
        }
      }
    }
  }
  return report;
}

/// Validates a raw point set: equal dimensions, finite coordinates, no duplicates.
inline ValidationReport validate_points(const std::vector<std::vector<double>>& pts) {
  ValidationReport report;
  const std::size_t n = pts.size();
  if (n < 2) {
    report.push_back({Violation::Kind::kSize, 0, 0, 0, "need at least 2 vertices"});
    return report;
  }
  const std::size_t dim = pts[0].size();
  if (dim == 0) report.push_back({Violation::Kind::kSize, 0, 0, 0, "points must have dimension >= 1"});
  for (std::size_t i = 0; i < n; ++i) {
    if (pts[i].size() != dim) {
      report.push_back({Violation::Kind::kSize, i, 0, 0,
                        "point " + std::to_string(i) + " has dimension " + std::to_string(pts[i].size())});
    }
    for (double c : pts[i]) {
      if (!std::isfinite(c)) {
        report.push_back({Violation::Kind::kNotFinite, i, 0, 0, "non-finite coordinate in point " + std::to_string(i)});
        break;
      }
    }
  }
  if (!report.empty()) return report;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts[a] != pts[b] ? pts[a] < pts[b] : a < b;
  });
  for (std::size_t i = 1; i < n; ++i) {
    if (pts[order[i - 1]] == pts[order[i]]) {
      const Edge e{order[i - 1], order[i]};
      report.push_back({Violation::Kind::kZeroDistance, e.u, e.v, 0,
                        "duplicate points " + std::to_string(e.u) + " and " + std::to_string(e.v)});
    }
  }
  return report;
}

/// Source of pairwise distances: either Euclidean points or an explicit matrix.
/// Immutable after construction.
class MetricSpace {
 public:
  enum class Kind { kEuclidean, kMatrix };

  static MetricSpace from_points(std::vector<std::vector<double>> pts) {
    auto report = validate_points(pts);
    if (!report.empty()) throw std::invalid_argument("invalid point set: " + detail::describe(report));
    MetricSpace s;
    s.kind_ = Kind::kEuclidean;
    s.n_ = pts.size();
    s.dim_ = pts[0].size();
    s.coords_.reserve(s.n_ * s.dim_);
    for (const auto& p : pts) s.coords_.insert(s.coords_.end(), p.begin(), p.end());
    return s;
  }

  /// Accepts non-metric matrices unless `strict` is set; symmetry and positivity are always required.
  static MetricSpace from_matrix(const std::vector<std::vector<double>>& d, bool strict = false) {
    auto report = validate_matrix(d, strict);
    if (!report.empty()) throw std::invalid_argument("invalid distance matrix: " + detail::describe(report));
    MetricSpace s;
    s.kind_ = Kind::kMatrix;
    s.n_ = d.size();
    s.matrix_.resize(s.n_ * s.n_);
    for (std::size_t i = 0; i < s.n_; ++i) {
      for (std::size_t j = 0; j < s.n_; ++j) {
        // Store the upper triangle mirrored so lookups are exactly symmetric.
        s.matrix_[i * s.n_ + j] = i <= j ? d[i][j] : d[j][i];
      }
    }
    return s;
  }

  Kind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  std::size_t dimension() const { return dim_; }

  /// Unchecked distance lookup. Symmetric bit for bit.
  double distance(Vertex u, Vertex v) const {
    if (kind_ == Kind::kMatrix) return matrix_[u * n_ + v];
    const double* a = &coords_[u * dim_];
    const double* b = &coords_[v * dim_];
    double sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      const double diff = a[i] - b[i];
      sum += diff * diff;
    }
    return std::sqrt(sum);
  }

  std::vector<double> point(Vertex u) const {
    if (kind_ != Kind::kEuclidean) throw std::logic_error("matrix metric has no coordinates");
    return {coords_.begin() + static_cast<std::ptrdiff_t>(u * dim_),
            coords_.begin() + static_cast<std::ptrdiff_t>((u + 1) * dim_)};
  }

  std::vector<std::vector<double>> points() const {
    std::vector<std::vector<double>> out;
    for (Vertex u = 0; u < n_; ++u) out.push_back(point(u));
    return out;
  }

  std::vector<std::vector<double>> matrix() const {
    std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v) out[u][v] = u == v ? 0.0 : distance(u, v);
    return out;
  }

 private:
  MetricSpace() = default;

  Kind kind_ = Kind::kEuclidean;
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  std::vector<double> matrix_;
};

/// Checked edge length d_M(u, v).
inline double edge_length(const MetricSpace& space, Vertex u, Vertex v) {
  const std::size_t n = space.size();
  if (u >= n || v >= n) {
    throw std::out_of_range("vertex index out of range: (" + std::to_string(u) + "," + std::to_string(v) +
                            ") with n=" + std::to_string(n));
  }
  if (u == v) throw std::invalid_argument("edge_length needs distinct vertices");
  return u < v ? space.distance(u, v) : space.distance(v, u);
}

/// Validation of an already constructed space. Structural invariants hold by
/// construction, so only the triangle inequality can fail (matrix spaces, strict mode).
inline ValidationReport validate(const MetricSpace& space, bool strict) {
  if (space.kind() == MetricSpace::Kind::kEuclidean || !strict) return {};
  return validate_matrix(space.matrix(), true);
}

/// Undirected graph over a metric space. Edge weights are always derived from the space.
class MetricGraph {
 public:
  explicit MetricGraph(MetricSpace space, std::vector<Edge> edges = {})
      : space_(std::move(space)), adjacent_(space_.size() * space_.size(), 0) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) add_edge(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
  }

  const MetricSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t pair_count() const { return size() * (size() - 1) / 2; }
  std::size_t non_edge_count() const { return pair_count() - edges_.size(); }
  bool complete() const { return non_edge_count() == 0; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= size() || v >= size()) return false;
    return adjacent_[u * size() + v] != 0;
  }

  double length(const Edge& e) const { return space_.distance(e.u, e.v); }

  /// Copy of this graph with extra edges; edges already present are ignored.
  MetricGraph with_edges(const std::vector<Edge>& extra) const {
    MetricGraph g = *this;
    for (const Edge& e : extra) {
      if (!g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
  }

 private:
  void add_edge(Vertex a, Vertex b) {
    const std::size_t n = size();
    if (a >= n || b >= n) {
      throw std::out_of_range("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range for n=" + std::to_string(n));
    }
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (adjacent_[a * n + b]) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(std::min(a, b)) + "," +
                                  std::to_string(std::max(a, b)) + ")");
    }
    adjacent_[a * n + b] = adjacent_[b * n + a] = 1;
    edges_.emplace_back(a, b);
  }

  MetricSpace space_;
  std::vector<Edge> edges_;
  std::vector<unsigned char> adjacent_;
};

/// All vertex pairs not in the graph, ascending by (length, u, v).
inline std::vector<EdgeCandidate> non_edges_sorted(const MetricGraph& graph) {
  std::vector<EdgeCandidate> out;
  out.reserve(graph.non_edge_count());
  const std::size_t n = graph.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!graph.has_edge(u, v)) out.push_back({u, v, graph.space().distance(u, v)});
    }
  }
  std::sort(out.begin(), out.end(), candidate_less);
  return out;
}

}  // namespace dil
