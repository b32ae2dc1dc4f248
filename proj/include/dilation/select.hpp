#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dil {

/// Counts the elementary steps of a selection run (matrix entries touched plus
/// elements handed to the final in-list selections).
struct SelectStats {
  std::uint64_t work = 0;
};

namespace detail {

// Selection in the implicit sorted matrix A(i, j) = x[rows[i]] + y[rows[j]].
// Rows and columns share one index list, which keeps every recursive
// submatrix square (Frederickson-Johnson style biselection).
class SortedSumMatrix {
 public:
  SortedSumMatrix(std::span<const double> x, std::span<const double> y, SelectStats* stats)
      : x_(x), y_(y), stats_(stats) {}

  // Returns the k1-th and k2-th smallest entries (1-based) of the submatrix on `rows`.
  std::pair<double, double> biselect(const std::vector<std::size_t>& rows, std::uint64_t k1, std::uint64_t k2) {
    const std::uint64_t n = rows.size();
    auto at = [&](std::size_t i, std::size_t j) { return x_[rows[i]] + y_[rows[j]]; };

    if (n <= 2) {
      std::vector<double> all;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) all.push_back(at(i, j));
      std::sort(all.begin(), all.end());
      count(all.size());
      return {all[k1 - 1], all[k2 - 1]};
    }

    // Every other row/column, always keeping the last one.
    std::vector<std::size_t> sub;
    sub.reserve(n / 2 + 2);
    for (std::size_t i = 0; i < n; i += 2) sub.push_back(rows[i]);
    if (n % 2 == 0) sub.push_back(rows[n - 1]);
    const std::uint64_t k1_sub = n % 2 ? (k1 + 2 * n) / 4 + 1 : n + 1 + (k1 + 3) / 4;
    const std::uint64_t k2_sub = (k2 + 3) / 4;
    const auto [upper, lower] = biselect(sub, k1_sub, k2_sub);

    // Saddleback passes: entries below `upper`, entries above `lower`, and the band between them.
    std::uint64_t below_upper = 0;
    std::uint64_t above_lower = 0;
    std::vector<double> band;
    std::size_t j_lower = n;  // first column with A(i, j) > lower
    std::size_t j_upper = n;  // first column with A(i, j) >= upper
    for (std::size_t i = 0; i < n; ++i) {
      while (j_lower > 0 && at(i, j_lower - 1) > lower) {
        --j_lower;
        count(1);
      }
      while (j_upper > 0 && at(i, j_upper - 1) >= upper) {
        --j_upper;
        count(1);
      }
      below_upper += j_upper;
      above_lower += n - j_lower;
      for (std::size_t j = j_lower; j < j_upper; ++j) band.push_back(at(i, j));
      count(1 + (j_upper > j_lower ? j_upper - j_lower : 0));
    }

    auto resolve = [&](std::uint64_t k) {
      if (below_upper <= k - 1) return upper;
      // Rank of the answer within the band, as a signed quantity.
      const std::int64_t r = static_cast<std::int64_t>(k + above_lower) - static_cast<std::int64_t>(n * n);
      if (r <= 0) return lower;
      return pick(band, static_cast<std::size_t>(r));
    };
    return {resolve(k1), resolve(k2)};
  }

 private:
  double pick(std::vector<double> values, std::size_t rank) {
    count(values.size());
    auto nth = values.begin() + static_cast<std::ptrdiff_t>(rank - 1);
    std::nth_element(values.begin(), nth, values.end());
    return *nth;
  }

  void count(std::uint64_t w) {
    if (stats_) stats_->work += w;
  }

  std::span<const double> x_;
  std::span<const double> y_;
  SelectStats* stats_;
};

}  // namespace detail

/// The i-th smallest (1-based) element of the multiset {x + y : x in X, y in Y}.
/// X and Y must be sorted ascending; duplicates are fine. Runs in time linear
/// in |X| + |Y|.
inline double select_xy(std::span<const double> x, std::span<const double> y, std::uint64_t i,
                        SelectStats* stats = nullptr) {
  const std::uint64_t total = static_cast<std::uint64_t>(x.size()) * y.size();
  if (i < 1 || i > total) {
    throw std::out_of_range("rank " + std::to_string(i) + " outside [1, " + std::to_string(total) + "]");
  }
  if (!std::is_sorted(x.begin(), x.end()) || !std::is_sorted(y.begin(), y.end())) {
    throw std::invalid_argument("select_xy needs sorted inputs");
  }

  // Pad the shorter list with +inf so the implicit matrix is square; padded
  // sums rank after every real one.
  std::vector<double> padded;
  const std::size_t m = std::max(x.size(), y.size());
  if (x.size() != y.size()) {
    auto& shorter = x.size() < y.size() ? x : y;
    padded.assign(shorter.begin(), shorter.end());
    padded.resize(m, std::numeric_limits<double>::infinity());
    (x.size() < y.size() ? x : y) = std::span<const double>(padded);
  }

  // Rows or columns at index >= i cannot hold the answer, and a leading block
  // of rows/columns holds only entries ranked below it.
  const std::uint64_t mm = static_cast<std::uint64_t>(m) * m;
  std::uint64_t start = 0;
  if (i + m > mm + 1) start = i + m - 1 - mm;  // max(i - m^2 + m - 1, 0)
  const std::uint64_t rest = m - start;
  std::uint64_t k = i - (mm - rest * rest);
  const std::uint64_t stop = std::min<std::uint64_t>(m, start + k);
  std::vector<std::size_t> rows;
  rows.reserve(stop - start);
  for (std::uint64_t r = start; r < stop; ++r) rows.push_back(static_cast<std::size_t>(r));

  detail::SortedSumMatrix matrix(x, y, stats);
  return matrix.biselect(rows, k, k).first;
}

}  // namespace dil
