#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "yaogame/rng.hpp"
#include "yaogame/types.hpp"

namespace yaogame {

/// Ski rental: buy cost B in rent-day units, adversary horizon N >= B days.
struct SkiRentalSpec {
  std::uint32_t buy_cost;
  std::uint32_t horizon;

  void check() const {
    if (buy_cost < 1) throw InvalidSpec("ski rental buy cost must be at least 1");
    if (horizon < buy_cost) {
      throw InvalidSpec("ski rental horizon (" + std::to_string(horizon) +
                        ") must be at least the buy cost (" + std::to_string(buy_cost) +
                        "); a shorter horizon truncates the adversary");
    }
  }
};

/// Strategies s in {1..B}: rent for s-1 days, buy at the start of day s.
/// Inputs p in {1..N}: total ski days. Online cost is p when the trip ends
/// before the buy day, else (s-1) + B; offline cost is min(p, B). Strategies
/// with s > B are dominated and not generated.
inline CostModel ski_rental(const SkiRentalSpec& spec) {
  spec.check();
  const std::size_t b = spec.buy_cost, n = spec.horizon;
  Matrix cost_on(b, n);
  std::vector<double> cost_off(n);
  for (std::size_t p = 1; p <= n; ++p) cost_off[p - 1] = static_cast<double>(std::min(p, b));
  for (std::size_t s = 1; s <= b; ++s) {
    for (std::size_t p = 1; p <= n; ++p) {
      cost_on(s - 1, p - 1) =
          p <= s - 1 ? static_cast<double>(p) : static_cast<double>(s - 1 + b);
    }
  }
  return CostModel(default_labels('s', b), default_labels('p', n), std::move(cost_on),
                   std::move(cost_off));
}

/// Entries drawn i.i.d. uniform from [lo, hi] with xoshiro256**, row-major;
/// the same (rows, cols, lo, hi, seed) reproduce the matrix bit-for-bit on
/// any platform.
inline RatioMatrix random_instance(std::size_t rows, std::size_t cols, double lo, double hi,
                                   std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw InvalidRange("random instance needs at least one row and column");
  if (!(1.0 <= lo && lo <= hi)) {
    throw InvalidRange("random instance range must satisfy 1 <= lo <= hi");
  }
  Xoshiro256StarStar rng(seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = lo + rng.next_double() * (hi - lo);
  }
  return RatioMatrix(default_labels('s', rows), default_labels('p', cols), std::move(m));
}

/// Shortest decimal form that parses back to the same double.
inline std::string format_grid_point(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

/// Tabulated continuous-parameter problem on finite grids; labels carry the
/// grid coordinates so reports stay interpretable after discretization.
inline CostModel grid_discretize(const std::vector<double>& s_grid,
                                 const std::vector<double>& p_grid,
                                 const std::vector<std::vector<double>>& cost_table,
                                 const std::vector<double>& offline_table) {
  if (s_grid.empty() || p_grid.empty()) {
    throw DimensionMismatch("grids must contain at least one point each");
  }
  if (cost_table.size() != s_grid.size() || offline_table.size() != p_grid.size()) {
    throw DimensionMismatch("cost tables do not match the grid sizes");
  }
  Matrix cost_on(s_grid.size(), p_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    if (cost_table[i].size() != p_grid.size()) {
      throw DimensionMismatch("cost table row " + std::to_string(i) +
                              " does not match the input grid size");
    }
    for (std::size_t j = 0; j < p_grid.size(); ++j) cost_on(i, j) = cost_table[i][j];
  }
  Labels row_labels, col_labels;
  row_labels.reserve(s_grid.size());
  col_labels.reserve(p_grid.size());
  for (double s : s_grid) row_labels.push_back("s=" + format_grid_point(s));
  for (double p : p_grid) col_labels.push_back("p=" + format_grid_point(p));
  return CostModel(std::move(row_labels), std::move(col_labels), std::move(cost_on),
                   offline_table);
}

}  // namespace yaogame
