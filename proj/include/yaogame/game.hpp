#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "yaogame/types.hpp"

namespace yaogame {

namespace detail {

inline void require_row_strategy(const RatioMatrix& r, const MixedStrategy& f) {
  if (f.labels() != r.row_labels()) {
    throw LabelMismatch("strategy labels do not match the matrix rows");
  }
}

inline void require_col_strategy(const RatioMatrix& r, const MixedStrategy& g) {
  if (g.labels() != r.col_labels()) {
    throw LabelMismatch("strategy labels do not match the matrix columns");
  }
}

inline void require_finite(const RatioMatrix& r) {
  if (!r.r().all_finite()) throw NonFiniteEntry("ratio matrix contains a non-finite entry");
}

}  // namespace detail

/// R(s,p) = cost_on(s,p) / cost_off(p), labels preserved. With raw_game unset,
/// entries below 1 - kRatioSlack are rejected.
inline RatioMatrix ratio_from_costs(const CostModel& model, bool raw_game = false) {
  const Matrix& on = model.cost_on();
  const std::vector<double>& off = model.cost_off();
  Matrix r(on.rows(), on.cols());
  for (std::size_t p = 0; p < on.cols(); ++p) {
    if (off[p] <= 0.0) {
      throw ZeroOfflineCost("offline cost for " + model.col_labels()[p] + " is not positive");
    }
  }
  for (std::size_t s = 0; s < on.rows(); ++s) {
    for (std::size_t p = 0; p < on.cols(); ++p) {
      double v = on(s, p) / off[p];
      if (!raw_game && v < 1.0 - kRatioSlack) {
        throw SubUnitRatio("ratio at (" + model.row_labels()[s] + ", " + model.col_labels()[p] +
                           ") is " + std::to_string(v) +
                           " < 1; pass raw_game to permit sub-unit ratios");
      }
      r(s, p) = v;
    }
  }
  return RatioMatrix(model.row_labels(), model.col_labels(), std::move(r));
}

/// U_g(s) for every s: the expected ratio of each deterministic algorithm
/// against the randomized input g.
inline std::vector<double> expected_ratio_u_all(const RatioMatrix& r, const MixedStrategy& g) {
  detail::require_col_strategy(r, g);
  std::vector<double> u(r.rows(), 0.0);
  for (std::size_t s = 0; s < r.rows(); ++s) {
    double acc = 0.0;
    for (std::size_t p = 0; p < r.cols(); ++p) acc += r.at(s, p) * g.weight(p);
    u[s] = acc;
  }
  return u;
}

inline double expected_ratio_u(const RatioMatrix& r, const MixedStrategy& g,
                               const std::string& strategy) {
  detail::require_col_strategy(r, g);
  std::size_t s = r.row_index(strategy);
  double acc = 0.0;
  for (std::size_t p = 0; p < r.cols(); ++p) acc += r.at(s, p) * g.weight(p);
  return acc;
}

/// V_f(p) for every p: the expected ratio of the randomized algorithm f
/// against each deterministic input.
inline std::vector<double> expected_ratio_v_all(const RatioMatrix& r, const MixedStrategy& f) {
  detail::require_row_strategy(r, f);
  std::vector<double> v(r.cols(), 0.0);
  for (std::size_t s = 0; s < r.rows(); ++s) {
    double fs = f.weight(s);
    if (fs == 0.0) continue;
    for (std::size_t p = 0; p < r.cols(); ++p) v[p] += r.at(s, p) * fs;
  }
  return v;
}

inline double expected_ratio_v(const RatioMatrix& r, const MixedStrategy& f,
                               const std::string& input) {
  detail::require_row_strategy(r, f);
  std::size_t p = r.col_index(input);
  double acc = 0.0;
  for (std::size_t s = 0; s < r.rows(); ++s) acc += r.at(s, p) * f.weight(s);
  return acc;
}

/// H(f,g) = sum_s sum_p f(s) R(s,p) g(p), evaluated row-sums-first. In the
/// finite setting the two summation orders agree exactly up to rounding, so
/// the choice is an implementation detail rather than an assumption.
inline double bilinear_value_h(const RatioMatrix& r, const MixedStrategy& f,
                               const MixedStrategy& g) {
  detail::require_row_strategy(r, f);
  std::vector<double> u = expected_ratio_u_all(r, g);
  double acc = 0.0;
  for (std::size_t s = 0; s < r.rows(); ++s) acc += f.weight(s) * u[s];
  return acc;
}

/// Worst-case ratio of the deterministic algorithm s: max_p R(s,p).
inline double deterministic_cr(const RatioMatrix& r, const std::string& strategy) {
  std::size_t s = r.row_index(strategy);
  double best = r.at(s, 0);
  for (std::size_t p = 1; p < r.cols(); ++p) best = std::max(best, r.at(s, p));
  return best;
}

/// Diagnostics reported by validate(). Dominance is entrywise and purely
/// informational; dominated rows/columns are never deleted.
struct MatrixDiagnostics {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double min_entry = 0.0;
  double max_entry = 0.0;
  bool all_finite = false;
  bool ratio_at_least_one = false;
  // (dominated label, dominating label); for the row player smaller is better,
  // for the column player larger is better.
  std::vector<std::pair<std::string, std::string>> dominated_rows;
  std::vector<std::pair<std::string, std::string>> dominated_cols;
};

inline MatrixDiagnostics validate(const RatioMatrix& r) {
  MatrixDiagnostics d;
  d.rows = r.rows();
  d.cols = r.cols();
  d.all_finite = r.r().all_finite();
  d.min_entry = r.r().min_entry();
  d.max_entry = r.r().max_entry();
  d.ratio_at_least_one = d.all_finite && d.min_entry >= 1.0 - kRatioSlack;

  // Row a dominates row b when R(a,p) <= R(b,p) for all p. Identical rows are
  // reported with the lower index as dominator.
  for (std::size_t b = 0; b < r.rows(); ++b) {
    for (std::size_t a = 0; a < r.rows(); ++a) {
      if (a == b) continue;
      bool leq = true, strict = false;
      for (std::size_t p = 0; p < r.cols(); ++p) {
        if (r.at(a, p) > r.at(b, p)) {
          leq = false;
          break;
        }
        if (r.at(a, p) < r.at(b, p)) strict = true;
      }
      if (leq && (strict || a < b)) {
        d.dominated_rows.emplace_back(r.row_labels()[b], r.row_labels()[a]);
        break;
      }
    }
  }
  for (std::size_t b = 0; b < r.cols(); ++b) {
    for (std::size_t a = 0; a < r.cols(); ++a) {
      if (a == b) continue;
      bool geq = true, strict = false;
      for (std::size_t s = 0; s < r.rows(); ++s) {
        if (r.at(s, a) < r.at(s, b)) {
          geq = false;
          break;
        }
        if (r.at(s, a) > r.at(s, b)) strict = true;
      }
      if (geq && (strict || a < b)) {
        d.dominated_cols.emplace_back(r.col_labels()[b], r.col_labels()[a]);
        break;
      }
    }
  }
  return d;
}

}  // namespace yaogame
