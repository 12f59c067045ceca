#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "yaogame/game.hpp"
#include "yaogame/simplex.hpp"
#include "yaogame/types.hpp"

namespace yaogame {

enum class SolveMethod { simplex_lp, fictitious_play };

inline std::string to_string(SolveMethod m) {
  return m == SolveMethod::simplex_lp ? "simplex_lp" : "fictitious_play";
}

struct SolverConfig {
  double tolerance = 1e-9;
  std::size_t max_pivots = 100000;
  SolveMethod method = SolveMethod::simplex_lp;
  std::size_t fp_iterations = 100000;
  std::uint64_t seed = 0;  // reserved for randomized tie-breaking; the default
                           // fictitious play breaks ties by lowest index

  void check() const {
    if (!(tolerance > 0.0)) throw InvalidSpec("solver tolerance must be positive");
    if (max_pivots == 0) throw InvalidSpec("max_pivots must be positive");
    if (fp_iterations == 0) throw InvalidSpec("fp_iterations must be positive");
  }
};

/// Value and optimal mixed strategies of the matrix game, plus the bounds the
/// pair actually achieves: upper = max_p V_{f*}(p), lower = min_s U_{g*}(s).
struct SolveResult {
  double value;
  MixedStrategy f_star;
  MixedStrategy g_star;
  double upper;
  double lower;
  double gap;
  std::size_t pivots_or_iters;
  SolveMethod method;
  bool degenerate = false;
  bool alternate_optima = false;
};

/// Lowest-index argmin over s of U_g(s) with the attained value.
inline std::pair<std::string, double> best_response_row(const RatioMatrix& r,
                                                        const MixedStrategy& g) {
  std::vector<double> u = expected_ratio_u_all(r, g);
  std::size_t best = 0;
  for (std::size_t s = 1; s < u.size(); ++s) {
    if (u[s] < u[best]) best = s;
  }
  return {r.row_labels()[best], u[best]};
}

/// Lowest-index argmax over p of V_f(p) with the attained value.
inline std::pair<std::string, double> best_response_col(const RatioMatrix& r,
                                                        const MixedStrategy& f) {
  std::vector<double> v = expected_ratio_v_all(r, f);
  std::size_t best = 0;
  for (std::size_t p = 1; p < v.size(); ++p) {
    if (v[p] > v[best]) best = p;
  }
  return {r.col_labels()[best], v[best]};
}

namespace detail {

inline SolveResult finish_result(const RatioMatrix& r, double value, MixedStrategy f,
                                 MixedStrategy g, std::size_t iters, SolveMethod method,
                                 bool degenerate, bool alternate) {
  std::vector<double> v = expected_ratio_v_all(r, f);
  std::vector<double> u = expected_ratio_u_all(r, g);
  double upper = *std::max_element(v.begin(), v.end());
  double lower = *std::min_element(u.begin(), u.end());
  return SolveResult{value,  std::move(f),     std::move(g), upper,    lower,
                     upper - lower, iters, method, degenerate, alternate};
}

}  // namespace detail

/// Empirical best-response dynamics: both players start at index 0, then
/// alternate best responses against the opponent's play frequencies, ties to
/// the lowest index. The averaged strategies converge to the game value;
/// reported upper/lower/gap are the true bounds of the averages, and the
/// value estimate is their midpoint. Deterministic.
inline SolveResult fictitious_play(const RatioMatrix& r, const SolverConfig& config = {}) {
  config.check();
  detail::require_finite(r);
  const std::size_t m = r.rows(), n = r.cols();

  std::vector<double> row_counts(m, 0.0), col_counts(n, 0.0);
  std::vector<double> u_acc(m, 0.0);  // sum over column plays of R(s, p_t)
  std::vector<double> v_acc(n, 0.0);  // sum over row plays of R(s_t, p)

  for (std::size_t t = 0; t < config.fp_iterations; ++t) {
    std::size_t s = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (u_acc[i] < u_acc[s]) s = i;
    }
    row_counts[s] += 1.0;
    for (std::size_t p = 0; p < n; ++p) v_acc[p] += r.at(s, p);

    std::size_t q = 0;
    if (t > 0) {  // round one is pinned to index 0 for both players
      for (std::size_t p = 1; p < n; ++p) {
        if (v_acc[p] > v_acc[q]) q = p;
      }
    }
    col_counts[q] += 1.0;
    for (std::size_t i = 0; i < m; ++i) u_acc[i] += r.at(i, q);
  }

  const double total = static_cast<double>(config.fp_iterations);
  for (double& c : row_counts) c /= total;
  for (double& c : col_counts) c /= total;
  MixedStrategy f(r.row_labels(), std::move(row_counts));
  MixedStrategy g(r.col_labels(), std::move(col_counts));

  std::vector<double> v = expected_ratio_v_all(r, f);
  std::vector<double> u = expected_ratio_u_all(r, g);
  double upper = *std::max_element(v.begin(), v.end());
  double lower = *std::min_element(u.begin(), u.end());
  return SolveResult{(upper + lower) / 2.0,
                     std::move(f),
                     std::move(g),
                     upper,
                     lower,
                     upper - lower,
                     config.fp_iterations,
                     SolveMethod::fictitious_play,
                     false,
                     false};
}

namespace detail {

/// Exact game solve via the classic normalization: with all entries of A
/// positive, the row minimizer's problem  min_f max_p (f^T A)_p  maps to
///   max 1.y  s.t.  A^T y <= 1, y >= 0,
/// with value 1/sum(y) and f = y/sum(y); the dual multipliers give g the same
/// way. Entries are shifted up front when needed to guarantee positivity and
/// the shift is subtracted from the reported value.
inline SolveResult solve_lp(const RatioMatrix& r, const SolverConfig& config) {
  require_finite(r);
  const std::size_t m = r.rows(), n = r.cols();

  const double min_entry = r.r().min_entry();
  const double shift = min_entry >= 1e-9 ? 0.0 : 1.0 - min_entry;

  std::vector<std::vector<double>> constraints(n, std::vector<double>(m));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t s = 0; s < m; ++s) constraints[p][s] = r.at(s, p) + shift;
  }
  std::vector<double> b(n, 1.0), c(m, 1.0);

  DenseSimplex lp(constraints, b, c, config.tolerance, config.max_pivots);
  detail::SimplexOutcome out = lp.run();

  // Degenerate bases can leave rounding-level negatives in the extracted
  // variables; anything materially negative is a solver defect.
  auto clamp_epsilon = [](std::vector<double>& v) {
    for (double& x : v) {
      if (x < 0.0 && x > -1e-7) x = 0.0;
    }
  };
  clamp_epsilon(out.primal);
  clamp_epsilon(out.dual);

  MixedStrategy f = MixedStrategy::normalized(r.row_labels(), std::move(out.primal));
  MixedStrategy g = MixedStrategy::normalized(r.col_labels(), std::move(out.dual));
  double value = 1.0 / out.objective - shift;
  return finish_result(r, value, std::move(f), std::move(g), out.pivots,
                       SolveMethod::simplex_lp, out.degenerate, out.alternate_optima);
}

}  // namespace detail

/// Solves the matrix game with the configured method.
inline SolveResult solve(const RatioMatrix& r, const SolverConfig& config = {}) {
  config.check();
  if (config.method == SolveMethod::fictitious_play) return fictitious_play(r, config);
  return detail::solve_lp(r, config);
}

}  // namespace yaogame
