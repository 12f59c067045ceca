#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "yaogame/certify.hpp"
#include "yaogame/game.hpp"
#include "yaogame/types.hpp"

namespace yaogame {

/// Residual above which an equalization solve is treated as infeasible.
inline constexpr double kEqualizerResidual = 1e-8;

/// Components below -kNegativeMassTol reject the solution; components in
/// [-kNegativeMassTol, 0) are clamped to zero and the mass renormalized.
inline constexpr double kNegativeMassTol = 1e-12;

/// A mixed strategy obtained by forcing the opponent's expected ratio to a
/// common constant, together with the constant and the back-substitution
/// residual over the equalized index set.
struct EqualizerSolution {
  MixedStrategy strategy;
  double constant;
  double residual;
  Labels support;
  std::string details;
};

struct EqualizerPair {
  EqualizerSolution f_solution;
  EqualizerSolution g_solution;
};

namespace detail {

enum class EqFailure { none, inconsistent, negative_mass, singular, empty_support };

struct EqAttempt {
  std::optional<EqualizerSolution> solution;
  EqFailure failure = EqFailure::none;
  std::string reason;
};

struct LinearSolve {
  Eigen::VectorXd x;
  bool full_rank;
  double residual;
};

/// Minimum-norm least-squares solve; rank-revealing so underdetermined
/// systems are flagged rather than silently pinned to one representative.
inline LinearSolve solve_least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  Eigen::VectorXd x = cod.solve(b);
  double residual = (a * x - b).cwiseAbs().maxCoeff();
  return LinearSolve{std::move(x), cod.rank() == a.cols(), residual};
}

/// Solves the equalization system restricted to strategy indices `own` and
/// equalized indices `other`:
///   sum_i w_i coeff(other_j, own_i) = C   for each j,   sum_i w_i = 1.
/// `coeff(j, i)` must return the ratio entry pairing equalized index j with
/// strategy index i.
template <typename Coeff>
EqAttempt equalize_system(const Labels& own_labels, const std::vector<std::size_t>& own,
                          const std::vector<std::size_t>& other, Coeff&& coeff) {
  const std::size_t k = own.size(), q = other.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(q + 1, k + 1);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(q + 1);
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t i = 0; i < k; ++i) a(j, i) = coeff(other[j], own[i]);
    a(j, k) = -1.0;  // the constant C
  }
  for (std::size_t i = 0; i < k; ++i) a(q, i) = 1.0;
  b(q) = 1.0;

  LinearSolve ls = solve_least_squares(a, b);
  EqAttempt attempt;
  if (ls.residual > kEqualizerResidual) {
    attempt.failure = EqFailure::inconsistent;
    std::ostringstream os;
    os << "equalization system is inconsistent; least-squares residual " << ls.residual;
    attempt.reason = os.str();
    return attempt;
  }

  double min_w = 0.0;
  for (std::size_t i = 0; i < k; ++i) min_w = std::min(min_w, ls.x(static_cast<Eigen::Index>(i)));
  if (min_w < -kNegativeMassTol) {
    attempt.failure = ls.full_rank ? EqFailure::negative_mass : EqFailure::singular;
    std::ostringstream os;
    if (ls.full_rank) {
      os << "equalizing requires negative mass (min component " << min_w << ")";
    } else {
      os << "system is rank-deficient and the minimum-norm solution has negative mass (min "
            "component "
         << min_w << ")";
    }
    attempt.reason = os.str();
    return attempt;
  }

  std::vector<double> weights(own_labels.size(), 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double w = std::max(ls.x(static_cast<Eigen::Index>(i)), 0.0);
    weights[own[i]] = w;
    sum += w;
  }
  if (sum <= kSupportThreshold) {
    attempt.failure = EqFailure::empty_support;
    attempt.reason = "equalizer solution carries no positive mass";
    return attempt;
  }
  for (double& w : weights) w /= sum;
  const double constant = ls.x(static_cast<Eigen::Index>(k));

  MixedStrategy strategy(own_labels, std::move(weights));
  // Back-substitute the cleaned-up strategy over the equalized index set.
  double residual = 0.0;
  for (std::size_t j = 0; j < q; ++j) {
    double dot = 0.0;
    for (std::size_t i = 0; i < k; ++i) dot += strategy.weight(own[i]) * coeff(other[j], own[i]);
    residual = std::max(residual, std::abs(dot - constant));
  }
  if (residual > kEqualizerResidual) {
    attempt.failure = EqFailure::inconsistent;
    std::ostringstream os;
    os << "back-substitution residual " << residual << " exceeds " << kEqualizerResidual;
    attempt.reason = os.str();
    return attempt;
  }

  Labels support;
  for (std::size_t i : own) {
    if (strategy.weight(i) > kSupportThreshold) support.push_back(own_labels[i]);
  }
  std::string details = ls.full_rank ? "" : "rank-deficient system; minimum-norm representative";
  attempt.solution =
      EqualizerSolution{std::move(strategy), constant, residual, std::move(support), details};
  return attempt;
}

[[noreturn]] inline void throw_equalizer_failure(const EqAttempt& attempt) {
  switch (attempt.failure) {
    case EqFailure::singular: throw SingularSystem(attempt.reason);
    case EqFailure::inconsistent:
    case EqFailure::negative_mass:
    case EqFailure::empty_support:
    default: throw NoFeasibleEqualizer(attempt.reason);
  }
}

inline std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

inline EqAttempt equalize_f_on(const RatioMatrix& r, const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) {
  return equalize_system(r.row_labels(), rows, cols,
                         [&r](std::size_t p, std::size_t s) { return r.at(s, p); });
}

inline EqAttempt equalize_g_on(const RatioMatrix& r, const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) {
  return equalize_system(r.col_labels(), cols, rows,
                         [&r](std::size_t s, std::size_t p) { return r.at(s, p); });
}

}  // namespace detail

/// Derives f by forcing V_f(p) to a common constant across every input, under
/// nonnegativity and unit mass. With more inputs than strategies the system
/// is solved least-squares and accepted only when consistent.
inline EqualizerSolution full_support_equalizer_f(const RatioMatrix& r) {
  detail::require_finite(r);
  detail::EqAttempt attempt =
      detail::equalize_f_on(r, detail::iota_indices(r.rows()), detail::iota_indices(r.cols()));
  if (!attempt.solution) detail::throw_equalizer_failure(attempt);
  return *std::move(attempt.solution);
}

/// Derives g by forcing U_g(s) to a common constant across every strategy;
/// the row/column mirror of full_support_equalizer_f.
inline EqualizerSolution full_support_equalizer_g(const RatioMatrix& r) {
  detail::require_finite(r);
  detail::EqAttempt attempt =
      detail::equalize_g_on(r, detail::iota_indices(r.rows()), detail::iota_indices(r.cols()));
  if (!attempt.solution) detail::throw_equalizer_failure(attempt);
  return *std::move(attempt.solution);
}

namespace detail {

inline double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double acc = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    acc *= static_cast<double>(n - k + i);
    acc /= static_cast<double>(i);
  }
  return acc;
}

/// Advances a k-subset of {0..n-1} in lexicographic order; false when done.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] + (k - i) < n) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  return comb;
}

}  // namespace detail

/// Searches square support pairs in ascending cardinality (lexicographic
/// within) for a pair whose restricted equalizations are nonnegative, agree
/// on the constant within kEqualizerResidual, and certify as a saddle point
/// at tolerance 1e-6. The first accepted pair carries the game value.
/// max_support == 0 means min(|S|, |P|).
inline EqualizerPair support_search(const RatioMatrix& r, std::size_t max_support = 0) {
  detail::require_finite(r);
  const std::size_t m = r.rows(), n = r.cols();
  std::size_t max_k = std::min(m, n);
  if (max_support > 0) max_k = std::min(max_k, max_support);

  double total = 0.0;
  for (std::size_t k = 1; k <= max_k; ++k) total += detail::binomial(m, k) * detail::binomial(n, k);
  if (total > 1e6) {
    std::ostringstream os;
    os << "support enumeration would examine " << total << " candidate pairs (budget 1e6)";
    throw EnumerationRefused(os.str(), static_cast<std::uint64_t>(total));
  }

  constexpr double kSaddleTol = 1e-6;
  std::size_t examined = 0;
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<std::size_t> rows = detail::first_combination(k);
    do {
      std::vector<std::size_t> cols = detail::first_combination(k);
      do {
        ++examined;
        detail::EqAttempt fa = detail::equalize_f_on(r, rows, cols);
        if (!fa.solution) continue;
        detail::EqAttempt ga = detail::equalize_g_on(r, rows, cols);
        if (!ga.solution) continue;
        if (std::abs(fa.solution->constant - ga.solution->constant) > kEqualizerResidual) continue;
        Certificate saddle =
            certify_saddle(r, fa.solution->strategy, ga.solution->strategy, kSaddleTol);
        if (!saddle.passed) continue;

        std::ostringstream note;
        note << "accepted candidate " << examined << " of "
             << static_cast<std::uint64_t>(total) << " at cardinality " << k;
        fa.solution->details = fa.solution->details.empty()
                                   ? note.str()
                                   : fa.solution->details + "; " + note.str();
        ga.solution->details = ga.solution->details.empty()
                                   ? note.str()
                                   : ga.solution->details + "; " + note.str();
        return EqualizerPair{*std::move(fa.solution), *std::move(ga.solution)};
      } while (detail::next_combination(cols, n));
    } while (detail::next_combination(rows, m));
  }
  throw NoSupportFound("no support pair up to cardinality " + std::to_string(max_k) +
                       " yields a certified equalizer");
}

}  // namespace yaogame
