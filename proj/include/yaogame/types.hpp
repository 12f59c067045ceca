#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "yaogame/errors.hpp"

namespace yaogame {

/// Weights below this threshold do not count as support.
inline constexpr double kSupportThreshold = 1e-9;

/// Tolerated deviation of a distribution's total mass from 1.
inline constexpr double kMassTolerance = 1e-9;

/// Slack allowed below 1 for cost-derived ratio entries.
inline constexpr double kRatioSlack = 1e-12;

using Labels = std::vector<std::string>;

/// Dense row-major matrix, just enough surface for the game machinery.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty()) {
      throw DimensionMismatch("matrix must have at least one row and one column");
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw DimensionMismatch("ragged rows: row " + std::to_string(i) + " has " +
                                std::to_string(rows[i].size()) + " entries, expected " +
                                std::to_string(m.cols_));
      }
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
  }

  double min_entry() const { return *std::min_element(data_.begin(), data_.end()); }
  double max_entry() const { return *std::max_element(data_.begin(), data_.end()); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

inline Labels default_labels(char prefix, std::size_t n) {
  Labels out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Online cost table and offline cost vector over finite strategy/input grids.
/// Rows are deterministic algorithms, columns are inputs.
class CostModel {
 public:
  CostModel(Labels row_labels, Labels col_labels, Matrix cost_on, std::vector<double> cost_off)
      : row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)),
        cost_on_(std::move(cost_on)),
        cost_off_(std::move(cost_off)) {
    if (cost_on_.rows() == 0 || cost_on_.cols() == 0) {
      throw DimensionMismatch("cost model must have at least one strategy and one input");
    }
    if (row_labels_.size() != cost_on_.rows() || col_labels_.size() != cost_on_.cols() ||
        cost_off_.size() != cost_on_.cols()) {
      throw DimensionMismatch("cost model dimensions inconsistent: cost_on is " +
                              std::to_string(cost_on_.rows()) + "x" +
                              std::to_string(cost_on_.cols()) + ", cost_off has " +
                              std::to_string(cost_off_.size()) + " entries");
    }
    if (!cost_on_.all_finite()) throw InvalidModel("cost_on contains a non-finite entry");
    if (cost_on_.min_entry() < 0.0) throw InvalidModel("cost_on contains a negative entry");
    for (std::size_t p = 0; p < cost_off_.size(); ++p) {
      if (!std::isfinite(cost_off_[p])) throw InvalidModel("cost_off contains a non-finite entry");
      if (cost_off_[p] <= 0.0) {
        throw ZeroOfflineCost("cost_off must be strictly positive; entry " + col_labels_[p] +
                              " is " + std::to_string(cost_off_[p]));
      }
    }
  }

  const Labels& row_labels() const { return row_labels_; }
  const Labels& col_labels() const { return col_labels_; }
  const Matrix& cost_on() const { return cost_on_; }
  const std::vector<double>& cost_off() const { return cost_off_; }

 private:
  Labels row_labels_;
  Labels col_labels_;
  Matrix cost_on_;
  std::vector<double> cost_off_;
};

/// The ratio table R(s,p) with row/column labels. Entries are expected to be
/// finite and, for cost-derived matrices without the raw-game flag, >= 1;
/// validate() reports violations instead of construction rejecting them.
class RatioMatrix {
 public:
  RatioMatrix(Labels row_labels, Labels col_labels, Matrix r)
      : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), r_(std::move(r)) {
    if (r_.rows() == 0 || r_.cols() == 0) {
      throw DimensionMismatch("ratio matrix must have at least one row and one column");
    }
    if (row_labels_.size() != r_.rows() || col_labels_.size() != r_.cols()) {
      throw DimensionMismatch("label counts do not match ratio matrix dimensions");
    }
  }

  static RatioMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m = Matrix::from_rows(rows);
    return RatioMatrix(default_labels('s', m.rows()), default_labels('p', m.cols()), std::move(m));
  }

  const Labels& row_labels() const { return row_labels_; }
  const Labels& col_labels() const { return col_labels_; }
  const Matrix& r() const { return r_; }

  std::size_t rows() const { return r_.rows(); }
  std::size_t cols() const { return r_.cols(); }
  double at(std::size_t s, std::size_t p) const { return r_(s, p); }

  std::size_t row_index(const std::string& label) const {
    return index_of(row_labels_, label, "strategy");
  }
  std::size_t col_index(const std::string& label) const {
    return index_of(col_labels_, label, "input");
  }

 private:
  static std::size_t index_of(const Labels& labels, const std::string& label, const char* kind) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      throw LabelMismatch(std::string("unknown ") + kind + " label: " + label);
    }
    return static_cast<std::size_t>(it - labels.begin());
  }

  Labels row_labels_;
  Labels col_labels_;
  Matrix r_;
};

/// A probability distribution over a finite label set: an f(s) or a g(p).
class MixedStrategy {
 public:
  MixedStrategy(Labels labels, std::vector<double> weights)
      : labels_(std::move(labels)), weights_(std::move(weights)) {
    if (labels_.empty() || labels_.size() != weights_.size()) {
      throw InvalidStrategy("strategy needs one weight per label and at least one label");
    }
    double sum = 0.0;
    for (double w : weights_) {
      if (!std::isfinite(w) || w < 0.0) {
        throw InvalidStrategy("strategy weights must be finite and nonnegative");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > kMassTolerance) {
      throw InvalidStrategy("strategy weights sum to " + std::to_string(sum) + ", expected 1");
    }
    if (support().empty()) throw InvalidStrategy("strategy has empty support");
  }

  static MixedStrategy uniform(Labels labels) {
    std::vector<double> w(labels.size(), 1.0 / static_cast<double>(labels.size()));
    return MixedStrategy(std::move(labels), std::move(w));
  }

  static MixedStrategy point(Labels labels, const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw LabelMismatch("point mass on unknown label: " + label);
    std::vector<double> w(labels.size(), 0.0);
    w[static_cast<std::size_t>(it - labels.begin())] = 1.0;
    return MixedStrategy(std::move(labels), std::move(w));
  }

  /// Normalizes arbitrary nonnegative mass to a distribution.
  static MixedStrategy normalized(Labels labels, std::vector<double> mass) {
    double sum = 0.0;
    for (double w : mass) {
      if (!std::isfinite(w) || w < 0.0) {
        throw InvalidStrategy("mass entries must be finite and nonnegative");
      }
      sum += w;
    }
    if (sum <= 0.0) throw InvalidStrategy("total mass must be positive");
    for (double& w : mass) w /= sum;
    return MixedStrategy(std::move(labels), std::move(mass));
  }

  const Labels& labels() const { return labels_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }

  /// Indices carrying more than kSupportThreshold probability.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] > kSupportThreshold) idx.push_back(i);
    }
    return idx;
  }

  Labels support_labels() const {
    Labels out;
    for (std::size_t i : support()) out.push_back(labels_[i]);
    return out;
  }

 private:
  Labels labels_;
  std::vector<double> weights_;
};

}  // namespace yaogame
