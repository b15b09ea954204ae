#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "modent/grid_symbol.hpp"

namespace modent::hankel {

using fourier::Symbol;

/// Finite section of the Hankel operator of a symbol:
/// entries H[k][m] = f_{k+m+1}, constant along anti-diagonals.
class HankelMatrix {
 public:
  HankelMatrix(int size, std::string symbol_label, Eigen::MatrixXcd entries);

  int size() const { return size_; }
  const std::string& symbol_label() const { return label_; }
  const Eigen::MatrixXcd& entries() const { return mat_; }
  /// Singular values, descending, computed on first use.
  const Eigen::VectorXd& singular_values() const;

 private:
  int size_;
  std::string label_;
  Eigen::MatrixXcd mat_;
  mutable std::optional<Eigen::VectorXd> svals_;
};

HankelMatrix build_hankel(const Symbol& f, int size);

struct XiNormReport {
  std::vector<double> norms;   // |xi_n| for n in [n_lo, n_hi]
  int n_lo = 0;
  double fitted_exponent = 0.0;
};

/// Column norms |xi_n| = (sum_{k>=0} |f_{k+n}|^2)^{1/2}, tails cut at the
/// symbol's resolved band, with the fitted log-log decay exponent.
XiNormReport xi_column_norms(const Symbol& f, int n_lo, int n_hi);

struct StabilityRow {
  int size = 0;
  double q_sum = 0.0;          // sum_i s_i^q for the size-M section
  double increment_pct = 0.0;  // relative change vs previous size, percent
};

struct StabilityReport {
  double q = 0.0;
  std::vector<StabilityRow> rows;
  bool stable = false;  // last increment below 1 %
  std::string to_csv() const;
};

/// Cauchy-in-M behaviour of sum s_i^q across section sizes; the numerical
/// proxy for membership in the q-th Schatten class. Divergence is reported,
/// never asserted.
StabilityReport schatten_stability(const Symbol& f, double q, const std::vector<int>& sizes);

}  // namespace modent::hankel
