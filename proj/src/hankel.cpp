#include "modent/hankel.hpp"

#include <cmath>
#include <cstdio>

#include "modent/gh_symbols.hpp"
#include "modent/spectral.hpp"

namespace modent::hankel {

HankelMatrix::HankelMatrix(int size, std::string symbol_label, Eigen::MatrixXcd entries)
    : size_(size), label_(std::move(symbol_label)), mat_(std::move(entries)) {
  if (mat_.rows() != size_ || mat_.cols() != size_)
    throw input_error("HankelMatrix: entries must be size x size");
}

const Eigen::VectorXd& HankelMatrix::singular_values() const {
  if (!svals_) svals_ = fourier::singular_values(mat_);
  return *svals_;
}

HankelMatrix build_hankel(const Symbol& f, int size) {
  if (size <= 0) throw input_error("build_hankel: size must be positive");
  f.require_band(2 * size - 1);
  Eigen::MatrixXcd m(size, size);
  // Constant along anti-diagonals: fill one value per k + m.
  for (int s = 0; s <= 2 * (size - 1); ++s) {
    const fourier::Complex v = f.coeff(s + 1);
    for (int k = std::max(0, s - size + 1); k <= std::min(size - 1, s); ++k) m(k, s - k) = v;
  }
  return HankelMatrix(size, f.label(), std::move(m));
}

XiNormReport xi_column_norms(const Symbol& f, int n_lo, int n_hi) {
  if (n_lo < 0 || n_hi < n_lo) throw input_error("xi_column_norms: bad range");
  const int top = f.support_bound() ? *f.support_bound() : f.band();
  XiNormReport rep;
  rep.n_lo = n_lo;
  // Running tail sums from the top of the band down.
  std::vector<double> tail(size_t(top) + 2, 0.0);
  for (int n = top; n >= 0; --n) tail[size_t(n)] = tail[size_t(n) + 1] + std::norm(f.coeff(n));
  for (int n = n_lo; n <= n_hi; ++n)
    rep.norms.push_back(n <= top ? std::sqrt(tail[size_t(n)]) : 0.0);
  // Fit only over n >= 1 (log n undefined at 0).
  const int fit_lo = std::max(1, n_lo);
  const std::vector<double> fit_values(rep.norms.begin() + (fit_lo - n_lo), rep.norms.end());
  rep.fitted_exponent = mobius::decay_exponent_fit(fit_values, fit_lo);
  return rep;
}

StabilityReport schatten_stability(const Symbol& f, double q, const std::vector<int>& sizes) {
  if (!(q > 0.0) || q > 1.0) throw input_error("schatten_stability: q must lie in (0, 1]");
  if (sizes.size() < 2) throw input_error("schatten_stability: need at least two sizes");
  for (size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw input_error("schatten_stability: sizes must ascend");

  StabilityReport rep;
  rep.q = q;
  double prev = 0.0;
  for (size_t i = 0; i < sizes.size(); ++i) {
    const HankelMatrix h = build_hankel(f, sizes[i]);
    const Eigen::VectorXd& s = h.singular_values();
    StabilityRow row;
    row.size = sizes[i];
    row.q_sum = 0.0;
    // Rounding-level singular values are excluded: q < 1 powers would blow
    // pure eps noise up to visible mass (eps^0.5 ~ 1e-8 per value).
    const double floor = s.size() > 0 ? 1e-14 * s(0) : 0.0;
    for (int k = 0; k < s.size(); ++k)
      if (s(k) > floor) row.q_sum += std::pow(s(k), q);
    row.increment_pct = (i == 0 || prev == 0.0)
                            ? 0.0
                            : 100.0 * std::abs(row.q_sum - prev) / prev;
    prev = row.q_sum;
    rep.rows.push_back(row);
  }
  rep.stable = rep.rows.back().increment_pct < 1.0;
  return rep;
}

std::string StabilityReport::to_csv() const {
  std::string out = "M,q,sum_sq,increment_pct,verdict\n";
  char line[128];
  for (const auto& row : rows) {
    std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%.17g,%s\n", row.size, q, row.q_sum,
                  row.increment_pct, stable ? "stable" : "unsettled");
    out += line;
  }
  return out;
}

}  // namespace modent::hankel
