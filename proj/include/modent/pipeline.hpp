#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modent/sigma_entropy.hpp"

namespace modent::subspace {

struct RunOptions {
  int cutoff = 256;
  int fft_samples = 1 << 16;
  Convention convention = Convention::Real;
  std::vector<double> q_values = {0.8};
  double lambda_floor = 1e-12;
  CoeffSource source = CoeffSource::Auto;
};

/// Everything the angle-spectrum pipeline produces for one configuration.
struct SpectralSummary {
  double phi = 0.0;
  std::optional<std::array<double, 4>> interval;  // when reduced from (I, I~)
  int cutoff = 0;
  int dim = 0;
  std::vector<double> mu;       // descending, clipped into [0, 1]
  std::vector<double> lambda;   // recovered modular eigenvalues in (0, 1]
  int mu_dropped = 0;           // below the lambda-recovery floor
  int bose_excluded = 0;        // lambda = 1 divergent modes
  double s_complex = 0.0;
  double s_real = 0.0;
  double s_fermi = 0.0;
  double s_bose = 0.0;
  double trace_bose = 0.0;
  double trace_fermi = 0.0;
  double defect_idempotent = 0.0;
  double defect_hermitian = 0.0;
  double lower_bound = 0.0;
  double p12_trace = 0.0;  // diagnostic: tracks dim * mean(g)
  std::map<double, double> mu_power_sums;  // q -> sum mu^q
  Convention convention = Convention::Real;

  /// Headline entropy under the configured convention.
  double headline_entropy() const {
    return convention == Convention::Real ? s_real : s_complex;
  }

  static std::string csv_header();
  std::string csv_row() const;
  /// Full JSON document; meta fields (version, config hash) are appended by
  /// the caller when emitting files.
  std::string to_json(const std::string& meta_version = {},
                      const std::string& meta_config_hash = {}) const;
};

/// Full chain: symbols -> P12 -> sigma -> spectrum -> modular eigenvalues ->
/// entropies.
SpectralSummary run_pipeline(double phi, const RunOptions& options);

/// General interval pair (I, I~) reduced to the symmetric angle first.
SpectralSummary run_pipeline_interval(double i_start, double i_end, double outer_start,
                                      double outer_end, const RunOptions& options);

/// sum_i s_i^q over the singular values of the off-diagonal compression
/// (1 - P) P12 P of the bundle (Schatten-tail witness).
double offdiagonal_qsum(const CanonicalProjectionBundle& bundle, double q);

}  // namespace modent::subspace
