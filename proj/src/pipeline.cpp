#include "modent/pipeline.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "modent/mobius.hpp"
#include "modent/spectral.hpp"
#include "modent/version.hpp"

namespace modent::subspace {

using nlohmann::json;

namespace {
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

std::string SpectralSummary::csv_header() {
  return "phi,N,mu_count,S_complex,S_real,S_fermi,S_bose,defect_idem,defect_herm,lower_bound";
}

std::string SpectralSummary::csv_row() const {
  std::string out;
  out += fmt(phi) + "," + std::to_string(cutoff) + "," + std::to_string(mu.size()) + ",";
  out += fmt(s_complex) + "," + fmt(s_real) + "," + fmt(s_fermi) + "," + fmt(s_bose) + ",";
  out += fmt(defect_idempotent) + "," + fmt(defect_hermitian) + "," + fmt(lower_bound);
  return out;
}

std::string SpectralSummary::to_json(const std::string& meta_version,
                                     const std::string& meta_config_hash) const {
  json j;
  j["phi"] = phi;
  if (interval) j["interval"] = *interval;
  j["cutoff"] = cutoff;
  j["dim"] = dim;
  j["mu_count"] = mu.size();
  j["mu"] = mu;
  j["lambda"] = lambda;
  j["mu_dropped"] = mu_dropped;
  j["bose_excluded"] = bose_excluded;
  j["S_complex"] = s_complex;
  j["S_real"] = s_real;
  j["S_fermi"] = s_fermi;
  j["S_bose"] = s_bose;
  j["trace_bose"] = trace_bose;
  j["trace_fermi"] = trace_fermi;
  j["defect_idem"] = defect_idempotent;
  j["defect_herm"] = defect_hermitian;
  j["p12_trace"] = p12_trace;
  j["lower_bound"] = lower_bound;
  j["convention"] = convention == Convention::Real ? "real" : "complex";
  json sums = json::object();
  for (const auto& [q, v] : mu_power_sums) sums[fmt(q)] = v;
  j["mu_power_sums"] = sums;
  if (!meta_version.empty() || !meta_config_hash.empty()) {
    j["meta"] = {{"version", meta_version}, {"config_hash", meta_config_hash}};
  }
  return j.dump(2);
}

SpectralSummary run_pipeline(double phi, const RunOptions& options) {
  const fourier::ModeGrid grid(options.cutoff);
  const CanonicalProjectionBundle bundle =
      build_p12(phi, grid, options.source, options.fft_samples);
  const CircleOperator sigma = build_sigma(bundle);

  SpectralSummary s;
  s.phi = phi;
  s.cutoff = options.cutoff;
  s.dim = grid.dim();
  s.convention = options.convention;
  s.defect_idempotent = bundle.defect_idempotent;
  s.defect_hermitian = bundle.defect_hermitian;
  s.p12_trace = bundle.trace_real;
  s.mu = sigma_spectrum(sigma);
  s.s_complex = subspace_entropy(s.mu, Convention::Complex);
  s.s_real = 2.0 * s.s_complex;

  const LambdaRecovery rec = lambda_list_from_mu(s.mu, options.lambda_floor);
  s.mu_dropped = rec.dropped;

  // Modes at lambda = 1 (angle eigenvalue 1) are divergent for the Bose
  // quantisation and borderline for the trace products; keep them out of the
  // closed-form sums with a count, as a diagnostic.
  std::vector<double> proper;
  for (double l : rec.lambdas) {
    if (l > 1.0 - 1e-12)
      ++s.bose_excluded;
    else
      proper.push_back(l);
  }
  s.lambda = rec.lambdas;
  s.s_fermi = fermi_entropy_normalized(proper);
  s.s_bose = bose_entropy_normalized(proper).value;
  std::tie(s.trace_bose, s.trace_fermi) = trace_identities(proper);
  s.lower_bound = entropy_lower_bound(phi);
  for (double q : options.q_values) {
    double acc = 0.0;
    for (double m : s.mu) acc += std::pow(m, q);
    s.mu_power_sums[q] = acc;
  }
  return s;
}

SpectralSummary run_pipeline_interval(double i_start, double i_end, double outer_start,
                                      double outer_end, const RunOptions& options) {
  const double phi = mobius::cross_ratio_to_phi(i_start, i_end, outer_start, outer_end);
  SpectralSummary s = run_pipeline(phi, options);
  s.interval = {{i_start, i_end, outer_start, outer_end}};
  return s;
}

double offdiagonal_qsum(const CanonicalProjectionBundle& bundle, double q) {
  const int d = bundle.grid.dim();
  const int neg = bundle.grid.cutoff;  // modes -N..-1 come first
  // (1 - P) picks rows of negative mode, P picks columns of mode >= 0.
  const Eigen::MatrixXcd block = bundle.p12.entries.block(0, neg, neg, d - neg);
  const Eigen::VectorXd s = fourier::singular_values(block);
  double acc = 0.0;
  for (int i = 0; i < s.size(); ++i) acc += std::pow(s(i), q);
  return acc;
}

}  // namespace modent::subspace
