#pragma once

#include <Eigen/Dense>
#include <vector>

#include "modent/errors.hpp"

namespace modent::fock {

/// Value plus a rigorous truncation-tail bound (0 when exact).
struct TraceResult {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Eigenvalues of a Hermitian matrix expected to satisfy 0 <= A < 1.
/// Small negative rounding (> -1e-12) is clipped.
std::vector<double> positive_spectrum(const Eigen::MatrixXcd& a);

/// Trace of the symmetric (Bose) second quantisation, per-mode geometric
/// series truncated at occupation n_max: prod_k sum_{n<=n_max} a_k^n.
/// Exact value is det(1 - A)^{-1}. Requires every a_k <= 1 - 1e-6.
TraceResult gamma_trace(const std::vector<double>& eigs, int n_max);

/// Trace of the antisymmetric (Fermi) second quantisation: prod_k (1 + a_k),
/// exactly det(1 + A).
double lambda_trace(const std::vector<double>& eigs);

/// Unnormalized second-quantisation entropies -Tr(rho log rho):
///   Bose:  -sum_k a_k/(1-a_k) log a_k * prod_j (1-a_j)^{-1}
///   Fermi: -sum_k a_k/(1+a_k) log a_k * prod_j (1+a_j)
double gamma_entropy(const std::vector<double>& eigs);
double lambda_entropy(const std::vector<double>& eigs);

/// Brute-force oracles over the explicit Fock spectra. Fermi enumerates all
/// 2^d occupation subsets (d <= 20); Bose enumerates occupation tuples up to
/// n_max per mode (d <= 4).
double fermi_entropy_bruteforce(const std::vector<double>& eigs);
double bose_entropy_bruteforce(const std::vector<double>& eigs, int n_max);
double fermi_trace_bruteforce(const std::vector<double>& eigs);
double bose_trace_bruteforce(const std::vector<double>& eigs, int n_max);

/// S(rho / t) = S(rho)/t + log t for t = Tr(rho).
double normalized_entropy(double entropy_unnormalized, double trace);

/// -sum x log x with 0 log 0 = 0.
double spectrum_entropy(const std::vector<double>& probabilities);

struct ProbeRow {
  int count = 0;
  double s_one_particle = 0.0;
  double s_bose = 0.0;
  double s_fermi = 0.0;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  double last_increment_one_particle = 0.0;
  double last_increment_bose = 0.0;
  double last_increment_fermi = 0.0;
  double ratio_bose_over_one_particle = 0.0;
  double ratio_fermi_over_one_particle = 0.0;
};

/// Tabulates the one-particle, Bose and Fermi entropies along growing
/// truncations of a modular eigenvalue sequence; finite-scale illustration
/// that the three diverge or converge together.
ProbeReport finiteness_equivalence_probe(const std::vector<double>& lambdas);

struct TwoDimReport {
  double lambda = 0.0;
  double bose_trace = 0.0;           // 1/(1-lambda)
  double fermi_trace = 0.0;          // 1 + lambda
  std::vector<double> bose_spectrum_prefix;
  std::vector<double> fermi_spectrum;
  double bose_entropy_normalized = 0.0;  // brute-force, normalized
  double fermi_entropy_normalized = 0.0;
  double modular_identification_dev = 0.0;  // vs the d = 2 modular model
};

/// Cross-checks the d = 2 model: Bose spectrum {lambda^n} with trace
/// 1/(1-lambda), Fermi spectrum {1, lambda} with trace 1 + lambda, and the
/// identification with the modular spectrum of the model subspace.
TwoDimReport two_dim_fock_check(double lambda);

}  // namespace modent::fock
