#pragma once

#include <utility>
#include <vector>

#include "modent/p12.hpp"
#include "modent/real_linear.hpp"

namespace modent::subspace {

using fourier::RealLinearOperator;

enum class Convention { Complex, Real };

/// Angle operator sigma = 4 [P12, P] (1 - P12) [P, P12], symmetrized.
/// Positive semidefinite up to the truncation noise floor; coincides with
/// the product of the projection, its symplectic complement (for the Hardy
/// complex structure) and the projection again.
CircleOperator build_sigma(const CanonicalProjectionBundle& bundle);

/// Same operator assembled through the complex structure route
/// P12 (1 - X P12 X) P12 with X = 2P - 1; agrees with build_sigma at the
/// idempotency-defect scale (cross-check).
CircleOperator build_sigma_direct(const CanonicalProjectionBundle& bundle);

/// Eigenvalues of sigma clipped into [0, 1]; values below -1e-8 or above
/// 1 + 1e-8 raise diagnostic_error. Descending.
std::vector<double> sigma_spectrum(const CircleOperator& sigma);

/// -sum mu log mu (0 log 0 = 0); doubled under the Real convention since the
/// realified spectrum carries every eigenvalue twice. Entries must lie in
/// [0, 1] up to a 1e-8 clip.
double subspace_entropy(const std::vector<double>& mu, Convention convention);

/// Inverse of mu = 4 lambda / (1 + lambda)^2 on (0, 1]; cancellation-free:
/// lambda = mu / ((2 - mu) + 2 sqrt(1 - mu)).
double modular_from_angle(double mu);

struct LambdaRecovery {
  std::vector<double> lambdas;  // in (0, 1], descending
  int dropped = 0;              // mu below the floor
};

/// One lambda in (0,1] per angle eigenvalue; eigenvalues below `floor` are
/// dropped with a count.
LambdaRecovery lambda_list_from_mu(const std::vector<double>& mu, double floor = 1e-12);

/// Normalized entropy of the antisymmetric quantisation over modes lambda_k:
/// sum of binary entropies of p_k = lambda_k / (1 + lambda_k).
/// Rejects lambda >= 1.
double fermi_entropy_normalized(const std::vector<double>& lambdas);

struct BoseEntropyResult {
  double value = 0.0;
  int excluded = 0;  // divergent modes with lambda = 1 within tolerance
};

/// Normalized entropy of the symmetric quantisation:
/// sum over modes of (1 + n) log(1 + n) - n log n with n = lambda/(1-lambda).
/// Modes with lambda = 1 (tolerance 1e-12) are excluded and counted;
/// lambda > 1 is an input error.
BoseEntropyResult bose_entropy_normalized(const std::vector<double>& lambdas);

/// (prod (1 - lambda_k)^{-1}, prod (1 + lambda_k)): the Bose and Fermi
/// quantisation traces; finiteness of either is the split diagnostic.
std::pair<double, double> trace_identities(const std::vector<double>& lambdas);

/// (1/6) log(1 / cos(phi/2)) for phi in (0, pi).
double entropy_lower_bound(double phi);

/// Conjugate-linear involution mode_n -> mode_{-n-1} (with coefficient
/// conjugation), realified on the largest window closed under the map:
/// modes -N..N-1 of a cutoff-N grid.
RealLinearOperator build_q(int cutoff);

/// |[Q, P12]|_F / sqrt(dim) on the closed window.
double q_commutation_defect(const CanonicalProjectionBundle& bundle);

/// Entropies of sigma restricted to the +1 / -1 eigenspaces of Q; they agree
/// and sum to the real-convention subspace entropy of the window section.
std::pair<double, double> eigenspace_entropy_split(const CircleOperator& sigma, int cutoff);

}  // namespace modent::subspace
