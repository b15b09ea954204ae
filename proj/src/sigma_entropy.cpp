#include "modent/sigma_entropy.hpp"

#include <cmath>
#include <numbers>

#include "modent/spectral.hpp"

namespace modent::subspace {

namespace {
double eta(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

// P is diagonal 0/1: multiply columns / rows without a full matmul.
Eigen::MatrixXcd commutator_with_hardy(const Eigen::MatrixXcd& a, const CircleOperator& hardy) {
  const int d = int(a.rows());
  Eigen::MatrixXcd out(d, d);
  for (int col = 0; col < d; ++col) {
    const double pc = hardy.entries(col, col).real();
    for (int row = 0; row < d; ++row) {
      const double pr = hardy.entries(row, row).real();
      out(row, col) = a(row, col) * (pc - pr);  // (A P - P A)
    }
  }
  return out;
}
}  // namespace

CircleOperator build_sigma(const CanonicalProjectionBundle& bundle) {
  const Eigen::MatrixXcd& p12 = bundle.p12.entries;
  const int d = bundle.grid.dim();
  const Eigen::MatrixXcd c = commutator_with_hardy(p12, bundle.hardy);  // [P12, P]
  // 4 [P12, P] (1 - P12) [P, P12]; the commutator is anti-Hermitian up to
  // the section's Hermiticity defect, so this is PSD up to the noise floor.
  Eigen::MatrixXcd sigma =
      -4.0 * (c * ((Eigen::MatrixXcd::Identity(d, d) - p12) * c));
  sigma = 0.5 * (sigma + sigma.adjoint()).eval();
  CircleOperator op(bundle.grid, std::move(sigma));
  op.hermitian = true;
  return op;
}

CircleOperator build_sigma_direct(const CanonicalProjectionBundle& bundle) {
  const Eigen::MatrixXcd& p12 = bundle.p12.entries;
  const int d = bundle.grid.dim();
  Eigen::MatrixXcd x = -Eigen::MatrixXcd::Identity(d, d);
  for (int n = 0; n <= bundle.grid.cutoff; ++n) {
    const int idx = bundle.grid.index_of(n);
    x(idx, idx) = 1.0;  // X = 2P - 1
  }
  Eigen::MatrixXcd sigma = p12 * (Eigen::MatrixXcd::Identity(d, d) - x * p12 * x) * p12;
  sigma = 0.5 * (sigma + sigma.adjoint()).eval();
  CircleOperator op(bundle.grid, std::move(sigma));
  op.hermitian = true;
  return op;
}

std::vector<double> sigma_spectrum(const CircleOperator& sigma) {
  const Eigen::VectorXd eigs = fourier::hermitian_eigenvalues(sigma, 1e-10);
  return fourier::clip_nonnegative(eigs, -1e-8, 1e-8);
}

double subspace_entropy(const std::vector<double>& mu, Convention convention) {
  double s = 0.0;
  for (double m : mu) {
    if (m < -1e-8 || m > 1.0 + 1e-8)
      throw input_error("subspace_entropy: entry " + std::to_string(m) + " outside [0, 1]");
    s += eta(std::clamp(m, 0.0, 1.0));
  }
  return convention == Convention::Real ? 2.0 * s : s;
}

double modular_from_angle(double mu) {
  if (!(mu > 0.0) || mu > 1.0 + 1e-12)
    throw input_error("modular_from_angle: mu must lie in (0, 1]");
  mu = std::min(mu, 1.0);
  return mu / ((2.0 - mu) + 2.0 * std::sqrt(1.0 - mu));
}

LambdaRecovery lambda_list_from_mu(const std::vector<double>& mu, double floor) {
  LambdaRecovery rec;
  for (double m : mu) {
    if (m < floor) {
      ++rec.dropped;
      continue;
    }
    rec.lambdas.push_back(modular_from_angle(std::min(m, 1.0)));
  }
  std::sort(rec.lambdas.begin(), rec.lambdas.end(), std::greater<double>());
  return rec;
}

double fermi_entropy_normalized(const std::vector<double>& lambdas) {
  double s = 0.0;
  for (double l : lambdas) {
    if (!(l > 0.0) || l >= 1.0)
      throw input_error("fermi_entropy_normalized: lambda must lie in (0, 1)");
    const double p = l / (1.0 + l);
    s += eta(p) + eta(1.0 - p);
  }
  return s;
}

BoseEntropyResult bose_entropy_normalized(const std::vector<double>& lambdas) {
  BoseEntropyResult res;
  for (double l : lambdas) {
    if (!(l > 0.0) || l > 1.0)
      throw input_error("bose_entropy_normalized: lambda must lie in (0, 1]");
    if (l > 1.0 - 1e-12) {
      ++res.excluded;  // divergent occupation, dropped with a count
      continue;
    }
    const double n = l / (1.0 - l);
    res.value += (1.0 + n) * std::log1p(n) - n * std::log(n);
  }
  return res;
}

std::pair<double, double> trace_identities(const std::vector<double>& lambdas) {
  double bose = 1.0, fermi = 1.0;
  for (double l : lambdas) {
    if (l < 0.0 || l >= 1.0)
      throw input_error("trace_identities: lambda must lie in [0, 1)");
    bose *= 1.0 / (1.0 - l);
    fermi *= 1.0 + l;
  }
  return {bose, fermi};
}

double entropy_lower_bound(double phi) {
  if (!(phi > 0.0) || !(phi < std::numbers::pi))
    throw input_error("entropy_lower_bound: phi must lie in (0, pi)");
  return std::log(1.0 / std::cos(phi / 2.0)) / 6.0;
}

RealLinearOperator build_q(int cutoff) {
  if (cutoff <= 0) throw input_error("build_q: cutoff must be positive");
  const int w = 2 * cutoff;  // modes -N..N-1, window index = mode + N
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(w, w);
  for (int n = -cutoff; n <= cutoff - 1; ++n) a((-n - 1) + cutoff, n + cutoff) = 1.0;
  return fourier::realify_conjugate_linear(a);
}

namespace {
// Q is conjugate-linear; sandwiching a complex matrix gives entries
// conj(A_{-m-1, -n-1}) on the window.
Eigen::MatrixXcd q_sandwich(const Eigen::MatrixXcd& a_window, int cutoff) {
  const int w = 2 * cutoff;
  Eigen::MatrixXcd out(w, w);
  for (int m = 0; m < w; ++m)
    for (int n = 0; n < w; ++n)
      out(m, n) = std::conj(a_window(w - 1 - m, w - 1 - n));
  return out;
}
}  // namespace

double q_commutation_defect(const CanonicalProjectionBundle& bundle) {
  const int w = 2 * bundle.grid.cutoff;
  const Eigen::MatrixXcd p12w = bundle.p12.entries.topLeftCorner(w, w);
  const Eigen::MatrixXcd diff = q_sandwich(p12w, bundle.grid.cutoff) - p12w;
  return fourier::realify_matrix(diff).norm() / std::sqrt(double(2 * w));
}

std::pair<double, double> eigenspace_entropy_split(const CircleOperator& sigma, int cutoff) {
  const int w = 2 * cutoff;
  if (sigma.dim() < w) throw input_error("eigenspace_entropy_split: grid too small");
  const Eigen::MatrixXd sig_real =
      fourier::realify_matrix(sigma.entries.topLeftCorner(w, w));

  // Orthonormal bases of the +-1 eigenspaces of Q: for each mode pair
  // (n, -n-1), n >= 0, the vectors (z^n +- z^{-n-1})/sqrt2 and
  // (i z^n -+ i z^{-n-1})/sqrt2.
  Eigen::MatrixXd b_plus = Eigen::MatrixXd::Zero(2 * w, w);
  Eigen::MatrixXd b_minus = Eigen::MatrixXd::Zero(2 * w, w);
  const double r = 1.0 / std::sqrt(2.0);
  int col = 0;
  for (int n = 0; n < cutoff; ++n, col += 2) {
    const int in = n + cutoff, im = (-n - 1) + cutoff;  // window indices
    // real(+): z^n + z^{-n-1}
    b_plus(2 * in, col) = r;
    b_plus(2 * im, col) = r;
    // imag(+): i z^n - i z^{-n-1}
    b_plus(2 * in + 1, col + 1) = r;
    b_plus(2 * im + 1, col + 1) = -r;
    // real(-): z^n - z^{-n-1}
    b_minus(2 * in, col) = r;
    b_minus(2 * im, col) = -r;
    // imag(-): i z^n + i z^{-n-1}
    b_minus(2 * in + 1, col + 1) = r;
    b_minus(2 * im + 1, col + 1) = r;
  }

  auto block_entropy = [&](const Eigen::MatrixXd& b) {
    const Eigen::MatrixXd block = b.transpose() * sig_real * b;
    const Eigen::VectorXd eigs =
        fourier::symmetric_eigenvalues(0.5 * (block + block.transpose()));
    double s = 0.0;
    for (int i = 0; i < eigs.size(); ++i) {
      double v = eigs(i);
      if (v < -1e-8 || v > 1.0 + 1e-8)
        throw diagnostic_error("eigenspace_entropy_split: block eigenvalue outside [0, 1]");
      s += eta(std::clamp(v, 0.0, 1.0));
    }
    return s;
  };
  return {block_entropy(b_plus), block_entropy(b_minus)};
}

}  // namespace modent::subspace
