#include "modent/modular.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "modent/errors.hpp"
#include "modent/spectral.hpp"

namespace modent::modular {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using fourier::complexify_matrix;
using fourier::multiplication_by_i_real;
using fourier::realify_matrix;

StandardSubspace::StandardSubspace(int d, MatrixXd b) : ambient_dim(d), basis(std::move(b)) {
  if (basis.rows() != 2 * d || basis.cols() != d)
    throw input_error("StandardSubspace: basis must be 2d x d");
  if (standardness_margin() < 1e-12)
    throw input_error("StandardSubspace: basis with i*basis fails to span (not standard)");
}

double StandardSubspace::standardness_margin() const {
  const MatrixXd j = multiplication_by_i_real(ambient_dim);
  MatrixXd full(2 * ambient_dim, 2 * ambient_dim);
  full << basis, j * basis;
  Eigen::JacobiSVD<MatrixXd> svd(full);
  return svd.singularValues().minCoeff();
}

StandardSubspace StandardSubspace::from_complex_columns(const MatrixXcd& cols) {
  const int d = int(cols.rows());
  if (cols.cols() != d) throw input_error("from_complex_columns: expected d columns");
  MatrixXd b(2 * d, d);
  for (int c = 0; c < d; ++c) b.col(c) = fourier::realify_vector(cols.col(c));
  return StandardSubspace(d, std::move(b));
}

StandardSubspace StandardSubspace::real_points(int d) {
  MatrixXd b = MatrixXd::Zero(2 * d, d);
  for (int c = 0; c < d; ++c) b(2 * c, c) = 1.0;
  return StandardSubspace(d, std::move(b));
}

StandardSubspace StandardSubspace::random_standard(int d, std::mt19937_64& rng,
                                                   double max_condition) {
  // Random invertible real-linear map with controlled condition number,
  // applied to the real points. Generic images are standard; the margin
  // check below retries the measure-zero failures.
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double smax = std::sqrt(max_condition), smin = 1.0 / smax;
  for (int attempt = 0; attempt < 64; ++attempt) {
    MatrixXd g(2 * d, 2 * d), g2(2 * d, 2 * d);
    for (int i = 0; i < 2 * d; ++i)
      for (int k = 0; k < 2 * d; ++k) {
        g(i, k) = gauss(rng);
        g2(i, k) = gauss(rng);
      }
    const MatrixXd q1 = Eigen::HouseholderQR<MatrixXd>(g).householderQ();
    const MatrixXd q2 = Eigen::HouseholderQR<MatrixXd>(g2).householderQ();
    VectorXd s(2 * d);
    std::uniform_real_distribution<double> logs(std::log(smin), std::log(smax));
    for (int i = 0; i < 2 * d; ++i) s(i) = std::exp(logs(rng));
    const MatrixXd t = q1 * s.asDiagonal() * q2.transpose();

    MatrixXd b = t * real_points(d).basis;
    // Keep tolerances meaningful: demand a healthy standardness margin.
    MatrixXd full(2 * d, 2 * d);
    full << b, multiplication_by_i_real(d) * b;
    Eigen::JacobiSVD<MatrixXd> svd(full);
    if (svd.singularValues().minCoeff() > 1e-4) return StandardSubspace(d, std::move(b));
  }
  throw diagnostic_error("random_standard: could not draw a well-conditioned subspace");
}

StandardSubspace two_dim_model(double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0))
    throw input_error("two_dim_model: lambda must lie in (0, 1)");
  // F = {xi ⊕ c conj(xi)} has modular spectrum {c^2, c^-2}; the model with
  // spectrum {lambda, 1/lambda} therefore needs c = sqrt(lambda).
  const double c = std::sqrt(lambda);
  MatrixXcd cols(2, 2);
  cols.col(0) << Complex{1.0, 0.0}, Complex{c, 0.0};
  cols.col(1) << Complex{0.0, 1.0}, Complex{0.0, -c};
  return StandardSubspace::from_complex_columns(cols);
}

MatrixXd ModularData::delta_power_real(double exponent) const {
  const int d = ambient_dim;
  MatrixXcd p = MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k)
    p += std::pow(spectrum(k), exponent) * eigenvectors.col(k) * eigenvectors.col(k).adjoint();
  return realify_matrix(p);
}

ModularData tomita_operators(const StandardSubspace& h) {
  const int d = h.ambient_dim;
  const MatrixXd j_i = multiplication_by_i_real(d);

  MatrixXd m(2 * d, 2 * d);
  m << h.basis, j_i * h.basis;
  Eigen::FullPivLU<MatrixXd> lu(m);
  if (!lu.isInvertible())
    throw input_error("tomita_operators: basis is rank deficient, subspace not standard");

  // S is +1 on H and -1 on iH (S(h + ik) = h - ik).
  MatrixXd sign = MatrixXd::Identity(2 * d, 2 * d);
  sign.block(d, d, d, d) *= -1.0;
  const MatrixXd s_real = m * sign * lu.inverse();

  ModularData md;
  md.ambient_dim = d;
  md.s_real = s_real;
  md.delta_real = s_real.transpose() * s_real;
  md.delta = complexify_matrix(md.delta_real, 1e-8);

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (md.delta + md.delta.adjoint()));
  if (es.info() != Eigen::Success) throw diagnostic_error("tomita_operators: eigensolve failed");
  // Descending order.
  VectorXd ev = es.eigenvalues();
  MatrixXcd vec = es.eigenvectors();
  md.spectrum = ev.reverse();
  md.eigenvectors = vec.rowwise().reverse();

  md.j_real = s_real * md.delta_power_real(-0.5);
  md.factorial = true;
  for (int k = 0; k < d; ++k)
    if (std::abs(md.spectrum(k) - 1.0) < 1e-10) md.factorial = false;
  return md;
}

RealLinearOperator projection_via_modular(const ModularData& md) {
  const int d = md.ambient_dim;
  const MatrixXcd inv = (md.delta + MatrixXcd::Identity(d, d)).inverse();
  const MatrixXd inv_real = realify_matrix(inv);
  const MatrixXd p = inv_real + md.j_real * md.delta_power_real(0.5) * inv_real;
  return RealLinearOperator(d, p, false);
}

MatrixXd gram_projection(const MatrixXd& basis) {
  Eigen::HouseholderQR<MatrixXd> qr(basis);
  const MatrixXd q =
      MatrixXd(qr.householderQ()).leftCols(std::min(basis.rows(), basis.cols()));
  return q * q.transpose();
}

MatrixXd symplectic_complement_basis(const MatrixXd& basis) {
  const int n2 = int(basis.rows());
  const MatrixXd j = multiplication_by_i_real(n2 / 2);
  const MatrixXd ib = j * basis;
  // Kernel of (iB)^T: the trailing columns of Q in a full QR of iB.
  Eigen::HouseholderQR<MatrixXd> qr(ib);
  const MatrixXd q = qr.householderQ();
  return q.rightCols(n2 - int(basis.cols()));
}

double AngleReport::max_dev() const {
  return std::max({dev_angle_identity, dev_eigenvalue_map, dev_commutator_norm,
                   dev_complement_identity, dev_restricted_spectrum});
}

std::string AngleReport::to_json() const {
  nlohmann::json j;
  j["dev_angle_identity"] = dev_angle_identity;
  j["dev_eigenvalue_map"] = dev_eigenvalue_map;
  j["dev_commutator_norm"] = dev_commutator_norm;
  j["dev_complement_identity"] = dev_complement_identity;
  j["dev_restricted_spectrum"] = dev_restricted_spectrum;
  j["max_dev"] = max_dev();
  return j.dump(2);
}

double angle_from_modular(double lambda) {
  return 4.0 * lambda / ((1.0 + lambda) * (1.0 + lambda));
}

AngleReport angle_operator_checks(const ModularData& md, const RealLinearOperator& p_h,
                                  const StandardSubspace& h) {
  if (!md.factorial)
    throw input_error("angle_operator_checks: subspace is not factorial (1 in spectrum)");
  const int d = md.ambient_dim;
  const MatrixXd j_i = multiplication_by_i_real(d);
  const MatrixXd& p = p_h.entries;

  // P_H' two ways: directly as the projection onto (iH)^perp, and through
  // the complex structure, P_H' = 1 + i P_H i.
  const MatrixXd p_prime = gram_projection(symplectic_complement_basis(h.basis));
  const MatrixXd p_prime_formula = MatrixXd::Identity(2 * d, 2 * d) + j_i * p * j_i;

  AngleReport rep;
  rep.dev_complement_identity = (p_prime - p_prime_formula).cwiseAbs().maxCoeff();

  // A_H = 4 Delta (1 + Delta)^{-2}, realified.
  MatrixXcd a_c = MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k)
    a_c += angle_from_modular(md.spectrum(k)) * md.eigenvectors.col(k) *
           md.eigenvectors.col(k).adjoint();
  const MatrixXd a_real = realify_matrix(a_c);

  Eigen::HouseholderQR<MatrixXd> qr(h.basis);
  const MatrixXd q = MatrixXd(qr.householderQ()).leftCols(d);

  rep.dev_angle_identity = ((p * p_prime - a_real) * q).cwiseAbs().maxCoeff();

  // Eigenvalue map: spec(A_H) against the image of the Delta spectrum.
  VectorXd a_eigs = fourier::hermitian_eigenvalues(a_c);
  std::vector<double> mapped(d);
  for (int k = 0; k < d; ++k) mapped[size_t(k)] = angle_from_modular(md.spectrum(k));
  std::sort(mapped.begin(), mapped.end(), std::greater<double>());
  for (int k = 0; k < d; ++k)
    rep.dev_eigenvalue_map = std::max(rep.dev_eigenvalue_map,
                                      std::abs(a_eigs(k) - mapped[size_t(k)]));

  // |[P_H, i]|_F^2 = 2 Tr_C(A_H) in realified bookkeeping.
  const MatrixXd comm = p * j_i - j_i * p;
  rep.dev_commutator_norm =
      std::abs(comm.squaredNorm() - 2.0 * a_c.trace().real());

  // Spectrum of P_H P_H' P_H restricted to H against spec(A_H|_H).
  const MatrixXd ppp = p * p_prime * p;
  const MatrixXd restricted = q.transpose() * ppp * q;
  const VectorXd spec_restricted =
      fourier::symmetric_eigenvalues(0.5 * (restricted + restricted.transpose()));
  const MatrixXd a_restricted = q.transpose() * a_real * q;
  const VectorXd spec_a =
      fourier::symmetric_eigenvalues(0.5 * (a_restricted + a_restricted.transpose()));
  rep.dev_restricted_spectrum = (spec_restricted - spec_a).cwiseAbs().maxCoeff();
  return rep;
}

double containment_defect(const MatrixXd& inner, const MatrixXd& outer) {
  const MatrixXd p = gram_projection(outer);
  double worst = 0.0;
  for (int c = 0; c < inner.cols(); ++c) {
    const Eigen::VectorXd v = inner.col(c).normalized();
    worst = std::max(worst, (v - p * v).norm());
  }
  return worst;
}

MatrixXd intersection_basis(const MatrixXd& a, const MatrixXd& b, double tol) {
  // Eigenvalue-2 eigenspace of P_A + P_B spans the intersection.
  const MatrixXd m = gram_projection(a) + gram_projection(b);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  std::vector<int> keep;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 2.0 - tol) keep.push_back(i);
  MatrixXd out(a.rows(), keep.size());
  for (size_t k = 0; k < keep.size(); ++k) out.col(long(k)) = es.eigenvectors().col(keep[k]);
  return out;
}

CanonicalSplitResult canonical_intermediate(const MatrixXd& k_basis, const StandardSubspace& h) {
  const int d = h.ambient_dim;
  if (k_basis.rows() != 2 * d)
    throw input_error("canonical_intermediate: K basis does not match ambient dimension");
  if (containment_defect(k_basis, h.basis) > 1e-10)
    throw input_error("canonical_intermediate: K is not contained in H");

  // K = H degenerates: the relative piece is trivial and F is H itself.
  if (k_basis.cols() == h.basis.cols() && containment_defect(h.basis, k_basis) <= 1e-10) {
    CanonicalSplitResult res{h, 0.0, 0.0, 0.0, true};
    return res;
  }

  const MatrixXd k_prime = symplectic_complement_basis(k_basis);
  const MatrixXd rel = intersection_basis(k_prime, h.basis);
  if (rel.cols() != d)
    throw input_error("canonical_intermediate: K' ∩ H is not standard (dimension " +
                      std::to_string(rel.cols()) + " of " + std::to_string(d) + ")");
  StandardSubspace rel_sub(d, rel);  // throws if rank deficient
  const ModularData md = tomita_operators(rel_sub);

  MatrixXd f_raw(2 * d, 2 * k_basis.cols());
  f_raw << k_basis, md.j_real * k_basis;
  // Orthonormalize and trim numerically dependent directions.
  Eigen::ColPivHouseholderQR<MatrixXd> qr(f_raw);
  qr.setThreshold(1e-10);
  const int rank = int(qr.rank());
  const MatrixXd f_basis = MatrixXd(qr.householderQ()).leftCols(rank);
  if (rank != d)
    throw input_error("canonical_intermediate: K + JK has real dimension " +
                      std::to_string(rank) + ", expected " + std::to_string(d));

  CanonicalSplitResult res{StandardSubspace(d, f_basis), 0.0, 0.0, 0.0, false};
  res.dev_contains_k = containment_defect(k_basis, f_basis);
  res.dev_inside_h = containment_defect(f_basis, h.basis);

  const MatrixXd jh = md.j_real * h.basis;
  const MatrixXd h_cap_jh = intersection_basis(h.basis, jh);
  const MatrixXd p_f = gram_projection(f_basis);
  const MatrixXd p_cap = gram_projection(h_cap_jh);
  res.dev_characterization = (p_f - p_cap).cwiseAbs().maxCoeff();
  if (std::max({res.dev_contains_k, res.dev_inside_h, res.dev_characterization}) > 1e-8)
    throw diagnostic_error("canonical_intermediate: characterization F = H ∩ JH failed, dev " +
                           std::to_string(res.dev_characterization));
  return res;
}

}  // namespace modent::modular
