#pragma once

#include <Eigen/Dense>
#include <random>
#include <string>
#include <vector>

#include "modent/real_linear.hpp"

namespace modent::modular {

using fourier::Complex;
using fourier::RealLinearOperator;

/// Closed real-linear subspace H of C^d with H ∩ iH = {0} and H + iH = C^d,
/// held as d realified basis columns (2d x d, interleaved Re/Im layout).
struct StandardSubspace {
  int ambient_dim = 0;          // d
  Eigen::MatrixXd basis;        // 2d x d, columns span H over R

  StandardSubspace(int d, Eigen::MatrixXd b);

  static StandardSubspace from_complex_columns(const Eigen::MatrixXcd& cols);
  /// The real points R^d inside C^d.
  static StandardSubspace real_points(int d);
  /// Image of R^d under a random bounded-condition real-linear map.
  static StandardSubspace random_standard(int d, std::mt19937_64& rng,
                                          double max_condition = 50.0);

  /// Smallest singular value of [B | iB]; positive iff standard.
  double standardness_margin() const;
};

/// The d = 2 model subspace {xi ⊕ lambda conj(xi)} whose modular operator
/// has spectrum {lambda, 1/lambda}.
StandardSubspace two_dim_model(double lambda);

/// Modular data of a standard subspace: Delta (complex-linear, positive),
/// J (conjugate-linear involution, stored realified), S = J Delta^{1/2}.
struct ModularData {
  int ambient_dim = 0;
  Eigen::MatrixXcd delta;        // complex d x d, Hermitian positive definite
  Eigen::MatrixXd delta_real;    // realified
  Eigen::MatrixXd j_real;        // realified conjugate-linear involution
  Eigen::MatrixXd s_real;        // realified Tomita operator
  Eigen::VectorXd spectrum;      // eigenvalues of delta, descending
  Eigen::MatrixXcd eigenvectors; // columns matching `spectrum`
  bool factorial = false;        // 1 not in the spectrum (tol 1e-10)

  Eigen::MatrixXd delta_power_real(double exponent) const;
};

/// S(h + ik) = h - ik for h, k in H; polar decomposition S = J Delta^{1/2}
/// with Delta = S^T S in the realified representation.
ModularData tomita_operators(const StandardSubspace& h);

/// P_H = (Delta + 1)^{-1} + J Delta^{1/2} (Delta + 1)^{-1}, assembled
/// realified. Agrees with the Gram-matrix orthogonal projection onto H.
RealLinearOperator projection_via_modular(const ModularData& md);

/// Real-orthogonal projection onto the column span (Gram route, the oracle).
Eigen::MatrixXd gram_projection(const Eigen::MatrixXd& basis);

/// Basis of the symplectic complement H' = (iH)^perp.
Eigen::MatrixXd symplectic_complement_basis(const Eigen::MatrixXd& basis);

struct AngleReport {
  double dev_angle_identity = 0.0;      // (P_H P_H' - A_H) restricted to H
  double dev_eigenvalue_map = 0.0;      // spec(A_H) vs 4 lambda/(1+lambda)^2
  double dev_commutator_norm = 0.0;     // |[P_H,i]|_F^2 vs 2 Tr A_H
  double dev_complement_identity = 0.0; // P_H' vs 1 + i P_H i
  double dev_restricted_spectrum = 0.0; // spec(P_H P_H' P_H |_H) vs spec(A_H|_H)
  double max_dev() const;
  std::string to_json() const;
};

/// Verifies the coupling between the angle operator P_H P_H' P_H and the
/// modular spectrum through mu = 4 lambda / (1 + lambda)^2.
/// Rejects non-factorial subspaces.
AngleReport angle_operator_checks(const ModularData& md, const RealLinearOperator& p_h,
                                  const StandardSubspace& h);

struct CanonicalSplitResult {
  StandardSubspace intermediate;
  double dev_contains_k = 0.0;       // K inside F
  double dev_inside_h = 0.0;         // F inside H
  double dev_characterization = 0.0; // F vs H ∩ JH
  bool trivial = false;              // K = H shortcut
};

/// Canonical intermediate subspace F = closure(K + J_{K' ∩ H} K) for an
/// inclusion K ⊆ H. Requires K' ∩ H standard in the ambient space (rejected
/// otherwise); K = H returns H itself. Verifies F = H ∩ J H to 1e-8.
CanonicalSplitResult canonical_intermediate(const Eigen::MatrixXd& k_basis,
                                            const StandardSubspace& h);

/// max_x in colspan(inner) of dist(x, colspan(outer)) for unit columns.
double containment_defect(const Eigen::MatrixXd& inner, const Eigen::MatrixXd& outer);

/// Orthonormal basis of the intersection of two column spans.
Eigen::MatrixXd intersection_basis(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                   double tol = 1e-9);

/// mu = 4 lambda / (1 + lambda)^2 (shared with the angle-spectrum pipeline).
double angle_from_modular(double lambda);

}  // namespace modent::modular
