#pragma once

#include <Eigen/Dense>

#include "modent/circle_ops.hpp"

namespace modent::fourier {

/// Real-linear operator on C^n seen as R^{2n}, coordinates interleaved as
/// (Re x_0, Im x_0, Re x_1, Im x_1, ...). The realified inner product is the
/// plain dot product, so adjoints are transposes.
struct RealLinearOperator {
  int complex_dim = 0;
  Eigen::MatrixXd entries;
  bool conjugate_linear_origin = false;

  RealLinearOperator(int n, Eigen::MatrixXd m, bool conj_origin = false)
      : complex_dim(n), entries(std::move(m)), conjugate_linear_origin(conj_origin) {
    if (entries.rows() != 2 * n || entries.cols() != 2 * n)
      throw input_error("RealLinearOperator: matrix must be 2n x 2n");
  }
  int real_dim() const { return 2 * complex_dim; }
};

/// The realified multiplication-by-i matrix (2x2 blocks [[0,-1],[1,0]]).
Eigen::MatrixXd multiplication_by_i_real(int complex_dim);

/// Realify a complex-linear matrix: per-entry blocks [[Re,-Im],[Im,Re]].
Eigen::MatrixXd realify_matrix(const Eigen::MatrixXcd& m);

/// Realify the conjugate-linear operator x -> A conj(x):
/// per-entry blocks [[Re,Im],[Im,-Re]].
Eigen::MatrixXd realify_conjugate_linear_matrix(const Eigen::MatrixXcd& a);

RealLinearOperator realify(const CircleOperator& op);
RealLinearOperator realify_conjugate_linear(const Eigen::MatrixXcd& a);

/// Realify a complex vector into interleaved (Re, Im) coordinates.
Eigen::VectorXd realify_vector(const Eigen::VectorXcd& v);

/// Inverse of realify_matrix; throws if the matrix fails to commute with the
/// complex structure within `tol` (i.e. is not the realification of a
/// complex-linear operator).
Eigen::MatrixXcd complexify_matrix(const Eigen::MatrixXd& m, double tol = 1e-10);

/// max |M J - s J M| with J the complex-structure matrix; s = +1 measures the
/// defect of complex-linearity, s = -1 of conjugate-linearity.
double complex_structure_defect(const Eigen::MatrixXd& m, int sign);

}  // namespace modent::fourier
