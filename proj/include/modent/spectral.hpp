#pragma once

#include <Eigen/Dense>
#include <vector>

#include "modent/circle_ops.hpp"

namespace modent::fourier {

/// (sum_i s_i^q)^{1/q} for s_i >= 0, q > 0. For 0 < q < 1 this is the usual
/// quasi-norm; the q-th power sum itself is subadditive there.
double schatten_qnorm(const std::vector<double>& singular_values, double q);

/// sum_i s_i^q (no 1/q root).
double qth_power_sum(const std::vector<double>& singular_values, double q);

/// Full spectrum of a Hermitian section, descending. Backward-stable dense
/// solve; inputs failing the Hermiticity tolerance are rejected.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& a, double tol = 1e-12);
Eigen::VectorXd hermitian_eigenvalues(const CircleOperator& op, double tol = 1e-12);

/// Eigenvalues of a real symmetric matrix, descending.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a, double tol = 1e-12);

/// Singular values, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a);
Eigen::VectorXd singular_values(const Eigen::MatrixXd& a);

/// Clip eigenvalues of a nominally positive-semidefinite operator: values in
/// [floor, 0) go to 0, below the floor is a diagnostic error. `ceiling` does
/// the same at the top end when nonzero (values in (1, 1 + ceiling] -> 1).
std::vector<double> clip_nonnegative(const Eigen::VectorXd& values, double floor = -1e-8,
                                     double ceiling = 0.0);

}  // namespace modent::fourier
