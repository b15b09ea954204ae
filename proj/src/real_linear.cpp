#include "modent/real_linear.hpp"

namespace modent::fourier {

Eigen::MatrixXd multiplication_by_i_real(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    j(2 * k, 2 * k + 1) = -1.0;
    j(2 * k + 1, 2 * k) = 1.0;
  }
  return j;
}

Eigen::MatrixXd realify_matrix(const Eigen::MatrixXcd& m) {
  const int r = int(m.rows()), c = int(m.cols());
  Eigen::MatrixXd out(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) {
      const double re = m(i, k).real(), im = m(i, k).imag();
      out(2 * i, 2 * k) = re;
      out(2 * i, 2 * k + 1) = -im;
      out(2 * i + 1, 2 * k) = im;
      out(2 * i + 1, 2 * k + 1) = re;
    }
  return out;
}

Eigen::MatrixXd realify_conjugate_linear_matrix(const Eigen::MatrixXcd& a) {
  const int r = int(a.rows()), c = int(a.cols());
  Eigen::MatrixXd out(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) {
      const double re = a(i, k).real(), im = a(i, k).imag();
      out(2 * i, 2 * k) = re;
      out(2 * i, 2 * k + 1) = im;
      out(2 * i + 1, 2 * k) = im;
      out(2 * i + 1, 2 * k + 1) = -re;
    }
  return out;
}

RealLinearOperator realify(const CircleOperator& op) {
  return RealLinearOperator(op.dim(), realify_matrix(op.entries), false);
}

RealLinearOperator realify_conjugate_linear(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw input_error("realify_conjugate_linear: square matrix expected");
  return RealLinearOperator(int(a.rows()), realify_conjugate_linear_matrix(a), true);
}

Eigen::VectorXd realify_vector(const Eigen::VectorXcd& v) {
  Eigen::VectorXd out(2 * v.size());
  for (int i = 0; i < v.size(); ++i) {
    out(2 * i) = v(i).real();
    out(2 * i + 1) = v(i).imag();
  }
  return out;
}

double complex_structure_defect(const Eigen::MatrixXd& m, int sign) {
  const int n = int(m.rows()) / 2;
  const Eigen::MatrixXd j = multiplication_by_i_real(n);
  return (m * j - double(sign) * j * m).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd complexify_matrix(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw input_error("complexify_matrix: even square matrix expected");
  const double defect = complex_structure_defect(m, +1);
  if (defect > tol)
    throw input_error("complexify_matrix: not complex-linear, defect " + std::to_string(defect));
  const int n = int(m.rows()) / 2;
  Eigen::MatrixXcd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out(i, k) = {m(2 * i, 2 * k), m(2 * i + 1, 2 * k)};
  return out;
}

}  // namespace modent::fourier
