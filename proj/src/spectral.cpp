#include "modent/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace modent::fourier {

double qth_power_sum(const std::vector<double>& s, double q) {
  if (!(q > 0.0)) throw input_error("schatten: q must be positive");
  double acc = 0.0;
  for (double v : s) {
    if (v < 0.0) throw input_error("schatten: singular values must be nonnegative");
    acc += std::pow(v, q);
  }
  return acc;
}

double schatten_qnorm(const std::vector<double>& s, double q) {
  return std::pow(qth_power_sum(s, q), 1.0 / q);
}

namespace {
Eigen::VectorXd descending(Eigen::VectorXd v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<double>());
  return v;
}
}  // namespace

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& a, double tol) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double defect = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol * scale)
    throw input_error("hermitian_eigenvalues: input not Hermitian, defect " +
                      std::to_string(defect));
  Eigen::MatrixXcd sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw diagnostic_error("hermitian_eigenvalues: solver failed");
  return descending(es.eigenvalues());
}

Eigen::VectorXd hermitian_eigenvalues(const CircleOperator& op, double tol) {
  return hermitian_eigenvalues(op.entries, tol);
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a, double tol) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double defect = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (defect > tol * scale)
    throw input_error("symmetric_eigenvalues: input not symmetric, defect " +
                      std::to_string(defect));
  Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw diagnostic_error("symmetric_eigenvalues: solver failed");
  return descending(es.eigenvalues());
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues();
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& a) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues();
}

std::vector<double> clip_nonnegative(const Eigen::VectorXd& values, double floor, double ceiling) {
  std::vector<double> out;
  out.reserve(values.size());
  for (int i = 0; i < values.size(); ++i) {
    double v = values(i);
    if (v < floor)
      throw diagnostic_error("clip_nonnegative: eigenvalue " + std::to_string(v) +
                             " below noise floor " + std::to_string(floor));
    if (v < 0.0) v = 0.0;
    if (ceiling > 0.0) {
      if (v > 1.0 + ceiling)
        throw diagnostic_error("clip_nonnegative: eigenvalue " + std::to_string(v) +
                               " above 1 + ceiling");
      if (v > 1.0) v = 1.0;
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

}  // namespace modent::fourier
