#include "modent/fock.hpp"

#include <cmath>

#include "modent/modular.hpp"

namespace modent::fock {

namespace {
double eta(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

void check_bose_range(const std::vector<double>& eigs) {
  for (double a : eigs)
    if (a < 0.0 || a > 1.0 - 1e-6)
      throw input_error("bose: eigenvalue " + std::to_string(a) + " outside [0, 1 - 1e-6]");
}

void check_nonnegative(const std::vector<double>& eigs) {
  for (double a : eigs)
    if (a < 0.0) throw input_error("fock: negative eigenvalue " + std::to_string(a));
}
}  // namespace

std::vector<double> positive_spectrum(const Eigen::MatrixXcd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (a + a.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double v = es.eigenvalues()(i);
    if (v < 0.0) {
      if (v < -1e-12)
        throw input_error("positive_spectrum: negative eigenvalue " + std::to_string(v));
      v = 0.0;
    }
    out.push_back(v);
  }
  return out;
}

TraceResult gamma_trace(const std::vector<double>& eigs, int n_max) {
  check_bose_range(eigs);
  if (n_max < 0) throw input_error("gamma_trace: n_max must be >= 0");
  TraceResult r;
  double truncated = 1.0, exact = 1.0;
  for (double a : eigs) {
    // sum_{n<=n_max} a^n = (1 - a^{n_max+1}) / (1 - a)
    truncated *= (1.0 - std::pow(a, n_max + 1)) / (1.0 - a);
    exact *= 1.0 / (1.0 - a);
  }
  r.value = truncated;
  r.tail_bound = exact - truncated;  // all terms positive
  return r;
}

double lambda_trace(const std::vector<double>& eigs) {
  check_nonnegative(eigs);
  double t = 1.0;
  for (double a : eigs) t *= 1.0 + a;
  return t;
}

double gamma_entropy(const std::vector<double>& eigs) {
  check_bose_range(eigs);
  double sum = 0.0, det_inv = 1.0;
  for (double a : eigs) {
    if (a > 0.0) sum += a / (1.0 - a) * std::log(a);
    det_inv *= 1.0 / (1.0 - a);
  }
  return -sum * det_inv;
}

double lambda_entropy(const std::vector<double>& eigs) {
  check_nonnegative(eigs);
  double sum = 0.0, det = 1.0;
  for (double a : eigs) {
    if (a > 0.0) sum += a / (1.0 + a) * std::log(a);
    det *= 1.0 + a;
  }
  return -sum * det;
}

double fermi_trace_bruteforce(const std::vector<double>& eigs) {
  const size_t d = eigs.size();
  if (d > 20) throw input_error("fermi brute force: too many modes");
  double t = 0.0;
  for (size_t sub = 0; sub < (size_t(1) << d); ++sub) {
    double p = 1.0;
    for (size_t k = 0; k < d; ++k)
      if (sub & (size_t(1) << k)) p *= eigs[k];
    t += p;
  }
  return t;
}

double fermi_entropy_bruteforce(const std::vector<double>& eigs) {
  const size_t d = eigs.size();
  if (d > 20) throw input_error("fermi brute force: too many modes");
  double s = 0.0;
  for (size_t sub = 0; sub < (size_t(1) << d); ++sub) {
    double p = 1.0;
    for (size_t k = 0; k < d; ++k)
      if (sub & (size_t(1) << k)) p *= eigs[k];
    s += eta(p);
  }
  return s;
}

namespace {
// Odometer over occupation tuples (n_1, ..., n_d), each in [0, n_max].
template <typename F>
void for_each_tuple_weight(const std::vector<double>& eigs, int n_max, F&& f) {
  const size_t d = eigs.size();
  std::vector<int> occ(d, 0);
  std::vector<double> partial(d + 1, 1.0);
  while (true) {
    for (size_t k = 0; k < d; ++k) partial[k + 1] = partial[k] * std::pow(eigs[k], occ[k]);
    f(partial[d]);
    size_t pos = 0;
    while (pos < d && occ[pos] == n_max) occ[pos++] = 0;
    if (pos == d) break;
    ++occ[pos];
  }
}
}  // namespace

double bose_trace_bruteforce(const std::vector<double>& eigs, int n_max) {
  check_bose_range(eigs);
  if (eigs.size() > 4) throw input_error("bose brute force: too many modes");
  double t = 0.0;
  for_each_tuple_weight(eigs, n_max, [&](double w) { t += w; });
  return t;
}

double bose_entropy_bruteforce(const std::vector<double>& eigs, int n_max) {
  check_bose_range(eigs);
  if (eigs.size() > 4) throw input_error("bose brute force: too many modes");
  double s = 0.0;
  for_each_tuple_weight(eigs, n_max, [&](double w) { s += eta(w); });
  return s;
}

double normalized_entropy(double entropy_unnormalized, double trace) {
  if (!(trace > 0.0)) throw input_error("normalized_entropy: trace must be positive");
  return entropy_unnormalized / trace + std::log(trace);
}

double spectrum_entropy(const std::vector<double>& probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p < 0.0) throw input_error("spectrum_entropy: negative entry");
    s += eta(p);
  }
  return s;
}

ProbeReport finiteness_equivalence_probe(const std::vector<double>& lambdas) {
  ProbeReport rep;
  double prev1 = 0.0, prevb = 0.0, prevf = 0.0;
  std::vector<double> prefix;
  for (size_t k = 0; k < lambdas.size(); ++k) {
    prefix.push_back(lambdas[k]);
    ProbeRow row;
    row.count = int(k + 1);
    row.s_one_particle = spectrum_entropy(prefix);
    row.s_bose = gamma_entropy(prefix);
    row.s_fermi = lambda_entropy(prefix);
    if (k + 1 == lambdas.size()) {
      rep.last_increment_one_particle = row.s_one_particle - prev1;
      rep.last_increment_bose = row.s_bose - prevb;
      rep.last_increment_fermi = row.s_fermi - prevf;
    }
    prev1 = row.s_one_particle;
    prevb = row.s_bose;
    prevf = row.s_fermi;
    rep.rows.push_back(row);
  }
  if (!rep.rows.empty() && rep.rows.back().s_one_particle > 0.0) {
    rep.ratio_bose_over_one_particle = rep.rows.back().s_bose / rep.rows.back().s_one_particle;
    rep.ratio_fermi_over_one_particle = rep.rows.back().s_fermi / rep.rows.back().s_one_particle;
  }
  return rep;
}

TwoDimReport two_dim_fock_check(double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0))
    throw input_error("two_dim_fock_check: lambda must lie in (0, 1)");
  TwoDimReport rep;
  rep.lambda = lambda;
  const std::vector<double> single{lambda};

  rep.bose_trace = gamma_trace(single, 512).value;
  rep.fermi_trace = lambda_trace(single);
  for (int n = 0; n < 8; ++n) rep.bose_spectrum_prefix.push_back(std::pow(lambda, n));
  rep.fermi_spectrum = {1.0, lambda};

  const int n_max = 512;  // geometric tail far below rounding for lambda < 1
  const double bose_s = bose_entropy_bruteforce(single, n_max);
  const double bose_t = bose_trace_bruteforce(single, n_max);
  rep.bose_entropy_normalized = normalized_entropy(bose_s, bose_t);
  rep.fermi_entropy_normalized =
      normalized_entropy(fermi_entropy_bruteforce(single), fermi_trace_bruteforce(single));

  // Identification with the modular spectrum of the d = 2 model: the part of
  // the spectrum below 1 is {lambda} and drives both quantisations.
  const auto md = modular::tomita_operators(modular::two_dim_model(lambda));
  double dev = std::abs(md.spectrum(0) - 1.0 / lambda);
  dev = std::max(dev, std::abs(md.spectrum(1) - lambda));
  rep.modular_identification_dev = dev;
  return rep;
}

}  // namespace modent::fock
