#include "modent/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <nlohmann/json.hpp>

#include "modent/fock.hpp"
#include "modent/gh_symbols.hpp"
#include "modent/hankel.hpp"
#include "modent/modular.hpp"
#include "modent/spectral.hpp"
#include "modent/symbol_fft.hpp"

namespace modent::verify {

namespace {
constexpr double kPi = std::numbers::pi;

void add(SuiteReport& rep, const std::string& name, double value, double threshold) {
  rep.checks.push_back({name, value <= threshold, value, threshold});
}

Eigen::MatrixXcd random_hermitian_unit(int d, std::mt19937_64& rng, double lo, double hi) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) g(i, k) = {gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  std::uniform_real_distribution<double> unif(lo, hi);
  Eigen::VectorXd eigs(d);
  for (int i = 0; i < d; ++i) eigs(i) = unif(rng);
  return q * eigs.asDiagonal() * q.adjoint();
}
}  // namespace

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::to_json(const std::string& version,
                                 const std::string& config_hash) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["pass"] = pass();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value},
                   {"threshold", c.threshold}});
  j["checks"] = arr;
  j["meta"] = {{"version", version}, {"config_hash", config_hash}};
  return j.dump(2);
}

SuiteReport verify_modular(std::uint64_t seed, int ensemble) {
  using namespace modent::modular;
  SuiteReport rep{"modular", seed, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dims(2, 5);

  double worst_projection = 0.0, worst_symmetry = 0.0, worst_spec_symmetry = 0.0;
  double worst_jdj = 0.0, worst_fix = 0.0, worst_duality = 0.0, worst_angle = 0.0;
  int factorial_count = 0;
  for (int i = 0; i < ensemble; ++i) {
    const int d = dims(rng);
    const StandardSubspace h = StandardSubspace::random_standard(d, rng);
    const ModularData md = tomita_operators(h);
    const auto p = projection_via_modular(md);

    worst_projection =
        std::max(worst_projection, (p.entries - gram_projection(h.basis)).cwiseAbs().maxCoeff());
    worst_symmetry = std::max(
        worst_symmetry, std::max((p.entries - p.entries.transpose()).cwiseAbs().maxCoeff(),
                                 (p.entries * p.entries - p.entries).cwiseAbs().maxCoeff()));

    // spectrum symmetric under lambda -> 1/lambda
    for (int k = 0; k < d; ++k)
      worst_spec_symmetry = std::max(
          worst_spec_symmetry, std::abs(md.spectrum(k) * md.spectrum(d - 1 - k) - 1.0));

    // Relative to the inverse's scale: kappa(Delta) reaches the squared map
    // condition, which amplifies absolute rounding here.
    const Eigen::MatrixXd delta_inv = md.delta_power_real(-1.0);
    worst_jdj = std::max(worst_jdj,
                         (md.j_real * md.delta_real * md.j_real - delta_inv).cwiseAbs().maxCoeff() /
                             std::max(1.0, delta_inv.cwiseAbs().maxCoeff()));
    for (int c = 0; c < d; ++c) {
      const Eigen::VectorXd v = h.basis.col(c);
      worst_fix = std::max(worst_fix, (md.s_real * v - v).norm() / v.norm());
    }

    // (H')' = H as projections.
    const Eigen::MatrixXd hp = symplectic_complement_basis(h.basis);
    const Eigen::MatrixXd hpp = symplectic_complement_basis(hp);
    worst_duality = std::max(
        worst_duality, (gram_projection(hpp) - gram_projection(h.basis)).cwiseAbs().maxCoeff());

    if (md.factorial) {
      ++factorial_count;
      const AngleReport ar = angle_operator_checks(md, p, h);
      worst_angle = std::max(worst_angle, ar.max_dev());
    }
  }
  add(rep, "projection_formula_vs_gram", worst_projection, 1e-8);
  add(rep, "projection_idempotent_symmetric", worst_symmetry, 1e-10);
  add(rep, "delta_spectrum_inversion_symmetry", worst_spec_symmetry, 1e-10);
  add(rep, "j_delta_j_equals_delta_inverse", worst_jdj, 1e-10);
  add(rep, "tomita_fixes_subspace", worst_fix, 1e-10);
  add(rep, "symplectic_double_complement", worst_duality, 1e-10);
  add(rep, "angle_operator_identities", worst_angle, 1e-8);
  // Odd complex dimensions are never factorial (the spectrum's inversion
  // symmetry pins an eigenvalue at 1), so expect roughly the even-d half.
  add(rep, "factorial_fraction_deficit",
      factorial_count > (2 * ensemble) / 5 ? 0.0 : 1.0, 0.5);

  // Two-dimensional model: spectrum {lambda, 1/lambda}.
  const auto md = tomita_operators(two_dim_model(1.0 / 3.0));
  const double dev = std::max(std::abs(md.spectrum(0) - 3.0), std::abs(md.spectrum(1) - 1.0 / 3.0));
  add(rep, "two_dim_model_spectrum", dev, 1e-10);
  return rep;
}

SuiteReport verify_fock(std::uint64_t seed, int ensemble) {
  using namespace modent::fock;
  SuiteReport rep{"fock", seed, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dims(2, 6);

  double worst_fermi_det = 0.0, worst_log_trace = 0.0;
  for (int i = 0; i < ensemble; ++i) {
    const int d = dims(rng);
    const Eigen::MatrixXcd a = random_hermitian_unit(d, rng, 0.0, 1.0 - 1e-3);
    const auto eigs = positive_spectrum(a);
    const double det_route =
        (Eigen::MatrixXcd::Identity(d, d) + a).determinant().real();
    worst_fermi_det = std::max(worst_fermi_det, std::abs(lambda_trace(eigs) - det_route));
    // log Tr(Lambda(A)) = Tr log(1 + A)
    double tr_log = 0.0;
    for (double v : eigs) tr_log += std::log1p(v);
    worst_log_trace =
        std::max(worst_log_trace, std::abs(std::log(lambda_trace(eigs)) - tr_log));
  }
  add(rep, "fermi_trace_equals_determinant", worst_fermi_det, 1e-9);
  add(rep, "log_trace_identity", worst_log_trace, 1e-9);

  // Bose truncated trace converges geometrically to the determinant value.
  {
    std::vector<double> eigs{0.5, 0.25, 0.125};
    double exact = 1.0;
    for (double a : eigs) exact /= (1.0 - a);
    double prev_err = 0.0;
    bool geometric = true;
    for (int nmax : {8, 16, 32}) {
      const auto t = gamma_trace(eigs, nmax);
      const double err = std::abs(t.value - exact);
      if (err > t.tail_bound + 1e-14) geometric = false;
      if (nmax > 8 && err > 0.6 * prev_err) geometric = false;
      prev_err = err;
    }
    add(rep, "bose_truncation_geometric", geometric ? 0.0 : 1.0, 0.5);
  }

  // Closed-form entropies vs brute-force density-matrix entropies.
  {
    std::mt19937_64 rng2(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> unif(0.05, 0.7);
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
      std::vector<double> eigs;
      for (int k = 0; k < 3; ++k) eigs.push_back(unif(rng2));
      worst = std::max(worst, std::abs(lambda_entropy(eigs) - fermi_entropy_bruteforce(eigs)));
      worst = std::max(worst, std::abs(gamma_entropy(eigs) - bose_entropy_bruteforce(eigs, 256)));
    }
    add(rep, "entropy_closed_form_vs_bruteforce", worst, 1e-8);
  }

  const auto td = two_dim_fock_check(0.5);
  add(rep, "two_dim_bose_entropy_2ln2",
      std::abs(td.bose_entropy_normalized - 2.0 * std::log(2.0)), 1e-8);
  add(rep, "two_dim_identification", td.modular_identification_dev, 1e-10);
  return rep;
}

SuiteReport verify_hankel(std::uint64_t seed, int pairs) {
  using namespace modent::hankel;
  SuiteReport rep{"hankel", seed, {}};
  std::mt19937_64 rng(seed);

  // Quasi-norm subadditivity on random finite-rank pairs.
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst_violation = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const int n = 12, r = 3;
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n), u = t;
    for (int k = 0; k < r; ++k) {
      Eigen::VectorXcd a(n), b(n), c(n), d(n);
      for (int j = 0; j < n; ++j) {
        a(j) = {gauss(rng), gauss(rng)};
        b(j) = {gauss(rng), gauss(rng)};
        c(j) = {gauss(rng), gauss(rng)};
        d(j) = {gauss(rng), gauss(rng)};
      }
      t += a * b.adjoint();
      u += c * d.adjoint();
    }
    for (double q : {0.5, 0.75}) {
      auto qsum = [q](const Eigen::MatrixXcd& m) {
        const Eigen::VectorXd s = fourier::singular_values(m);
        double acc = 0.0;
        for (int j = 0; j < s.size(); ++j) acc += std::pow(s(j), q);
        return acc;
      };
      worst_violation = std::max(worst_violation, qsum(t + u) - qsum(t) - qsum(u));
    }
  }
  add(rep, "qnorm_subadditivity", worst_violation, 1e-10);

  // Column-norm decay for the quadratic-decay model symbol.
  fourier::Symbol f("model(1+n)^-2");
  for (int n = 1; n <= 2 * 1024; ++n) f.set(n, 1.0 / ((1.0 + n) * (1.0 + n)));
  f.set_support_bound(2 * 1024);
  const auto xi = xi_column_norms(f, 16, 512);
  add(rep, "xi_norm_decay_exponent", std::abs(xi.fitted_exponent - (-1.5)), 0.1);

  const auto st = schatten_stability(f, 0.75, {128, 256, 512, 1024});
  add(rep, "schatten_sum_stable", st.stable ? 0.0 : 1.0, 0.5);
  return rep;
}

SuiteReport verify_geometry(std::uint64_t seed) {
  using namespace modent::mobius;
  SuiteReport rep{"geometry", seed, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angles(0.0, 2.0 * kPi);
  const std::vector<double> phis{kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0, 1.1};

  double worst_invol = 0.0, worst_circle = 0.0, worst_fixed = 0.0, worst_u = 0.0;
  double worst_branch = 0.0, worst_special = 0.0;
  for (double phi : phis) {
    const InvolutionM1 m1(phi);
    worst_fixed = std::max({worst_fixed, std::abs(m1.apply(1.0) - 1.0),
                            std::abs(m1.apply(m1.w()) - m1.w())});
    for (int i = 0; i < 512; ++i) {
      const Complex z = std::polar(1.0, angles(rng));
      const Complex mz = m1.apply(z);
      worst_circle = std::max(worst_circle, std::abs(std::abs(mz) - 1.0));
      worst_invol = std::max(worst_invol, std::abs(m1.apply(mz) - z));
    }
    // u^2 = m1(z^2) on a dense grid, and branch invariance of g, h.
    for (int j = 0; j < 4096; ++j) {
      const double theta = (j + 0.5) * 2.0 * kPi / 4096.0;
      const Complex z = std::polar(1.0, theta);
      const Complex u = evaluate_u(z, phi);
      worst_u = std::max(worst_u, std::abs(u * u - m1.apply(z * z)));
      if (j % 64 == 0) {
        worst_branch =
            std::max({worst_branch,
                      std::abs(symbol_g_pointwise(z, phi) - symbol_g_pointwise(z, phi, true)),
                      std::abs(symbol_h_pointwise(z, phi) - symbol_h_pointwise(z, phi, true))});
      }
      if (phi == kPi / 2.0) {
        worst_special = std::max(
            {worst_special, std::abs(symbol_g_pointwise(z, phi) - special_g_pointwise(z)),
             std::abs(symbol_h_pointwise(z, phi) - special_h_pointwise(z))});
      }
    }
  }
  add(rep, "m1_fixes_endpoints", worst_fixed, 1e-12);
  add(rep, "m1_preserves_circle", worst_circle, 1e-12);
  add(rep, "m1_involution", worst_invol, 1e-12);
  add(rep, "u_defining_relation", worst_u, 1e-12);
  add(rep, "gh_branch_invariance", worst_branch, 1e-12);
  add(rep, "general_reduces_to_special", worst_special, 1e-12);

  // FFT coefficients against the closed forms at the quarter circle.
  {
    const int nmax = 256, samples = 1 << 21;
    const auto g_fft = symbol_coefficients_fft(
        [](Complex z) { return symbol_g_pointwise(z, kPi / 2.0); }, nmax, samples, "g");
    const auto h_fft = symbol_coefficients_fft(
        [](Complex z) { return symbol_h_pointwise(z, kPi / 2.0); }, nmax, samples, "h");
    const auto g_cf = closed_form_g_coeffs(nmax);
    const auto h_cf = closed_form_h_coeffs(nmax);
    double worst = 0.0, worst_even = 0.0;
    for (int n = -nmax; n <= nmax; ++n) {
      worst = std::max({worst, std::abs(g_fft.coeff(n) - g_cf.coeff(n)),
                        std::abs(h_fft.coeff(n) - h_cf.coeff(n))});
      if (n != 0 && n % 2 == 0) worst_even = std::max(worst_even, std::abs(g_fft.coeff(n)));
    }
    add(rep, "fft_matches_closed_forms", worst, 1e-10);
    add(rep, "even_g_modes_vanish", worst_even, 1e-12);
  }

  // Doubling map round trip on random band-limited pairs.
  {
    std::normal_distribution<double> gauss(0.0, 1.0);
    fourier::Symbol p1("p1"), p2("p2");
    for (int n = -8; n <= 8; ++n) {
      p1.set(n, {gauss(rng), gauss(rng)});
      p2.set(n, {gauss(rng), gauss(rng)});
    }
    p1.set_support_bound(8);
    p2.set_support_bound(8);
    const auto [q1, q2] = doubling_map_inverse(doubling_map_forward(p1, p2));
    double dev = 0.0;
    for (int n = -8; n <= 8; ++n)
      dev = std::max({dev, std::abs(q1.coeff(n) - p1.coeff(n)),
                      std::abs(q2.coeff(n) - p2.coeff(n))});
    add(rep, "doubling_round_trip", dev, 1e-15);
  }

  // Cross-ratio reduction round trips.
  {
    double dev = 0.0;
    for (double phi : {kPi / 3.0, kPi / 2.0, 0.9}) {
      const double back = cross_ratio_to_phi(0.0, phi, phi - kPi, kPi);
      dev = std::max(dev, std::abs(back - phi));
    }
    add(rep, "cross_ratio_round_trip", dev, 1e-9);
  }
  return rep;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "modular") return verify_modular(seed);
  if (suite == "fock") return verify_fock(seed);
  if (suite == "hankel") return verify_hankel(seed);
  if (suite == "geometry") return verify_geometry(seed);
  throw input_error("unknown verify suite: " + suite);
}

}  // namespace modent::verify
