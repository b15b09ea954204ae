#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "modent/fock.hpp"
#include "test_helpers.hpp"

using namespace modent;
using namespace modent::fock;
using modent::testing::random_hermitian_spectrum;

TEST_CASE("quantisation traces on a single mode") {
  const std::vector<double> half{0.5};
  const auto bose = gamma_trace(half, 64);
  CHECK(std::abs(bose.value - 2.0) <= 1e-12);
  CHECK(bose.tail_bound <= std::pow(2.0, -63.0));
  CHECK(lambda_trace(half) == 1.5);

  const std::vector<double> vacuum{0.0, 0.0};
  CHECK(gamma_trace(vacuum, 16).value == 1.0);
  CHECK(lambda_trace(vacuum) == 1.0);

  CHECK_THROWS_AS(gamma_trace({1.0}, 16), input_error);
  CHECK_THROWS_AS(gamma_trace({0.9999999}, 16), input_error);
}

TEST_CASE("fermi trace equals the determinant on random ensembles") {
  std::mt19937_64 rng(31);
  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 5;  // up to 6
    const Eigen::MatrixXcd a = random_hermitian_spectrum(d, rng, 0.0, 1.0 - 1e-6);
    const auto eigs = positive_spectrum(a);
    const double det_route = (Eigen::MatrixXcd::Identity(d, d) + a).determinant().real();
    worst = std::max(worst, std::abs(lambda_trace(eigs) - det_route));
    // Subset-sum oracle agrees with the product formula.
    CHECK(std::abs(fermi_trace_bruteforce(eigs) - lambda_trace(eigs)) < 1e-10);
    // log Tr = trace of log(1 + A).
    double tr_log = 0.0;
    for (double v : eigs) tr_log += std::log1p(v);
    CHECK(std::abs(std::log(lambda_trace(eigs)) - tr_log) < 1e-9);
  }
  MESSAGE("fermi trace vs determinant, worst dev: ", worst);
  CHECK(worst <= 1e-9);
}

TEST_CASE("bose truncated trace against the determinant with tail bound") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 3;
    const Eigen::MatrixXcd a = random_hermitian_spectrum(d, rng, 0.0, 0.8);
    const auto eigs = positive_spectrum(a);
    const double exact = 1.0 / (Eigen::MatrixXcd::Identity(d, d) - a).determinant().real();
    const auto t = gamma_trace(eigs, 64);
    CHECK(std::abs(t.value - exact) <= t.tail_bound + 1e-9 * exact);
    // Convergence is geometric in the truncation.
    const auto coarse = gamma_trace(eigs, 8);
    CHECK(t.tail_bound < coarse.tail_bound);
    CHECK(std::abs(bose_trace_bruteforce(eigs, 32) - gamma_trace(eigs, 32).value) < 1e-9);
  }
}

TEST_CASE("second quantisation entropies, closed form vs brute force") {
  SUBCASE("single mode 1/2, bose") {
    // Closed form: -(a/(1-a)) log a / (1-a) = 2 ln 2; the explicit spectrum
    // {2^-n} gives the same sum.
    const double s = gamma_entropy({0.5});
    CHECK(s == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(bose_entropy_bruteforce({0.5}, 256) == doctest::Approx(s).epsilon(1e-13));
  }
  SUBCASE("single mode 1/2, fermi") {
    // Spectrum {1, 1/2}: S = (1/2) ln 2.
    const double s = lambda_entropy({0.5});
    CHECK(s == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
    CHECK(fermi_entropy_bruteforce({0.5}) == doctest::Approx(s).epsilon(1e-14));
  }
  SUBCASE("vacuum has zero entropy") {
    CHECK(gamma_entropy({0.0, 0.0}) == 0.0);
    CHECK(lambda_entropy({0.0}) == 0.0);
  }
  SUBCASE("random spectra") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unif(0.02, 0.7);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> eigs;
      for (int k = 0; k < 3; ++k) eigs.push_back(unif(rng));
      CHECK(std::abs(lambda_entropy(eigs) - fermi_entropy_bruteforce(eigs)) < 1e-8);
      CHECK(std::abs(gamma_entropy(eigs) - bose_entropy_bruteforce(eigs, 256)) < 1e-8);
    }
    // Fermi brute force scales to six modes.
    std::vector<double> six;
    for (int k = 0; k < 6; ++k) six.push_back(unif(rng));
    CHECK(std::abs(lambda_entropy(six) - fermi_entropy_bruteforce(six)) < 1e-8);
  }
}

TEST_CASE("normalization shift") {
  // S(rho/t) = S(rho)/t + log t; on the single bose mode both conventions
  // happen to give 2 ln 2 at a = 1/2.
  const double s_hat = gamma_entropy({0.5});
  const double t = gamma_trace({0.5}, 256).value;
  CHECK(normalized_entropy(s_hat, t) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(normalized_entropy(1.0, 0.0), input_error);
}

TEST_CASE("finiteness equivalence probe") {
  SUBCASE("geometric sequence converges in every quantisation") {
    // The k-th one-particle increment is exactly 2^-k k ln 2, which crosses
    // 1e-5 only beyond k = 20 (1.3e-5 there); probe to k = 24.
    std::vector<double> lambdas;
    for (int k = 1; k <= 24; ++k) lambdas.push_back(std::pow(2.0, -k));
    const auto rep = finiteness_equivalence_probe(lambdas);
    REQUIRE(rep.rows.size() == 24);
    CHECK(std::abs(rep.rows[19].s_one_particle - rep.rows[18].s_one_particle) < 1e-4);
    CHECK(std::abs(rep.last_increment_one_particle) < 1e-5);
    CHECK(std::abs(rep.last_increment_bose) < 1e-5);
    CHECK(std::abs(rep.last_increment_fermi) < 1e-5);
  }
  SUBCASE("slowly decaying sequence grows in lockstep") {
    std::vector<double> lambdas;
    for (int k = 1; k <= 400; ++k) {
      const double l = 1.0 / (k * std::pow(std::log(k + 1.0), 2.0));
      lambdas.push_back(std::min(l, 0.9));
    }
    const auto rep = finiteness_equivalence_probe(lambdas);
    MESSAGE("bose/one-particle ratio: ", rep.ratio_bose_over_one_particle,
            ", fermi/one-particle ratio: ", rep.ratio_fermi_over_one_particle);
    CHECK(rep.ratio_bose_over_one_particle > 1.0);
    CHECK(std::isfinite(rep.ratio_bose_over_one_particle));
    CHECK(rep.ratio_fermi_over_one_particle > 1.0);
    CHECK(std::isfinite(rep.ratio_fermi_over_one_particle));
    // All three still growing at the truncation edge.
    CHECK(rep.last_increment_one_particle > 0.0);
    CHECK(rep.last_increment_bose > 0.0);
    CHECK(rep.last_increment_fermi > 0.0);
  }
  SUBCASE("single lambda fermi value") {
    for (double l : {0.3, 0.5, 0.7}) {
      const auto rep = finiteness_equivalence_probe({l});
      CHECK(rep.rows.back().s_fermi ==
            doctest::Approx(-l * std::log(l) - 0.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("two dimensional model cross-check") {
  SUBCASE("lambda = 1/3") {
    const auto rep = two_dim_fock_check(1.0 / 3.0);
    CHECK(rep.bose_trace == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(rep.fermi_trace == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(rep.fermi_spectrum.size() == 2);
    CHECK(rep.fermi_spectrum[0] == 1.0);
    CHECK(rep.fermi_spectrum[1] == doctest::Approx(1.0 / 3.0));
    for (int n = 0; n < 4; ++n)
      CHECK(rep.bose_spectrum_prefix[size_t(n)] ==
            doctest::Approx(std::pow(1.0 / 3.0, n)).epsilon(1e-14));
    CHECK(rep.modular_identification_dev < 1e-10);
  }
  SUBCASE("lambda = 1/2 normalized bose entropy") {
    const auto rep = two_dim_fock_check(0.5);
    CHECK(rep.bose_entropy_normalized ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-9));
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(two_dim_fock_check(0.0), input_error);
    CHECK_THROWS_AS(two_dim_fock_check(1.0), input_error);
  }
}

TEST_CASE("single-lambda fermi entropy matches the closed form") {
  // S(Lambda(l)) = -l log l exactly (spectrum {1, l}).
  for (double l : {0.2, 0.5, 0.8})
    CHECK(lambda_entropy({l}) == doctest::Approx(-l * std::log(l)).epsilon(1e-14));
}
