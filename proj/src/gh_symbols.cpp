#include "modent/gh_symbols.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "modent/circle_ops.hpp"

namespace modent::mobius {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex to_circle(Complex z) {
  const double r = std::abs(z);
  if (std::abs(r - 1.0) > 1e-9) throw input_error("expected a point on the unit circle");
  return z / r;
}
}  // namespace

Complex evaluate_u(Complex z, double phi) {
  const InvolutionM1 m1(phi);
  const Complex image = to_circle(m1.apply(to_circle(z) * to_circle(z)));
  return std::sqrt(image);
}

namespace {
struct GhTerms {
  bool u_in_i1;
  bool minus_u_in_i1;
  bool z_in_i1;
  Complex u;
  Complex z;
};

GhTerms gh_terms(Complex z_in, double phi, bool flip_branch) {
  const SymmetricIntervalFamily fam(phi);
  const Complex z = to_circle(z_in);
  Complex u = evaluate_u(z, phi);
  if (flip_branch) u = -u;
  return {fam.i1.contains(u), fam.i1.contains(-u), fam.i1.contains(z), u, z};
}
}  // namespace

Complex symbol_g_pointwise(Complex z_in, double phi, bool flip_branch) {
  const GhTerms t = gh_terms(z_in, phi, flip_branch);
  Complex g = 0.0;
  const Complex uz4 = 4.0 * t.u * t.z;
  if (t.u_in_i1) g += (t.u + t.z) * (t.u + t.z) / uz4;
  if (t.minus_u_in_i1) g -= (t.u - t.z) * (t.u - t.z) / uz4;
  if (t.z_in_i1) g += 1.0;
  return g;
}

Complex symbol_h_pointwise(Complex z_in, double phi, bool flip_branch) {
  const GhTerms t = gh_terms(z_in, phi, flip_branch);
  const double indicator = (t.u_in_i1 ? 1.0 : 0.0) - (t.minus_u_in_i1 ? 1.0 : 0.0);
  if (indicator == 0.0) return 0.0;
  return (t.z * t.z - t.u * t.u) / (4.0 * t.u * t.z) * indicator;
}

Complex special_g_pointwise(Complex z_in) {
  const SymmetricIntervalFamily fam(kPi / 2.0);
  const Complex z = to_circle(z_in);
  const Complex z2 = z * z;
  Complex g = 0.0;
  if (fam.i2.contains(z)) g += (z2 + 1.0) * (z2 + 1.0) / (4.0 * z2);
  if (fam.minus_i2.contains(z)) g -= (z2 - 1.0) * (z2 - 1.0) / (4.0 * z2);
  if (fam.i1.contains(z)) g += 1.0;
  return g;
}

Complex special_h_pointwise(Complex z_in) {
  const SymmetricIntervalFamily fam(kPi / 2.0);
  const Complex z = to_circle(z_in);
  const Complex z2 = z * z;
  const double ind = (fam.i2.contains(z) ? 1.0 : 0.0) - (fam.minus_i2.contains(z) ? 1.0 : 0.0);
  if (ind == 0.0) return 0.0;
  return (z2 * z2 - 1.0) / (4.0 * z2) * ind;
}

Symbol closed_form_g_coeffs(int nmax) {
  Symbol g("g@pi/2");
  g.set(0, 0.5);
  const Complex i{0.0, 1.0};
  for (int n = -nmax; n <= nmax; ++n) {
    if (n == 0) continue;
    if (n % 2 == 0) {
      g.set(n, 0.0);
      continue;
    }
    const Complex phase = std::exp(-i * (kPi * double(n) / 2.0)) - 1.0;
    g.set(n, i / kTwoPi * phase * (-4.0 / (double(n) * (double(n) * double(n) - 4.0))));
  }
  return g;
}

Symbol closed_form_h_coeffs(int nmax) {
  // h = (z^2 - z^{-2})/4 * (chi_2 - chi_-2); in terms of the (0, pi/2) arc
  // coefficients gamma this collapses to (gamma_{2-n} - gamma_{-2-n})/2 on
  // odd modes and 0 on even ones.
  const Symbol gamma = fourier::arc_indicator_coefficients(0.0, kPi / 2.0, nmax + 2);
  Symbol h("h@pi/2");
  for (int n = -nmax; n <= nmax; ++n) {
    if (n % 2 == 0) {
      h.set(n, 0.0);
      continue;
    }
    h.set(n, 0.5 * (gamma.coeff(2 - n) - gamma.coeff(-2 - n)));
  }
  return h;
}

Symbol doubling_map_forward(const Symbol& phi1, const Symbol& phi2) {
  Symbol psi("double(" + phi1.label() + "," + phi2.label() + ")");
  for (const auto& [n, c] : phi1.coefficients()) psi.set(2 * n, c);
  for (const auto& [n, c] : phi2.coefficients()) psi.set(2 * n + 1, c);
  if (phi1.support_bound() && phi2.support_bound())
    psi.set_support_bound(std::max(2 * *phi1.support_bound(), 2 * *phi2.support_bound() + 1));
  return psi;
}

std::pair<Symbol, Symbol> doubling_map_inverse(const Symbol& psi) {
  Symbol phi1(psi.label() + ".even"), phi2(psi.label() + ".odd");
  for (const auto& [n, c] : psi.coefficients()) {
    // Modes 2k go to phi1_k, modes 2k+1 to phi2_k (take care with negatives).
    if (((n % 2) + 2) % 2 == 0)
      phi1.set(n / 2, c);
    else
      phi2.set((n - 1) / 2, c);
  }
  return {phi1, phi2};
}

namespace {
double slope_fit(const std::vector<double>& logn, const std::vector<double>& logv) {
  const size_t m = logn.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < m; ++i) {
    sx += logn[i];
    sy += logv[i];
    sxx += logn[i] * logn[i];
    sxy += logn[i] * logv[i];
  }
  const double denom = double(m) * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) throw input_error("decay_exponent_fit: degenerate fit range");
  return (double(m) * sxy - sx * sy) / denom;
}
}  // namespace

double decay_exponent_fit(const Symbol& f, int n_lo, int n_hi, double drop_tol) {
  if (n_lo < 1 || n_hi <= n_lo) throw input_error("decay_exponent_fit: need 1 <= n_lo < n_hi");
  std::vector<double> logn, logv;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double v = std::abs(f.coeff(n));
    if (v <= drop_tol) continue;
    logn.push_back(std::log(double(n)));
    logv.push_back(std::log(v));
  }
  if (logn.size() < 2)
    throw input_error("decay_exponent_fit: all coefficients vanish over the range");
  return slope_fit(logn, logv);
}

double decay_exponent_fit(const std::vector<double>& values, int n_lo, double drop_tol) {
  std::vector<double> logn, logv;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= drop_tol) continue;
    logn.push_back(std::log(double(n_lo) + double(i)));
    logv.push_back(std::log(values[i]));
  }
  if (logn.size() < 2) throw input_error("decay_exponent_fit: all values vanish");
  return slope_fit(logn, logv);
}

double scaled_coefficient_sup(const Symbol& f, int n_lo, int n_hi, double power) {
  double sup = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    sup = std::max(sup, std::abs(f.coeff(n)) * std::pow(double(n), power));
    sup = std::max(sup, std::abs(f.coeff(-n)) * std::pow(double(n), power));
  }
  return sup;
}

}  // namespace modent::mobius
