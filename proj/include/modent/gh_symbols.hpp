#pragma once

#include <utility>
#include <vector>

#include "modent/grid_symbol.hpp"
#include "modent/mobius.hpp"

namespace modent::mobius {

using fourier::Symbol;

/// u with u^2 = m1(z^2), principal square-root branch. Every downstream
/// symbol is invariant under u -> -u, so the branch choice is immaterial.
Complex evaluate_u(Complex z, double phi);

/// The two symbols governing the intermediate projection at angle phi:
///   g(z) = (u+z)^2/(4uz) chi_I1(u) - (u-z)^2/(4uz) chi_I1(-u) + chi_I1(z)
///   h(z) = (z^2-u^2)/(4uz) (chi_I1(u) - chi_I1(-u))
/// g is real-valued, h takes purely imaginary values. Evaluation exactly at
/// an arc endpoint raises input_error (indicator ambiguous there).
/// `flip_branch` forces u -> -u; results must not change.
Complex symbol_g_pointwise(Complex z, double phi, bool flip_branch = false);
Complex symbol_h_pointwise(Complex z, double phi, bool flip_branch = false);

/// Closed forms valid at phi = pi/2 only (quarter-circle configuration):
///   g(z) = (z^2+1)^2/(4z^2) chi_2 - (z^2-1)^2/(4z^2) chi_-2 + chi_1
///   h(z) = (z^4-1)/(4z^2) (chi_2 - chi_-2)
Complex special_g_pointwise(Complex z);
Complex special_h_pointwise(Complex z);

/// Fourier coefficients of g and h at phi = pi/2, exact up to rounding:
///   g_0 = 1/2, g_n = 0 for even n != 0,
///   g_n = (i/2pi)(e^{-i pi n/2} - 1) * (-4) / (n (n^2 - 4))   for odd n,
///   h_n = (gamma_{2-n} - gamma_{-2-n}) / 2 for odd n, 0 for even n,
/// with gamma the coefficients of the arc (0, pi/2) indicator.
Symbol closed_form_g_coeffs(int nmax);
Symbol closed_form_h_coeffs(int nmax);

/// Interleaving pair of symbols under z -> z^2:
/// psi_{2n} = (phi1)_n, psi_{2n+1} = (phi2)_n; inverse splits even/odd modes.
Symbol doubling_map_forward(const Symbol& phi1, const Symbol& phi2);
std::pair<Symbol, Symbol> doubling_map_inverse(const Symbol& psi);

/// Least-squares slope of log|f_n| against log n over modes [n_lo, n_hi],
/// skipping coefficients below `drop_tol` (vanishing subsequences, e.g. the
/// even modes of g). Needs at least two surviving points.
double decay_exponent_fit(const Symbol& f, int n_lo, int n_hi, double drop_tol = 1e-14);

/// Same fit for an arbitrary positive sequence indexed by n in [n_lo, n_hi].
double decay_exponent_fit(const std::vector<double>& values, int n_lo, double drop_tol = 1e-14);

/// sup |f_n| * n^power over n in [n_lo, n_hi] (both signs of n).
double scaled_coefficient_sup(const Symbol& f, int n_lo, int n_hi, double power);

}  // namespace modent::mobius
