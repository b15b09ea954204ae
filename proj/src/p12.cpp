#include "modent/p12.hpp"

#include <cmath>
#include <numbers>

#include "modent/gh_symbols.hpp"
#include "modent/symbol_fft.hpp"

namespace modent::subspace {

namespace {
constexpr double kPi = std::numbers::pi;

bool at_quarter_circle(double phi) { return std::abs(phi - kPi / 2.0) < 1e-15; }
}  // namespace

CanonicalProjectionBundle build_p12(double phi, const ModeGrid& grid, CoeffSource source,
                                    int fft_samples) {
  if (!(phi > 0.0) || !(phi < kPi)) throw input_error("build_p12: phi must lie in (0, pi)");
  const int band = 2 * grid.cutoff;

  Symbol g, h;
  CoeffSource used = source;
  if (source == CoeffSource::Auto)
    used = at_quarter_circle(phi) ? CoeffSource::ClosedForm : CoeffSource::Fft;
  if (used == CoeffSource::ClosedForm) {
    if (!at_quarter_circle(phi))
      throw input_error("build_p12: closed-form coefficients exist only at phi = pi/2");
    g = mobius::closed_form_g_coeffs(band);
    h = mobius::closed_form_h_coeffs(band);
  } else {
    g = mobius::symbol_coefficients_fft(
        [phi](fourier::Complex z) { return mobius::symbol_g_pointwise(z, phi); }, band,
        fft_samples, "g");
    h = mobius::symbol_coefficients_fft(
        [phi](fourier::Complex z) { return mobius::symbol_h_pointwise(z, phi); }, band,
        fft_samples, "h");
  }

  CircleOperator p12 = build_multiplication(g, grid);
  const CircleOperator r = fourier::build_reflection(grid);
  // R is diagonal (+-1): fold it into M_h by column signs.
  const Eigen::MatrixXcd mh = build_multiplication(h, grid).entries;
  Eigen::MatrixXcd mhr = mh;
  for (int col = 0; col < grid.dim(); ++col) mhr.col(col) *= r.entries(col, col).real();
  p12.entries += mhr;

  CanonicalProjectionBundle bundle{phi,
                                   grid,
                                   std::move(p12),
                                   fourier::build_hardy_projection(grid),
                                   std::move(g),
                                   std::move(h),
                                   0.0,
                                   0.0,
                                   0.0,
                                   used};
  const double root_dim = std::sqrt(double(grid.dim()));
  const Eigen::MatrixXcd& m = bundle.p12.entries;
  bundle.defect_idempotent = (m * m - m).norm() / root_dim;
  bundle.defect_hermitian = (m - m.adjoint()).norm() / root_dim;
  bundle.trace_real = m.trace().real();
  bundle.p12.hermitian = bundle.defect_hermitian < 1e-10;
  bundle.p12.projection_claimed = true;

  if (grid.cutoff >= 256 && bundle.defect_idempotent > 0.05)
    throw diagnostic_error("build_p12: idempotency defect " +
                           std::to_string(bundle.defect_idempotent) +
                           " at cutoff >= 256; symbol or convention bug");
  return bundle;
}

double range_containment_defect(const CanonicalProjectionBundle& bundle) {
  const Symbol chi =
      fourier::arc_indicator_coefficients(0.0, bundle.phi, 2 * bundle.grid.cutoff);
  const Eigen::MatrixXcd mchi = build_multiplication(chi, bundle.grid).entries;
  return (bundle.p12.entries * mchi - mchi).norm() / std::sqrt(double(bundle.grid.dim()));
}

}  // namespace modent::subspace
