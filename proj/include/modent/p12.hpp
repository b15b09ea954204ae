#pragma once

#include "modent/circle_ops.hpp"

namespace modent::subspace {

using fourier::CircleOperator;
using fourier::ModeGrid;
using fourier::Symbol;

enum class CoeffSource {
  Auto,        // closed forms at phi = pi/2, FFT otherwise
  ClosedForm,  // phi = pi/2 only
  Fft,
};

/// Finite section of the intermediate projection P12 = M_g + M_h R together
/// with the Hardy projection and its quality metrics. The section is only
/// approximately idempotent; the defects measure the truncation error and
/// must shrink as the cutoff grows.
struct CanonicalProjectionBundle {
  double phi;
  ModeGrid grid;
  CircleOperator p12;
  CircleOperator hardy;
  Symbol g, h;
  double defect_idempotent = 0.0;  // |P12^2 - P12|_F / sqrt(dim)
  double defect_hermitian = 0.0;   // |P12 - P12*|_F / sqrt(dim)
  double trace_real = 0.0;
  CoeffSource source = CoeffSource::Auto;
};

/// Builds the bundle at the given angle. An idempotency defect above 0.05 at
/// cutoff >= 256 signals a symbol or convention bug and raises
/// diagnostic_error.
CanonicalProjectionBundle build_p12(double phi, const ModeGrid& grid,
                                    CoeffSource source = CoeffSource::Auto,
                                    int fft_samples = 1 << 16);

/// |P12 M_chi - M_chi|_F / sqrt(dim) for chi the inner-arc indicator:
/// the range-containment defect (L2 of the inner arc sits inside ran P12).
double range_containment_defect(const CanonicalProjectionBundle& bundle);

}  // namespace modent::subspace
