#pragma once

#include <functional>

#include "modent/grid_symbol.hpp"

namespace modent::mobius {

/// Fourier coefficients of a pointwise circle function by uniform sampling.
///
/// Samples sit at theta_j = (j + 1/2) * 2pi / sample_count, half a step away
/// from any grid-aligned arc endpoint. sample_count must be a power of two
/// with sample_count >= 8 * nmax; the alias floor for a symbol with O(n^-2)
/// coefficients is about 0.8 / sample_count^2.
fourier::Symbol symbol_coefficients_fft(
    const std::function<fourier::Complex(fourier::Complex)>& f, int nmax, int sample_count,
    const std::string& label = "fft");

}  // namespace modent::mobius
