#pragma once

#include <Eigen/Dense>

#include "modent/grid_symbol.hpp"

namespace modent::fourier {

/// Finite section of a bounded operator on L2 of the circle, stored densely
/// in the mode basis of a ModeGrid.
struct CircleOperator {
  ModeGrid grid;
  Eigen::MatrixXcd entries;
  bool hermitian = false;
  bool projection_claimed = false;

  CircleOperator(ModeGrid g, Eigen::MatrixXcd m) : grid(g), entries(std::move(m)) {
    if (entries.rows() != grid.dim() || entries.cols() != grid.dim())
      throw input_error("CircleOperator: matrix does not match grid dimension");
  }

  int dim() const { return grid.dim(); }
  /// max |A - A*| over entries.
  double hermiticity_defect() const;
};

/// Diagonal projection onto modes n >= 0 (idempotent and Hermitian exactly).
CircleOperator build_hardy_projection(const ModeGrid& grid);

/// Toeplitz section of multiplication by the symbol: entry (m, n) = f_{m-n}.
/// Needs coefficients through |n| <= 2 * cutoff.
CircleOperator build_multiplication(const Symbol& symbol, const ModeGrid& grid);

/// Parity involution f(z) -> f(-z): diagonal (-1)^n.
CircleOperator build_reflection(const ModeGrid& grid);

/// Adjoint symbol: (f*)_n = conj(f_{-n}); section(M_f)^* = section(M_{f*}).
Symbol adjoint_symbol(const Symbol& f, int nmax);

/// Convolution (fg)_n = sum_k f_k g_{n-k} for finitely supported symbols.
Symbol convolve(const Symbol& f, const Symbol& g);

/// Fourier coefficients of the indicator of the arc (arc_start, arc_end):
///   gamma_0 = (arc_end - arc_start) / 2pi,
///   gamma_n = (i / 2pi n) (e^{-i n arc_end} - e^{-i n arc_start}),  n != 0.
Symbol arc_indicator_coefficients(double arc_start, double arc_end, int nmax);

}  // namespace modent::fourier
