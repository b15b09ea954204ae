#include "modent/circle_ops.hpp"

#include <cmath>
#include <numbers>

namespace modent::fourier {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double CircleOperator::hermiticity_defect() const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

CircleOperator build_hardy_projection(const ModeGrid& grid) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(grid.dim(), grid.dim());
  for (int n = 0; n <= grid.cutoff; ++n) m(grid.index_of(n), grid.index_of(n)) = 1.0;
  CircleOperator op(grid, std::move(m));
  op.hermitian = true;
  op.projection_claimed = true;
  return op;
}

CircleOperator build_multiplication(const Symbol& symbol, const ModeGrid& grid) {
  symbol.require_band(2 * grid.cutoff);
  const int d = grid.dim();
  Eigen::MatrixXcd m(d, d);
  // Toeplitz: entry depends on row - col only; fill by diagonals.
  for (int k = -(d - 1); k <= d - 1; ++k) {
    const Complex c = symbol.coeff(k);
    for (int col = std::max(0, -k); col < std::min(d, d - k); ++col) m(col + k, col) = c;
  }
  return CircleOperator(grid, std::move(m));
}

CircleOperator build_reflection(const ModeGrid& grid) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(grid.dim(), grid.dim());
  for (int n = -grid.cutoff; n <= grid.cutoff; ++n)
    m(grid.index_of(n), grid.index_of(n)) = (n % 2 == 0) ? 1.0 : -1.0;
  CircleOperator op(grid, std::move(m));
  op.hermitian = true;
  return op;
}

Symbol adjoint_symbol(const Symbol& f, int nmax) {
  f.require_band(nmax);
  Symbol out(f.label() + "*");
  for (int n = -nmax; n <= nmax; ++n) out.set(n, std::conj(f.coeff(-n)));
  if (f.support_bound()) out.set_support_bound(*f.support_bound());
  return out;
}

Symbol convolve(const Symbol& f, const Symbol& g) {
  if (!f.support_bound() || !g.support_bound())
    throw input_error("convolve: both symbols need a finite support bound");
  const int bf = *f.support_bound(), bg = *g.support_bound();
  Symbol out(f.label() + "*" + g.label());
  for (int n = -(bf + bg); n <= bf + bg; ++n) {
    Complex acc = 0.0;
    for (int k = std::max(-bf, n - bg); k <= std::min(bf, n + bg); ++k)
      acc += f.coeff(k) * g.coeff(n - k);
    out.set(n, acc);
  }
  out.set_support_bound(bf + bg);
  return out;
}

Symbol arc_indicator_coefficients(double arc_start, double arc_end, int nmax) {
  const double len = arc_end - arc_start;
  if (!(len > 0.0) || !(len < kTwoPi))
    throw input_error("arc_indicator_coefficients: need 0 < arc_end - arc_start < 2pi");
  if (nmax < 0) throw input_error("arc_indicator_coefficients: nmax must be >= 0");
  Symbol s("chi[" + std::to_string(arc_start) + "," + std::to_string(arc_end) + "]");
  s.set(0, len / kTwoPi);
  const Complex i{0.0, 1.0};
  for (int n = 1; n <= nmax; ++n) {
    for (int sign : {1, -1}) {
      const int m = sign * n;
      s.set(m, i / (kTwoPi * double(m)) *
                   (std::exp(-i * double(m) * arc_end) - std::exp(-i * double(m) * arc_start)));
    }
  }
  return s;
}

}  // namespace modent::fourier
