#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "modent/errors.hpp"

namespace modent::fourier {

using Complex = std::complex<double>;

/// Truncated Fourier-mode window: modes -N..N, one matrix row/column each.
/// The index convention index = mode + cutoff is fixed project-wide.
struct ModeGrid {
  int cutoff = 0;

  explicit ModeGrid(int n) : cutoff(n) {
    if (n <= 0) throw input_error("ModeGrid: cutoff must be positive");
  }
  int dim() const { return 2 * cutoff + 1; }
  bool contains(int mode) const { return mode >= -cutoff && mode <= cutoff; }
  int index_of(int mode) const {
    if (!contains(mode)) throw input_error("ModeGrid: mode out of range");
    return mode + cutoff;
  }
  int mode_of(int index) const {
    if (index < 0 || index >= dim()) throw input_error("ModeGrid: index out of range");
    return index - cutoff;
  }
};

/// Fourier-coefficient sequence of a function on the circle.
///
/// Modes not stored but inside the resolved band count as exact zeros.
/// If `support_bound` is set, every coefficient with |n| > support_bound is
/// exactly zero, so the symbol is known on all of Z; otherwise it is only
/// known through its band and callers must check `require_band` before
/// reading outside it.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string label) : label_(std::move(label)) {}

  static Symbol constant(Complex value, std::string label = "const");
  static Symbol delta(int mode, Complex value = 1.0, std::string label = "delta");

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  void set(int mode, Complex value);
  Complex coeff(int mode) const;
  bool known(int mode) const;

  /// Largest |n| with a stored coefficient (0 when empty).
  int band() const { return band_; }
  std::optional<int> support_bound() const { return support_bound_; }
  void set_support_bound(int bound);

  /// Throws input_error unless coefficients are available for all |n| <= nmax.
  void require_band(int nmax) const;

  /// f(z) = sum_n f_n z^n over stored modes.
  Complex evaluate(Complex z) const;

  const std::map<int, Complex>& coefficients() const { return coeffs_; }

  /// Line-oriented text format: "# symbol <label> nmax=<n>" then "n re im".
  void save(std::ostream& os) const;
  static Symbol load(std::istream& is);

 private:
  std::string label_;
  std::map<int, Complex> coeffs_;
  std::optional<int> support_bound_;
  int band_ = 0;
};

}  // namespace modent::fourier
