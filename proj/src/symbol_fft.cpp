#include "modent/symbol_fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <vector>

namespace modent::mobius {

using fourier::Complex;
using fourier::Symbol;

namespace {
// FFTW planning mutates global state; execution itself is thread-safe.
std::mutex fftw_plan_mutex;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Symbol symbol_coefficients_fft(const std::function<Complex(Complex)>& f, int nmax,
                               int sample_count, const std::string& label) {
  if (!is_power_of_two(sample_count))
    throw input_error("symbol_coefficients_fft: sample_count must be a power of two");
  if (nmax < 0 || sample_count < 8 * std::max(1, nmax))
    throw input_error("symbol_coefficients_fft: need sample_count >= 8 * nmax");

  const int s = sample_count;
  const double step = 2.0 * std::numbers::pi / double(s);
  std::vector<std::complex<double>> buf(s);
  for (int j = 0; j < s; ++j) {
    const double theta = (double(j) + 0.5) * step;
    buf[j] = f(std::polar(1.0, theta));
  }

  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fftw_plan plan = fftw_plan_dft_1d(s, reinterpret_cast<fftw_complex*>(buf.data()),
                                      reinterpret_cast<fftw_complex*>(buf.data()), FFTW_FORWARD,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }

  Symbol out(label);
  const Complex i{0.0, 1.0};
  for (int n = -nmax; n <= nmax; ++n) {
    const int bin = ((n % s) + s) % s;
    const Complex phase = std::exp(-i * (double(n) * step / 2.0));
    out.set(n, phase * buf[bin] / double(s));
  }
  return out;
}

}  // namespace modent::mobius
