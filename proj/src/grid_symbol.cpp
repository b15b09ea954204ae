#include "modent/grid_symbol.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace modent::fourier {

Symbol Symbol::constant(Complex value, std::string label) {
  Symbol s(std::move(label));
  s.set(0, value);
  s.set_support_bound(0);
  return s;
}

Symbol Symbol::delta(int mode, Complex value, std::string label) {
  Symbol s(std::move(label));
  s.set(mode, value);
  s.set_support_bound(std::abs(mode));
  return s;
}

void Symbol::set(int mode, Complex value) {
  coeffs_[mode] = value;
  band_ = std::max(band_, std::abs(mode));
}

bool Symbol::known(int mode) const {
  if (std::abs(mode) <= band_) return true;
  return support_bound_ && std::abs(mode) > *support_bound_;
}

Complex Symbol::coeff(int mode) const {
  auto it = coeffs_.find(mode);
  if (it != coeffs_.end()) return it->second;
  if (!known(mode))
    throw input_error("Symbol '" + label_ + "': coefficient " + std::to_string(mode) +
                      " outside resolved band " + std::to_string(band_));
  return {0.0, 0.0};
}

void Symbol::set_support_bound(int bound) {
  if (bound < 0) throw input_error("Symbol: support bound must be >= 0");
  support_bound_ = bound;
}

void Symbol::require_band(int nmax) const {
  if (nmax <= band_) return;
  if (support_bound_) return;  // zero beyond the support, known everywhere
  throw input_error("Symbol '" + label_ + "': coefficients resolved to |n| <= " +
                    std::to_string(band_) + ", need " + std::to_string(nmax));
}

Complex Symbol::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (const auto& [n, c] : coeffs_) acc += c * std::pow(z, n);
  return acc;
}

void Symbol::save(std::ostream& os) const {
  os << "# symbol " << (label_.empty() ? "unnamed" : label_) << " nmax=" << band_ << "\n";
  char line[96];
  for (int n = -band_; n <= band_; ++n) {
    const Complex c = known(n) ? coeff(n) : Complex{0.0, 0.0};
    std::snprintf(line, sizeof(line), "%d %.17g %.17g\n", n, c.real(), c.imag());
    os << line;
  }
}

Symbol Symbol::load(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("# symbol ", 0) != 0)
    throw input_error("Symbol::load: missing '# symbol' header");
  std::istringstream hs(header.substr(9));
  std::string label, nmax_field;
  hs >> label >> nmax_field;
  if (nmax_field.rfind("nmax=", 0) != 0)
    throw input_error("Symbol::load: malformed header, expected nmax=<n>");
  const int nmax = std::atoi(nmax_field.c_str() + 5);

  Symbol s(label);
  std::string line;
  int count = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int n;
    double re, im;
    if (!(ls >> n >> re >> im)) throw input_error("Symbol::load: malformed line: " + line);
    s.set(n, {re, im});
    ++count;
  }
  if (count == 0 && nmax > 0) throw input_error("Symbol::load: no coefficient lines");
  return s;
}

}  // namespace modent::fourier
