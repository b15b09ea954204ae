#include "modent/mobius.hpp"

#include <cmath>
#include <numbers>

namespace modent::mobius {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_positive(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}
}  // namespace

bool Arc::contains(double theta, double endpoint_tol) const {
  const double len = length();
  const double t = wrap_positive(theta - lo);
  if (std::min(t, kTwoPi - t) < endpoint_tol || std::abs(t - len) < endpoint_tol)
    throw input_error("Arc::contains: point within tolerance of an arc endpoint");
  return t > 0.0 && t < len;
}

bool Arc::contains(Complex z, double endpoint_tol) const {
  return contains(std::arg(z), endpoint_tol);
}

SymmetricIntervalFamily::SymmetricIntervalFamily(double phi_) : phi(phi_) {
  if (!(phi > 0.0) || !(phi < kPi))
    throw input_error("SymmetricIntervalFamily: phi must lie in (0, pi)");
  i1 = {0.0, phi};
  i2 = {phi - kPi, 0.0};
  minus_i1 = {kPi, kPi + phi};
  minus_i2 = {phi, kPi};
}

MobiusMap::MobiusMap(Complex a, Complex b) : a_(a), b_(b) {
  const double det = std::norm(a) - std::norm(b);
  if (std::abs(std::abs(det) - 1.0) > 1e-10)
    throw input_error("MobiusMap: need |a|^2 - |b|^2 = +-1");
  signature_ = det > 0.0 ? 1 : -1;
}

Complex MobiusMap::apply(Complex z) const {
  return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
}

MobiusMap MobiusMap::inverse() const {
  // [[a, b], [conj(b), conj(a)]]^{-1} up to det: [[conj(a), -b], [-conj(b), a]].
  return MobiusMap(std::conj(a_), -b_);
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
  const Complex a = a_ * o.a() + b_ * std::conj(o.b());
  const Complex b = a_ * o.b() + b_ * std::conj(o.a());
  return MobiusMap(a, b);
}

namespace {
double checked_phi(double phi) {
  if (!(phi > 0.0) || !(phi < kPi)) throw input_error("InvolutionM1: phi must lie in (0, pi)");
  return phi;
}
}  // namespace

InvolutionM1::InvolutionM1(double phi)
    : phi_(checked_phi(phi)),
      w_(std::polar(1.0, 2.0 * phi)),
      // su(1,1) form of (z(1+w)/2 - w)/(z - (1+w)/2): a = i cot(phi),
      // b = -i e^{i phi}/sin(phi), signature -1 (orientation reversing).
      map_(Complex{0.0, 1.0} * std::cos(phi) / std::sin(phi),
           Complex{0.0, -1.0} * std::polar(1.0, phi) / std::sin(phi)) {}

Complex InvolutionM1::apply(Complex z) const {
  const Complex c = 0.5 * (1.0 + w_);
  return (z * c - w_) / (z - c);
}

Complex ProjectiveMap::apply(Complex z) const { return (m[0] * z + m[1]) / (m[2] * z + m[3]); }

ProjectiveMap ProjectiveMap::inverse() const { return {{m[3], -m[1], -m[2], m[0]}}; }

ProjectiveMap ProjectiveMap::compose(const ProjectiveMap& o) const {
  return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
           m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

ProjectiveMap ProjectiveMap::from_three_points(Complex z1, Complex z2, Complex z3, Complex w1,
                                               Complex w2, Complex w3) {
  // Map sending (p1, p2, p3) -> (0, 1, inf).
  auto to_standard = [](Complex p1, Complex p2, Complex p3) {
    return ProjectiveMap{{p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1)}};
  };
  const ProjectiveMap s = to_standard(z1, z2, z3);
  const ProjectiveMap t = to_standard(w1, w2, w3);
  return t.inverse().compose(s);
}

Complex cross_ratio(Complex z1, Complex z2, Complex z3, Complex z4) {
  return ((z1 - z3) * (z2 - z4)) / ((z2 - z3) * (z1 - z4));
}

namespace {
// Cross-ratio of the symmetric family endpoints at the given phi, taken in
// the order (outer start, inner start, inner end, outer end).
double symmetric_family_cross_ratio(double phi) {
  const Complex zc = std::polar(1.0, phi - kPi);
  const Complex za = 1.0;
  const Complex zb = std::polar(1.0, phi);
  const Complex zd = -1.0;
  return cross_ratio(zc, za, zb, zd).real();
}
}  // namespace

double cross_ratio_to_phi(double i_start, double i_end, double outer_start, double outer_end) {
  // Normalize to the outer start and demand strict cyclic order c < a < b < d.
  const double a = wrap_positive(i_start - outer_start);
  const double b = wrap_positive(i_end - outer_start);
  const double d = wrap_positive(outer_end - outer_start);
  const double tol = 1e-12;
  if (!(a > tol && b > a + tol && d > b + tol && d < kTwoPi - tol))
    throw input_error("cross_ratio_to_phi: endpoints must be in strict cyclic order "
                      "outer_start < i_start < i_end < outer_end");

  const Complex zc = 1.0;
  const Complex za = std::polar(1.0, a);
  const Complex zb = std::polar(1.0, b);
  const Complex zd = std::polar(1.0, d);
  const Complex x = cross_ratio(zc, za, zb, zd);
  if (std::abs(x.imag()) > 1e-9)
    throw input_error("cross_ratio_to_phi: endpoints not concyclic within tolerance");
  const double target = x.real();
  if (!(target > 1.0)) throw input_error("cross_ratio_to_phi: degenerate configuration");

  // symmetric_family_cross_ratio decreases from +inf to 1 on (0, pi).
  double lo = 1e-9, hi = kPi - 1e-9;
  if (symmetric_family_cross_ratio(lo) < target || symmetric_family_cross_ratio(hi) > target)
    throw input_error("cross_ratio_to_phi: cross-ratio outside representable range");
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (symmetric_family_cross_ratio(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace modent::mobius
