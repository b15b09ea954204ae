#pragma once

#include <array>
#include <complex>

#include "modent/errors.hpp"

namespace modent::mobius {

using Complex = std::complex<double>;

/// Open arc (lo, hi) on the circle, angles in radians, 0 < hi - lo < 2pi.
struct Arc {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  /// Strict interior membership; querying within `endpoint_tol` of an
  /// endpoint is ambiguous and raises input_error.
  bool contains(double theta, double endpoint_tol = 1e-13) const;
  bool contains(Complex z, double endpoint_tol = 1e-13) const;
};

/// The four symmetric arcs cut by phi in (0, pi):
///   I1 = (0, phi), I2 = (phi - pi, 0), -I1 and -I2 their antipodes.
/// Their closures cover the circle; squaring sends I1 and -I1 onto (0, 2phi).
struct SymmetricIntervalFamily {
  double phi;
  Arc i1, i2, minus_i1, minus_i2;

  explicit SymmetricIntervalFamily(double phi_);
};

/// z -> (a z + b) / (conj(b) z + conj(a)) with |a|^2 - |b|^2 = +-1.
/// Signature +1 preserves orientation, -1 reverses it (like z -> 1/z).
class MobiusMap {
 public:
  MobiusMap(Complex a, Complex b);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  int signature() const { return signature_; }

  Complex apply(Complex z) const;
  MobiusMap inverse() const;
  MobiusMap compose(const MobiusMap& other) const;  // this after other

 private:
  Complex a_, b_;
  int signature_ = 1;
};

/// The rational involution fixing 1 and e^{2 i phi}:
///   m1(z) = (z (1+w)/2 - w) / (z - (1+w)/2),  w = e^{2 i phi}.
/// At phi = pi/2 this is z -> 1/z.
class InvolutionM1 {
 public:
  explicit InvolutionM1(double phi);

  double phi() const { return phi_; }
  Complex w() const { return w_; }
  Complex apply(Complex z) const;
  const MobiusMap& as_mobius() const { return map_; }

 private:
  double phi_;
  Complex w_;
  MobiusMap map_;
};

/// Unnormalized 2x2 fractional-linear map, used to build maps from
/// three-point data (cross-checks only; the main path uses MobiusMap).
struct ProjectiveMap {
  std::array<Complex, 4> m;  // [[m0, m1], [m2, m3]]

  Complex apply(Complex z) const;
  ProjectiveMap inverse() const;
  ProjectiveMap compose(const ProjectiveMap& other) const;
  static ProjectiveMap from_three_points(Complex z1, Complex z2, Complex z3, Complex w1,
                                         Complex w2, Complex w3);
};

/// Cross-ratio (z1 - z3)(z2 - z4) / ((z2 - z3)(z1 - z4)).
Complex cross_ratio(Complex z1, Complex z2, Complex z3, Complex z4);

/// Reduce an inclusion of intervals I = (a, b) inside I~ = (c, d) (angles,
/// strict cyclic order c < a < b < d) to the symmetric configuration: returns
/// the phi whose symmetric family has the same four-endpoint cross-ratio.
/// Solved by bisection to 1e-10.
double cross_ratio_to_phi(double i_start, double i_end, double outer_start, double outer_end);

}  // namespace modent::mobius
