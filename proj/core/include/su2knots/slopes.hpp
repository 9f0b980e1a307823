#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace su2knots {

// Everything in this header is exact: arbitrary-precision integers and
// rationals only, no floating point.
using SlopeInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Reduced fraction m/n on the boundary torus, n >= 0, with (1, 0)
// denoting the slope at infinity.
struct Slope {
  SlopeInt m;
  SlopeInt n;

  static Slope of(SlopeInt m, SlopeInt n);
  static Slope infinity() { return Slope{1, 0}; }
  bool is_infinite() const { return n == 0; }
  Rational value() const;  // finite slopes only

  bool operator==(const Slope&) const = default;
};

std::string to_string(const Slope& s);
std::string to_string(const Rational& r);

// Torus knot T(p, q) in the normal form gcd(p, q) = 1, |p| >= 2, q >= 2.
// A negative q is folded into p before validation, so T(3, -2) becomes
// T(-3, 2).
struct TorusKnotParams {
  long long p;
  long long q;

  static TorusKnotParams normalized(long long p, long long q);
  long long seifert_slope() const { return p * q; }
};

// Open interval with rational or infinite endpoints (nullopt = -inf for
// lo, +inf for hi).
struct IntervalQ {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool contains(const Rational& x) const;
};

std::string to_string(const IntervalQ& i);

// Interior of the L-space filling slopes of a torus knot exterior:
// (pq - p - q, inf) for p > 0 and (-inf, pq - p + q) for p < 0.
IntervalQ lspace_interval(const TorusKnotParams& k);

// Boundary gluing of the splice on (meridian, longitude) homology
// coordinates; always determinant -1.
struct GluingMatrix {
  std::array<std::array<SlopeInt, 2>, 2> a;

  SlopeInt det() const;
  GluingMatrix inverse() const;
};

// With s_i the Seifert slopes p_i q_i: [[s2, 1 - s1*s2], [1, -s1]].
// Sends the meridian of M1 to the Seifert slope of M2 and the Seifert
// slope of M1 to the meridian of M2.
GluingMatrix gluing_matrix(const TorusKnotParams& k1, const TorusKnotParams& k2);

// Matrix action on the projective line over Q; bijective, exact.
Slope transform_slope(const GluingMatrix& m, const Slope& s);

// Pullback of a slope a/b on the second boundary through the gluing:
// n = a - s2*b, m = s1*(a - s2*b) + b.  Extends across the pole and
// infinity by reduction, and agrees with transform_slope on the inverse
// gluing matrix everywhere.
Slope pullback_slope(const Slope& ab, const SlopeInt& s1, const SlopeInt& s2);

// Exact verification that the gluing carries the complement of one
// L-space filling interval into the other, so every slope on either side
// is an L-space filling slope of the splice.
struct LSpaceCertificate {
  TorusKnotParams k1, k2;
  int case_tag;  // 1..4 by the signs of (p1, p2): ++, +-, -+, --
  // Complement of the second L-space interval: a closed ray plus the
  // slope at infinity.
  Rational complement_endpoint;
  bool complement_is_upper_ray;  // true: [endpoint, inf); false: (-inf, endpoint]
  bool complement_includes_infinity;
  // Image of the complement under the inverse gluing: a finite closed
  // interval with exact endpoints.
  Rational image_lo, image_hi;
  bool pole_outside_complement;
  bool containment;
  int spot_checks;
  bool spot_checks_pass;
};

LSpaceCertificate verify_gluing_covers(const TorusKnotParams& k1,
                                       const TorusKnotParams& k2,
                                       int spot_checks = 100);

std::string complement_to_string(const LSpaceCertificate& c);

struct SpliceReport {
  LSpaceCertificate lspace;
  bool su2_cyclic;       // known for splices of torus knot exteriors;
                         // recorded as a flag, not recomputed
  bool alternating_dbc;  // s1*s2 - 1 odd: double branched cover of an
                         // alternating knot
  bool conjecture_instance;  // SU(2)-cyclic and L-space at once
};

SpliceReport classify_splice(const TorusKnotParams& k1, const TorusKnotParams& k2,
                             int spot_checks = 100);

}  // namespace su2knots
