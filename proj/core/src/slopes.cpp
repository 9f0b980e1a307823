#include "su2knots/slopes.hpp"

#include <numeric>
#include <sstream>

#include "su2knots/errors.hpp"

namespace su2knots {

namespace mp = boost::multiprecision;

Slope Slope::of(SlopeInt m, SlopeInt n) {
  if (m == 0 && n == 0) throw InputError("Slope: 0/0 is not a slope");
  SlopeInt g = mp::gcd(m < 0 ? SlopeInt(-m) : m, n < 0 ? SlopeInt(-n) : n);
  m /= g;
  n /= g;
  if (n < 0 || (n == 0 && m < 0)) {
    m = -m;
    n = -n;
  }
  return Slope{std::move(m), std::move(n)};
}

Rational Slope::value() const {
  if (is_infinite()) throw InputError("Slope: infinite slope has no rational value");
  return Rational(m, n);
}

std::string to_string(const Slope& s) {
  std::ostringstream os;
  if (s.is_infinite()) {
    os << "1/0";
  } else {
    os << s.m << '/' << s.n;
  }
  return os.str();
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  if (mp::denominator(r) == 1) {
    os << mp::numerator(r);
  } else {
    os << mp::numerator(r) << '/' << mp::denominator(r);
  }
  return os.str();
}

TorusKnotParams TorusKnotParams::normalized(long long p, long long q) {
  if (q < 0) {  // T(p, -q) = T(-p, q) after transferring the sign
    p = -p;
    q = -q;
  }
  if (q < 2 || std::abs(p) < 2) {
    throw InputError("TorusKnotParams: need |p| >= 2 and q >= 2");
  }
  if (std::gcd(std::abs(p), q) != 1) {
    throw InputError("TorusKnotParams: p and q must be coprime");
  }
  return TorusKnotParams{p, q};
}

bool IntervalQ::contains(const Rational& x) const {
  if (lo && x <= *lo) return false;
  if (hi && x >= *hi) return false;
  return true;
}

std::string to_string(const IntervalQ& i) {
  std::ostringstream os;
  os << '(' << (i.lo ? to_string(*i.lo) : std::string("-inf")) << ", "
     << (i.hi ? to_string(*i.hi) : std::string("inf")) << ')';
  return os.str();
}

IntervalQ lspace_interval(const TorusKnotParams& k) {
  const long long s = k.seifert_slope();
  if (k.p > 0) {
    return IntervalQ{Rational(s - k.p - k.q), std::nullopt};
  }
  return IntervalQ{std::nullopt, Rational(s - k.p + k.q)};
}

SlopeInt GluingMatrix::det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

GluingMatrix GluingMatrix::inverse() const {
  const SlopeInt d = det();
  if (d != 1 && d != -1) {
    throw InputError("GluingMatrix: only unimodular matrices invert over Z");
  }
  // adj / det
  return GluingMatrix{{{{a[1][1] / d, -a[0][1] / d}, {-a[1][0] / d, a[0][0] / d}}}};
}

GluingMatrix gluing_matrix(const TorusKnotParams& k1, const TorusKnotParams& k2) {
  const SlopeInt s1 = k1.seifert_slope();
  const SlopeInt s2 = k2.seifert_slope();
  return GluingMatrix{{{{s2, 1 - s1 * s2}, {SlopeInt(1), -s1}}}};
}

Slope transform_slope(const GluingMatrix& m, const Slope& s) {
  return Slope::of(m.a[0][0] * s.m + m.a[0][1] * s.n,
                   m.a[1][0] * s.m + m.a[1][1] * s.n);
}

Slope pullback_slope(const Slope& ab, const SlopeInt& s1, const SlopeInt& s2) {
  const SlopeInt n = ab.m - s2 * ab.n;
  const SlopeInt m = s1 * n + ab.n;
  return Slope::of(m, n);
}

namespace {

// Deterministic stream for spot checks, keyed on the splice parameters.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

Rational mobius_pullback(const Rational& x, const SlopeInt& s1, const SlopeInt& s2) {
  return Rational(s1) + Rational(1) / (x - Rational(s2));
}

}  // namespace

LSpaceCertificate verify_gluing_covers(const TorusKnotParams& k1,
                                       const TorusKnotParams& k2, int spot_checks) {
  const SlopeInt s1 = k1.seifert_slope();
  const SlopeInt s2 = k2.seifert_slope();
  const IntervalQ l1 = lspace_interval(k1);
  const IntervalQ l2 = lspace_interval(k2);

  LSpaceCertificate cert;
  cert.k1 = k1;
  cert.k2 = k2;
  cert.case_tag = (k1.p > 0 ? (k2.p > 0 ? 1 : 2) : (k2.p > 0 ? 3 : 4));

  // Complement of the open interval L2 in Q u {1/0}: a closed ray plus
  // the slope at infinity (both forms of the interval exclude infinity).
  cert.complement_includes_infinity = true;
  if (k2.p > 0) {
    cert.complement_endpoint = *l2.lo;
    cert.complement_is_upper_ray = false;  // (-inf, endpoint]
  } else {
    cert.complement_endpoint = *l2.hi;
    cert.complement_is_upper_ray = true;  // [endpoint, inf)
  }

  // The pole of x -> s1 + 1/(x - s2) sits at the Seifert slope s2, which
  // lies inside L2 in every case; the complement is pole-free.
  cert.pole_outside_complement = l2.contains(Rational(s2)) &&
                                 (cert.complement_is_upper_ray
                                      ? Rational(s2) < cert.complement_endpoint
                                      : Rational(s2) > cert.complement_endpoint);

  // The map is strictly decreasing away from the pole, so the image of
  // the closed ray (with infinity at the far end) is the closed interval
  // spanned by the two endpoint images, h^-1(endpoint) and h^-1(inf) = s1.
  const Rational image_of_endpoint = mobius_pullback(cert.complement_endpoint, s1, s2);
  const Rational image_of_infinity(s1);
  cert.image_lo = std::min(image_of_endpoint, image_of_infinity);
  cert.image_hi = std::max(image_of_endpoint, image_of_infinity);

  cert.containment = l1.contains(cert.image_lo) && l1.contains(cert.image_hi) &&
                     cert.pole_outside_complement;

  // Spot checks: random exact slopes in the complement, pulled back via
  // the integer formula rather than the endpoint map.
  cert.spot_checks = spot_checks;
  cert.spot_checks_pass = true;
  SplitMix64 stream((static_cast<std::uint64_t>(k1.p * 131 + k1.q) << 32) ^
                    static_cast<std::uint64_t>(k2.p * 131 + k2.q) ^
                    static_cast<std::uint64_t>(spot_checks));
  for (int i = 0; i < spot_checks; ++i) {
    const SlopeInt num = SlopeInt(stream.next() % 2000001) - 1000000;
    const SlopeInt den = SlopeInt(stream.next() % 1000000) + 1;
    const Rational offset(num < 0 ? -num : num, den);
    const Rational x = cert.complement_is_upper_ray
                           ? Rational(cert.complement_endpoint + offset)
                           : Rational(cert.complement_endpoint - offset);
    const Slope pulled = pullback_slope(
        Slope::of(mp::numerator(x), mp::denominator(x)), s1, s2);
    if (pulled.is_infinite() || !l1.contains(pulled.value())) {
      cert.spot_checks_pass = false;
    }
  }
  // The slope at infinity belongs to the complement; its pullback is s1.
  if (!l1.contains(Rational(s1))) cert.spot_checks_pass = false;

  return cert;
}

std::string complement_to_string(const LSpaceCertificate& c) {
  std::ostringstream os;
  if (c.complement_is_upper_ray) {
    os << '[' << to_string(c.complement_endpoint) << ", inf)";
  } else {
    os << "(-inf, " << to_string(c.complement_endpoint) << ']';
  }
  if (c.complement_includes_infinity) os << " u {1/0}";
  return os.str();
}

SpliceReport classify_splice(const TorusKnotParams& k1, const TorusKnotParams& k2,
                             int spot_checks) {
  SpliceReport report;
  report.lspace = verify_gluing_covers(k1, k2, spot_checks);
  report.su2_cyclic = true;
  const SlopeInt product = SlopeInt(k1.seifert_slope()) * SlopeInt(k2.seifert_slope()) - 1;
  report.alternating_dbc = (product % 2 != 0);
  report.conjecture_instance = report.lspace.containment && report.su2_cyclic;
  return report;
}

}  // namespace su2knots
