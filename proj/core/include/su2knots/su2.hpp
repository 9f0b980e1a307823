#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace su2knots {

// Vector-part norm below which an element counts as central (+-1).
inline constexpr double kCentralTol = 1e-9;

// Default tolerance for the structural tests (irreducibility, cyclic
// image, binary dihedral recognition).
inline constexpr double kStructuralTol = 1e-6;

using Vec3 = std::array<double, 3>;

double norm3(const Vec3& v);
Vec3 cross3(const Vec3& a, const Vec3& b);
double dot3(const Vec3& a, const Vec3& b);

// An element of SU(2) stored as a unit quaternion w + xi + yj + zk.
// The corresponding matrix trace is 2w.  Products renormalize every 16
// multiplications so that long words stay on the unit sphere.
class SU2 {
public:
  SU2() : w_(1.0), x_(0.0), y_(0.0), z_(0.0), chain_(0) {}
  SU2(double w, double x, double y, double z);

  static SU2 identity() { return SU2(); }

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  // Matrix trace, 2w by definition.
  double trace() const { return 2.0 * w_; }

  double norm() const;
  double vector_norm() const;
  bool is_central(double tol = kCentralTol) const { return vector_norm() < tol; }

  // Unit rotation axis of the vector part.  Caller must ensure the
  // element is not central.
  Vec3 axis() const;

  SU2 inverse() const { return SU2(w_, -x_, -y_, -z_, chain_); }
  SU2 operator-() const { return SU2(-w_, -x_, -y_, -z_, chain_); }
  SU2 operator*(const SU2& rhs) const;
  SU2 pow(int e) const;

  // Frobenius distance between the 2x2 matrices of two quaternions.
  friend double frobenius_distance(const SU2& a, const SU2& b);

  // Distance to +-identity, whichever sign is nearer.
  double projective_identity_distance() const;

private:
  SU2(double w, double x, double y, double z, std::uint8_t chain)
      : w_(w), x_(x), y_(y), z_(z), chain_(chain) {}
  void renormalize();

  double w_, x_, y_, z_;
  std::uint8_t chain_;  // multiplications since last renormalization
};

// PSU(2) element held as a canonical SU(2) representative: the first
// coordinate of (w, x, y, z) exceeding 1e-9 in absolute value is made
// positive, so canonicalize(g) == canonicalize(-g).
class PSU2 {
public:
  explicit PSU2(const SU2& g) : rep_(canonicalize(g)) {}
  const SU2& rep() const { return rep_; }
  static SU2 canonicalize(const SU2& g);

private:
  SU2 rep_;
};

// Squared trace of either SU(2) lift; well defined on PSU(2).
double tr2(const PSU2& g);

struct AxisAngle {
  Vec3 axis;     // unit vector
  double angle;  // SO(3) rotation angle of the PSU(2) image, in (0, 2*pi)
};

// cos(angle/2) + sin(angle/2) * (axis . (i,j,k)).  The PSU(2) image is
// the SO(3) rotation by `angle` about `axis`.
SU2 from_axis_angle(const Vec3& axis, double angle);

// Inverse of from_axis_angle up to quaternion sign; throws NumericalError
// for central elements, which have no well-defined axis.
AxisAngle axis_angle(const SU2& g);

// (trace A, trace B, trace AB): the conjugation-invariant triple that
// determines the character of the subgroup generated by A and B.
std::array<double, 3> char_triple(const SU2& a, const SU2& b);

// True iff neither element is central and their rotation axes are not
// parallel: |axis(A) x axis(B)| > tol.
bool is_irreducible_pair(const SU2& a, const SU2& b, double tol = kStructuralTol);

// Commutator-trace form of the same test: |trace(ABA^-1B^-1) - 2|.
// Agrees with the axis test away from the threshold.
double commutator_trace_gap(const SU2& a, const SU2& b);

// True iff all non-central elements share one rotation axis up to sign.
bool is_cyclic_image(std::span<const SU2> gens, double tol = kStructuralTol);

// True iff there is an axis n (searched among generator axes and pairwise
// product axes) such that every non-central generator is, within tol,
// either a rotation about n or a half-turn about an axis perpendicular
// to n.  Covers the cyclic, reflection-only and mixed configurations.
bool is_binary_dihedral_image(std::span<const SU2> gens, double tol = kStructuralTol);

inline bool is_cyclic_image(const std::vector<SU2>& gens, double tol = kStructuralTol) {
  return is_cyclic_image(std::span<const SU2>(gens), tol);
}
inline bool is_binary_dihedral_image(const std::vector<SU2>& gens,
                                     double tol = kStructuralTol) {
  return is_binary_dihedral_image(std::span<const SU2>(gens), tol);
}

}  // namespace su2knots
