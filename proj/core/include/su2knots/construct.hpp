#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "su2knots/groups.hpp"
#include "su2knots/su2.hpp"

namespace su2knots {

// Irreducible PSU(2) representation of the (p1,p2,p3) triangle group.
// a1 maps to the rotation by 2*pi*k1/p1 about the z-axis, a2 to a rotation
// about an axis separated from z by the angle d in (0, pi), and a3 to
// (A1*A2)^-1 so the product relator holds exactly.
struct TriangleRep {
  std::array<int, 3> p;
  std::array<int, 3> k;
  int lift_sign;  // sign chosen for cos(d); +1 tried first
  double d;       // axis separation angle
  SU2 a1, a2, a3;
};

// Builds the representation for a given angle-selector triple, or scans
// selectors (gcd(k_i, p_i) = 1, 1 <= k_i < p_i) in lexicographic order and
// returns the first feasible one.  Throws InputError("infeasible ...") when
// an explicit selector admits no lift sign with |cos d| <= 1 - 1e-9.
TriangleRep triangle_rep(int p1, int p2, int p3,
                         std::optional<std::array<int, 3>> k_select = std::nullopt);

// All selector triples that triangle_rep accepts for these cone orders.
std::vector<std::array<int, 3>> feasible_k_triples(int p1, int p2, int p3);

struct ConjugatorResult {
  SU2 x;                  // canonicalized unit solution
  int nullity;            // nullspace dimension for the successful signs
  std::vector<int> signs;  // +-1 per generator
  double residual;        // max Frobenius deviation of x*c_i - s_i*t_i*x
};

// Finds a unit quaternion X with X*current_i = sign_i * target_i * X,
// scanning the 2^g sign vectors (all-plus first) and computing the
// nullspace of the stacked 4g x 4 linear system.  Throws
// NumericalError("not conjugate ...") when every sign vector fails and
// NumericalError("non-unique ...") when the nullspace dimension exceeds 1,
// which signals a reducible input.  Also verifies X^2 = +-identity.
ConjugatorResult conjugator_solver(std::span<const SU2> current,
                                   std::span<const SU2> target);

// Representation of pi_orbifold_extension(p1, p2, p3): the triangle images
// plus the involution conjugator on t.
struct ExtendedRep {
  TriangleRep tri;
  SU2 t_image;
  int conjugator_nullity;
  double max_relator_residual;  // over all 7 relators, up to sign
};

// Extends a triangle representation by solving the conjugation condition
// for the covering involution.  Postconditions: every relator of the
// extension evaluates to +-identity within 1e-10 and trace(t) = 0 within
// 1e-10.
ExtendedRep extend_rep(const TriangleRep& tri);

// Machine-checked witness that the knot admits an irreducible trace-free
// representation with non-cyclic image on the branched-cover side, hence
// one that is not binary dihedral.
struct WitnessCertificate {
  MontesinosKnot knot;
  std::array<int, 3> p;
  std::array<int, 3> k;
  int lift_sign;
  double axis_separation;
  std::array<SU2, 4> images;  // a1, a2, a3, t
  double max_relator_residual;
  double meridian_trace;
  bool delta_image_cyclic;  // must be false
  int conjugator_nullity;   // must be 1
};

// Full pipeline on a validated Montesinos knot with >= 3 tangles.  Throws
// InputError("two-bridge regime ...") for fewer tangles and NumericalError
// if any certificate bound fails.
WitnessCertificate witness_montesinos(const MontesinosKnot& k,
                                      std::optional<std::array<int, 3>> k_select = std::nullopt);

}  // namespace su2knots
