#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "su2knots/presentation.hpp"

namespace su2knots {

// Orbifold fundamental group of the n-punctured sphere with cone orders
// p_1..p_n:  < a_1..a_n | a_i^{p_i}, a_1 a_2 ... a_n >.   Requires n >= 3
// and every p_i >= 2.
Presentation orbifold_group(const std::vector<int>& p);

// Images of a_1..a_n under the involution induced by the covering
// reflection: a_1 -> a_1^-1, a_i -> (a_1..a_{i-1}) a_i^-1 (a_1..a_{i-1})^-1
// for 1 < i < n, a_n -> a_n^-1.
std::vector<Word> covering_involution_images(int n);
GroupMap covering_involution(const std::vector<int>& p);

// Quotient onto the triangle group of the first three cone points:
// a_i -> a_i for i <= 3, a_i -> 1 for i > 3.
GroupMap triangle_quotient(const std::vector<int>& p);

// Extension of the (p1,p2,p3) triangle group by the covering involution:
// generators a1,a2,a3,t with the seven relators a_i^{p_i}, a1 a2 a3, t^2
// and t a_i t^-1 * inv(a_i)^-1 for i = 1, 2, where inv is the involution
// above.  The conjugation relator for a3 is a consequence and is omitted.
Presentation pi_orbifold_extension(int p1, int p2, int p3);

struct Tangle {
  int q;
  int p;
  bool operator==(const Tangle&) const = default;
};

// Cyclic sum of rational tangles q_i/p_i describing a Montesinos knot.
// Instances come from montesinos_validate, which enforces coprimality,
// the at-most-one-even-p condition and odd branched-cover homology.
class MontesinosKnot {
public:
  const std::vector<Tangle>& tangles() const { return tangles_; }
  std::size_t tangle_count() const { return tangles_.size(); }
  // |H1| of the double branched cover, always odd for a knot.
  std::uint64_t determinant() const { return determinant_; }

private:
  friend MontesinosKnot montesinos_validate(const std::vector<Tangle>& tangles);
  MontesinosKnot(std::vector<Tangle> tangles, std::uint64_t determinant)
      : tangles_(std::move(tangles)), determinant_(determinant) {}

  std::vector<Tangle> tangles_;
  std::uint64_t determinant_;
};

// Throws InputError("bad tangle: ...") on coprimality/denominator
// violations and InputError("link not knot: ...") when more than one p_i
// is even or the branched double cover has even or infinite H1.
MontesinosKnot montesinos_validate(const std::vector<Tangle>& tangles);

// Seifert presentation of the double branched cover:
// < x_1..x_n, h | [x_i,h], x_i^{p_i} h^{q_i}, x_1...x_n >.
// Killing h recovers orbifold_group(p).
Presentation seifert_group(const MontesinosKnot& k);
// Same, without requiring a validated knot (used by the validator itself).
Presentation seifert_group(const std::vector<Tangle>& tangles);

// Two-bridge knot group in the standard normal form
// < a, b | w a w^-1 b^-1 >,  w = a^{e_1} b^{e_2} ... (p-1 alternating
// letters), e_i = (-1)^{floor(i*q/p)}.  Requires p odd >= 3, 0 < q < p,
// gcd(p, q) = 1.
Presentation two_bridge_group(int p, int q);

// Order of the abelianization when finite, 0 when infinite, via Smith
// reduction of the exponent-sum relation matrix.
std::uint64_t h1_order(const Presentation& p);

}  // namespace su2knots
