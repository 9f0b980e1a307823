#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "su2knots/groups.hpp"
#include "su2knots/su2.hpp"

namespace su2knots {

// One trace-free irreducible character of a two-bridge knot group in the
// normal form a -> i, b -> cos(t) i + sin(t) j.
struct TraceFreeCharacter {
  double t;         // axis angle parameter in (0, pi)
  double trace_ab;  // trace of the image of ab, in (-2, 2)
  double residual;  // Frobenius deviation of the relator from identity
};

// The normal-form generator images for a census parameter t.
SU2 census_generator_a();
SU2 census_generator_b(double t);

// Scans t over a uniform grid on (0, pi), locates sign changes of the
// signed relator surrogate, refines them by bisection and keeps the roots
// where the relator evaluates to +identity (roots reaching -identity are
// projective-only and are counted separately via projective_only_roots).
// Tangency dips below tol without a sign change are rejected and counted.
std::vector<TraceFreeCharacter> trace_free_census(int p, int q, int grid = 1024,
                                                  double tol = 1e-9,
                                                  int* projective_only_roots = nullptr,
                                                  int* tangency_warnings = nullptr);

// (det - 1) / 2; the determinant must be odd and >= 1.
int expected_binary_dihedral_count(std::uint64_t det);

enum class KnotKind { TwoBridge, MontesinosThreePlus, Other };
enum class Verdict { Su2Simple, NotSu2Simple, Unknown };
enum class InputFamily { Montesinos, TwoBridgeParams, Other };

struct SimplicityReport {
  KnotKind kind;
  Verdict verdict;
  std::string reason;
  std::uint64_t determinant;
};

// Classification rules, in order: Montesinos with >= 3 tangles is never
// SU(2)-simple; Montesinos with fewer tangles and explicit two-bridge
// input are SU(2)-simple; a nontrivial knot with determinant 1 is never
// SU(2)-simple.  Anything else is unknown.
SimplicityReport classify_rules(InputFamily family, std::size_t tangle_count,
                                std::uint64_t det, bool nontrivial);
SimplicityReport classify_knot(const MontesinosKnot& k);
SimplicityReport classify_knot_two_bridge(int p, int q);

const char* to_string(KnotKind k);
const char* to_string(Verdict v);

}  // namespace su2knots
