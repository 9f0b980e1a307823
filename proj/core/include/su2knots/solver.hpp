#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "su2knots/presentation.hpp"
#include "su2knots/su2.hpp"

namespace su2knots {

struct TraceConstraint {
  int gen;        // generator index
  double target;  // desired trace of its image
};

// Random-restart least-squares search for representations of a finite
// presentation into SU(2).  In strict mode every relator must reach +I;
// in projective mode +-I both count (for presentations that only hold up
// to sign, such as lifted PSU(2) ones).
struct SolveProblem {
  Presentation presentation;
  std::vector<TraceConstraint> trace_constraints;
  bool projective = false;
  std::uint64_t seed = 0;
  int restarts = 1;
  double tol = 1e-10;
};

struct SolveResult {
  std::vector<SU2> assignment;
  double residual;
  // Traces of all generators and pairwise products, rounded to 6
  // decimals and stored as integers (value * 10^6).
  std::vector<long long> character_key;
  bool irreducible;  // generator images do not share a single axis
};

// sqrt of: sum over relators of the squared Frobenius distance of the
// relator image to identity (to the nearer of +-I in projective mode),
// plus sum over constraints of squared trace deviation.
double residual(const SolveProblem& problem, std::span<const SU2> assignment);
inline double residual(const SolveProblem& problem, const std::vector<SU2>& a) {
  return residual(problem, std::span<const SU2>(a));
}

// Gradient of the squared residual via forward finite differences in the
// per-generator tangent charts; exposed for the derivative cross-check.
std::vector<double> fd_gradient(const SolveProblem& problem,
                                const std::vector<SU2>& assignment, double step);

// Deterministic given (seed, restarts): each restart draws its start
// point from a counter-based stream, descends, and results below tol are
// collected and deduplicated by character key.
std::vector<SolveResult> solve(const SolveProblem& problem);

// One representative per distinct character key, ordered by residual
// then key.
std::vector<SolveResult> dedupe_characters(std::vector<SolveResult> results);

std::vector<long long> character_key(std::span<const SU2> assignment);
inline std::vector<long long> character_key(const std::vector<SU2>& a) {
  return character_key(std::span<const SU2>(a));
}

std::string character_key_to_string(const std::vector<long long>& key);

}  // namespace su2knots
