#include <doctest.h>

#include <cmath>
#include <set>

#include "su2knots/census.hpp"
#include "su2knots/construct.hpp"
#include "su2knots/errors.hpp"
#include "su2knots/groups.hpp"
#include "su2knots/solver.hpp"

using namespace su2knots;

namespace {

SolveProblem make_problem(Presentation p, int restarts, std::uint64_t seed,
                          bool projective = false) {
  SolveProblem out;
  out.presentation = std::move(p);
  out.restarts = restarts;
  out.seed = seed;
  out.projective = projective;
  return out;
}

}  // namespace

TEST_CASE("residual values") {
  Presentation z3;
  z3.generators = {"a"};
  z3.relators = {Word::generator(0, 3)};
  SolveProblem problem = make_problem(z3, 1, 0);

  const std::vector<SU2> trivial{SU2::identity()};
  CHECK(residual(problem, trivial) == 0.0);

  // a -> i: |i^3 - I| = |-i - I| = 2 in the Frobenius norm
  const std::vector<SU2> bad{SU2(0, 1, 0, 0)};
  CHECK(residual(problem, bad) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(residual(problem, std::vector<SU2>{}), InputError);

  // witness images satisfy the extension projectively
  const TriangleRep tri = triangle_rep(3, 5, 7);
  const ExtendedRep ext = extend_rep(tri);
  SolveProblem ext_problem =
      make_problem(pi_orbifold_extension(3, 5, 7), 1, 0, /*projective=*/true);
  const std::vector<SU2> witness{tri.a1, tri.a2, tri.a3, ext.t_image};
  CHECK(residual(ext_problem, witness) < 1e-10);
  // strict mode sees the sign obstruction instead
  ext_problem.projective = false;
  CHECK(residual(ext_problem, witness) > 1.0);
}

TEST_CASE("finite-difference gradient agrees with central differences") {
  SolveProblem problem = make_problem(two_bridge_group(5, 3), 1, 0);
  problem.trace_constraints = {{0, 0.0}, {1, 0.0}};

  const std::vector<SU2> point{census_generator_a(), census_generator_b(0.9)};
  const std::vector<double> forward = fd_gradient(problem, point, 1e-7);

  // central differences at a coarser step
  auto squared = [&](const std::vector<SU2>& a) {
    const double r = residual(problem, a);
    return r * r;
  };
  const double h = 1e-5;
  for (std::size_t g = 0; g < point.size(); ++g) {
    for (int axis = 0; axis < 3; ++axis) {
      auto shifted = [&](double step) {
        std::vector<SU2> copy = point;
        const Vec3 dir{axis == 0 ? 1.0 : 0.0, axis == 1 ? 1.0 : 0.0,
                       axis == 2 ? 1.0 : 0.0};
        copy[g] = from_axis_angle(dir, 2.0 * step) * copy[g];
        return squared(copy);
      };
      const double central = (shifted(h) - shifted(-h)) / (2.0 * h);
      // 1e-3 relative agreement, with an absolute allowance for the
      // forward-difference truncation error on vanishing components
      const double scale = std::max(std::abs(central), std::abs(forward[3 * g + axis]));
      CHECK(std::abs(central - forward[3 * g + axis]) < 1e-3 * scale + 1e-4);
    }
  }
}

TEST_CASE("solve finds the forced trivial solution") {
  Presentation kill;
  kill.generators = {"a"};
  kill.relators = {Word::generator(0, 1)};
  const auto results = solve(make_problem(kill, 20, 3));
  REQUIRE(results.size() == 1);
  CHECK(results[0].residual < 1e-10);
  CHECK(results[0].character_key == std::vector<long long>{2000000});
  CHECK_FALSE(results[0].irreducible);
}

TEST_CASE("solve is deterministic for a fixed seed") {
  SolveProblem problem = make_problem(two_bridge_group(5, 3), 60, 12345);
  problem.trace_constraints = {{0, 0.0}, {1, 0.0}};
  const auto first = solve(problem);
  const auto second = solve(problem);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].character_key == second[i].character_key);
    CHECK(first[i].residual == second[i].residual);  // bitwise
  }
}

TEST_CASE("solve results are sound under independent re-evaluation") {
  SolveProblem problem = make_problem(pi_orbifold_extension(2, 3, 5), 80, 9, true);
  problem.trace_constraints = {{3, 0.0}};
  const auto results = solve(problem);
  CHECK_FALSE(results.empty());
  for (const SolveResult& r : results) {
    CHECK(r.residual < problem.tol);
    CHECK(residual(problem, r.assignment) == doctest::Approx(r.residual));
    CHECK(r.character_key == character_key(r.assignment));
  }
}

TEST_CASE("two-bridge (5,3) trace-free: exactly the two census characters") {
  SolveProblem problem = make_problem(two_bridge_group(5, 3), 200, 11);
  problem.trace_constraints = {{0, 0.0}, {1, 0.0}};
  const auto results = solve(problem);

  std::set<std::vector<long long>> irreducible_keys;
  for (const SolveResult& r : results) {
    if (r.irreducible) irreducible_keys.insert(r.character_key);
  }
  CHECK(irreducible_keys.size() == 2);

  // the same characters the census sees, keyed by (0, 0, trace_ab)
  for (const TraceFreeCharacter& root : trace_free_census(5, 3)) {
    const std::vector<SU2> images{census_generator_a(), census_generator_b(root.t)};
    CHECK(irreducible_keys.count(character_key(images)) == 1);
  }
}

TEST_CASE("solver recovers a constructed witness character") {
  SolveProblem problem = make_problem(pi_orbifold_extension(3, 5, 7), 200, 7, true);
  problem.trace_constraints = {{3, 0.0}};
  const auto results = solve(problem);
  CHECK_FALSE(results.empty());

  // some feasible selector's extension must appear among the solutions
  bool matched = false;
  for (const auto& k : feasible_k_triples(3, 5, 7)) {
    const ExtendedRep e = extend_rep(triangle_rep(3, 5, 7, k));
    const std::vector<long long> target =
        character_key(std::vector<SU2>{e.tri.a1, e.tri.a2, e.tri.a3, e.t_image});
    for (const SolveResult& r : results) {
      bool close = r.character_key.size() == target.size();
      for (std::size_t i = 0; close && i < target.size(); ++i) {
        close = std::llabs(r.character_key[i] - target[i]) <= 1;
      }
      matched = matched || close;
    }
  }
  CHECK(matched);
}

TEST_CASE("solver census on (15,11) matches the root count") {
  SolveProblem problem = make_problem(two_bridge_group(15, 11), 400, 11);
  problem.trace_constraints = {{0, 0.0}, {1, 0.0}};
  const auto results = solve(problem);
  std::set<std::vector<long long>> irreducible;
  for (const SolveResult& r : results) {
    if (r.irreducible) irreducible.insert(r.character_key);
  }
  CHECK(irreducible.size() == 7);
  for (const TraceFreeCharacter& root : trace_free_census(15, 11)) {
    const std::vector<SU2> images{census_generator_a(), census_generator_b(root.t)};
    CHECK(irreducible.count(character_key(images)) == 1);
  }
}

TEST_CASE("projective solve finds an irreducible tetrahedral character") {
  SolveProblem problem = make_problem(orbifold_group({2, 3, 3}), 100, 7, true);
  const auto results = solve(problem);
  bool found_irreducible = false;
  for (const SolveResult& r : results) found_irreducible = found_irreducible || r.irreducible;
  CHECK(found_irreducible);
}

TEST_CASE("dedupe_characters merges conjugates and orders by residual") {
  Presentation free2;
  free2.generators = {"a", "b"};
  SolveProblem problem = make_problem(free2, 1, 0);

  const SU2 g(0.5, 0.5, 0.5, 0.5);
  const std::vector<SU2> base{SU2(0, 1, 0, 0), SU2(0, 0, 1, 0)};
  const std::vector<SU2> conj{g * base[0] * g.inverse(), g * base[1] * g.inverse()};

  SolveResult r1{base, 1e-12, character_key(base), true};
  SolveResult r2{conj, 5e-13, character_key(conj), true};
  const auto deduped = dedupe_characters({r1, r2});
  REQUIRE(deduped.size() == 1);
  CHECK(deduped[0].residual == 5e-13);  // keeps the smaller residual
}

TEST_CASE("solve argument validation") {
  Presentation p;
  p.generators = {"a"};
  SolveProblem bad = make_problem(p, 0, 0);
  CHECK_THROWS_AS(solve(bad), InputError);
  SolveProblem bad_constraint = make_problem(p, 1, 0);
  bad_constraint.trace_constraints = {{2, 0.0}};
  CHECK_THROWS_AS(solve(bad_constraint), InputError);
}
