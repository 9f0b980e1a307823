#include "su2knots/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <Eigen/Dense>

#include "su2knots/errors.hpp"

namespace su2knots {

namespace {

double relator_distance(const SU2& value, bool projective) {
  return projective ? value.projective_identity_distance()
                    : frobenius_distance(value, SU2::identity());
}

// Squared residual, the quantity the descent actually minimizes.
double squared_residual(const SolveProblem& problem, std::span<const SU2> assignment) {
  double f = 0.0;
  for (const Word& rel : problem.presentation.relators) {
    const double d = relator_distance(evaluate_word(assignment, rel), problem.projective);
    f += d * d;
  }
  for (const TraceConstraint& c : problem.trace_constraints) {
    const double d = assignment[static_cast<std::size_t>(c.gen)].trace() - c.target;
    f += d * d;
  }
  return f;
}

// Residual vector: 4 quaternion coordinates per relator (against the
// nearer sign), one entry per trace constraint.  Scaled so that the sum
// of squares equals squared_residual.
void residual_vector(const SolveProblem& problem, std::span<const SU2> assignment,
                     Eigen::VectorXd& out) {
  constexpr double kFrob = std::numbers::sqrt2;
  Eigen::Index row = 0;
  for (const Word& rel : problem.presentation.relators) {
    const SU2 v = evaluate_word(assignment, rel);
    double sign = 1.0;
    if (problem.projective &&
        frobenius_distance(v, -SU2::identity()) < frobenius_distance(v, SU2::identity())) {
      sign = -1.0;
    }
    out(row++) = kFrob * (v.w() - sign);
    out(row++) = kFrob * v.x();
    out(row++) = kFrob * v.y();
    out(row++) = kFrob * v.z();
  }
  for (const TraceConstraint& c : problem.trace_constraints) {
    out(row++) = assignment[static_cast<std::size_t>(c.gen)].trace() - c.target;
  }
}

SU2 exp_tangent(double a, double b, double c) {
  const double n = std::sqrt(a * a + b * b + c * c);
  if (n < 1e-300) return SU2::identity();
  const double s = std::sin(n) / n;
  return SU2(std::cos(n), s * a, s * b, s * c);
}

// Counter-based deterministic stream (splitmix64).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform01() {  // in (0, 1)
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }
  double gaussian() {
    const double u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

private:
  std::uint64_t state_;
};

std::vector<SU2> random_start(std::size_t rank, std::uint64_t seed, int restart) {
  SplitMix64 stream(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(restart) + 1);
  std::vector<SU2> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    double c[4];
    double norm = 0.0;
    do {
      norm = 0.0;
      for (double& v : c) {
        v = stream.gaussian();
        norm += v * v;
      }
      norm = std::sqrt(norm);
    } while (norm < 1e-6);
    out.emplace_back(c[0] / norm, c[1] / norm, c[2] / norm, c[3] / norm);
  }
  return out;
}

void apply_step(std::vector<SU2>& assignment, const Eigen::VectorXd& delta) {
  for (std::size_t g = 0; g < assignment.size(); ++g) {
    const Eigen::Index base = static_cast<Eigen::Index>(3 * g);
    assignment[g] =
        exp_tangent(delta(base), delta(base + 1), delta(base + 2)) * assignment[g];
  }
}

constexpr double kFdStep = 1e-7;
constexpr int kMaxIterations = 120;

// One restart: damped least-squares descent with a finite-difference
// Jacobian in the product tangent chart and step-halving acceptance.
bool descend(const SolveProblem& problem, std::vector<SU2>& assignment) {
  const std::size_t rank = problem.presentation.rank();
  const Eigen::Index residual_dim =
      static_cast<Eigen::Index>(4 * problem.presentation.relators.size() +
                                problem.trace_constraints.size());
  const Eigen::Index dof = static_cast<Eigen::Index>(3 * rank);
  if (residual_dim == 0) return true;

  Eigen::VectorXd r(residual_dim), r_probe(residual_dim);
  Eigen::MatrixXd jac(residual_dim, dof);
  const double target = problem.tol * problem.tol;
  double mu = 1e-4;

  residual_vector(problem, assignment, r);
  double f = r.squaredNorm();

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    if (f < target) return true;

    std::vector<SU2> probe = assignment;
    for (std::size_t g = 0; g < rank; ++g) {
      for (int axis = 0; axis < 3; ++axis) {
        const SU2 saved = probe[g];
        probe[g] = exp_tangent(axis == 0 ? kFdStep : 0.0, axis == 1 ? kFdStep : 0.0,
                               axis == 2 ? kFdStep : 0.0) *
                   saved;
        residual_vector(problem, probe, r_probe);
        jac.col(static_cast<Eigen::Index>(3 * g) + axis) = (r_probe - r) / kFdStep;
        probe[g] = saved;
      }
    }

    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * r;
    bool accepted = false;
    for (int attempt = 0; attempt < 12 && !accepted; ++attempt) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += mu;
      const Eigen::VectorXd delta = damped.ldlt().solve(-jtr);
      // Step halving on the proposed direction.
      double scale = 1.0;
      for (int halving = 0; halving < 6; ++halving) {
        std::vector<SU2> trial = assignment;
        apply_step(trial, (scale * delta).eval());
        residual_vector(problem, trial, r_probe);
        const double f_trial = r_probe.squaredNorm();
        if (f_trial < f) {
          assignment = std::move(trial);
          r = r_probe;
          f = f_trial;
          accepted = true;
          mu = std::max(mu * 0.3, 1e-14);
          break;
        }
        scale *= 0.5;
      }
      if (!accepted) mu *= 8.0;
    }
    if (!accepted) return f < target;  // stalled
  }
  return f < target;
}

}  // namespace

double residual(const SolveProblem& problem, std::span<const SU2> assignment) {
  if (assignment.size() != problem.presentation.rank()) {
    throw InputError("residual: assignment size does not match generator count");
  }
  return std::sqrt(squared_residual(problem, assignment));
}

std::vector<double> fd_gradient(const SolveProblem& problem,
                                const std::vector<SU2>& assignment, double step) {
  const double base = squared_residual(problem, assignment);
  std::vector<double> grad(3 * assignment.size());
  std::vector<SU2> probe = assignment;
  for (std::size_t g = 0; g < assignment.size(); ++g) {
    for (int axis = 0; axis < 3; ++axis) {
      const SU2 saved = probe[g];
      probe[g] = exp_tangent(axis == 0 ? step : 0.0, axis == 1 ? step : 0.0,
                             axis == 2 ? step : 0.0) *
                 saved;
      grad[3 * g + axis] = (squared_residual(problem, probe) - base) / step;
      probe[g] = saved;
    }
  }
  return grad;
}

std::vector<long long> character_key(std::span<const SU2> assignment) {
  std::vector<long long> key;
  const std::size_t n = assignment.size();
  key.reserve(n + n * (n - 1) / 2);
  const auto rounded = [](double v) {
    const long long r = std::llround(v * 1e6);
    return r == 0 ? 0 : r;  // normalize -0
  };
  for (const SU2& g : assignment) key.push_back(rounded(g.trace()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      key.push_back(rounded((assignment[i] * assignment[j]).trace()));
    }
  }
  return key;
}

std::string character_key_to_string(const std::vector<long long>& key) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ',';
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(key[i]) * 1e-6);
    out += buf;
  }
  return out;
}

std::vector<SolveResult> solve(const SolveProblem& problem) {
  if (problem.restarts < 1) throw InputError("solve: restarts must be >= 1");
  if (problem.tol <= 0.0) throw InputError("solve: tol must be positive");
  problem.presentation.check();
  for (const TraceConstraint& c : problem.trace_constraints) {
    if (c.gen < 0 || c.gen >= static_cast<int>(problem.presentation.rank())) {
      throw InputError("solve: trace constraint on unknown generator");
    }
  }

  std::vector<SolveResult> found;
  for (int restart = 0; restart < problem.restarts; ++restart) {
    std::vector<SU2> assignment =
        random_start(problem.presentation.rank(), problem.seed, restart);
    if (!descend(problem, assignment)) continue;
    const double res = residual(problem, assignment);
    if (res >= problem.tol) continue;
    SolveResult result;
    result.residual = res;
    result.character_key = character_key(assignment);
    result.irreducible = !is_cyclic_image(assignment);
    result.assignment = std::move(assignment);
    found.push_back(std::move(result));
  }
  return dedupe_characters(std::move(found));
}

std::vector<SolveResult> dedupe_characters(std::vector<SolveResult> results) {
  std::stable_sort(results.begin(), results.end(),
                   [](const SolveResult& a, const SolveResult& b) {
                     if (a.residual != b.residual) return a.residual < b.residual;
                     return a.character_key < b.character_key;
                   });
  std::vector<SolveResult> out;
  for (SolveResult& r : results) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const SolveResult& kept) {
      return kept.character_key == r.character_key;
    });
    if (!seen) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace su2knots
