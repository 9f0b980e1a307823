#include "su2knots/census.hpp"

#include <cmath>
#include <numbers>

#include "su2knots/errors.hpp"
#include "su2knots/presentation.hpp"

namespace su2knots {

SU2 census_generator_a() { return SU2(0.0, 1.0, 0.0, 0.0); }

SU2 census_generator_b(double t) { return SU2(0.0, std::cos(t), std::sin(t), 0.0); }

namespace {

// With both generators trace-free in the i-j plane, every even-length
// subword lands in the span of {1, k}; the relator in particular.  Its
// k-component is a smooth signed surrogate whose zeros are exactly the
// points where the relator evaluates to +-identity.
double signed_surrogate(const Word& relator, double t) {
  const std::vector<SU2> images{census_generator_a(), census_generator_b(t)};
  return evaluate_word(images, relator).z();
}

double strict_residual(const Word& relator, double t) {
  const std::vector<SU2> images{census_generator_a(), census_generator_b(t)};
  return frobenius_distance(evaluate_word(images, relator), SU2::identity());
}

}  // namespace

std::vector<TraceFreeCharacter> trace_free_census(int p, int q, int grid, double tol,
                                                  int* projective_only_roots,
                                                  int* tangency_warnings) {
  if (grid < 256) throw InputError("trace_free_census: grid must be >= 256");
  if (tol <= 0.0) throw InputError("trace_free_census: tol must be positive");
  const Presentation group = two_bridge_group(p, q);
  const Word& relator = group.relators.front();

  const double pi = std::numbers::pi;
  const double step = pi / grid;
  const double dedupe_gap = pi / (4.0 * grid);
  const double surrogate_tol = tol * 1e-3;

  if (projective_only_roots) *projective_only_roots = 0;
  if (tangency_warnings) *tangency_warnings = 0;

  std::vector<TraceFreeCharacter> roots;
  double prev_t = step * 0.5;
  double prev_z = signed_surrogate(relator, prev_t);
  for (int i = 1; i < grid; ++i) {
    const double cur_t = step * (i + 0.5);
    const double cur_z = signed_surrogate(relator, cur_t);

    if (prev_z == 0.0 || prev_z * cur_z < 0.0) {
      double lo = prev_t, hi = cur_t;
      double z_lo = prev_z;
      double mid = lo;
      for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double z_mid = signed_surrogate(relator, mid);
        if (std::abs(z_mid) < surrogate_tol || hi - lo < 1e-15) break;
        if ((z_lo < 0.0) != (z_mid < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          z_lo = z_mid;
        }
      }
      const std::vector<SU2> images{census_generator_a(), census_generator_b(mid)};
      const SU2 value = evaluate_word(images, relator);
      const double strict = frobenius_distance(value, SU2::identity());
      if (strict < tol) {
        const bool duplicate =
            !roots.empty() && mid - roots.back().t < dedupe_gap;
        if (!duplicate) {
          roots.push_back({mid, (images[0] * images[1]).trace(), strict});
        }
      } else if (projective_only_roots &&
                 frobenius_distance(value, -SU2::identity()) < tol) {
        ++*projective_only_roots;
      }
    } else if (tangency_warnings && std::abs(cur_z) < tol &&
               std::abs(prev_z) >= tol && strict_residual(relator, cur_t) >= tol) {
      // Dip toward zero without a crossing: report, never count.
      ++*tangency_warnings;
    }
    prev_t = cur_t;
    prev_z = cur_z;
  }
  return roots;
}

int expected_binary_dihedral_count(std::uint64_t det) {
  if (det % 2 == 0) {
    throw InputError("expected_binary_dihedral_count: determinant must be odd");
  }
  return static_cast<int>((det - 1) / 2);
}

SimplicityReport classify_rules(InputFamily family, std::size_t tangle_count,
                                std::uint64_t det, bool nontrivial) {
  if (family == InputFamily::Montesinos && tangle_count >= 3) {
    return {KnotKind::MontesinosThreePlus, Verdict::NotSu2Simple,
            "montesinos knot with >= 3 rational tangles", det};
  }
  if (family == InputFamily::Montesinos || family == InputFamily::TwoBridgeParams) {
    return {KnotKind::TwoBridge, Verdict::Su2Simple,
            "two-bridge regime (< 3 rational tangles)", det};
  }
  if (nontrivial && det == 1) {
    return {KnotKind::Other, Verdict::NotSu2Simple,
            "nontrivial knot with determinant 1 admits a non-dihedral "
            "trace-free representation",
            det};
  }
  return {KnotKind::Other, Verdict::Unknown, "no rule applies", det};
}

SimplicityReport classify_knot(const MontesinosKnot& k) {
  return classify_rules(InputFamily::Montesinos, k.tangle_count(), k.determinant(),
                        k.determinant() != 1);
}

SimplicityReport classify_knot_two_bridge(int p, int q) {
  two_bridge_group(p, q);  // validates the parameters
  return classify_rules(InputFamily::TwoBridgeParams, 1,
                        static_cast<std::uint64_t>(p), true);
}

const char* to_string(KnotKind k) {
  switch (k) {
    case KnotKind::TwoBridge: return "two-bridge";
    case KnotKind::MontesinosThreePlus: return "montesinos-n>=3";
    case KnotKind::Other: return "other";
  }
  return "other";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Su2Simple: return "SU2-simple";
    case Verdict::NotSu2Simple: return "not-SU2-simple";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace su2knots
