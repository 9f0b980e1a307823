#include "su2knots/construct.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "su2knots/errors.hpp"

namespace su2knots {

namespace {

constexpr double kFeasibilityMargin = 1e-9;
constexpr double kRelatorTol = 1e-10;

struct LiftChoice {
  int sign;
  double cos_d;
};

// cos d = (cos t1 cos t2 - s cos t3) / (sin t1 sin t2) for the first lift
// sign keeping |cos d| off the reducible boundary.
std::optional<LiftChoice> lift_for(double t1, double t2, double t3) {
  const double denom = std::sin(t1) * std::sin(t2);
  for (int sign : {+1, -1}) {
    const double c = (std::cos(t1) * std::cos(t2) - sign * std::cos(t3)) / denom;
    if (std::abs(c) <= 1.0 - kFeasibilityMargin) return LiftChoice{sign, c};
  }
  return std::nullopt;
}

TriangleRep build_triangle(const std::array<int, 3>& p, const std::array<int, 3>& k,
                           const LiftChoice& lift) {
  const double t1 = k[0] * std::numbers::pi / p[0];
  const double t2 = k[1] * std::numbers::pi / p[1];
  const double d = std::acos(lift.cos_d);
  TriangleRep rep;
  rep.p = p;
  rep.k = k;
  rep.lift_sign = lift.sign;
  rep.d = d;
  rep.a1 = from_axis_angle({0.0, 0.0, 1.0}, 2.0 * t1);
  rep.a2 = from_axis_angle({std::sin(d), 0.0, std::cos(d)}, 2.0 * t2);
  rep.a3 = (rep.a1 * rep.a2).inverse();
  return rep;
}

void check_cone_orders(int p1, int p2, int p3) {
  if (p1 < 2 || p2 < 2 || p3 < 2) {
    throw InputError("triangle_rep: cone orders must be >= 2");
  }
}

void check_selector(const std::array<int, 3>& p, const std::array<int, 3>& k) {
  for (int i = 0; i < 3; ++i) {
    if (k[i] < 1 || k[i] > p[i] - 1 || std::gcd(k[i], p[i]) != 1) {
      throw InputError("triangle_rep: selector " + std::to_string(k[i]) +
                       " invalid for cone order " + std::to_string(p[i]));
    }
  }
}

std::optional<LiftChoice> lift_for_selector(const std::array<int, 3>& p,
                                            const std::array<int, 3>& k) {
  return lift_for(k[0] * std::numbers::pi / p[0], k[1] * std::numbers::pi / p[1],
                  k[2] * std::numbers::pi / p[2]);
}

}  // namespace

TriangleRep triangle_rep(int p1, int p2, int p3,
                         std::optional<std::array<int, 3>> k_select) {
  check_cone_orders(p1, p2, p3);
  const std::array<int, 3> p{p1, p2, p3};
  if (k_select) {
    check_selector(p, *k_select);
    const auto lift = lift_for_selector(p, *k_select);
    if (!lift) {
      throw InputError("triangle_rep: infeasible selector, no lift sign keeps "
                       "|cos d| <= 1 - 1e-9");
    }
    return build_triangle(p, *k_select, *lift);
  }
  for (int k1 = 1; k1 < p1; ++k1) {
    if (std::gcd(k1, p1) != 1) continue;
    for (int k2 = 1; k2 < p2; ++k2) {
      if (std::gcd(k2, p2) != 1) continue;
      for (int k3 = 1; k3 < p3; ++k3) {
        if (std::gcd(k3, p3) != 1) continue;
        const std::array<int, 3> k{k1, k2, k3};
        if (const auto lift = lift_for_selector(p, k)) {
          return build_triangle(p, k, *lift);
        }
      }
    }
  }
  // Unreachable for cone orders >= 2: some selector always lands inside
  // the feasibility bound.
  throw NumericalError("triangle_rep: no irreducible representation found");
}

std::vector<std::array<int, 3>> feasible_k_triples(int p1, int p2, int p3) {
  check_cone_orders(p1, p2, p3);
  const std::array<int, 3> p{p1, p2, p3};
  std::vector<std::array<int, 3>> out;
  for (int k1 = 1; k1 < p1; ++k1) {
    if (std::gcd(k1, p1) != 1) continue;
    for (int k2 = 1; k2 < p2; ++k2) {
      if (std::gcd(k2, p2) != 1) continue;
      for (int k3 = 1; k3 < p3; ++k3) {
        if (std::gcd(k3, p3) != 1) continue;
        const std::array<int, 3> k{k1, k2, k3};
        if (lift_for_selector(p, k)) out.push_back(k);
      }
    }
  }
  return out;
}

namespace {

// 4x4 matrix of left multiplication by q on quaternion coordinates.
Eigen::Matrix4d left_mult(const SU2& q) {
  Eigen::Matrix4d m;
  m << q.w(), -q.x(), -q.y(), -q.z(),
       q.x(),  q.w(), -q.z(),  q.y(),
       q.y(),  q.z(),  q.w(), -q.x(),
       q.z(), -q.y(),  q.x(),  q.w();
  return m;
}

// 4x4 matrix of right multiplication by q.
Eigen::Matrix4d right_mult(const SU2& q) {
  Eigen::Matrix4d m;
  m << q.w(), -q.x(), -q.y(), -q.z(),
       q.x(),  q.w(),  q.z(), -q.y(),
       q.y(), -q.z(),  q.w(),  q.x(),
       q.z(),  q.y(), -q.x(),  q.w();
  return m;
}

}  // namespace

ConjugatorResult conjugator_solver(std::span<const SU2> current,
                                   std::span<const SU2> target) {
  const std::size_t g = current.size();
  if (g < 2 || target.size() != g) {
    throw InputError("conjugator_solver: need two equal-length lists of >= 2 elements");
  }

  constexpr double kNullTol = 1e-8;
  // All-plus first, then flip signs in lexicographic order of the mask.
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    Eigen::MatrixXd system(4 * g, 4);
    std::vector<int> signs(g, +1);
    for (std::size_t i = 0; i < g; ++i) {
      const int sign = (mask >> i) & 1 ? -1 : +1;
      signs[i] = sign;
      system.block<4, 4>(static_cast<Eigen::Index>(4 * i), 0) =
          right_mult(current[i]) - sign * left_mult(target[i]);
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = std::max(1.0, sv(0));
    int nullity = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) < kNullTol * scale) ++nullity;
    }
    if (nullity == 0) continue;
    if (nullity > 1) {
      throw NumericalError("conjugator_solver: non-unique solution (nullity " +
                           std::to_string(nullity) + "), input is reducible");
    }
    const Eigen::Vector4d v = svd.matrixV().col(3).normalized();
    const SU2 x = PSU2::canonicalize(SU2(v(0), v(1), v(2), v(3)));

    double residual = 0.0;
    for (std::size_t i = 0; i < g; ++i) {
      const SU2 lhs = x * current[i];
      const SU2 rhs = signs[i] > 0 ? target[i] * x : -(target[i] * x);
      residual = std::max(residual, frobenius_distance(lhs, rhs));
    }
    const SU2 xx = x * x;
    if (xx.projective_identity_distance() > 1e-9) {
      throw NumericalError("conjugator_solver: solution does not square to +-identity");
    }
    return ConjugatorResult{x, nullity, signs, residual};
  }
  throw NumericalError("conjugator_solver: not conjugate, no sign vector admits a solution");
}

ExtendedRep extend_rep(const TriangleRep& tri) {
  const std::vector<SU2> current{tri.a1, tri.a2};
  const std::vector<SU2> target{tri.a1.inverse(),
                                tri.a1 * tri.a2.inverse() * tri.a1.inverse()};
  const ConjugatorResult conj = conjugator_solver(current, target);

  const Presentation ext = pi_orbifold_extension(tri.p[0], tri.p[1], tri.p[2]);
  const std::vector<SU2> images{tri.a1, tri.a2, tri.a3, conj.x};
  double max_residual = 0.0;
  for (const Word& rel : ext.relators) {
    max_residual =
        std::max(max_residual, evaluate_word(images, rel).projective_identity_distance());
  }
  if (max_residual > kRelatorTol) {
    std::ostringstream os;
    os << "extend_rep: relator residual " << max_residual << " exceeds " << kRelatorTol;
    throw NumericalError(os.str());
  }
  if (std::abs(conj.x.trace()) > kRelatorTol) {
    throw NumericalError("extend_rep: conjugator image is not trace-free");
  }
  return ExtendedRep{tri, conj.x, conj.nullity, max_residual};
}

WitnessCertificate witness_montesinos(const MontesinosKnot& k,
                                      std::optional<std::array<int, 3>> k_select) {
  if (k.tangle_count() < 3) {
    throw InputError("two-bridge regime: knot is SU(2)-simple");
  }
  const auto& tangles = k.tangles();
  const TriangleRep tri =
      triangle_rep(tangles[0].p, tangles[1].p, tangles[2].p, k_select);
  const ExtendedRep ext = extend_rep(tri);

  const std::vector<SU2> delta_image{tri.a1, tri.a2, tri.a3};
  WitnessCertificate cert{
      k,
      tri.p,
      tri.k,
      tri.lift_sign,
      tri.d,
      {tri.a1, tri.a2, tri.a3, ext.t_image},
      ext.max_relator_residual,
      ext.t_image.trace(),
      is_cyclic_image(delta_image),
      ext.conjugator_nullity,
  };
  if (cert.max_relator_residual >= 1e-9 || std::abs(cert.meridian_trace) >= 1e-9 ||
      cert.delta_image_cyclic || cert.conjugator_nullity != 1) {
    throw NumericalError("witness_montesinos: certificate bounds violated");
  }
  return cert;
}

}  // namespace su2knots
