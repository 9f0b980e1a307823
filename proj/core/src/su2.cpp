#include "su2knots/su2.hpp"

#include <algorithm>
#include <cmath>

#include "su2knots/errors.hpp"

namespace su2knots {

namespace {
constexpr std::uint8_t kRenormChain = 16;
}

double norm3(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot3(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

SU2::SU2(double w, double x, double y, double z)
    : w_(w), x_(x), y_(y), z_(z), chain_(0) {
  const double n = norm();
  if (std::abs(n - 1.0) > 1e-6) {
    throw InputError("SU2: coordinates are not a unit quaternion");
  }
  w_ /= n;
  x_ /= n;
  y_ /= n;
  z_ /= n;
}

double SU2::norm() const {
  return std::sqrt(w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_);
}

double SU2::vector_norm() const {
  return std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
}

Vec3 SU2::axis() const {
  const double n = vector_norm();
  if (n < kCentralTol) {
    throw NumericalError("SU2::axis: central element has no axis");
  }
  return {x_ / n, y_ / n, z_ / n};
}

void SU2::renormalize() {
  const double n = norm();
  w_ /= n;
  x_ /= n;
  y_ /= n;
  z_ /= n;
  chain_ = 0;
}

SU2 SU2::operator*(const SU2& rhs) const {
  SU2 out(w_ * rhs.w_ - x_ * rhs.x_ - y_ * rhs.y_ - z_ * rhs.z_,
          w_ * rhs.x_ + x_ * rhs.w_ + y_ * rhs.z_ - z_ * rhs.y_,
          w_ * rhs.y_ - x_ * rhs.z_ + y_ * rhs.w_ + z_ * rhs.x_,
          w_ * rhs.z_ + x_ * rhs.y_ - y_ * rhs.x_ + z_ * rhs.w_,
          static_cast<std::uint8_t>(std::max(chain_, rhs.chain_) + 1));
  if (out.chain_ >= kRenormChain) out.renormalize();
  return out;
}

SU2 SU2::pow(int e) const {
  SU2 base = e < 0 ? inverse() : *this;
  int n = e < 0 ? -e : e;
  SU2 acc = SU2::identity();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

double frobenius_distance(const SU2& a, const SU2& b) {
  const double dw = a.w_ - b.w_;
  const double dx = a.x_ - b.x_;
  const double dy = a.y_ - b.y_;
  const double dz = a.z_ - b.z_;
  // The 2x2 matrix of a quaternion has squared Frobenius norm 2|q|^2.
  return std::sqrt(2.0 * (dw * dw + dx * dx + dy * dy + dz * dz));
}

double SU2::projective_identity_distance() const {
  return std::min(frobenius_distance(*this, SU2::identity()),
                  frobenius_distance(*this, -SU2::identity()));
}

SU2 PSU2::canonicalize(const SU2& g) {
  const double coords[4] = {g.w(), g.x(), g.y(), g.z()};
  for (double c : coords) {
    if (std::abs(c) > 1e-9) {
      return c < 0.0 ? -g : g;
    }
  }
  return g;  // unreachable for unit quaternions
}

double tr2(const PSU2& g) {
  const double t = g.rep().trace();
  return t * t;
}

SU2 from_axis_angle(const Vec3& axis, double angle) {
  if (std::abs(norm3(axis) - 1.0) > 1e-12) {
    throw InputError("from_axis_angle: axis is not a unit vector");
  }
  const double h = 0.5 * angle;
  const double s = std::sin(h);
  return SU2(std::cos(h), s * axis[0], s * axis[1], s * axis[2]);
}

AxisAngle axis_angle(const SU2& g) {
  const double vn = g.vector_norm();
  if (vn < kCentralTol) {
    throw NumericalError("axis_angle: central element has no axis");
  }
  return {g.axis(), 2.0 * std::atan2(vn, g.w())};
}

std::array<double, 3> char_triple(const SU2& a, const SU2& b) {
  return {a.trace(), b.trace(), (a * b).trace()};
}

bool is_irreducible_pair(const SU2& a, const SU2& b, double tol) {
  if (a.is_central() || b.is_central()) return false;
  return norm3(cross3(a.axis(), b.axis())) > tol;
}

double commutator_trace_gap(const SU2& a, const SU2& b) {
  const SU2 comm = a * b * a.inverse() * b.inverse();
  return std::abs(comm.trace() - 2.0);
}

bool is_cyclic_image(std::span<const SU2> gens, double tol) {
  const SU2* first = nullptr;
  for (const SU2& g : gens) {
    if (g.is_central()) continue;
    if (first == nullptr) {
      first = &g;
      continue;
    }
    if (norm3(cross3(first->axis(), g.axis())) >= tol) return false;
  }
  return true;
}

namespace {

// One generator against a candidate dihedral axis: a rotation about the
// axis, a half-turn perpendicular to it, or neither.
enum class DihedralKind { Axial, PerpHalfTurn, Neither };

DihedralKind classify_against(const SU2& g, const Vec3& n, double tol) {
  const Vec3 a = g.axis();
  if (norm3(cross3(a, n)) < tol) return DihedralKind::Axial;
  if (std::abs(g.w()) < tol && std::abs(dot3(a, n)) < tol) {
    return DihedralKind::PerpHalfTurn;
  }
  return DihedralKind::Neither;
}

}  // namespace

bool is_binary_dihedral_image(std::span<const SU2> gens, double tol) {
  std::vector<Vec3> candidates;
  std::vector<const SU2*> noncentral;
  for (const SU2& g : gens) {
    if (!g.is_central()) {
      noncentral.push_back(&g);
      candidates.push_back(g.axis());
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const SU2 prod = gens[i] * gens[j];
      if (!prod.is_central()) candidates.push_back(prod.axis());
    }
  }
  if (noncentral.empty()) return true;  // image inside the center, cyclic

  for (const Vec3& n : candidates) {
    bool ok = true;
    for (const SU2* g : noncentral) {
      if (classify_against(*g, n, tol) == DihedralKind::Neither) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace su2knots
