#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <stdexcept>
#include <vector>

namespace fipwalk {

using Eigen::Matrix3d;
using Eigen::Vector2d;
using Eigen::Vector3d;

/// Absolute feasibility tolerance applied to rows scaled to unit normal.
/// Values exactly on a constraint boundary count as feasible.
inline constexpr double kMembershipTol = 1e-9;

/// Oriented rectangular support surface.
///
/// The local frame {t, b, n} is right-handed with n = t x b. Local
/// coordinates are (x along t, y along b, z along n), so the supporting
/// plane is z = 0 and the patch interior is |x| <= X, |y| <= Y.
class ContactPatch {
public:
  ContactPatch(const Vector3d& origin, const Vector3d& tangent,
               const Vector3d& binormal, double half_length,
               double half_width);

  /// Horizontal patch centered at `origin` rotated by `yaw` about +z.
  static ContactPatch horizontal(const Vector3d& origin, double half_length,
                                 double half_width, double yaw = 0.0);

  const Vector3d& origin() const { return origin_; }
  Vector3d tangent() const { return rotation_.col(0); }
  Vector3d binormal() const { return rotation_.col(1); }
  Vector3d normal() const { return rotation_.col(2); }
  const Matrix3d& rotation() const { return rotation_; }
  double half_length() const { return half_length_; }
  double half_width() const { return half_width_; }

  /// Supporting-plane offset a, so that the plane is {p : n . p = a}.
  double plane_offset() const { return normal().dot(origin_); }

  /// Signed height of a point above the supporting plane.
  double height_above(const Vector3d& p) const {
    return normal().dot(p) - plane_offset();
  }

  Vector3d to_local(const Vector3d& p_world) const {
    return rotation_.transpose() * (p_world - origin_);
  }
  Vector3d to_world(const Vector3d& p_local) const {
    return origin_ + rotation_ * p_local;
  }

  /// Corners in counterclockwise order about n; vertex(4) == vertex(0).
  std::array<Vector3d, 4> vertices() const;
  Vector3d vertex(int i) const;

  bool contains_local_xy(const Vector2d& q, double tol = kMembershipTol) const {
    return std::abs(q.x()) <= half_length_ + tol &&
           std::abs(q.y()) <= half_width_ + tol;
  }

private:
  Vector3d origin_;
  Matrix3d rotation_;  // columns t, b, n
  double half_length_;
  double half_width_;
};

/// Polyhedral approximation of the Coulomb friction cone about the contact
/// normal. The halfspace rows use the inner scaling mu * cos(pi/num_sides)
/// so that the polyhedral cone is contained in the exact second-order cone.
class FrictionModel {
public:
  explicit FrictionModel(double mu, int num_sides = 4);

  double mu() const { return mu_; }
  int num_sides() const { return num_sides_; }

  /// Effective coefficient of the polyhedral pyramid. For num_sides = 4 the
  /// rows are axis-aligned: |f_x| <= pyramid_coeff * f_z and likewise in y.
  double pyramid_coeff() const { return pyramid_coeff_; }

  /// Rows r (unit-normalized) of the cone in the local frame: r . v <= 0
  /// for every v inside the cone. Row j direction is angle 2*pi*j/n.
  const Eigen::Matrix<double, Eigen::Dynamic, 3>& local_rows() const {
    return rows_;
  }

  /// True when v (patch-local coordinates) lies inside the polyhedral cone.
  bool contains_local(const Vector3d& v, double tol = kMembershipTol) const;

  /// True when v lies inside the exact second-order cone of coefficient mu:
  /// ||v||^2 - (1 + mu^2) (v . e_z)^2 <= 0 and v . e_z >= 0.
  bool contains_local_exact(const Vector3d& v,
                            double tol = kMembershipTol) const;

private:
  double mu_;
  int num_sides_;
  double pyramid_coeff_;
  Eigen::Matrix<double, Eigen::Dynamic, 3> rows_;
};

/// Contact wrench in the patch-local frame, moments taken at the patch
/// origin O.
struct Wrench {
  Vector3d force{Vector3d::Zero()};
  Vector3d torque{Vector3d::Zero()};

  Eigen::Matrix<double, 6, 1> stacked() const {
    Eigen::Matrix<double, 6, 1> w;
    w << force, torque;
    return w;
  }
};

/// Halfspace intersection {x : A x <= b}. Rows may be 3- or 6-dimensional
/// depending on the space they constrain.
struct HalfspaceSet {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;

  int rows() const { return static_cast<int>(A.rows()); }
  int dim() const { return static_cast<int>(A.cols()); }

  /// Largest row violation with rows scaled to unit normal.
  double margin(const Eigen::VectorXd& x) const;
  bool contains(const Eigen::VectorXd& x, double tol = kMembershipTol) const {
    return margin(x) <= tol;
  }

  void validate() const;
};

/// Convex polygon in a 2D plane, vertices in counterclockwise order.
/// An empty vertex list is a valid (empty) polygon of zero area.
struct PlanarPolygon {
  std::vector<Vector2d> vertices;

  bool empty() const { return vertices.empty(); }
  double area() const;
  bool contains(const Vector2d& q, double tol = kMembershipTol) const;
};

/// Clips `poly` by the halfplane {q : normal . q <= offset} using
/// Sutherland-Hodgman. Degenerate results (fewer than 3 vertices) collapse
/// to the empty polygon.
PlanarPolygon clip_by_halfplane(const PlanarPolygon& poly,
                                const Vector2d& normal, double offset);

inline Matrix3d skew(const Vector3d& v) {
  Matrix3d m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

}  // namespace fipwalk
