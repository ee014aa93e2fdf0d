#include "fipwalk/geometry.hpp"

#include <cmath>

namespace fipwalk {

namespace {
constexpr double kFrameTol = 1e-9;
}

ContactPatch::ContactPatch(const Vector3d& origin, const Vector3d& tangent,
                           const Vector3d& binormal, double half_length,
                           double half_width)
    : origin_(origin), half_length_(half_length), half_width_(half_width) {
  if (!(half_length > 0.0) || !(half_width > 0.0)) {
    throw std::invalid_argument("ContactPatch: half-extents must be positive");
  }
  const Vector3d t = tangent;
  const Vector3d b = binormal;
  if (std::abs(t.norm() - 1.0) > kFrameTol || std::abs(b.norm() - 1.0) > kFrameTol ||
      std::abs(t.dot(b)) > kFrameTol) {
    throw std::invalid_argument("ContactPatch: frame must be orthonormal");
  }
  rotation_.col(0) = t;
  rotation_.col(1) = b;
  rotation_.col(2) = t.cross(b);
}

ContactPatch ContactPatch::horizontal(const Vector3d& origin,
                                      double half_length, double half_width,
                                      double yaw) {
  const Vector3d t(std::cos(yaw), std::sin(yaw), 0.0);
  const Vector3d b(-std::sin(yaw), std::cos(yaw), 0.0);
  return ContactPatch(origin, t, b, half_length, half_width);
}

std::array<Vector3d, 4> ContactPatch::vertices() const {
  const double X = half_length_;
  const double Y = half_width_;
  return {to_world(Vector3d(X, Y, 0.0)), to_world(Vector3d(-X, Y, 0.0)),
          to_world(Vector3d(-X, -Y, 0.0)), to_world(Vector3d(X, -Y, 0.0))};
}

Vector3d ContactPatch::vertex(int i) const {
  return vertices()[static_cast<std::size_t>(((i % 4) + 4) % 4)];
}

FrictionModel::FrictionModel(double mu, int num_sides)
    : mu_(mu), num_sides_(num_sides) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("FrictionModel: mu must be positive");
  }
  if (num_sides < 4) {
    throw std::invalid_argument("FrictionModel: need at least 4 sides");
  }
  pyramid_coeff_ = mu * std::cos(M_PI / num_sides);
  rows_.resize(num_sides, 3);
  for (int j = 0; j < num_sides; ++j) {
    const double theta = 2.0 * M_PI * j / num_sides;
    Vector3d row(std::cos(theta), std::sin(theta), -pyramid_coeff_);
    rows_.row(j) = row.normalized();
  }
}

bool FrictionModel::contains_local(const Vector3d& v, double tol) const {
  const double scale = v.norm();
  for (int j = 0; j < rows_.rows(); ++j) {
    if (rows_.row(j).dot(v) > tol * std::max(scale, 1e-300)) return false;
  }
  return true;
}

bool FrictionModel::contains_local_exact(const Vector3d& v, double tol) const {
  const double n2 = v.squaredNorm();
  const double vz = v.z();
  if (vz < -tol * std::max(v.norm(), 1e-300)) return false;
  return n2 - (1.0 + mu_ * mu_) * vz * vz <= tol * std::max(n2, 1e-300);
}

double HalfspaceSet::margin(const Eigen::VectorXd& x) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < A.rows(); ++i) {
    const double nrm = A.row(i).norm();
    worst = std::max(worst, (A.row(i).dot(x) - b(i)) / nrm);
  }
  return worst;
}

void HalfspaceSet::validate() const {
  if (A.rows() != b.size()) {
    throw std::invalid_argument("HalfspaceSet: row count mismatch");
  }
  for (int i = 0; i < A.rows(); ++i) {
    if (A.row(i).norm() == 0.0) {
      throw std::invalid_argument("HalfspaceSet: zero row");
    }
  }
}

double PlanarPolygon::area() const {
  if (vertices.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vector2d& p = vertices[i];
    const Vector2d& q = vertices[(i + 1) % vertices.size()];
    twice += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * std::abs(twice);
}

bool PlanarPolygon::contains(const Vector2d& q, double tol) const {
  if (vertices.size() < 3) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vector2d& a = vertices[i];
    const Vector2d& b = vertices[(i + 1) % vertices.size()];
    const Vector2d e = b - a;
    // CCW polygon: interior is to the left of every edge.
    if (e.x() * (q.y() - a.y()) - e.y() * (q.x() - a.x()) < -tol) return false;
  }
  return true;
}

PlanarPolygon clip_by_halfplane(const PlanarPolygon& poly,
                                const Vector2d& normal, double offset) {
  PlanarPolygon out;
  const std::size_t n = poly.vertices.size();
  if (n == 0) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector2d& cur = poly.vertices[i];
    const Vector2d& nxt = poly.vertices[(i + 1) % n];
    const double dc = normal.dot(cur) - offset;
    const double dn = normal.dot(nxt) - offset;
    if (dc <= 0.0) {
      out.vertices.push_back(cur);
      if (dn > 0.0) {
        out.vertices.push_back(cur + (nxt - cur) * (dc / (dc - dn)));
      }
    } else if (dn <= 0.0) {
      out.vertices.push_back(cur + (nxt - cur) * (dc / (dc - dn)));
    }
  }
  if (out.vertices.size() < 3) out.vertices.clear();
  return out;
}

}  // namespace fipwalk
