#include "fipwalk/contact_geometry.hpp"

#include <cmath>

namespace fipwalk {

HalfspaceSet cwc_halfspaces(const ContactPatch& patch, double mu) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("cwc_halfspaces: mu must be positive");
  }
  const double X = patch.half_length();
  const double Y = patch.half_width();

  HalfspaceSet set;
  set.A.setZero(16, 6);
  set.b.setZero(16);
  int r = 0;
  // (W1) |f_x| <= mu f_z, |f_y| <= mu f_z
  set.A.row(r++) << 1, 0, -mu, 0, 0, 0;
  set.A.row(r++) << -1, 0, -mu, 0, 0, 0;
  set.A.row(r++) << 0, 1, -mu, 0, 0, 0;
  set.A.row(r++) << 0, -1, -mu, 0, 0, 0;
  // (W2) |tau_x| <= Y f_z, |tau_y| <= X f_z
  set.A.row(r++) << 0, 0, -Y, 1, 0, 0;
  set.A.row(r++) << 0, 0, -Y, -1, 0, 0;
  set.A.row(r++) << 0, 0, -X, 0, 1, 0;
  set.A.row(r++) << 0, 0, -X, 0, -1, 0;
  // (W3) yaw bounds, absolute values expanded:
  //   tau_min <= tau_z:  s1 (Y f_x - mu tau_x) + s2 (X f_y - mu tau_y)
  //                        - mu (X+Y) f_z - tau_z <= 0
  //   tau_z <= tau_max:  s1 (Y f_x + mu tau_x) + s2 (X f_y + mu tau_y)
  //                        - mu (X+Y) f_z + tau_z <= 0
  for (const double s1 : {1.0, -1.0}) {
    for (const double s2 : {1.0, -1.0}) {
      set.A.row(r++) << s1 * Y, s2 * X, -mu * (X + Y), -s1 * mu, -s2 * mu, -1;
      set.A.row(r++) << s1 * Y, s2 * X, -mu * (X + Y), s1 * mu, s2 * mu, 1;
    }
  }
  return set;
}

HalfspaceSet cwc_world_rows(const ContactPatch& patch, double mu) {
  const HalfspaceSet local = cwc_halfspaces(patch, mu);
  const Matrix3d R = patch.rotation();
  const Vector3d p = patch.origin();
  HalfspaceSet world;
  world.A.setZero(16, 6);
  world.b.setZero(16);
  // Local row (a_l, ao_l) acting on (f_l, tau_l at patch origin) becomes
  // (R a_l - (R ao_l) x p, R ao_l) acting on (f_w, tau_w at world origin).
  for (int i = 0; i < 16; ++i) {
    const Vector3d a_l = local.A.row(i).head<3>().transpose();
    const Vector3d ao_l = local.A.row(i).tail<3>().transpose();
    const Vector3d ao_w = R * ao_l;
    const Vector3d a_w = R * a_l - ao_w.cross(p);
    world.A.row(i) << a_w.transpose(), ao_w.transpose();
  }
  return world;
}

Wrench pendulum_wrench(const Vector3d& p_G, const Vector3d& p_C,
                       double lambda, const ContactPatch& patch) {
  const Vector3d c_local = patch.to_local(p_C);
  const double scale = std::max(1.0, c_local.head<2>().norm());
  if (std::abs(c_local.z()) > 1e-6 * scale) {
    throw std::invalid_argument("pendulum_wrench: p_C off the patch plane");
  }
  const Vector3d g_local = patch.to_local(p_G);
  Wrench w;
  w.force = lambda * (g_local - Vector3d(c_local.x(), c_local.y(), 0.0));
  w.torque = Vector3d(c_local.x(), c_local.y(), 0.0).cross(w.force);
  return w;
}

bool check_cop_stability(const Vector3d& p_G, const Vector3d& p_C,
                         double lambda, const ContactPatch& patch,
                         const FrictionModel& friction, double tol) {
  if (lambda < -tol) return false;
  const Vector3d c_local = patch.to_local(p_C);
  if (!patch.contains_local_xy(c_local.head<2>(), tol)) return false;
  const Vector3d g_local = patch.to_local(p_G);
  const Vector3d leg = g_local - Vector3d(c_local.x(), c_local.y(), 0.0);
  return friction.contains_local(leg, tol);
}

double cop_edge_value(const ContactPatch& patch, int edge, const Vector3d& p_G,
                      const Vector3d& p_Z, double* normalizer) {
  // vertices() is counterclockwise about n; the feasible-side sign of the
  // triple product wants the loop walked the other way round.
  const auto verts = patch.vertices();
  const Vector3d v0 = verts[static_cast<std::size_t>((4 - edge) % 4)];
  const Vector3d v1 = verts[static_cast<std::size_t>((3 - edge) % 4)];
  const Vector3d e = v1 - v0;
  const Vector3d gv = v0 - p_G;
  const Vector3d vz = p_Z - v0;
  if (normalizer != nullptr) {
    *normalizer = e.cross(gv).norm() + e.cross(vz).norm();
  }
  return e.dot(gv.cross(vz));
}

bool check_fip_stability(const Vector3d& p_G, const Vector3d& p_Z,
                         const ContactPatch& patch,
                         const FrictionModel& friction, double tol) {
  if (!(patch.height_above(p_G) > 0.0)) {
    throw std::domain_error("check_fip_stability: COM at or below the plane");
  }
  for (int i = 0; i < 4; ++i) {
    double normalizer = 0.0;
    const double value = cop_edge_value(patch, i, p_G, p_Z, &normalizer);
    if (value > tol * std::max(normalizer, 1e-300)) return false;
  }
  const Vector3d leg_local = patch.rotation().transpose() * (p_G - p_Z);
  return friction.contains_local(leg_local, tol);
}

bool check_fip_stability_soc(const Vector3d& p_G, const Vector3d& p_Z,
                             const ContactPatch& patch, double mu,
                             double tol) {
  if (!(patch.height_above(p_G) > 0.0)) {
    throw std::domain_error("check_fip_stability_soc: COM at or below plane");
  }
  for (int i = 0; i < 4; ++i) {
    double normalizer = 0.0;
    const double value = cop_edge_value(patch, i, p_G, p_Z, &normalizer);
    if (value > tol * std::max(normalizer, 1e-300)) return false;
  }
  const FrictionModel exact(mu, 4);
  const Vector3d leg_local = patch.rotation().transpose() * (p_G - p_Z);
  return exact.contains_local_exact(leg_local, tol);
}

PlanarPolygon zmp_support_area(const Vector3d& p_G, const ContactPatch& patch,
                               const FrictionModel& friction) {
  const Vector3d g_local = patch.to_local(p_G);
  const double X = patch.half_length();
  const double Y = patch.half_width();
  PlanarPolygon poly;
  poly.vertices = {Vector2d(X, Y), Vector2d(-X, Y), Vector2d(-X, -Y),
                   Vector2d(X, -Y)};
  // Row j of the friction cone on p_G - p (p on the plane):
  //   u . (g_xy - q) - m g_z <= 0   =>   (-u) . q <= m g_z - u . g_xy
  const auto& rows = friction.local_rows();
  for (int j = 0; j < rows.rows() && !poly.empty(); ++j) {
    const Vector2d u = rows.row(j).head<2>().transpose();
    const double m_coeff = -rows(j, 2);
    const double offset = m_coeff * g_local.z() - u.dot(g_local.head<2>());
    poly = clip_by_halfplane(poly, -u, offset);
  }
  return poly;
}

PlanarPolygon static_equilibrium_polygon(const ContactPatch& patch,
                                         const FrictionModel& friction,
                                         const Vector3d& gravity) {
  if (gravity.norm() == 0.0) {
    throw std::invalid_argument("static_equilibrium_polygon: zero gravity");
  }
  const Vector3d up_local = patch.rotation().transpose() * (-gravity);
  if (!friction.contains_local(up_local)) {
    return PlanarPolygon{};
  }
  PlanarPolygon poly;
  for (const Vector3d& v : patch.vertices()) {
    poly.vertices.emplace_back(v.x(), v.y());
  }
  // Vertical projection can reverse the winding for steep tilts.
  double twice = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vector2d& p = poly.vertices[i];
    const Vector2d& q = poly.vertices[(i + 1) % 4];
    twice += p.x() * q.y() - q.x() * p.y();
  }
  if (twice < 0.0) {
    std::reverse(poly.vertices.begin(), poly.vertices.end());
  }
  return poly;
}

AttractorCone attractor_cone(const Vector3d& p_H, double k,
                             const HalfspaceSet& cwc_at_origin,
                             const Vector3d& gravity) {
  if (k == 0.0) {
    throw std::domain_error("attractor_cone: stiffness k must be nonzero");
  }
  if (cwc_at_origin.dim() != 6) {
    throw std::invalid_argument("attractor_cone: expected 6D wrench rows");
  }
  AttractorCone cone;
  cone.apex = p_H - gravity / k;
  const int n = cwc_at_origin.rows();
  cone.rows.A.setZero(n, 3);
  cone.rows.b.setZero(n);
  for (int i = 0; i < n; ++i) {
    const Vector3d a = cwc_at_origin.A.row(i).head<3>().transpose();
    const Vector3d a_O = cwc_at_origin.A.row(i).tail<3>().transpose();
    const Vector3d row = -k * (a + a_O.cross(cone.apex));
    cone.rows.A.row(i) = row.transpose();
    cone.rows.b(i) = row.dot(cone.apex);
  }
  return cone;
}

}  // namespace fipwalk
