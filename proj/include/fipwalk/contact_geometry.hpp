#pragma once

#include "fipwalk/geometry.hpp"

namespace fipwalk {

/// Polyhedral constructions for single-contact stability.
///
/// Conventions: the COP-based check needs (i) nonnegative pendulum
/// stiffness, (ii) the COP inside the patch rectangle and (iii) the COM
/// inside the friction cone rooted at the COP. The ZMP-based check needs
/// (i) the ZMP inside the cone spanned by the patch as seen from the COM
/// and (ii) the COM inside the friction cone rooted at the ZMP. Both are
/// equivalent to membership of the pendulum wrench in the 16-row contact
/// wrench cone of the rectangular patch.

/// 16-row contact wrench cone of a rectangular patch with an axis-aligned
/// friction pyramid of coefficient mu, in the patch-local frame at the
/// patch origin. Row order: 4 friction rows (|f_x|, |f_y| <= mu f_z),
/// 4 COP rows (|tau_x| <= Y f_z, |tau_y| <= X f_z), 8 yaw rows (lower and
/// upper yaw-torque bounds with absolute values expanded).
/// Rows act on stacked wrenches (f, tau) and all offsets are zero.
HalfspaceSet cwc_halfspaces(const ContactPatch& patch, double mu);

/// Same cone expressed in the world frame with moments taken at the world
/// origin.
HalfspaceSet cwc_world_rows(const ContactPatch& patch, double mu);

/// Wrench of the pendulum mode f = lambda (p_G - p_C), tau_O = p_C x f,
/// in the patch-local frame. p_C must lie on the supporting plane.
Wrench pendulum_wrench(const Vector3d& p_G, const Vector3d& p_C,
                       double lambda, const ContactPatch& patch);

/// COP-based contact stability: lambda >= 0, p_C in the patch and
/// p_G - p_C inside the friction cone. Total function; the out-of-plane
/// component of p_C is ignored.
bool check_cop_stability(const Vector3d& p_G, const Vector3d& p_C,
                         double lambda, const ContactPatch& patch,
                         const FrictionModel& friction,
                         double tol = kMembershipTol);

/// Value of the COP-cone inequality for edge i (0..3), negative or zero
/// when the ZMP is on the feasible side. Edges are traversed so that a ZMP
/// inside the cone spanned by the patch from the COM satisfies all four
/// rows. `normalizer` (optional out) carries the gradient scale used for
/// tolerance normalization.
double cop_edge_value(const ContactPatch& patch, int edge, const Vector3d& p_G,
                      const Vector3d& p_Z, double* normalizer = nullptr);

/// ZMP-based (floating) contact stability. Requires the COM strictly above
/// the supporting plane.
bool check_fip_stability(const Vector3d& p_G, const Vector3d& p_Z,
                         const ContactPatch& patch,
                         const FrictionModel& friction,
                         double tol = kMembershipTol);

/// Variant of check_fip_stability with the exact second-order friction
/// cone instead of the polyhedral rows.
bool check_fip_stability_soc(const Vector3d& p_G, const Vector3d& p_Z,
                             const ContactPatch& patch, double mu,
                             double tol = kMembershipTol);

/// ZMP support area: intersection of the patch with the backward friction
/// cone rooted at the COM, in patch-local xy coordinates. May be empty.
PlanarPolygon zmp_support_area(const Vector3d& p_G, const ContactPatch& patch,
                               const FrictionModel& friction);

/// Static-equilibrium COM polygon: empty when the upward vertical is not
/// inside the friction cone, otherwise the vertical projection of the patch
/// onto a horizontal plane (world xy coordinates).
PlanarPolygon static_equilibrium_polygon(const ContactPatch& patch,
                                         const FrictionModel& friction,
                                         const Vector3d& gravity);

/// Cone of contact-stable COM positions under the proportional control law
/// a_G = k (p_H - p_G), k != 0. One row per contact-wrench-cone row; the
/// apex satisfies every row with equality.
struct AttractorCone {
  Vector3d apex;
  HalfspaceSet rows;  // rows over COM positions, row . p_G <= offset

  bool contains(const Vector3d& p_G, double tol = kMembershipTol) const {
    return rows.contains(p_G, tol);
  }
};

AttractorCone attractor_cone(const Vector3d& p_H, double k,
                             const HalfspaceSet& cwc_at_origin,
                             const Vector3d& gravity);

}  // namespace fipwalk
