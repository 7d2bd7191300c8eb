#pragma once

#include <array>
#include <functional>
#include <vector>

#include "spinphase/tolerances.hpp"

/// Kerr exterior metric, its rotating-frame form, and the gravitomagnetic
/// field/force structure extracted from the off-diagonal components.
///
/// Conventions (SI units throughout):
///   ds^2 = g_tt c^2 dt^2 + g_rr dr^2 + g_thth dtheta^2 + g_phph dphi^2
///        + g_tph dt dphi + g_tr (c dt) dr
/// Vector fields carry orthonormal (physical) spherical components, so the
/// published closed forms with unit vectors e_r, e_theta apply verbatim.
namespace spinphase::gravity {

struct KerrParams {
  double G = 0.0;  // m^3 kg^-1 s^-2
  double M = 0.0;  // kg
  double c = 1.0;  // m/s
  double a = 0.0;  // m; a*c is the angular momentum per unit mass
};

/// Rotating frame: rotation rate about z and the radial particle speed used
/// by the coordinate transformation. |v| << omega*r is assumed by the
/// published form; it is a validity condition, not an enforced error.
struct RotFrame {
  double omega = 0.0;  // rad/s
  double v = 0.0;      // m/s
};

struct SphericalPoint {
  double r = 1.0;      // m, > 0
  double theta = 0.0;  // rad, [0, pi]
  double phi = 0.0;    // rad
};

struct MetricComponents {
  double g_tt = 0.0;
  double g_rr = 0.0;
  double g_thth = 0.0;
  double g_phph = 0.0;
  double g_tph = 0.0;  // coefficient of dt dphi
  double g_tr = 0.0;   // coefficient of (c dt) dr
};

/// Orthonormal spherical components (e_r, e_theta, e_phi).
struct FieldVector {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Exterior Kerr metric at x. Throws std::domain_error on the horizon
/// condition r^2 + a^2 - 2GMr/c^2 = 0 and for invalid coordinates.
MetricComponents kerr_metric(const KerrParams& p, const SphericalPoint& x);

/// Metric seen in the frame rotating at f.omega with radial speed f.v,
/// obtained by the low-velocity coordinate transformation of the Kerr line
/// element. Reduces to kerr_metric for omega = v = 0.
MetricComponents rotating_metric(const KerrParams& p, const RotFrame& f,
                                 const SphericalPoint& x);

/// Gravitomagnetic potential components:
///   A_phi = 2 a G M sin(theta) / (c r^2) + 2 omega r sin(theta),
///   A_r = -2 v, A_theta = 0.
FieldVector gravitomagnetic_potential(const KerrParams& p, const RotFrame& f,
                                      const SphericalPoint& x);

using FieldSampler = std::function<FieldVector(const SphericalPoint&)>;

/// Second-order central-difference curl in orthonormal spherical components.
/// Steps are h_rel * r radially and h_rel radians in the angles. Throws
/// std::domain_error within 2 steps of a coordinate singularity.
FieldVector curl_spherical(const FieldSampler& field, const SphericalPoint& x,
                           double h_rel = tol::default_curl_step_rel);

/// B = -(1/2) curl A evaluated numerically from gravitomagnetic_potential.
FieldVector gravitomagnetic_field(const KerrParams& p, const RotFrame& f,
                                  const SphericalPoint& x,
                                  double h_rel = tol::default_curl_step_rel);

/// Closed form of the frame-induced part of B:
///   (-2 omega cos(theta), 2 omega sin(theta), 0),
/// the constant Cartesian vector -2 w.
FieldVector frame_field_closed_form(const RotFrame& f, const SphericalPoint& x);

/// Force on a particle of the given mass and Cartesian velocity in the
/// gravitomagnetic field B at x. With this module's B = -(1/2) curl A the
/// force is F = m B x v, which for the frame field equals the Coriolis force
/// 2 m v x w (= -2 m w x v).
std::array<double, 3> lorentz_force(double mass, const std::array<double, 3>& velocity,
                                    const FieldVector& b, const SphericalPoint& x);

/// Physical spherical components -> Cartesian vector at x.
std::array<double, 3> to_cartesian(const FieldVector& v, const SphericalPoint& x);

/// Least-squares characterization of the mass-sourced part of B against the
/// dipole pattern (-2 cos(theta), -sin(theta), 0) / r^3.
struct DipoleFit {
  double prefactor = 0.0;         // fitted K in B = K * pattern
  double falloff_exponent = 0.0;  // fitted p in |B| ~ r^-p
  double pattern_r_squared = 0.0; // R^2 of the vector-pattern fit
  double expected_gma_c = 0.0;    // G M a / c
  double paper_2g_c = 0.0;        // 2 G / c, reported for comparison
};

/// Fits the numerically evaluated mass-only field over a log-spaced r grid
/// and a theta grid. Throws std::invalid_argument for degenerate grids.
DipoleFit fit_dipole(const KerrParams& p, const std::vector<double>& r_values,
                     const std::vector<double>& theta_values,
                     double h_rel = tol::default_curl_step_rel);

}  // namespace spinphase::gravity
