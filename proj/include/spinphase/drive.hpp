#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "spinphase/su2.hpp"

/// Time-dependent rotation vector
///   w(t) = omega0(t) [sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)]
/// and the spin-rotation Hamiltonian H(t) = w(t).sigma/2 built from it
/// (hbar = 1, so H is in rad/s). Analytic kinds carry exact derivatives;
/// sampled tables are backed by natural cubic splines.
namespace spinphase::drive {

enum class DriveKind { constant, conical, modulated, sampled };

/// Instantaneous axis parameters and their time derivatives.
struct DriveSample {
  double omega0 = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double d_omega0 = 0.0;
  double d_theta = 0.0;
  double d_phi = 0.0;
};

struct SampledTable;  // opaque spline storage

class DriveSpec {
 public:
  /// Fixed axis: omega0, theta0, phi0, all derivatives zero.
  static DriveSpec constant(double omega0, double theta0, double phi0);
  /// Axis precessing about z: phi(t) = phi0 + nu * t.
  static DriveSpec conical(double omega0, double theta0, double nu, double phi0);
  /// Conical with amplitude law omega0(t) = omega0 * (1 + eps * sin(nu_m * t)).
  static DriveSpec modulated(double omega0, double theta0, double nu, double phi0,
                             double eps, double nu_m);
  /// Time-ordered table of (t, omega0, theta, phi), cubic interpolated.
  /// Throws std::invalid_argument unless t is strictly increasing with >= 4 rows.
  static DriveSpec sampled(const std::vector<std::array<double, 4>>& table);
  /// Reads a sampled table from CSV with the exact header "t,omega0,theta,phi".
  static DriveSpec sampled_from_csv(const std::string& path);

  DriveKind kind() const { return kind_; }
  double omega0() const { return omega0_; }
  double theta0() const { return theta0_; }
  double phi0() const { return phi0_; }
  double nu() const { return nu_; }
  double epsilon() const { return eps_; }
  double nu_m() const { return nu_m_; }
  /// Valid time span; unbounded for analytic kinds.
  double t_min() const;
  double t_max() const;

 private:
  DriveSpec() = default;
  DriveKind kind_ = DriveKind::constant;
  double omega0_ = 0.0, theta0_ = 0.0, phi0_ = 0.0;
  double nu_ = 0.0, eps_ = 0.0, nu_m_ = 0.0;
  std::shared_ptr<const SampledTable> table_;  // immutable, shared by copies

  friend DriveSample sample(const DriveSpec&, double);
};

/// Evaluate the drive at time t. Sampled kind throws std::out_of_range
/// outside the table span.
DriveSample sample(const DriveSpec& spec, double t);

/// w(t) as a Cartesian vector; its Euclidean norm is omega0.
std::array<double, 3> omega_vector(const DriveSample& s);

/// H = omega0 { sin(theta) e^{-i phi} sigma+ / 4 + sin(theta) e^{i phi} sigma- / 4
///            + cos(theta) sigma3 / 2 }, identically w.sigma/2. Hermitian, traceless.
su2::Mat2 hamiltonian(const DriveSample& s);

}  // namespace spinphase::drive
