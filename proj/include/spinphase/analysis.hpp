#pragma once

#include <vector>

#include "spinphase/direct.hpp"
#include "spinphase/lr.hpp"
#include "spinphase/su2.hpp"

/// Cross-validation and physics extraction: fidelities between the
/// Lewis-Riesenfeld and directly integrated solutions, interferometric phase
/// differences between the spin branches, and the adiabatic solid-angle limit
/// of the geometric phase.
namespace spinphase::analysis {

/// |<a|b>|^2. Both inputs must be unit to tol::fidelity_norm
/// (std::domain_error otherwise).
double fidelity(const su2::Spinor& a, const su2::Spinor& b);

/// Up-minus-down phase differences; by branch antisymmetry each equals twice
/// the up part.
struct PhaseDifference {
  double geometric = 0.0;
  double dynamical = 0.0;
  double total = 0.0;
};

PhaseDifference interferometric_phase_difference(const lr::PhaseDecomposition& pd);

struct ComparisonReport {
  std::vector<double> t;
  std::vector<double> fidelity_series;
  double min_fidelity = 1.0;
  std::vector<double> dphi_total_series;  // 2 * phi_up(t)
  PhaseDifference final_dphi;
  double f_max_abs = 0.0;      // max |m . n| along the trajectory
  double adiabaticity = 0.0;   // max axis sweep rate / omega0
};

/// Compares assemble_solution against a direct evolution computed on the same
/// grid from the same psi0. Throws std::invalid_argument on grid mismatch.
ComparisonReport compare_solutions(const lr::AuxTrajectory& traj, const su2::Spinor& psi0,
                                   const direct::EvolutionResult& evo);

struct BerryRow {
  double nu_over_omega0 = 0.0;
  double geometric_up = 0.0;  // per axis-precession cycle
  double deviation = 0.0;     // |geometric_up - (-Omega/2)|
};

struct BerryTable {
  std::vector<BerryRow> rows;
  double target = 0.0;    // -Omega/2 = -pi (1 - cos theta0)
  double exponent = 0.0;  // log-log slope of deviation vs nu/omega0
};

/// Runs an aligned-mode conical drive for exactly one axis-precession period
/// per nu and tabulates the geometric phase of the up branch against the
/// solid-angle value. nu values must be positive and strictly decreasing
/// (std::invalid_argument otherwise).
BerryTable berry_limit_check(double omega0, double theta0, double phi0,
                             const std::vector<double>& nu_values,
                             std::size_t nodes_per_drive_period = 32);

}  // namespace spinphase::analysis
