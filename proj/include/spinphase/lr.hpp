#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "spinphase/drive.hpp"
#include "spinphase/su2.hpp"
#include "spinphase/tolerances.hpp"

/// Lewis-Riesenfeld engine for the spin-rotation problem: integrates the
/// auxiliary equations
///   d(lambda)/dt = omega0 sin(theta) sin(phi - gamma)
///   d(gamma)/dt  = omega0 [cos(theta) - sin(theta) cot(lambda) cos(phi - gamma)]
/// builds the invariant I(t) and the unitary V(t) that diagonalizes it, splits
/// the accumulated phase into geometric and dynamical parts per spin branch,
/// and assembles the exact state.
///
/// The angle pair has a coordinate singularity at lambda in {0, pi}; the
/// integration therefore runs on the equivalent precession form
///   dm/dt = w(t) x m,   m = (sin(lambda)cos(gamma), sin(lambda)sin(gamma), cos(lambda)),
/// and (lambda, gamma) are extracted afterwards with gamma unwrapped by
/// continuity.
namespace spinphase::lr {

/// Orientation angles of the invariant axis; gamma is kept unwrapped.
struct AuxState {
  double lambda = 0.0;
  double gamma = 0.0;
};

/// Spin branch sigma = +1/2 ("up") or -1/2 ("down").
enum class SpinBranch { up, down };
inline double sigma_value(SpinBranch b) { return b == SpinBranch::up ? 0.5 : -0.5; }

/// m(lambda, gamma) on the unit sphere.
std::array<double, 3> invariant_axis(const AuxState& s);

/// Named initializers. "paper" starts the invariant axis orthogonal to the
/// drive axis (gamma0 = phi(0), lambda0 = theta(0) + pi/2, so f(0) = 0 and the
/// dynamical phase vanishes while f stays 0); "aligned" starts it on the
/// drive axis (adiabatic tracking). Both return canonical lambda in [0, pi].
enum class InitMode { paper, aligned };
AuxState initial_state(InitMode mode, const drive::DriveSample& at_start);

struct AuxRates {
  double d_lambda = 0.0;
  double d_gamma = 0.0;
};

/// Right-hand side of the auxiliary equations in the angle chart. At the
/// chart poles (|sin lambda| < tol::pole_sin) the cotangent term is dropped,
/// which is the smooth limit whenever sin(theta) cos(phi - gamma) -> 0 and a
/// gauge choice otherwise; integration never relies on this branch.
AuxRates aux_rhs(const AuxState& s, const drive::DriveSample& d);

struct IntegratorOptions {
  double rel_tol = tol::default_rel_tol;
  double abs_tol = tol::default_abs_tol;
};

/// Solved auxiliary trajectory on an output grid, with everything the phase
/// bookkeeping and exports need per node. phi_*_up are cumulative phases of
/// the sigma = +1/2 branch (the -1/2 branch is their negative).
struct AuxTrajectory {
  std::vector<double> t;
  std::vector<AuxState> states;
  std::vector<drive::DriveSample> samples;
  std::vector<double> f;              // m . n, the invariant/drive axis cosine
  std::vector<double> norm_residual;  // | |m| - 1 | of the raw integrated vector
  std::vector<double> geo_integrand;  // d(gamma)/dt (1 - cos lambda)
  std::vector<double> dyn_integrand;  // omega0 f
  std::vector<double> phi_geo_up;
  std::vector<double> phi_dyn_up;

  std::size_t size() const { return t.size(); }
};

/// Adaptive embedded Runge-Kutta integration of the precession form over the
/// given strictly increasing grid. Throws NumericalError with the diagnostic
/// time when the step control stalls, std::out_of_range when the grid leaves
/// the drive domain.
AuxTrajectory integrate_aux(const drive::DriveSpec& spec, const AuxState& s0,
                            const std::vector<double>& grid,
                            const IntegratorOptions& opt = {});

/// I = sin(lambda) e^{-i gamma} sigma+ / 4 + sin(lambda) e^{i gamma} sigma- / 4
///   + cos(lambda) sigma3 / 2, identically m.sigma/2. Eigenvalues +-1/2.
su2::Mat2 invariant_matrix(const AuxState& s);

/// V = exp[(beta/2) sigma+ - (beta*/2) sigma-] with beta = -(lambda/2) e^{-i gamma};
/// unitary, V' I V = sigma3/2.
su2::Mat2 vt_unitary(const AuxState& s);

/// Effective Hamiltonian after the V transformation, in closed form
///   (1/2) { omega0 [cos(lambda)cos(theta) + sin(lambda)sin(theta)cos(gamma - phi)]
///           + d(gamma)/dt (1 - cos lambda) } sigma3.
/// Cross-checked against the directly conjugated V'HV - i V' dV/dt; throws
/// NumericalError when its off-diagonal exceeds tol::hv_offdiag, i.e. when
/// (lambda, gamma, d_gamma) do not satisfy the auxiliary equations.
su2::Mat2 hv_effective(const AuxState& s, const drive::DriveSample& d, double d_gamma);

/// Accumulated phases per branch; total = geometric + dynamical, and every
/// down part is minus the matching up part.
struct PhaseDecomposition {
  double geometric_up = 0.0, geometric_down = 0.0;
  double dynamical_up = 0.0, dynamical_down = 0.0;
  double total_up = 0.0, total_down = 0.0;
};

/// Phases at a grid node (composite Simpson accumulation over the grid).
PhaseDecomposition phase_decompose_at(const AuxTrajectory& traj, std::size_t node);
/// Phases at the final node.
PhaseDecomposition phase_decompose(const AuxTrajectory& traj);

/// |Psi(t)> = sum_sigma C_sigma exp[i phi_sigma(t)] V(t) |sigma> with
/// C_sigma = <sigma, t=0 | psi0>. t must lie on the trajectory span; values
/// between nodes are linearly interpolated. Norm-preserving.
su2::Spinor assemble_solution(const AuxTrajectory& traj, const su2::Spinor& psi0, double t);

}  // namespace spinphase::lr
