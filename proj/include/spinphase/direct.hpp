#pragma once

#include <cstddef>
#include <vector>

#include "spinphase/drive.hpp"
#include "spinphase/lr.hpp"
#include "spinphase/su2.hpp"

/// Brute-force reference propagator for i d|psi>/dt = H(t) |psi| using
/// classical fixed-substep RK4. Deliberately simple and independent of the
/// adaptive Lewis-Riesenfeld machinery it cross-validates; norm drift is
/// reported, never corrected.
namespace spinphase::direct {

struct EvolutionResult {
  std::vector<double> t;
  std::vector<su2::Spinor> psi;
  std::vector<double> norm;  // ||psi|| per node
  std::size_t substeps_per_interval = 0;
  std::size_t total_substeps = 0;
};

/// Propagates psi0 over the strictly increasing grid, taking `substeps`
/// fixed RK4 steps per output interval. Throws std::domain_error unless
/// psi0 is unit to tol::unit_state.
EvolutionResult evolve_direct(const drive::DriveSpec& spec, const su2::Spinor& psi0,
                              const std::vector<double>& grid, std::size_t substeps = 64);

/// Max over interior nodes of || dI/dt + (1/i)[I, H] ||_max with dI/dt from
/// centered 4th-order finite differences on a uniform grid. Needs >= 5 nodes
/// (std::invalid_argument otherwise).
double invariant_residual(const lr::AuxTrajectory& traj);

}  // namespace spinphase::direct
