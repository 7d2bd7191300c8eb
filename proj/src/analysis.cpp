#include "spinphase/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "spinphase/numerics.hpp"
#include "spinphase/tolerances.hpp"

namespace spinphase::analysis {

double fidelity(const su2::Spinor& a, const su2::Spinor& b) {
  if (std::abs(a.norm() - 1.0) > tol::fidelity_norm ||
      std::abs(b.norm() - 1.0) > tol::fidelity_norm)
    throw std::domain_error("fidelity: inputs must be unit norm");
  return std::norm(su2::inner(a, b));
}

PhaseDifference interferometric_phase_difference(const lr::PhaseDecomposition& pd) {
  return {pd.geometric_up - pd.geometric_down, pd.dynamical_up - pd.dynamical_down,
          pd.total_up - pd.total_down};
}

ComparisonReport compare_solutions(const lr::AuxTrajectory& traj, const su2::Spinor& psi0,
                                   const direct::EvolutionResult& evo) {
  if (traj.t.size() != evo.t.size())
    throw std::invalid_argument("compare_solutions: grid size mismatch");
  for (std::size_t k = 0; k < traj.t.size(); ++k)
    if (traj.t[k] != evo.t[k])
      throw std::invalid_argument("compare_solutions: grids differ");

  ComparisonReport rep;
  rep.t = traj.t;
  rep.fidelity_series.reserve(traj.size());
  rep.dphi_total_series.reserve(traj.size());

  for (std::size_t k = 0; k < traj.size(); ++k) {
    const su2::Spinor lr_state = lr::assemble_solution(traj, psi0, traj.t[k]);
    rep.fidelity_series.push_back(fidelity(lr_state, evo.psi[k]));
    rep.dphi_total_series.push_back(2.0 * (traj.phi_geo_up[k] + traj.phi_dyn_up[k]));
    rep.f_max_abs = std::max(rep.f_max_abs, std::abs(traj.f[k]));

    const drive::DriveSample& d = traj.samples[k];
    const double sweep = std::hypot(d.d_theta, std::sin(d.theta) * d.d_phi);
    if (d.omega0 > 0.0) rep.adiabaticity = std::max(rep.adiabaticity, sweep / d.omega0);
  }
  rep.min_fidelity = *std::min_element(rep.fidelity_series.begin(), rep.fidelity_series.end());
  rep.final_dphi = interferometric_phase_difference(lr::phase_decompose(traj));
  return rep;
}

BerryTable berry_limit_check(double omega0, double theta0, double phi0,
                             const std::vector<double>& nu_values,
                             std::size_t nodes_per_drive_period) {
  if (nu_values.empty()) throw std::invalid_argument("berry_limit_check: empty nu sweep");
  for (std::size_t i = 0; i < nu_values.size(); ++i) {
    if (nu_values[i] <= 0.0)
      throw std::invalid_argument("berry_limit_check: nu values must be positive");
    if (i > 0 && nu_values[i] >= nu_values[i - 1])
      throw std::invalid_argument("berry_limit_check: nu values must be strictly decreasing");
  }
  if (!(omega0 > 0.0)) throw std::invalid_argument("berry_limit_check: omega0 must be positive");

  BerryTable table;
  table.target = -M_PI * (1.0 - std::cos(theta0));

  std::vector<double> log_x, log_dev;
  for (double nu : nu_values) {
    const double period = 2.0 * M_PI / nu;
    const double drive_period = 2.0 * M_PI / omega0;
    const std::size_t nodes = static_cast<std::size_t>(
        std::ceil(period / drive_period * static_cast<double>(nodes_per_drive_period))) + 1;
    std::vector<double> grid(nodes);
    for (std::size_t k = 0; k < nodes; ++k)
      grid[k] = period * static_cast<double>(k) / static_cast<double>(nodes - 1);

    const drive::DriveSpec spec = drive::DriveSpec::conical(omega0, theta0, nu, phi0);
    const lr::AuxState s0 = lr::initial_state(lr::InitMode::aligned, drive::sample(spec, 0.0));
    const lr::AuxTrajectory traj = lr::integrate_aux(spec, s0, grid);
    const double geo = lr::phase_decompose(traj).geometric_up;

    BerryRow row;
    row.nu_over_omega0 = nu / omega0;
    row.geometric_up = geo;
    row.deviation = std::abs(geo - table.target);
    table.rows.push_back(row);
    if (row.deviation > 0.0) {
      log_x.push_back(std::log(row.nu_over_omega0));
      log_dev.push_back(std::log(row.deviation));
    }
  }

  if (log_x.size() >= 2) table.exponent = numerics::linear_fit(log_x, log_dev).slope;
  return table;
}

}  // namespace spinphase::analysis
