#include "spinphase/direct.hpp"

#include <cmath>
#include <stdexcept>

#include "spinphase/tolerances.hpp"

namespace spinphase::direct {

using su2::Complex;
using su2::Mat2;
using su2::Spinor;

namespace {

Spinor schrodinger_rhs(const drive::DriveSpec& spec, double t, const Spinor& psi) {
  const Mat2 h = drive::hamiltonian(drive::sample(spec, t));
  return Complex(0.0, -1.0) * (h * psi);
}

}  // namespace

EvolutionResult evolve_direct(const drive::DriveSpec& spec, const Spinor& psi0,
                              const std::vector<double>& grid, std::size_t substeps) {
  if (std::abs(psi0.norm() - 1.0) > tol::unit_state)
    throw std::domain_error("evolve_direct: initial state must be unit norm");
  if (grid.size() < 2) throw std::invalid_argument("evolve_direct: grid needs >= 2 nodes");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1])
      throw std::invalid_argument("evolve_direct: grid must be strictly increasing");
  if (substeps == 0) throw std::invalid_argument("evolve_direct: substeps must be positive");
  if (grid.front() < spec.t_min() || grid.back() > spec.t_max())
    throw std::out_of_range("evolve_direct: grid leaves the drive domain");

  EvolutionResult out;
  out.t = grid;
  out.substeps_per_interval = substeps;
  out.psi.reserve(grid.size());
  out.norm.reserve(grid.size());

  Spinor psi = psi0;
  out.psi.push_back(psi);
  out.norm.push_back(psi.norm());

  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const double h = (grid[k + 1] - grid[k]) / static_cast<double>(substeps);
    double t = grid[k];
    for (std::size_t s = 0; s < substeps; ++s) {
      const Spinor k1 = schrodinger_rhs(spec, t, psi);
      const Spinor k2 = schrodinger_rhs(spec, t + 0.5 * h, psi + Complex(0.5 * h) * k1);
      const Spinor k3 = schrodinger_rhs(spec, t + 0.5 * h, psi + Complex(0.5 * h) * k2);
      const Spinor k4 = schrodinger_rhs(spec, t + h, psi + Complex(h) * k3);
      psi = psi + Complex(h / 6.0) * (k1 + Complex(2.0) * k2 + Complex(2.0) * k3 + k4);
      t += h;
      ++out.total_substeps;
    }
    out.psi.push_back(psi);
    out.norm.push_back(psi.norm());
  }
  return out;
}

double invariant_residual(const lr::AuxTrajectory& traj) {
  const std::size_t n = traj.size();
  if (n < 5)
    throw std::invalid_argument("invariant_residual: need >= 5 nodes for 4th-order differencing");

  const double h = traj.t[1] - traj.t[0];
  for (std::size_t k = 1; k + 1 < n; ++k)
    if (std::abs((traj.t[k + 1] - traj.t[k]) - h) > 1e-9 * h)
      throw std::invalid_argument("invariant_residual: grid must be uniform");

  double worst = 0.0;
  for (std::size_t k = 2; k + 2 < n; ++k) {
    const Mat2 im2 = lr::invariant_matrix(traj.states[k - 2]);
    const Mat2 im1 = lr::invariant_matrix(traj.states[k - 1]);
    const Mat2 ip1 = lr::invariant_matrix(traj.states[k + 1]);
    const Mat2 ip2 = lr::invariant_matrix(traj.states[k + 2]);
    const Mat2 didt = (1.0 / (12.0 * h)) * (im2 - ip2 + 8.0 * (ip1 - im1));

    const Mat2 ik = lr::invariant_matrix(traj.states[k]);
    const Mat2 hk = drive::hamiltonian(traj.samples[k]);
    // (1/i) [I, H] = -i [I, H]
    const Mat2 residual = didt + Complex(0.0, -1.0) * su2::commutator(ik, hk);
    worst = std::max(worst, residual.max_abs());
  }
  return worst;
}

}  // namespace spinphase::direct
