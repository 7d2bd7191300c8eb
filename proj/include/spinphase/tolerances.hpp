#pragma once

/// Central numeric tolerance record. Every module pulls its thresholds from
/// here so there is a single audit point for accuracy claims.
namespace spinphase::tol {

// su2 algebra
inline constexpr double hermitian_rel = 1e-12;   // input gate for herm_eig2, relative to max-norm
inline constexpr double unitary_abs = 1e-12;     // ||U'U - I||_max for generated unitaries
inline constexpr double unit_axis = 1e-10;       // |axis| - 1 allowed in expm_su2
inline constexpr double degenerate_gap = 1e-13;  // eigenvalue gap below which the canonical basis is returned

// Lewis-Riesenfeld engine
inline constexpr double default_rel_tol = 1e-10;  // adaptive integrator, relative
inline constexpr double default_abs_tol = 1e-12;  // adaptive integrator, absolute
inline constexpr double hv_offdiag = 1e-9;        // consistency gate on the conjugated effective Hamiltonian
inline constexpr double pole_sin = 1e-12;         // |sin(lambda)| below which the angle chart is degenerate

// direct solver
inline constexpr double unit_state = 1e-12;  // | ||psi|| - 1 | accepted at t = 0

// analysis
inline constexpr double fidelity_norm = 1e-6;          // normalization gate on fidelity inputs
inline constexpr double default_min_fidelity = 1e-8;   // default acceptance: min fidelity >= 1 - this

// gravitomagnetics
inline constexpr double default_curl_step_rel = 1e-4;  // finite-difference step, relative to r

}  // namespace spinphase::tol
