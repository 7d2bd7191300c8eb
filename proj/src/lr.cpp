#include "spinphase/lr.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spinphase/errors.hpp"
#include "spinphase/numerics.hpp"

namespace spinphase::lr {

namespace odeint = boost::numeric::odeint;
using su2::Complex;
using su2::Mat2;
using su2::Spinor;
using Vec3 = std::array<double, 3>;

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

}  // namespace

Vec3 invariant_axis(const AuxState& s) {
  return {std::sin(s.lambda) * std::cos(s.gamma), std::sin(s.lambda) * std::sin(s.gamma),
          std::cos(s.lambda)};
}

AuxState initial_state(InitMode mode, const drive::DriveSample& d) {
  AuxState raw;
  switch (mode) {
    case InitMode::paper:
      raw = {d.theta + M_PI / 2.0, d.phi};
      break;
    case InitMode::aligned:
      raw = {d.theta, d.phi};
      break;
  }
  // canonical chart: lambda in [0, pi]
  const Vec3 m = invariant_axis(raw);
  AuxState s;
  s.lambda = std::acos(std::clamp(m[2], -1.0, 1.0));
  s.gamma = std::hypot(m[0], m[1]) > tol::pole_sin ? std::atan2(m[1], m[0]) : raw.gamma;
  return s;
}

AuxRates aux_rhs(const AuxState& s, const drive::DriveSample& d) {
  const double st = std::sin(d.theta);
  const double sl = std::sin(s.lambda);
  const double delta = d.phi - s.gamma;
  AuxRates r;
  r.d_lambda = d.omega0 * st * std::sin(delta);
  const double transverse = st * std::cos(delta);
  if (std::abs(sl) < tol::pole_sin) {
    r.d_gamma = d.omega0 * std::cos(d.theta);  // pole gauge limit
  } else {
    r.d_gamma = d.omega0 * (std::cos(d.theta) - transverse * std::cos(s.lambda) / sl);
  }
  return r;
}

namespace {

// gamma_dot (1 - cos lambda) written through tan(lambda/2); regular at the
// north pole where the cotangent in gamma_dot alone diverges.
double geometric_integrand(const AuxState& s, const drive::DriveSample& d) {
  const double one_minus = 1.0 - std::cos(s.lambda);
  const double tan_half = std::tan(0.5 * s.lambda);
  return d.omega0 * (std::cos(d.theta) * one_minus -
                     std::sin(d.theta) * std::cos(d.phi - s.gamma) * std::cos(s.lambda) * tan_half);
}

double axis_cosine(const Vec3& m_unit, const drive::DriveSample& d) {
  const Vec3 w = drive::omega_vector(d);
  const double w0 = d.omega0;
  if (w0 == 0.0)
    return std::cos(d.theta) * m_unit[2] +
           std::sin(d.theta) * (std::cos(d.phi) * m_unit[0] + std::sin(d.phi) * m_unit[1]);
  return dot(w, m_unit) / w0;
}

}  // namespace

AuxTrajectory integrate_aux(const drive::DriveSpec& spec, const AuxState& s0,
                            const std::vector<double>& grid, const IntegratorOptions& opt) {
  if (grid.size() < 2) throw std::invalid_argument("integrate_aux: grid needs >= 2 nodes");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1])
      throw std::invalid_argument("integrate_aux: grid must be strictly increasing");
  if (grid.front() < spec.t_min() || grid.back() > spec.t_max())
    throw std::out_of_range("integrate_aux: grid leaves the drive domain");

  const auto rhs = [&spec](const Vec3& m, Vec3& dm, double t) {
    dm = cross(drive::omega_vector(drive::sample(spec, t)), m);
  };

  std::vector<Vec3> raw;
  raw.reserve(grid.size());
  double last_time = grid.front();
  const auto observer = [&raw, &last_time](const Vec3& m, double t) {
    raw.push_back(m);
    last_time = t;
  };

  Vec3 m = invariant_axis(s0);
  auto stepper =
      odeint::make_controlled(opt.abs_tol, opt.rel_tol, odeint::runge_kutta_dopri5<Vec3>());
  const double dt0 = (grid[1] - grid[0]) / 16.0;
  try {
    odeint::integrate_times(stepper, rhs, m, grid.begin(), grid.end(), dt0, observer,
                            odeint::max_step_checker(10000));
  } catch (const std::exception& e) {
    throw NumericalError("integrate_aux: step-size collapse near t = " +
                         std::to_string(last_time) + " (" + e.what() + ")");
  }

  AuxTrajectory traj;
  const std::size_t n = grid.size();
  traj.t = grid;
  traj.states.resize(n);
  traj.samples.resize(n);
  traj.f.resize(n);
  traj.norm_residual.resize(n);
  traj.geo_integrand.resize(n);
  traj.dyn_integrand.resize(n);

  double gamma_prev = s0.gamma;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3& mk = raw[k];
    const double nk = norm(mk);
    traj.norm_residual[k] = std::abs(nk - 1.0);
    const Vec3 mu{mk[0] / nk, mk[1] / nk, mk[2] / nk};

    AuxState s;
    s.lambda = std::acos(std::clamp(mu[2], -1.0, 1.0));
    if (std::hypot(mu[0], mu[1]) > tol::pole_sin) {
      const double principal = std::atan2(mu[1], mu[0]);
      s.gamma = gamma_prev + std::remainder(principal - gamma_prev, 2.0 * M_PI);
    } else {
      s.gamma = gamma_prev;  // chart pole: keep gamma continuous
    }
    gamma_prev = s.gamma;

    traj.states[k] = s;
    traj.samples[k] = drive::sample(spec, grid[k]);
    traj.f[k] = axis_cosine(mu, traj.samples[k]);
    traj.geo_integrand[k] = geometric_integrand(s, traj.samples[k]);
    traj.dyn_integrand[k] = traj.samples[k].omega0 * traj.f[k];
  }

  const auto geo = numerics::cumulative_simpson(traj.t, traj.geo_integrand);
  const auto dyn = numerics::cumulative_simpson(traj.t, traj.dyn_integrand);
  traj.phi_geo_up.resize(n);
  traj.phi_dyn_up.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    traj.phi_geo_up[k] = -0.5 * geo[k];
    traj.phi_dyn_up[k] = -0.5 * dyn[k];
  }
  return traj;
}

Mat2 invariant_matrix(const AuxState& s) {
  const double sl = std::sin(s.lambda);
  const double cl = std::cos(s.lambda);
  const Complex eg{std::cos(s.gamma), -std::sin(s.gamma)};  // e^{-i gamma}
  return {Complex(0.5 * cl, 0.0), 0.5 * sl * eg, 0.5 * sl * std::conj(eg),
          Complex(-0.5 * cl, 0.0)};
}

Mat2 vt_unitary(const AuxState& s) {
  return su2::expm_su2({-std::sin(s.gamma), std::cos(s.gamma), 0.0}, s.lambda);
}

namespace {

Mat2 vt_time_derivative(const AuxState& s, double d_lambda, double d_gamma) {
  const double ch = std::cos(0.5 * s.lambda);
  const double sh = std::sin(0.5 * s.lambda);
  const Complex eg{std::cos(s.gamma), -std::sin(s.gamma)};  // e^{-i gamma}
  const Complex i{0.0, 1.0};
  Mat2 d;
  d.a11 = Complex(-0.5 * d_lambda * sh, 0.0);
  d.a12 = (-0.5 * d_lambda * ch + i * d_gamma * sh) * eg;
  d.a21 = (0.5 * d_lambda * ch + i * d_gamma * sh) * std::conj(eg);
  d.a22 = d.a11;
  return d;
}

}  // namespace

Mat2 hv_effective(const AuxState& s, const drive::DriveSample& d, double d_gamma) {
  const double f = std::cos(s.lambda) * std::cos(d.theta) +
                   std::sin(s.lambda) * std::sin(d.theta) * std::cos(s.gamma - d.phi);
  const double diag = 0.5 * (d.omega0 * f + d_gamma * (1.0 - std::cos(s.lambda)));

  // Consistency gate: conjugate directly and require the off-diagonal part to
  // vanish, which holds iff the auxiliary equations do.
  const double d_lambda = aux_rhs(s, d).d_lambda;
  const Mat2 v = vt_unitary(s);
  const Mat2 vdag = v.adjoint();
  const Mat2 direct =
      vdag * drive::hamiltonian(d) * v - Complex(0.0, 1.0) * (vdag * vt_time_derivative(s, d_lambda, d_gamma));
  const double offdiag = std::max(std::abs(direct.a12), std::abs(direct.a21));
  if (offdiag > tol::hv_offdiag * std::max(1.0, d.omega0))
    throw NumericalError(
        "hv_effective: off-diagonal residual " + std::to_string(offdiag) +
        " - auxiliary equations violated at this state");

  return {Complex(diag, 0.0), 0.0, 0.0, Complex(-diag, 0.0)};
}

PhaseDecomposition phase_decompose_at(const AuxTrajectory& traj, std::size_t node) {
  if (node >= traj.size()) throw std::out_of_range("phase_decompose_at: node out of range");
  PhaseDecomposition pd;
  pd.geometric_up = traj.phi_geo_up[node];
  pd.dynamical_up = traj.phi_dyn_up[node];
  pd.total_up = pd.geometric_up + pd.dynamical_up;
  pd.geometric_down = -pd.geometric_up;
  pd.dynamical_down = -pd.dynamical_up;
  pd.total_down = -pd.total_up;
  return pd;
}

PhaseDecomposition phase_decompose(const AuxTrajectory& traj) {
  if (traj.size() == 0) throw std::invalid_argument("phase_decompose: empty trajectory");
  return phase_decompose_at(traj, traj.size() - 1);
}

Spinor assemble_solution(const AuxTrajectory& traj, const Spinor& psi0, double t) {
  if (traj.size() == 0) throw std::invalid_argument("assemble_solution: empty trajectory");
  if (t < traj.t.front() || t > traj.t.back())
    throw std::out_of_range("assemble_solution: t outside the trajectory grid");

  // locate the bracketing node(s)
  const auto it = std::lower_bound(traj.t.begin(), traj.t.end(), t);
  std::size_t hi = static_cast<std::size_t>(it - traj.t.begin());
  if (hi == traj.t.size()) hi = traj.t.size() - 1;

  AuxState s;
  double phi_up;
  const double snap = 1e-12 * std::max(1.0, std::abs(t));
  if (std::abs(traj.t[hi] - t) <= snap) {
    s = traj.states[hi];
    phi_up = traj.phi_geo_up[hi] + traj.phi_dyn_up[hi];
  } else {
    const std::size_t lo = hi - 1;
    const double w = (t - traj.t[lo]) / (traj.t[hi] - traj.t[lo]);
    s.lambda = (1.0 - w) * traj.states[lo].lambda + w * traj.states[hi].lambda;
    s.gamma = (1.0 - w) * traj.states[lo].gamma + w * traj.states[hi].gamma;
    phi_up = (1.0 - w) * (traj.phi_geo_up[lo] + traj.phi_dyn_up[lo]) +
             w * (traj.phi_geo_up[hi] + traj.phi_dyn_up[hi]);
  }

  const Mat2 v0d = vt_unitary(traj.states.front()).adjoint();
  const Spinor c = v0d * psi0;  // (C_up, C_down)
  const Complex phase_up{std::cos(phi_up), std::sin(phi_up)};
  return vt_unitary(s) * Spinor{c.up * phase_up, c.down * std::conj(phase_up)};
}

}  // namespace spinphase::lr
