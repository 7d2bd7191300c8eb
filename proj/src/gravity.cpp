#include "spinphase/gravity.hpp"

#include <cmath>
#include <stdexcept>

namespace spinphase::gravity {

namespace {

void check_point(const SphericalPoint& x) {
  if (!(x.r > 0.0)) throw std::domain_error("metric: r must be positive");
  if (x.theta < 0.0 || x.theta > M_PI)
    throw std::domain_error("metric: theta must lie in [0, pi]");
}

}  // namespace

MetricComponents kerr_metric(const KerrParams& p, const SphericalPoint& x) {
  check_point(x);
  const double c2 = p.c * p.c;
  const double cth = std::cos(x.theta);
  const double s2 = std::sin(x.theta) * std::sin(x.theta);
  const double rho2 = x.r * x.r + p.a * p.a * cth * cth;
  const double delta = x.r * x.r + p.a * p.a - 2.0 * p.G * p.M * x.r / c2;
  if (std::abs(delta) <= 1e-12 * (x.r * x.r + p.a * p.a))
    throw std::domain_error("kerr_metric: horizon condition r^2 + a^2 - 2GMr/c^2 = 0");

  const double gmr = p.G * p.M * x.r;
  MetricComponents g;
  g.g_tt = 1.0 - 2.0 * gmr / (c2 * rho2);
  g.g_rr = -rho2 / delta;
  g.g_thth = -rho2;
  g.g_phph = -s2 * (2.0 * p.a * p.a * s2 * gmr / (c2 * rho2) + x.r * x.r + p.a * p.a);
  g.g_tph = 2.0 * p.a * s2 * gmr / (p.c * rho2);
  g.g_tr = 0.0;
  return g;
}

MetricComponents rotating_metric(const KerrParams& p, const RotFrame& f,
                                 const SphericalPoint& x) {
  MetricComponents g = kerr_metric(p, x);
  const double c2 = p.c * p.c;
  const double s2 = std::sin(x.theta) * std::sin(x.theta);

  // -g_phph = sin^2(theta) (r^2 + a^2 + 2 a^2 sin^2(theta) GMr / (c^2 rho^2))
  const double axial = -g.g_phph;
  g.g_tt += g.g_rr * f.v * f.v / c2                   // radial boost term
            - axial * f.omega * f.omega / c2          // centrifugal term
            - g.g_tph * f.omega / c2;                 // rotation of the cross term
  g.g_tr = g.g_rr * 2.0 * f.v / p.c;
  g.g_tph += 2.0 * axial * f.omega;
  return g;
}

FieldVector gravitomagnetic_potential(const KerrParams& p, const RotFrame& f,
                                      const SphericalPoint& x) {
  check_point(x);
  const double st = std::sin(x.theta);
  FieldVector a;
  a.r = -2.0 * f.v;
  a.theta = 0.0;
  a.phi = 2.0 * p.a * p.G * p.M * st / (p.c * x.r * x.r) + 2.0 * f.omega * x.r * st;
  return a;
}

FieldVector curl_spherical(const FieldSampler& field, const SphericalPoint& x,
                           double h_rel) {
  check_point(x);
  if (!(h_rel > 0.0)) throw std::domain_error("curl_spherical: step must be positive");
  const double hr = h_rel * x.r;
  const double ha = h_rel;
  if (x.r - 2.0 * hr <= 0.0 || x.theta - 2.0 * ha <= 0.0 || x.theta + 2.0 * ha >= M_PI)
    throw std::domain_error("curl_spherical: point within 2 steps of a coordinate singularity");

  const auto at = [&](double r, double th, double ph) {
    return field(SphericalPoint{r, th, ph});
  };
  const double r = x.r, th = x.theta, ph = x.phi;
  const double st = std::sin(th);

  // d/dtheta [sin(theta) F_phi] and d/dtheta [F_r]
  const FieldVector ftp = at(r, th + ha, ph);
  const FieldVector ftm = at(r, th - ha, ph);
  const double d_sin_fphi = (std::sin(th + ha) * ftp.phi - std::sin(th - ha) * ftm.phi) / (2.0 * ha);
  const double d_fr_dth = (ftp.r - ftm.r) / (2.0 * ha);

  // d/dr [r F_phi] and d/dr [r F_theta]
  const FieldVector frp = at(r + hr, th, ph);
  const FieldVector frm = at(r - hr, th, ph);
  const double d_rfphi = ((r + hr) * frp.phi - (r - hr) * frm.phi) / (2.0 * hr);
  const double d_rfth = ((r + hr) * frp.theta - (r - hr) * frm.theta) / (2.0 * hr);

  // d/dphi [F_theta] and d/dphi [F_r]
  const FieldVector fpp = at(r, th, ph + ha);
  const FieldVector fpm = at(r, th, ph - ha);
  const double d_fth_dph = (fpp.theta - fpm.theta) / (2.0 * ha);
  const double d_fr_dph = (fpp.r - fpm.r) / (2.0 * ha);

  FieldVector curl;
  curl.r = (d_sin_fphi - d_fth_dph) / (r * st);
  curl.theta = (d_fr_dph / st - d_rfphi) / r;
  curl.phi = (d_rfth - d_fr_dth) / r;
  return curl;
}

FieldVector gravitomagnetic_field(const KerrParams& p, const RotFrame& f,
                                  const SphericalPoint& x, double h_rel) {
  const FieldSampler pot = [&](const SphericalPoint& y) {
    return gravitomagnetic_potential(p, f, y);
  };
  FieldVector c = curl_spherical(pot, x, h_rel);
  return {-0.5 * c.r, -0.5 * c.theta, -0.5 * c.phi};
}

FieldVector frame_field_closed_form(const RotFrame& f, const SphericalPoint& x) {
  return {-2.0 * f.omega * std::cos(x.theta), 2.0 * f.omega * std::sin(x.theta), 0.0};
}

std::array<double, 3> to_cartesian(const FieldVector& v, const SphericalPoint& x) {
  const double st = std::sin(x.theta), ct = std::cos(x.theta);
  const double sp = std::sin(x.phi), cp = std::cos(x.phi);
  // columns: e_r, e_theta, e_phi
  return {v.r * st * cp + v.theta * ct * cp - v.phi * sp,
          v.r * st * sp + v.theta * ct * sp + v.phi * cp,
          v.r * ct - v.theta * st};
}

std::array<double, 3> lorentz_force(double mass, const std::array<double, 3>& velocity,
                                    const FieldVector& b, const SphericalPoint& x) {
  const std::array<double, 3> bc = to_cartesian(b, x);
  return {mass * (bc[1] * velocity[2] - bc[2] * velocity[1]),
          mass * (bc[2] * velocity[0] - bc[0] * velocity[2]),
          mass * (bc[0] * velocity[1] - bc[1] * velocity[0])};
}

DipoleFit fit_dipole(const KerrParams& p, const std::vector<double>& r_values,
                     const std::vector<double>& theta_values, double h_rel) {
  if (r_values.size() < 2 || theta_values.size() < 2)
    throw std::invalid_argument("fit_dipole: need at least 2 radii and 2 angles");

  const RotFrame no_frame{0.0, 0.0};
  double sum_bp = 0.0, sum_pp = 0.0;
  double sum_b2 = 0.0;
  double sum_br = 0.0, sum_bth = 0.0;
  std::size_t n = 0;

  std::vector<double> log_r, log_mag;
  log_r.reserve(r_values.size());

  for (double r : r_values) {
    double mag2_acc = 0.0;
    for (double th : theta_values) {
      const SphericalPoint x{r, th, 0.0};
      const FieldVector b = gravitomagnetic_field(p, no_frame, x, h_rel);
      const double inv_r3 = 1.0 / (r * r * r);
      const double pr = -2.0 * std::cos(th) * inv_r3;
      const double pth = -std::sin(th) * inv_r3;
      sum_bp += b.r * pr + b.theta * pth;
      sum_pp += pr * pr + pth * pth;
      sum_b2 += b.r * b.r + b.theta * b.theta + b.phi * b.phi;
      sum_br += b.r;
      sum_bth += b.theta;
      mag2_acc += b.r * b.r + b.theta * b.theta + b.phi * b.phi;
      ++n;
    }
    log_r.push_back(std::log(r));
    log_mag.push_back(0.5 * std::log(mag2_acc / static_cast<double>(theta_values.size())));
  }

  DipoleFit fit;
  fit.prefactor = sum_pp > 0.0 ? sum_bp / sum_pp : 0.0;
  fit.expected_gma_c = p.G * p.M * p.a / p.c;
  fit.paper_2g_c = 2.0 * p.G / p.c;

  // R^2 of the vector-pattern fit, centered on the mean field.
  const double mean_r = sum_br / static_cast<double>(n);
  const double mean_th = sum_bth / static_cast<double>(n);
  double ss_res = 0.0, ss_tot = 0.0;
  for (double r : r_values) {
    for (double th : theta_values) {
      const SphericalPoint x{r, th, 0.0};
      const FieldVector b = gravitomagnetic_field(p, no_frame, x, h_rel);
      const double inv_r3 = 1.0 / (r * r * r);
      const double pr = fit.prefactor * (-2.0 * std::cos(th)) * inv_r3;
      const double pth = fit.prefactor * (-std::sin(th)) * inv_r3;
      ss_res += (b.r - pr) * (b.r - pr) + (b.theta - pth) * (b.theta - pth) + b.phi * b.phi;
      ss_tot += (b.r - mean_r) * (b.r - mean_r) + (b.theta - mean_th) * (b.theta - mean_th) +
                b.phi * b.phi;
    }
  }
  fit.pattern_r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;

  // log-log slope of the theta-averaged magnitude against r.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = static_cast<double>(log_r.size());
  for (std::size_t i = 0; i < log_r.size(); ++i) {
    sx += log_r[i];
    sy += log_mag[i];
    sxx += log_r[i] * log_r[i];
    sxy += log_r[i] * log_mag[i];
  }
  const double denom = m * sxx - sx * sx;
  fit.falloff_exponent = denom != 0.0 ? -(m * sxy - sx * sy) / denom : 0.0;
  return fit;
}

}  // namespace spinphase::gravity
