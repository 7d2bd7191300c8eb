#include "spinphase/drive.hpp"

#include <gsl/gsl_spline.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace spinphase::drive {

namespace {

struct SplineHolder {
  gsl_spline* s = nullptr;
  explicit SplineHolder(std::size_t n) { s = gsl_spline_alloc(gsl_interp_cspline, n); }
  ~SplineHolder() { gsl_spline_free(s); }
  SplineHolder(const SplineHolder&) = delete;
  SplineHolder& operator=(const SplineHolder&) = delete;
};

}  // namespace

/// Natural cubic splines through the (t, omega0, theta, phi) knots. Evaluation
/// passes a null accelerator, which keeps lookups stateless and reentrant.
struct SampledTable {
  std::vector<double> t, w, th, ph;
  std::unique_ptr<SplineHolder> sw, sth, sph;

  explicit SampledTable(const std::vector<std::array<double, 4>>& rows) {
    if (rows.size() < 4)
      throw std::invalid_argument("sampled drive: need at least 4 rows");
    t.reserve(rows.size());
    for (const auto& r : rows) {
      if (!t.empty() && r[0] <= t.back())
        throw std::invalid_argument("sampled drive: t column must be strictly increasing");
      t.push_back(r[0]);
      w.push_back(r[1]);
      th.push_back(r[2]);
      ph.push_back(r[3]);
    }
    sw = std::make_unique<SplineHolder>(t.size());
    sth = std::make_unique<SplineHolder>(t.size());
    sph = std::make_unique<SplineHolder>(t.size());
    gsl_spline_init(sw->s, t.data(), w.data(), t.size());
    gsl_spline_init(sth->s, t.data(), th.data(), t.size());
    gsl_spline_init(sph->s, t.data(), ph.data(), t.size());
  }

  double eval(const SplineHolder& h, double x) const { return gsl_spline_eval(h.s, x, nullptr); }
  double deriv(const SplineHolder& h, double x) const {
    return gsl_spline_eval_deriv(h.s, x, nullptr);
  }
};

DriveSpec DriveSpec::constant(double omega0, double theta0, double phi0) {
  return conical(omega0, theta0, 0.0, phi0);
}

DriveSpec DriveSpec::conical(double omega0, double theta0, double nu, double phi0) {
  if (omega0 < 0.0) throw std::invalid_argument("drive: omega0 must be >= 0");
  if (theta0 < 0.0 || theta0 > M_PI)
    throw std::invalid_argument("drive: theta0 must lie in [0, pi]");
  DriveSpec d;
  d.kind_ = nu == 0.0 ? DriveKind::constant : DriveKind::conical;
  d.omega0_ = omega0;
  d.theta0_ = theta0;
  d.nu_ = nu;
  d.phi0_ = phi0;
  return d;
}

DriveSpec DriveSpec::modulated(double omega0, double theta0, double nu, double phi0,
                               double eps, double nu_m) {
  DriveSpec d = conical(omega0, theta0, nu, phi0);
  d.kind_ = DriveKind::modulated;
  d.eps_ = eps;
  d.nu_m_ = nu_m;
  return d;
}

DriveSpec DriveSpec::sampled(const std::vector<std::array<double, 4>>& table) {
  DriveSpec d;
  d.kind_ = DriveKind::sampled;
  d.table_ = std::make_shared<const SampledTable>(table);
  return d;
}

DriveSpec DriveSpec::sampled_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("sampled drive: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "t,omega0,theta,phi")
    throw std::invalid_argument("sampled drive: expected header 't,omega0,theta,phi' in " + path);
  std::vector<std::array<double, 4>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::array<double, 4> r{};
    char comma = ',';
    if (!(ss >> r[0] >> comma >> r[1] >> comma >> r[2] >> comma >> r[3]))
      throw std::invalid_argument("sampled drive: bad row at " + path + ":" +
                                  std::to_string(lineno));
    rows.push_back(r);
  }
  return sampled(rows);
}

double DriveSpec::t_min() const {
  return table_ ? table_->t.front() : -std::numeric_limits<double>::infinity();
}

double DriveSpec::t_max() const {
  return table_ ? table_->t.back() : std::numeric_limits<double>::infinity();
}

DriveSample sample(const DriveSpec& spec, double t) {
  DriveSample s;
  switch (spec.kind_) {
    case DriveKind::constant:
    case DriveKind::conical:
      s.omega0 = spec.omega0_;
      s.theta = spec.theta0_;
      s.phi = spec.phi0_ + spec.nu_ * t;
      s.d_phi = spec.nu_;
      break;
    case DriveKind::modulated:
      s.omega0 = spec.omega0_ * (1.0 + spec.eps_ * std::sin(spec.nu_m_ * t));
      s.d_omega0 = spec.omega0_ * spec.eps_ * spec.nu_m_ * std::cos(spec.nu_m_ * t);
      s.theta = spec.theta0_;
      s.phi = spec.phi0_ + spec.nu_ * t;
      s.d_phi = spec.nu_;
      break;
    case DriveKind::sampled: {
      const SampledTable& tab = *spec.table_;
      if (t < tab.t.front() || t > tab.t.back())
        throw std::out_of_range("sampled drive: t outside table span");
      s.omega0 = tab.eval(*tab.sw, t);
      s.d_omega0 = tab.deriv(*tab.sw, t);
      s.theta = tab.eval(*tab.sth, t);
      s.d_theta = tab.deriv(*tab.sth, t);
      s.phi = tab.eval(*tab.sph, t);
      s.d_phi = tab.deriv(*tab.sph, t);
      break;
    }
  }
  return s;
}

std::array<double, 3> omega_vector(const DriveSample& s) {
  return {s.omega0 * std::sin(s.theta) * std::cos(s.phi),
          s.omega0 * std::sin(s.theta) * std::sin(s.phi), s.omega0 * std::cos(s.theta)};
}

su2::Mat2 hamiltonian(const DriveSample& s) {
  using namespace su2;
  const Complex em{std::cos(s.phi), -std::sin(s.phi)};  // e^{-i phi}
  const double st = std::sin(s.theta);
  const double ct = std::cos(s.theta);
  const Mat2 h = (0.25 * st) * (em * sigma_plus() + std::conj(em) * sigma_minus()) +
                 (0.5 * ct) * pauli(3);
  return s.omega0 * h;
}

}  // namespace spinphase::drive
