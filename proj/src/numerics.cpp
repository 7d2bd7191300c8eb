#include "spinphase/numerics.hpp"

#include <stdexcept>

namespace spinphase::numerics {

namespace {

struct Quadratic {
  double a2, a1, a0;  // p(s) = a2 s^2 + a1 s + a0, s centered on the middle node
};

// Quadratic through (-h1, y0), (0, y1), (h2, y2).
Quadratic through(double h1, double h2, double y0, double y1, double y2) {
  const double a2 = ((y0 - y1) * h2 + (y2 - y1) * h1) / (h1 * h2 * (h1 + h2));
  const double a1 = (y2 - y1) / h2 - a2 * h2;
  return {a2, a1, y1};
}

double integral(const Quadratic& q, double s_lo, double s_hi) {
  const double cube = (s_hi * s_hi * s_hi - s_lo * s_lo * s_lo) / 3.0;
  const double square = (s_hi * s_hi - s_lo * s_lo) / 2.0;
  return q.a2 * cube + q.a1 * square + q.a0 * (s_hi - s_lo);
}

}  // namespace

std::vector<double> cumulative_simpson(const std::vector<double>& t,
                                       const std::vector<double>& y) {
  if (t.size() != y.size()) throw std::invalid_argument("cumulative_simpson: size mismatch");
  const std::size_t n = t.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  if (n == 2) {
    out[1] = 0.5 * (y[0] + y[1]) * (t[1] - t[0]);
    return out;
  }

  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const double h1 = t[i + 1] - t[i];
    const double h2 = t[i + 2] - t[i + 1];
    const Quadratic q = through(h1, h2, y[i], y[i + 1], y[i + 2]);
    out[i + 1] = out[i] + integral(q, -h1, 0.0);
    out[i + 2] = out[i + 1] + integral(q, 0.0, h2);
  }
  if (i + 1 < n) {
    // odd interval count: close the last interval with the trailing triple
    const double h1 = t[n - 2] - t[n - 3];
    const double h2 = t[n - 1] - t[n - 2];
    const Quadratic q = through(h1, h2, y[n - 3], y[n - 2], y[n - 1]);
    out[n - 1] = out[n - 2] + integral(q, 0.0, h2);
  }
  return out;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear_fit: need >= 2 matched points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
  LinearFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0.0, ss_tot = 0.0;
  const double mean_y = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double pred = f.slope * x[i] + f.intercept;
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  f.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

}  // namespace spinphase::numerics
