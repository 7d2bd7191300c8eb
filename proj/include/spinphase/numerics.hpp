#pragma once

#include <cstddef>
#include <vector>

/// Small shared numeric helpers: quadrature on sampled grids and least-squares
/// line fits. Nothing here owns state.
namespace spinphase::numerics {

/// Cumulative integral of samples y(t) on a (possibly non-uniform) grid using
/// composite Simpson over node pairs; the quadratic through each node triple
/// integrates the leading interval, so totals at even indices coincide with
/// classic composite Simpson. Returns one value per node, starting at 0.
std::vector<double> cumulative_simpson(const std::vector<double>& t,
                                       const std::vector<double>& y);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

/// Ordinary least squares y ~ slope * x + intercept. Needs >= 2 points.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace spinphase::numerics
