#include "spinphase/su2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinphase/tolerances.hpp"

namespace spinphase::su2 {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Mat2 Mat2::adjoint() const {
  return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
}

double Mat2::max_abs() const {
  return std::max(std::max(std::abs(a11), std::abs(a12)),
                  std::max(std::abs(a21), std::abs(a22)));
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Mat2 operator*(Complex s, const Mat2& a) {
  return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
}

double Spinor::norm() const { return std::sqrt(norm_sq()); }

Spinor operator*(const Mat2& a, const Spinor& v) {
  return {a.a11 * v.up + a.a12 * v.down, a.a21 * v.up + a.a22 * v.down};
}

Spinor operator+(const Spinor& a, const Spinor& b) { return {a.up + b.up, a.down + b.down}; }

Spinor operator-(const Spinor& a, const Spinor& b) { return {a.up - b.up, a.down - b.down}; }

Spinor operator*(Complex s, const Spinor& v) { return {s * v.up, s * v.down}; }

Complex inner(const Spinor& a, const Spinor& b) {
  return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

Mat2 pauli(int k) {
  switch (k) {
    case 1:
      return {0.0, 1.0, 1.0, 0.0};
    case 2:
      return {0.0, -kI, kI, 0.0};
    case 3:
      return {1.0, 0.0, 0.0, -1.0};
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
}

Mat2 pauli(char k) {
  switch (k) {
    case '1':
    case '2':
    case '3':
      return pauli(k - '0');
    case '+':
      return pauli(1) + kI * pauli(2);
    case '-':
      return pauli(1) - kI * pauli(2);
    default:
      throw std::invalid_argument("pauli: index must be '1'..'3', '+' or '-'");
  }
}

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

Mat2 expm_su2(const std::array<double, 3>& axis, double angle) {
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (std::abs(n - 1.0) > tol::unit_axis)
    throw std::domain_error("expm_su2: axis must be a unit vector");
  const double c = std::cos(0.5 * angle);
  const Complex ms = -kI * std::sin(0.5 * angle);
  // cos(a/2) I - i sin(a/2) (axis . sigma)
  return {c + ms * axis[2], ms * Complex(axis[0], -axis[1]),
          ms * Complex(axis[0], axis[1]), c - ms * axis[2]};
}

bool is_hermitian(const Mat2& a, double rel_tol) {
  const double scale = std::max(a.max_abs(), 1e-300);
  return (a - a.adjoint()).max_abs() <= rel_tol * scale;
}

bool is_unitary(const Mat2& a, double abs_tol) {
  return (a.adjoint() * a - Mat2::identity()).max_abs() <= abs_tol;
}

namespace {

// Rotate v so its largest-magnitude component is real and positive.
Spinor fix_phase(const Spinor& v) {
  const Complex lead = std::abs(v.up) >= std::abs(v.down) ? v.up : v.down;
  const double mag = std::abs(lead);
  if (mag == 0.0) return v;
  const Complex phase = std::conj(lead) / mag;
  return phase * v;
}

Spinor normalized(const Spinor& v) {
  const double n = v.norm();
  return Complex(1.0 / n, 0.0) * v;
}

}  // namespace

Eig2 herm_eig2(const Mat2& a) {
  if (!is_hermitian(a, tol::hermitian_rel))
    throw std::domain_error("herm_eig2: input is not Hermitian within tolerance");

  // Work on the exactly Hermitian part; removes O(tol) asymmetry.
  const Mat2 h = 0.5 * (a + a.adjoint());
  const double p = h.a11.real();
  const double q = h.a22.real();
  const Complex b = h.a12;

  const double mean = 0.5 * (p + q);
  const double disc = std::hypot(0.5 * (p - q), std::abs(b));

  Eig2 out;
  out.values = {mean - disc, mean + disc};

  const double scale = std::max(h.max_abs(), 1e-300);
  if (2.0 * disc <= tol::degenerate_gap * scale) {
    out.vectors = {Spinor{1.0, 0.0}, Spinor{0.0, 1.0}};
    return out;
  }

  // Eigenvector of the lower eigenvalue from whichever row gives the larger
  // residual-free candidate; the second is its exact orthogonal complement.
  const double e0 = out.values[0];
  const Spinor c1{b, Complex(e0 - p, 0.0)};
  const Spinor c2{Complex(e0 - q, 0.0), std::conj(b)};
  Spinor v0 = normalized(c1.norm_sq() >= c2.norm_sq() ? c1 : c2);
  Spinor v1{-std::conj(v0.down), std::conj(v0.up)};

  out.vectors = {fix_phase(v0), fix_phase(v1)};
  return out;
}

}  // namespace spinphase::su2
