#pragma once

#include <array>
#include <complex>

/// Exact complex 2x2 algebra: Pauli matrices, commutators, a Hermitian
/// eigensolver with a deterministic phase convention, and the closed-form
/// exponential of anti-Hermitian su(2) elements. Everything here is pure and
/// allocation-free; matrices and spinors are plain value types.
namespace spinphase::su2 {

using Complex = std::complex<double>;

/// Dense complex 2x2 matrix, row-major entries.
struct Mat2 {
  Complex a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }

  Mat2 adjoint() const;
  Complex trace() const { return a11 + a22; }
  Complex det() const { return a11 * a22 - a12 * a21; }
  /// Largest entry magnitude (max norm).
  double max_abs() const;
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(Complex s, const Mat2& a);
inline Mat2 operator*(const Mat2& a, Complex s) { return s * a; }
inline Mat2 operator*(double s, const Mat2& a) { return Complex(s, 0.0) * a; }
inline Mat2 operator-(const Mat2& a) { return Complex(-1.0, 0.0) * a; }

/// Two-component state on the sigma3 eigenbasis (up = +1 component).
struct Spinor {
  Complex up{0.0}, down{0.0};

  double norm_sq() const { return std::norm(up) + std::norm(down); }
  double norm() const;
};

Spinor operator*(const Mat2& a, const Spinor& v);
Spinor operator+(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a, const Spinor& b);
Spinor operator*(Complex s, const Spinor& v);
/// <a|b> with the left argument conjugated.
Complex inner(const Spinor& a, const Spinor& b);

/// Standard Pauli matrix, k in {1, 2, 3}. Throws std::invalid_argument otherwise.
Mat2 pauli(int k);
/// Dispatch on '1'..'3', '+', '-' where sigma_pm = sigma1 +- i sigma2.
Mat2 pauli(char k);
inline Mat2 sigma_plus() { return pauli('+'); }
inline Mat2 sigma_minus() { return pauli('-'); }

/// AB - BA.
Mat2 commutator(const Mat2& a, const Mat2& b);

/// exp(-i * angle/2 * axis.sigma) for a unit axis; unitary with det 1.
/// Throws std::domain_error when |axis| deviates from 1 beyond tol::unit_axis.
Mat2 expm_su2(const std::array<double, 3>& axis, double angle);

struct Eig2 {
  std::array<double, 2> values;   // ascending
  std::array<Spinor, 2> vectors;  // orthonormal, values[k] <-> vectors[k]
};

/// Eigen-decomposition of a Hermitian 2x2. The phase of each eigenvector is
/// fixed by making its largest-magnitude component real and positive; gaps
/// below tol::degenerate_gap (relative to the matrix scale) return the
/// canonical basis. Throws std::domain_error for non-Hermitian input.
Eig2 herm_eig2(const Mat2& a);

/// ||A - A'||_max <= rel_tol * max(||A||_max, 1e-300).
bool is_hermitian(const Mat2& a, double rel_tol);
/// ||A'A - I||_max <= tol.
bool is_unitary(const Mat2& a, double abs_tol);

}  // namespace spinphase::su2
