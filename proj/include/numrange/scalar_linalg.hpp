#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace numrange {

using Complex = std::complex<double>;

// 2x2 complex matrix, row-major.
struct Matrix2 {
    Complex a11, a12, a21, a22;

    Complex trace() const { return a11 + a22; }
    Complex det() const { return a11 * a22 - a12 * a21; }
    Matrix2 adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    double frobenius_norm_sq() const { return std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22); }
    double frobenius_norm() const { return std::sqrt(frobenius_norm_sq()); }
    bool is_finite() const;
};

Matrix2 operator*(Complex s, const Matrix2& m);
Matrix2 operator+(const Matrix2& x, const Matrix2& y);

// Principal branch: Re >= 0; Im > 0 on the negative real axis.
Complex principal_sqrt(Complex z);

// Roots of the characteristic polynomial, ordered lexicographically by (re, im).
std::array<Complex, 2> eigenvalues2(const Matrix2& A);

// Largest singular value.
double operator_norm2(const Matrix2& A);

// Larger eigenvalue of a Hermitian matrix. Throws std::invalid_argument if H
// deviates from Hermitian by more than 1e-12 * ||H||_F.
double lambda_max_hermitian2(const Matrix2& H);

// Real roots, ascending. The cubic degrades to the quadratic solver when the
// leading coefficient is negligible, the quadratic to linear. Both throw
// std::invalid_argument on the all-zero polynomial.
std::vector<double> real_roots_cubic(double c3, double c2, double c1, double c0);
std::vector<double> real_roots_quadratic(double c2, double c1, double c0);

}  // namespace numrange
