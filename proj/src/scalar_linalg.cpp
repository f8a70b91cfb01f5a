#include "numrange/scalar_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace numrange {

namespace {

bool finite_c(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double sign_nonneg(double x) { return x < 0.0 ? -1.0 : 1.0; }

// One Newton step; leaves the root alone when the derivative is too small.
double polish_cubic_root(double c3, double c2, double c1, double c0, double r) {
    for (int it = 0; it < 2; ++it) {
        const double p = ((c3 * r + c2) * r + c1) * r + c0;
        const double dp = (3.0 * c3 * r + 2.0 * c2) * r + c1;
        if (std::abs(dp) < 1e-300) break;
        const double step = p / dp;
        if (!std::isfinite(step)) break;
        r -= step;
    }
    return r;
}

}  // namespace

bool Matrix2::is_finite() const {
    return finite_c(a11) && finite_c(a12) && finite_c(a21) && finite_c(a22);
}

Matrix2 operator*(Complex s, const Matrix2& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}

Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}

Complex principal_sqrt(Complex z) {
    // Pin the branch for real z so that sqrt(-1) = +i regardless of the sign
    // of a zero imaginary part.
    if (z.imag() == 0.0) z = Complex(z.real(), +0.0);
    return std::sqrt(z);
}

std::array<Complex, 2> eigenvalues2(const Matrix2& A) {
    const Complex half_tr = 0.5 * A.trace();
    const Complex s = principal_sqrt(half_tr * half_tr - A.det());
    Complex l1 = half_tr - s;
    Complex l2 = half_tr + s;
    if (l2.real() < l1.real() ||
        (l2.real() == l1.real() && l2.imag() < l1.imag())) {
        std::swap(l1, l2);
    }
    return {l1, l2};
}

double operator_norm2(const Matrix2& A) {
    const double s = A.frobenius_norm_sq();
    const double d = std::abs(A.det());
    const double disc = std::max(0.0, s * s - 4.0 * d * d);
    return std::sqrt(0.5 * (s + std::sqrt(disc)));
}

double lambda_max_hermitian2(const Matrix2& H) {
    const double nf = H.frobenius_norm();
    const double dev = std::hypot(
        std::hypot(H.a11.imag(), H.a22.imag()), std::abs(H.a12 - std::conj(H.a21)));
    if (dev > 1e-12 * nf) {
        throw std::invalid_argument("lambda_max_hermitian2: matrix is not Hermitian");
    }
    const double h11 = H.a11.real();
    const double h22 = H.a22.real();
    const Complex off = 0.5 * (H.a12 + std::conj(H.a21));
    const double mid = 0.5 * (h11 + h22);
    const double gap = 0.5 * (h11 - h22);
    return mid + std::hypot(gap, std::abs(off));
}

std::vector<double> real_roots_quadratic(double c2, double c1, double c0) {
    const double maxc = std::max({std::abs(c2), std::abs(c1), std::abs(c0)});
    if (maxc == 0.0) throw std::invalid_argument("real_roots_quadratic: all coefficients zero");
    if (std::abs(c2) <= 1e-13 * maxc) {
        if (std::abs(c1) <= 1e-13 * maxc) return {};  // nonzero constant
        return {-c0 / c1};
    }
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) return {};
    const double q = -0.5 * (c1 + sign_nonneg(c1) * std::sqrt(disc));
    std::vector<double> roots;
    if (q != 0.0) {
        roots = {q / c2, c0 / q};
    } else {
        // c1 == 0 and disc == 0 (or c0 == 0): double root at -c1/(2 c2).
        roots = {-0.5 * c1 / c2};
    }
    std::sort(roots.begin(), roots.end());
    if (roots.size() == 2 &&
        std::abs(roots[1] - roots[0]) <= 1e-14 * std::max(1.0, std::abs(roots[1]))) {
        roots.pop_back();
    }
    return roots;
}

std::vector<double> real_roots_cubic(double c3, double c2, double c1, double c0) {
    const double maxc = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
    if (maxc == 0.0) throw std::invalid_argument("real_roots_cubic: all coefficients zero");
    if (std::abs(c3) <= 1e-13 * maxc) return real_roots_quadratic(c2, c1, c0);

    // Normalized form x^3 + p x^2 + q x + r, then the trigonometric /
    // Cardano split on Q, R (Numerical Recipes 5.6).
    const double p = c2 / c3;
    const double q = c1 / c3;
    const double r = c0 / c3;
    const double Q = (p * p - 3.0 * q) / 9.0;
    const double R = (2.0 * p * p * p - 9.0 * p * q + 27.0 * r) / 54.0;
    std::vector<double> roots;
    const double R2 = R * R;
    const double Q3 = Q * Q * Q;
    if (R2 < Q3) {
        const double theta = std::acos(std::clamp(R / std::sqrt(Q3), -1.0, 1.0));
        const double f = -2.0 * std::sqrt(Q);
        const double third = 2.0 * M_PI / 3.0;
        roots = {f * std::cos(theta / 3.0) - p / 3.0,
                 f * std::cos((theta + 2.0 * M_PI) / 3.0) - p / 3.0,
                 f * std::cos((theta - 2.0 * M_PI) / 3.0) - p / 3.0};
    } else {
        const double a = -sign_nonneg(R) * std::cbrt(std::abs(R) + std::sqrt(std::max(0.0, R2 - Q3)));
        const double b = (a == 0.0) ? 0.0 : Q / a;
        roots = {a + b - p / 3.0};
    }
    for (double& root : roots) root = polish_cubic_root(c3, c2, c1, c0, root);
    std::sort(roots.begin(), roots.end());
    // Polishing drives near-double roots together; report them once.
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double x, double y) {
                                return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y));
                            }),
                roots.end());
    return roots;
}

}  // namespace numrange
