#include "numrange/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace numrange {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kInvGolden = 0.6180339887498949;  // 1/phi

// Golden-section maximization on [lo, hi]; returns the bracket midpoint.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol, int* evals) {
    double x1 = hi - kInvGolden * (hi - lo);
    double x2 = lo + kInvGolden * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    if (evals) *evals += 2;
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvGolden * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvGolden * (hi - lo);
            f1 = f(x1);
        }
        if (evals) *evals += 1;
    }
    return 0.5 * (lo + hi);
}

Matrix2 hermitian_part_rotated(const Matrix2& A, double theta) {
    const Complex rot = std::polar(1.0, -theta);
    const Matrix2 b = rot * A;
    const Matrix2 bh = b.adjoint();
    return {0.5 * (b.a11 + bh.a11), 0.5 * (b.a12 + bh.a12),
            0.5 * (b.a21 + bh.a21), 0.5 * (b.a22 + bh.a22)};
}

}  // namespace

double support_value(const Matrix2& A, double theta) {
    return lambda_max_hermitian2(hermitian_part_rotated(A, theta));
}

Complex support_point(const Matrix2& A, double theta) {
    const Matrix2 h = hermitian_part_rotated(A, theta);
    // Top unit eigenvector of the 2x2 Hermitian matrix.
    const double h11 = h.a11.real();
    const double h22 = h.a22.real();
    const Complex off = 0.5 * (h.a12 + std::conj(h.a21));
    const double lmax = lambda_max_hermitian2(h);
    Complex x1, x2;
    if (std::abs(off) < 1e-300 && std::abs(h11 - h22) < 1e-300) {
        x1 = 1.0;
        x2 = 0.0;
    } else if (std::abs(lmax - h11) >= std::abs(lmax - h22)) {
        x1 = off;
        x2 = lmax - h11;
    } else {
        x1 = lmax - h22;
        x2 = std::conj(off);
    }
    const double nrm = std::sqrt(std::norm(x1) + std::norm(x2));
    if (nrm == 0.0) {
        x1 = 1.0;
        x2 = 0.0;
    } else {
        x1 /= nrm;
        x2 /= nrm;
    }
    // <Ax, x>
    return (A.a11 * x1 + A.a12 * x2) * std::conj(x1) +
           (A.a21 * x1 + A.a22 * x2) * std::conj(x2);
}

OracleResult radius_angle_sweep(const Matrix2& A, int grid, double tol) {
    if (grid < 64) throw std::invalid_argument("radius_angle_sweep: grid must be >= 64");
    if (!(tol > 0.0)) throw std::invalid_argument("radius_angle_sweep: tol must be positive");

    OracleResult out;
    double best_f = -HUGE_VAL;
    int best_k = 0;
    for (int k = 0; k < grid; ++k) {
        const double theta = kTwoPi * k / grid;
        const double f = support_value(A, theta);
        ++out.evals;
        if (f > best_f) {
            best_f = f;
            best_k = k;
        }
    }
    const double step = kTwoPi / grid;
    const double lo = kTwoPi * best_k / grid - step;
    const double hi = kTwoPi * best_k / grid + step;
    const double theta =
        golden_max([&](double t) { return support_value(A, t); }, lo, hi, tol, &out.evals);
    out.theta_star = std::fmod(theta + kTwoPi, kTwoPi);
    out.w = std::max(best_f, support_value(A, out.theta_star));
    ++out.evals;
    out.refined = true;
    return out;
}

double radius_boundary_sampling(const EllipseParams& e, int samples) {
    return boundary_extremes(e, samples).far_dist;
}

BoundaryExtremes boundary_extremes(const EllipseParams& e, int samples) {
    if (samples < 16) throw std::invalid_argument("boundary_extremes: samples must be >= 16");
    const auto dist = [&](double t) {
        const auto [x, y] = boundary_point(e, t);
        return std::hypot(x, y);
    };
    BoundaryExtremes out;
    double best_far = -HUGE_VAL, best_near = HUGE_VAL;
    int k_far = 0, k_near = 0;
    for (int k = 0; k < samples; ++k) {
        const double d = dist(kTwoPi * k / samples);
        if (d > best_far) { best_far = d; k_far = k; }
        if (d < best_near) { best_near = d; k_near = k; }
    }
    const double step = kTwoPi / samples;
    out.t_far = golden_max(dist, kTwoPi * k_far / samples - step,
                           kTwoPi * k_far / samples + step, 1e-12, nullptr);
    out.far_dist = std::max(best_far, dist(out.t_far));
    out.t_near = golden_max([&](double t) { return -dist(t); },
                            kTwoPi * k_near / samples - step,
                            kTwoPi * k_near / samples + step, 1e-12, nullptr);
    out.near_dist = std::min(best_near, dist(out.t_near));
    return out;
}

}  // namespace numrange
