#include "numrange/range_geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace numrange {

double Conic::max_abs_coeff() const {
    return std::max({std::abs(qA), std::abs(qB), std::abs(qC),
                     std::abs(qD), std::abs(qE), std::abs(qF)});
}

EllipseParams ellipse_from_matrix(const Matrix2& A) {
    const auto eig = eigenvalues2(A);
    EllipseParams e;
    // lam1 is the lexicographically larger eigenvalue, so that for an upper
    // triangular matrix with descending diagonal phi = arg(a22 - a11).
    e.lam1 = eig[1];
    e.lam2 = eig[0];
    e.center = 0.5 * (e.lam1 + e.lam2);
    const double off_sq =
        A.frobenius_norm_sq() - std::norm(e.lam1) - std::norm(e.lam2);
    e.off_mag = std::sqrt(std::max(0.0, off_sq));
    e.b = 0.5 * e.off_mag;
    const Complex gap = e.lam2 - e.lam1;
    e.c = 0.5 * std::abs(gap);
    e.a = std::hypot(e.b, e.c);
    const double scale = std::max(1.0, A.frobenius_norm());
    e.phi = (e.c > 1e-10 * scale) ? std::arg(gap) : 0.0;
    return e;
}

RangeShape classify(const EllipseParams& e, double scale) {
    const double eps = 1e-10 * scale;
    const bool flat = e.b <= eps;
    const bool round = e.c <= eps;
    if (flat && round) return RangeShape::Point;
    if (flat) return RangeShape::Segment;
    if (round) return RangeShape::Disk;
    return RangeShape::Ellipse;
}

Conic conic_from_ellipse(const EllipseParams& e) {
    if (!(e.a > e.b && e.b > 0.0)) {
        throw std::domain_error("conic_from_ellipse: requires a proper ellipse (a > b > 0)");
    }
    const double co = std::cos(e.phi);
    const double si = std::sin(e.phi);
    const double ia2 = 1.0 / (e.a * e.a);
    const double ib2 = 1.0 / (e.b * e.b);
    const double mx = e.center.real();
    const double my = e.center.imag();
    Conic g;
    g.qA = co * co * ia2 + si * si * ib2;
    g.qB = si * co * (ia2 - ib2);
    g.qC = si * si * ia2 + co * co * ib2;
    g.qD = -g.qA * mx - g.qB * my;
    g.qE = -g.qB * mx - g.qC * my;
    const double u = (co * mx + si * my) / e.a;
    const double v = (co * my - si * mx) / e.b;
    g.qF = u * u + v * v - 1.0;
    return g;
}

std::pair<double, double> boundary_point(const EllipseParams& e, double t) {
    const double u = e.a * std::cos(t);
    const double v = e.b * std::sin(t);
    const double co = std::cos(e.phi);
    const double si = std::sin(e.phi);
    return {e.center.real() + co * u - si * v, e.center.imag() + si * u + co * v};
}

}  // namespace numrange
