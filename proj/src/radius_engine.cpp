#include "numrange/radius_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace numrange {

namespace {

std::pair<double, double> to_pair(Complex z) { return {z.real(), z.imag()}; }

// Closest point of the segment [p, q] to the origin.
Complex closest_on_segment(Complex p, Complex q) {
    const Complex d = q - p;
    const double len_sq = std::norm(d);
    if (len_sq == 0.0) return p;
    const double t = std::clamp(-(p.real() * d.real() + p.imag() * d.imag()) / len_sq, 0.0, 1.0);
    return p + t * d;
}

RadiusResult oracle_fallback(const Matrix2& A, RadiusResult r) {
    r.method = Method::OracleFallback;
    r.diagnostics.reset();
    const OracleResult o = radius_angle_sweep(A, 4096, 1e-10);
    r.w = o.w;
    const BoundaryExtremes ext = boundary_extremes(r.ellipse, 4096);
    r.far_point = boundary_point(r.ellipse, ext.t_far);
    r.near_point = boundary_point(r.ellipse, ext.t_near);
    return r;
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::PointFast: return "PointFast";
        case Method::SegmentFast: return "SegmentFast";
        case Method::DiskFast: return "DiskFast";
        case Method::CenteredFast: return "CenteredFast";
        case Method::Pencil: return "Pencil";
        case Method::OracleFallback: return "OracleFallback";
    }
    return "?";
}

std::vector<Candidate> candidate_filter(const std::vector<std::pair<double, double>>& points,
                                        double norm_a, const Conic& g, double scale) {
    std::vector<Candidate> kept;
    for (const auto& [x, y] : points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        const double res = std::abs(g.eval(x, y));
        if (res > 1e-8 * scale) continue;
        const double dist = std::hypot(x, y);
        if (dist > norm_a + 1e-9 * scale) continue;
        kept.push_back({x, y, dist, res});
    }
    return kept;
}

RadiusResult numerical_radius(const Matrix2& A) {
    if (!A.is_finite()) throw std::invalid_argument("numerical_radius: non-finite input");

    RadiusResult r;
    r.ellipse = ellipse_from_matrix(A);
    const double fro = A.frobenius_norm();
    const double scale = std::max(1.0, fro);
    r.shape = classify(r.ellipse, scale);
    const EllipseParams& e = r.ellipse;
    const double center_dist = std::abs(e.center);

    switch (r.shape) {
        case RangeShape::Point:
            r.method = Method::PointFast;
            r.w = center_dist;
            r.far_point = r.near_point = to_pair(e.center);
            return r;
        case RangeShape::Segment: {
            r.method = Method::SegmentFast;
            const double d1 = std::abs(e.lam1);
            const double d2 = std::abs(e.lam2);
            r.w = std::max(d1, d2);
            r.far_point = to_pair(d1 >= d2 ? e.lam1 : e.lam2);
            r.near_point = to_pair(closest_on_segment(e.lam1, e.lam2));
            return r;
        }
        case RangeShape::Disk: {
            r.method = Method::DiskFast;
            r.w = center_dist + e.b;
            const Complex u = center_dist > 0.0 ? e.center / center_dist : Complex(1.0, 0.0);
            r.far_point = to_pair(e.center + e.b * u);
            r.near_point = to_pair(e.center - e.b * u);
            return r;
        }
        case RangeShape::Ellipse:
            break;
    }

    if (center_dist <= 1e-12 * scale) {
        // Origin at the center: the semi-major vertex is the farthest point.
        r.method = Method::CenteredFast;
        r.w = e.a;
        r.far_point = boundary_point(e, 0.0);
        r.near_point = boundary_point(e, 0.5 * M_PI);
        return r;
    }

    // Pencil route, on the Frobenius-normalized matrix so the conic
    // coefficients stay bounded; w(gamma A) = |gamma| w(A) rescales the answer.
    const Matrix2 an = Complex(1.0 / fro, 0.0) * A;
    const EllipseParams en = ellipse_from_matrix(an);
    bool pencil_ok = false;
    double w_n = 0.0, near_n = 0.0;
    std::pair<double, double> far_n, nearpt_n;
    try {
        const Conic gn = conic_from_ellipse(en);
        const Conic hn = tangency_conic(gn);
        const Mat3 gm = conic_matrix(gn);
        const Mat3 hm = conic_matrix(hn);
        const double norm_an = operator_norm2(an);

        std::vector<Candidate> pool;
        for (const double lambda0 : pencil_real_eigenvalues(hn, gn)) {
            Mat3 cm = hm;
            for (int i = 0; i < 9; ++i) cm[i] -= lambda0 * gm[i];
            const auto pv = extract_p(adjugate3(cm));
            if (!pv) continue;  // complex line pair or a double line
            auto split = split_degenerate(cm, *pv);
            if (!split) continue;
            split->diag.lambda0 = lambda0;
            if (!r.diagnostics) r.diagnostics = split->diag;
            for (const HomLine* line : {&split->line1, &split->line2}) {
                std::vector<std::pair<double, double>> pts;
                try {
                    pts = intersect_line_conic(*line, gn);
                } catch (const std::domain_error&) {
                    continue;
                }
                for (const Candidate& c : candidate_filter(pts, norm_an, gn, 1.0)) {
                    const bool dup = std::any_of(pool.begin(), pool.end(), [&](const Candidate& q) {
                        return std::hypot(q.x - c.x, q.y - c.y) <= 1e-9 * (1.0 + c.distance);
                    });
                    if (!dup) pool.push_back(c);
                }
            }
        }
        r.candidates = pool;
        for (Candidate& c : r.candidates) {
            c.x *= fro;
            c.y *= fro;
            c.distance *= fro;
        }

        if (!pool.empty()) {
            const auto far_it = std::max_element(
                pool.begin(), pool.end(),
                [](const Candidate& x, const Candidate& y) { return x.distance < y.distance; });
            const auto near_it = std::min_element(
                pool.begin(), pool.end(),
                [](const Candidate& x, const Candidate& y) { return x.distance < y.distance; });
            w_n = far_it->distance;
            near_n = near_it->distance;
            far_n = {far_it->x, far_it->y};
            nearpt_n = {near_it->x, near_it->y};

            // The candidate pool must dominate every boundary point we can
            // name exactly: the four vertices and the foci. Anything short of
            // that means the tangency points were missed.
            double vert_max = 0.0, vert_min = HUGE_VAL;
            for (const double t : {0.0, 0.5 * M_PI, M_PI, 1.5 * M_PI}) {
                const auto [x, y] = boundary_point(en, t);
                const double d = std::hypot(x, y);
                vert_max = std::max(vert_max, d);
                vert_min = std::min(vert_min, d);
            }
            const double lower =
                std::max({vert_max, std::abs(en.lam1), std::abs(en.lam2)});
            const double upper = std::abs(en.center) + en.a;
            const double tol = 1e-9;
            pencil_ok = w_n >= lower - tol && w_n <= upper + tol &&
                        w_n <= norm_an + tol && 2.0 * w_n >= norm_an - tol &&
                        near_n <= vert_min + tol;
        }
    } catch (const std::domain_error&) {
        pencil_ok = false;
    }

    if (!pencil_ok) return oracle_fallback(A, std::move(r));

    r.method = Method::Pencil;
    r.w = fro * w_n;
    r.far_point = {fro * far_n.first, fro * far_n.second};
    r.near_point = {fro * nearpt_n.first, fro * nearpt_n.second};
    return r;
}

std::pair<double, double> distance_to_boundary_extremes(const Matrix2& A) {
    const RadiusResult r = numerical_radius(A);
    return {r.near(), r.w};
}

}  // namespace numrange
