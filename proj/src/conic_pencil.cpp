#include "numrange/conic_pencil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace numrange {

namespace {

double det3(const Mat3& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double trace3(const Mat3& m) { return m[0] + m[4] + m[8]; }

double fro3(const Mat3& m) {
    double s = 0.0;
    for (double v : m) s += v * v;
    return std::sqrt(s);
}

double max_abs3(const Mat3& m) {
    double s = 0.0;
    for (double v : m) s = std::max(s, std::abs(v));
    return s;
}

Mat3 matmul3(const Mat3& x, const Mat3& y) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[3 * i + j] += x[3 * i + k] * y[3 * k + j];
    return r;
}

Mat3 sub3(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r[i] = x[i] - y[i];
    return r;
}

// Largest |2x2 minor| over all row/column pairs.
double max_minor2(const Mat3& m) {
    static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    double best = 0.0;
    for (const auto& rp : pairs)
        for (const auto& cp : pairs) {
            const double minor = m[3 * rp[0] + cp[0]] * m[3 * rp[1] + cp[1]] -
                                 m[3 * rp[0] + cp[1]] * m[3 * rp[1] + cp[0]];
            best = std::max(best, std::abs(minor));
        }
    return best;
}

double rank1_residual(const Mat3& k) {
    const double nk = fro3(k);
    if (nk == 0.0) return 1.0;
    return max_minor2(k) / (nk * nk);
}

HomLine normalize_line(double l, double n, double q) {
    const double m = std::max({std::abs(l), std::abs(n), std::abs(q)});
    if (m == 0.0) return {0.0, 0.0, 0.0};
    return {l / m, n / m, q / m};
}

}  // namespace

Mat3 conic_matrix(const Conic& c) {
    return {c.qA, c.qB, c.qD, c.qB, c.qC, c.qE, c.qD, c.qE, c.qF};
}

Conic tangency_conic(const Conic& g) {
    Conic h;
    h.qA = g.qB;
    h.qB = 0.5 * (g.qC - g.qA);
    h.qC = -g.qB;
    h.qD = 0.5 * g.qE;
    h.qE = -0.5 * g.qD;
    h.qF = 0.0;
    return h;
}

std::vector<double> pencil_real_eigenvalues(const Conic& h, const Conic& g) {
    const Mat3 hm = conic_matrix(h);
    const Mat3 gm = conic_matrix(g);
    const double det_g = det3(gm);
    const double ng = fro3(gm);
    if (std::abs(det_g) <= 1e-12 * ng * ng * ng) {
        throw std::domain_error("pencil_real_eigenvalues: G is numerically singular");
    }
    // det(H - lambda G) is a cubic; its extreme coefficients are det(H) and
    // -det(G), the middle two come from evaluations at lambda = +-1.
    const double c0 = det3(hm);
    const double c3 = -det_g;
    const double f_pos = det3(sub3(hm, gm));
    Mat3 sum = hm;
    for (int i = 0; i < 9; ++i) sum[i] += gm[i];
    const double f_neg = det3(sum);
    const double c2 = 0.5 * (f_pos + f_neg) - c0;
    const double c1 = 0.5 * (f_pos - f_neg) - c3;
    return real_roots_cubic(c3, c2, c1, c0);
}

Mat3 adjugate3(const Mat3& c) {
    const double t1 = trace3(c);
    const Mat3 c2 = matmul3(c, c);
    const double a1 = 0.5 * (t1 * t1 - trace3(c2));
    Mat3 j = c2;
    for (int i = 0; i < 9; ++i) j[i] -= t1 * c[i];
    j[0] += a1;
    j[4] += a1;
    j[8] += a1;
    return j;
}

std::optional<PVector> extract_p(const Mat3& j) {
    const double nj = fro3(j);
    if (nj == 0.0 || max_abs3(j) == 0.0) return std::nullopt;
    int pivot = 0;
    double best = std::abs(j[0]);
    if (std::abs(j[4]) > best) { pivot = 1; best = std::abs(j[4]); }
    if (std::abs(j[8]) > best) { pivot = 2; best = std::abs(j[8]); }
    if (best <= 1e-14 * nj) return std::nullopt;

    PVector pv;
    pv.sign_flip = j[4 * pivot] < 0.0 ? -1 : 1;
    const double sigma = static_cast<double>(pv.sign_flip);
    pv.p[pivot] = std::sqrt(sigma * j[4 * pivot]);
    for (int i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        pv.p[i] = sigma * j[3 * pivot + i] / pv.p[pivot];
    }
    double res = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            const double d = sigma * j[3 * i + k] - pv.p[i] * pv.p[k];
            res += d * d;
        }
    pv.pp_residual = std::sqrt(res) / nj;
    if (pv.pp_residual > 1e-6) return std::nullopt;
    return pv;
}

Mat3 cross_matrix(const std::array<double, 3>& p) {
    return {0.0, p[2], -p[1], -p[2], 0.0, p[0], p[1], -p[0], 0.0};
}

std::optional<SplitResult> split_degenerate(const Mat3& c, const PVector& pv) {
    const auto& p = pv.p;
    const double nc = fro3(c);
    const double np = std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
    if (nc == 0.0 || np == 0.0) return std::nullopt;
    const Mat3 pm = cross_matrix(p);

    // Closed-form radical candidates for alpha, both signs; the radicand is a
    // negated 2x2 minor of C and must be nonnegative up to roundoff.
    struct Cand { double radicand, pivot; };
    const Cand cands[3] = {
        {c[1] * c[1] - c[0] * c[4], p[2]},
        {c[5] * c[5] - c[4] * c[8], p[0]},
        {c[2] * c[2] - c[0] * c[8], p[1]},
    };
    const double rad_floor = -1e-10 * nc * nc;

    bool found = false;
    double best_alpha = 0.0;
    double best_res = 0.0;
    Mat3 best_k{};
    for (const auto& cand : cands) {
        if (std::abs(cand.pivot) <= 1e-12 * np) continue;
        if (cand.radicand < rad_floor) continue;
        const double root = std::sqrt(std::max(0.0, cand.radicand)) / cand.pivot;
        for (const double alpha : {root, -root}) {
            Mat3 k = c;
            for (int i = 0; i < 9; ++i) k[i] -= alpha * pm[i];
            const double res = rank1_residual(k);
            if (!found || res < best_res) {
                found = true;
                best_alpha = alpha;
                best_res = res;
                best_k = k;
            }
        }
    }
    if (!found || best_res > 1e-6) return std::nullopt;

    // Row/column of largest norm; averaging nearly proportional rows can cancel.
    int best_row = 0, best_col = 0;
    double row_norm = -1.0, col_norm = -1.0;
    for (int i = 0; i < 3; ++i) {
        const double rn = std::hypot(best_k[3 * i], std::hypot(best_k[3 * i + 1], best_k[3 * i + 2]));
        const double cn = std::hypot(best_k[i], std::hypot(best_k[i + 3], best_k[i + 6]));
        if (rn > row_norm) { row_norm = rn; best_row = i; }
        if (cn > col_norm) { col_norm = cn; best_col = i; }
    }
    SplitResult out;
    out.line1 = normalize_line(best_k[3 * best_row], best_k[3 * best_row + 1], best_k[3 * best_row + 2]);
    out.line2 = normalize_line(best_k[best_col], best_k[best_col + 3], best_k[best_col + 6]);
    out.diag.alpha = best_alpha;
    out.diag.rank_residual = best_res;
    out.diag.pp_residual = pv.pp_residual;
    out.diag.sign_flip = pv.sign_flip;
    return out;
}

std::vector<std::pair<double, double>> intersect_line_conic(const HomLine& line, const Conic& g) {
    const double ldir = std::max(std::abs(line.l), std::abs(line.n));
    if (ldir <= 1e-12 * std::max(ldir, std::abs(line.q))) return {};  // line at infinity

    // Parametrize by the dominant coordinate to avoid dividing by a small
    // component.
    const bool solve_x = std::abs(line.n) >= std::abs(line.l);
    double c2, c1, c0, slope, icept;
    if (solve_x) {
        slope = -line.l / line.n;
        icept = -line.q / line.n;
        c2 = g.qA + 2.0 * g.qB * slope + g.qC * slope * slope;
        c1 = 2.0 * (g.qB * icept + g.qC * slope * icept + g.qD + g.qE * slope);
        c0 = g.qC * icept * icept + 2.0 * g.qE * icept + g.qF;
    } else {
        slope = -line.n / line.l;
        icept = -line.q / line.l;
        c2 = g.qC + 2.0 * g.qB * slope + g.qA * slope * slope;
        c1 = 2.0 * (g.qB * icept + g.qA * slope * icept + g.qE + g.qD * slope);
        c0 = g.qA * icept * icept + 2.0 * g.qD * icept + g.qF;
    }
    const double cmax = std::max({std::abs(c2), std::abs(c1), std::abs(c0)});
    if (cmax <= 1e-14 * std::max(1.0, g.max_abs_coeff())) {
        throw std::domain_error("intersect_line_conic: line lies on the conic");
    }
    std::vector<std::pair<double, double>> pts;
    for (double t : real_roots_quadratic(c2, c1, c0)) {
        const double other = slope * t + icept;
        if (solve_x) {
            pts.emplace_back(t, other);
        } else {
            pts.emplace_back(other, t);
        }
    }
    return pts;
}

}  // namespace numrange
