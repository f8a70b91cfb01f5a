#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "numrange/range_geometry.hpp"

namespace numrange {

// Line l*x + n*y + q = 0, normalized so max(|l|,|n|,|q|) = 1.
struct HomLine {
    double l = 0.0, n = 0.0, q = 0.0;

    double eval(double x, double y) const { return l * x + n * y + q; }
};

// Real 3x3 matrix, row-major.
using Mat3 = std::array<double, 9>;

struct SplitDiagnostics {
    double lambda0 = 0.0;       // pencil eigenvalue that degenerated the conic
    double alpha = 0.0;         // rank-reduction parameter of K = C - alpha*P
    double rank_residual = 0.0; // largest 2x2 minor of K relative to ||K||^2
    double pp_residual = 0.0;   // ||sigma*J - p p^T|| / ||J||
    int sign_flip = 1;          // sigma applied to J
};

struct PVector {
    std::array<double, 3> p{};
    int sign_flip = 1;
    double pp_residual = 0.0;
};

struct SplitResult {
    HomLine line1, line2;
    SplitDiagnostics diag;
};

Mat3 conic_matrix(const Conic& c);

// Conic of the tangency condition paired with an ellipse conic G; a
// hyperbola through the points of G where circles centered at the origin
// are tangent.
Conic tangency_conic(const Conic& g);

// Real roots lambda of det(H - lambda*G) = 0, ascending. Throws
// std::domain_error when G is numerically singular.
std::vector<double> pencil_real_eigenvalues(const Conic& h, const Conic& g);

// Satisfies C*adj(C) = det(C)*I; rank <= 1 for rank-2 input.
Mat3 adjugate3(const Mat3& c);

// Rank-1 factor of a symmetric matrix: sigma*J = p p^T. Empty when J is
// numerically zero or not a signed rank-1 Gram matrix.
std::optional<PVector> extract_p(const Mat3& j);

// Antisymmetric P with P*v = p x v (so P*p = 0).
Mat3 cross_matrix(const std::array<double, 3>& p);

// Splits a rank-2 symmetric conic matrix into its two component lines via
// K = C - alpha*P, picking alpha among the closed-form radical candidates
// by minimal rank residual. Empty when no candidate reaches rank 1.
std::optional<SplitResult> split_degenerate(const Mat3& c, const PVector& pv);

// 0-2 real intersection points of an affine line with a conic. Throws
// std::domain_error when the line lies on the conic.
std::vector<std::pair<double, double>> intersect_line_conic(const HomLine& line, const Conic& g);

}  // namespace numrange
