#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numrange/conic_pencil.hpp"
#include "numrange/oracle.hpp"
#include "numrange/range_geometry.hpp"

namespace numrange {

enum class Method { PointFast, SegmentFast, DiskFast, CenteredFast, Pencil, OracleFallback };

std::string method_name(Method m);

struct Candidate {
    double x = 0.0, y = 0.0;
    double distance = 0.0;
    double residual = 0.0;  // |G(x,y)| on the ellipse conic
};

struct RadiusResult {
    double w = 0.0;
    std::pair<double, double> far_point{0.0, 0.0};
    std::pair<double, double> near_point{0.0, 0.0};
    Method method = Method::PointFast;
    std::vector<Candidate> candidates;
    std::optional<SplitDiagnostics> diagnostics;  // present for Pencil results
    EllipseParams ellipse;
    RangeShape shape = RangeShape::Point;

    double near() const { return std::hypot(near_point.first, near_point.second); }
};

// w(A) = max modulus over the numerical range, with the full dispatch:
// exact fast paths for degenerate shapes, the conic-pencil construction for
// proper ellipses, and an oracle fallback whenever the pencil answer fails
// its own sanity invariants. Throws std::invalid_argument on non-finite input.
RadiusResult numerical_radius(const Matrix2& A);

// (min, max) of sqrt(x^2+y^2) over the range boundary curve.
std::pair<double, double> distance_to_boundary_extremes(const Matrix2& A);

// Keeps finite points on the conic (residual <= 1e-8 * scale) whose distance
// from the origin respects the operator-norm bound.
std::vector<Candidate> candidate_filter(const std::vector<std::pair<double, double>>& points,
                                        double norm_a, const Conic& g, double scale);

}  // namespace numrange
