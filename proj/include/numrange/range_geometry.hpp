#pragma once

#include <utility>

#include "numrange/scalar_linalg.hpp"

namespace numrange {

// Geometry of the numerical range of a 2x2 matrix: a (possibly degenerate)
// filled ellipse with foci at the eigenvalues.
struct EllipseParams {
    Complex center;   // midpoint of the eigenvalues
    double a = 0.0;   // semi-major axis
    double b = 0.0;   // semi-minor axis
    double c = 0.0;   // focal half-distance, a^2 = b^2 + c^2
    double phi = 0.0; // major-axis rotation, in (-pi, pi]; 0 when c ~ 0
    Complex lam1, lam2;   // eigenvalues (the foci)
    double off_mag = 0.0; // sqrt(tr(A*A) - |lam1|^2 - |lam2|^2), clamped at 0
};

enum class RangeShape { Point, Segment, Disk, Ellipse };

// Plane conic qA x^2 + 2 qB xy + qC y^2 + 2 qD x + 2 qE y + qF = 0,
// i.e. the symmetric 3x3 matrix [[qA,qB,qD],[qB,qC,qE],[qD,qE,qF]] acting
// on homogeneous coordinates (x, y, 1).
struct Conic {
    double qA = 0.0, qB = 0.0, qC = 0.0, qD = 0.0, qE = 0.0, qF = 0.0;

    double eval(double x, double y) const {
        return qA * x * x + 2.0 * qB * x * y + qC * y * y + 2.0 * qD * x + 2.0 * qE * y + qF;
    }
    double max_abs_coeff() const;
};

EllipseParams ellipse_from_matrix(const Matrix2& A);

// scale = max(1, ||A||_F); thresholds are relative to it.
RangeShape classify(const EllipseParams& e, double scale);

// Requires a > b > 0 (proper ellipse); throws std::domain_error otherwise.
Conic conic_from_ellipse(const EllipseParams& e);

// Point m + Rot(phi) * (a cos t, b sin t).
std::pair<double, double> boundary_point(const EllipseParams& e, double t);

}  // namespace numrange
