#pragma once

#include "numrange/range_geometry.hpp"

namespace numrange {

struct OracleResult {
    double w = 0.0;
    double theta_star = 0.0;  // maximizing rotation angle, in [0, 2*pi)
    int evals = 0;
    bool refined = false;
};

// Support-function sweep: w(A) = max over theta of the largest eigenvalue of
// the Hermitian part of e^{-i theta} A. Grid scan plus golden-section
// refinement of the best bracket down to width < tol.
OracleResult radius_angle_sweep(const Matrix2& A, int grid = 4096, double tol = 1e-10);

// Support function value at a single angle.
double support_value(const Matrix2& A, double theta);

// The boundary point <Ax,x> attained by the top unit eigenvector of the
// rotated Hermitian part; ties the support sweep back to W(A) itself.
Complex support_point(const Matrix2& A, double theta);

// max over t of |m + e^{i phi} (a cos t + i b sin t)|, golden refined.
double radius_boundary_sampling(const EllipseParams& e, int samples);

// Same sweep returning both extremes of |z| over the parametrized boundary.
struct BoundaryExtremes {
    double near_dist = 0.0, far_dist = 0.0;
    double t_near = 0.0, t_far = 0.0;
};
BoundaryExtremes boundary_extremes(const EllipseParams& e, int samples);

}  // namespace numrange
