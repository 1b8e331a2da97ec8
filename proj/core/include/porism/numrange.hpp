#pragma once

#include <span>
#include <vector>

#include "porism/ellipse.hpp"
#include "porism/matrix.hpp"

namespace porism::numrange {

struct SupportSample {
    double phi = 0.0;
    double lambda_phi = 0.0;  // top eigenvalue of the Hermitian part at phi
    cplx point;               // x*Ax for a matching unit eigenvector x
};

/// (e^{-iφ}A + e^{iφ}A*)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& a, double phi);

using porism::hermitian_eigs;

SupportSample support_point(const ComplexMatrix& a, double phi);

/// Support samples at φ = 2πj/samples, j = 0..samples-1. Requires samples >= 3.
std::vector<SupportSample> boundary(const ComplexMatrix& a, int samples);

/// det(u1 Re A + u2 Im A - u3 I).
cplx kippenhahn_eval(const ComplexMatrix& a, cplx u1, cplx u2, cplx u3);

/// Foci and minor semiaxis of the elliptical numerical range of a 2×2 matrix.
/// Throws std::domain_error when tr(A*A) - |f1|² - |f2|² < -tol.
ellipse::EllipseComponent ellipse_range_2x2(const ComplexMatrix& a, double tol = 1e-10);

/// Closed half-plane {x : Re(conj(normal)·x) <= offset}, |normal| = 1.
struct HalfPlane {
    cplx normal;
    double offset = 0.0;
};

/// Outward half-planes of the edges of a convex polygon given counterclockwise.
std::vector<HalfPlane> polygon_halfplanes(std::span<const cplx> ccw);

/// Counterclockwise vertices of the intersection. Throws std::domain_error
/// when it is empty or unbounded, std::invalid_argument for fewer than 3 planes.
std::vector<cplx> halfplane_intersection(std::span<const HalfPlane> planes);

/// Hausdorff distance between two closed polylines.
double hausdorff(std::span<const cplx> a, std::span<const cplx> b);

/// True when p lies in the closed convex polygon (ccw) within tol.
bool contains(std::span<const cplx> ccw, cplx p, double tol = 1e-9);

}  // namespace porism::numrange
