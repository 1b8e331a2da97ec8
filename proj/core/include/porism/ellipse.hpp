#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "porism/tolerance.hpp"

namespace porism::ellipse {

/// Ellipse with foci f1, f2 in the open unit disk and minor semiaxis s.
/// s = 0 with f1 == f2 is the degenerate point component.
struct EllipseComponent {
    cplx f1;
    cplx f2;
    double s = 0.0;
    bool degenerate() const { return s == 0.0; }
};

/// (z - f)/(1 - conj(f) z)
cplx b1(cplx z, cplx f);
/// b1(z; f1)·b1(z; f2)
cplx b2(cplx z, cplx f1, cplx f2);
/// (1 - conj(f1) z)(1 - conj(f2) z)
cplx phi2_star(cplx z, cplx f1, cplx f2);

/// (w + b1(z;f1))(w + b1(z;f2)) - 4s²zw/Φ2*(z); w + b1(z;f1) when s = 0.
/// Throws std::domain_error when Φ2*(z) vanishes.
cplx q_eval(cplx z, cplx w, const EllipseComponent& e);
/// q multiplied by Φ2*(z) (by 1 - conj(f1) z when s = 0): a polynomial in z and w.
cplx q_poly(cplx z, cplx w, const EllipseComponent& e);
/// The two roots w of q(z, ·) = 0.
std::array<cplx, 2> q_roots(cplx z, const EllipseComponent& e);

struct Orbit {
    std::vector<cplx> points;    // w_0, w_1, …
    int closure = 0;             // minimal n with w_n = w_0, 0 if none
    double max_vieta = 0.0;      // max |w_{i+1} w_{i-1} - b2(w_i)|
    double max_off_circle = 0.0; // max ||w_i| - 1|
    double turning = 0.0;        // Σ ccw step angles
};

/// Circular iteration on the unit circle starting at w0; the first step goes
/// counterclockwise. Throws std::domain_error when an iterate leaves the
/// circle by more than tol or the two roots coincide within 1e-6.
Orbit circular_iteration(const EllipseComponent& e, cplx w0, int max_steps, double closure_tol = 1e-8,
                         double tol = 1e-9);

/// Inner iteration w_0 = 0, w_1 = f1 (branch 0) or f2 (branch 1), continued by
/// the sum of roots until the iterate returns to 0. Returns w_1, …, w_{n-1}.
/// Throws std::runtime_error if 0 is not reached within max_steps.
std::vector<cplx> inner_iteration(const EllipseComponent& e, int branch = 0, int max_steps = 64);

/// ½ sqrt(1 - |f1|² - |f2|² + |f1 f2|²)
double semiaxis_three(cplx f1, cplx f2);

/// Minor semiaxis of the ellipse with foci f1, f2 whose circular orbits close
/// after n steps with one turn. Bisection on s of the n-step turning angle.
double closure_semiaxis(cplx f1, cplx f2, int n, double tol = 1e-15);

/// Largest s for which the ellipse stays inside the closed unit disk.
double max_semiaxis(cplx f1, cplx f2);

/// Splits the foci of an ellipse package into ⌊n/2⌋ components, C_k first.
/// Throws std::domain_error when no consistent pairing exists.
std::vector<EllipseComponent> package_factor(std::span<const cplx> foci, double tol = 1e-7);

/// max |P(z,w) - c ∏ q̃_k(z,w)| / max |P(z,w)| over `points` random pairs in
/// the unit bidisk, c fitted at one extra pair; q̃_k = q_poly of component k.
double factorization_residual(std::span<const cplx> foci, std::span<const EllipseComponent> comps, int points = 100,
                              std::uint64_t seed = 7);

}  // namespace porism::ellipse
