#pragma once

#include <span>
#include <utility>
#include <vector>

#include "porism/blaschke.hpp"
#include "porism/cpoly.hpp"
#include "porism/opuc.hpp"

namespace porism::poncelet {

/// Polygon family generated by foci f_1..f_{n-1} in the open unit disk.
class PonceletFamily {
public:
    /// Throws std::invalid_argument for a focus with |f| >= 1.
    explicit PonceletFamily(std::vector<cplx> foci);

    int n() const { return n_; }
    const std::vector<cplx>& foci() const { return foci_; }
    const blaschke::BlaschkeProduct& product() const { return b_; }
    const opuc::VerblunskySeq& alphas() const { return alphas_; }

    /// The polygon through z: the solutions of B(w) = B(z), counterclockwise.
    std::vector<cplx> polygon(cplx lambda) const;

private:
    std::vector<cplx> foci_;
    int n_;
    blaschke::BlaschkeProduct b_;
    opuc::VerblunskySeq alphas_;
};

/// The vertex k steps counterclockwise from z in the polygon through z.
/// Throws std::runtime_error when z is not recovered among the solutions.
cplx tau(const PonceletFamily& fam, cplx z, int k);

/// d/dθ arg τ^k(e^{iθ}) from the ratio of argument derivatives of B.
double tau_rate(const PonceletFamily& fam, cplx z, int k);
/// The same rate by a central difference of step h.
double tau_rate_fd(const PonceletFamily& fam, cplx z, int k, double h = 1e-5);

/// Pole of the line through z and w: 2zw/(z+w). A diameter has its pole at
/// infinity; direction then holds the unit direction of the chord.
struct Pole {
    cplx value;
    bool infinite = false;
    cplx direction;
};

Pole chord_pole(cplx z, cplx w);
Pole chord_pole(const PonceletFamily& fam, cplx z, int k);

/// Point of contact of the chord [z, τ^k(z)] with its envelope, from central
/// differences of the chord line with Richardson extrapolation.
cplx envelope_point(const PonceletFamily& fam, cplx z, int k);

/// (1 + wdot)²/|z + wdot·w|²: squared distance from the origin to the tangent line, inverted.
double chord_distance_sq(cplx z, cplx w, double wdot);

/// P(z,w) = (wΦ(w)Φ*(z) - zΦ(z)Φ*(w))/(w - z), Φ = ∏(z - f_j).
struct BezoutianP {
    std::vector<std::vector<cplx>> coeffs;  // coeffs[i][j]: coefficient of z^i w^j
    std::vector<cplx> foci;
    int N = 0;  // |foci| + 1
    int m = 0;  // foci with |f| > 1
    int d = 0;  // foci on the unit circle

    int n() const { return N - 2 * m - d; }
    cplx operator()(cplx z, cplx w) const;
    /// P(z0, ·) as a polynomial in w.
    ComplexPoly slice(cplx z0) const;
};

/// Throws std::runtime_error if the division by (w - z) leaves a remainder above tol.
BezoutianP bezoutian_build(std::span<const cplx> foci, double tol = 1e-9);

struct OnCircleResult {
    cplx z0;                      // possibly perturbed
    bool perturbed = false;
    int expected = 0;             // N - 1 - 2m - d
    std::vector<cplx> on_circle;  // sorted by argument
    std::vector<cplx> off_circle;
    bool matches() const { return static_cast<int>(on_circle.size()) == expected; }
};

OnCircleResult on_circle_solutions(const BezoutianP& p, cplx z0);

struct MirmanResult {
    bool holds = false;
    double min_value = 0.0;
};

/// Minimum of 1 + Σ (1-|f|²)/|z-f|² over sampled z on the unit circle and the
/// circle points nearest each exterior focus. Throws for a focus on the circle.
MirmanResult mirman_condition(std::span<const cplx> foci, int samples);

/// (n/gcd(k,n), k/gcd(k,n)).
std::pair<int, int> component_rank(int n, int k);
/// Number of k in 1..n/2 with n/gcd(k,n) = d.
int totient_count(int n, int d);
int euler_phi(int d);

struct CurveSample {
    int k = 0;
    double theta = 0.0;
    cplx point;
    Pole pole;
};

/// Samples of C_1, …, C_{n/2} at θ = 2πj/samples, ordered by (k, θ).
std::vector<CurveSample> sample_package(const PonceletFamily& fam, int samples);

}  // namespace porism::poncelet
