#pragma once

#include <memory>
#include <span>
#include <vector>

#include "porism/cpoly.hpp"

namespace porism::blaschke {

/// Finite Blaschke product with zeros in the open unit disk.
///
/// A plain product is c·∏ (z - f)/(1 - conj(f) z) with |c| = 1. A composite
/// product keeps its outer and inner factors and is only expanded on request.
class BlaschkeProduct {
public:
    /// Throws std::invalid_argument for a zero with |f| >= 1.
    explicit BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular = 1.0);

    /// z ∏ (z - f_j)/(1 - conj(f_j) z): degree |foci| + 1, vanishing at 0.
    static BlaschkeProduct from_foci(std::span<const cplx> foci);

    int degree() const { return degree_; }
    bool is_composite() const { return static_cast<bool>(outer_); }

    cplx operator()(cplx z) const;

    /// Continuous, strictly increasing lift of θ ↦ arg B(e^{iθ}), satisfying
    /// L(θ + 2π) = L(θ) + 2π·degree.
    double lifted_arg(double theta) const;
    /// d/dθ arg B(e^{iθ}) at z = e^{iθ}: Σ (1-|f|²)/|z-f|². Throws if |z| != 1.
    double arg_derivative(cplx z) const;
    double arg_derivative_at(double theta) const;

    /// Zeros (computed for composite products).
    std::vector<cplx> zeros() const;
    /// Plain product equal to this one.
    BlaschkeProduct expanded() const;
    /// Numerator Φ and denominator Φ* of the plain form; B = unimodular()·Φ/Φ*.
    ComplexPoly numer() const;
    ComplexPoly denom() const;
    cplx unimodular() const;

    friend BlaschkeProduct compose(const BlaschkeProduct& outer, const BlaschkeProduct& inner);

private:
    BlaschkeProduct() = default;
    int degree_ = 0;
    std::vector<cplx> zeros_;
    cplx unimodular_ = 1.0;
    double phase_ = 0.0;
    std::shared_ptr<const BlaschkeProduct> outer_;
    std::shared_ptr<const BlaschkeProduct> inner_;
};

/// outer ∘ inner, stored un-expanded.
BlaschkeProduct compose(const BlaschkeProduct& outer, const BlaschkeProduct& inner);

/// Angles θ in [0, 2π), increasing, with B(e^{iθ}) = conj(λ).
std::vector<double> solve_angles(const BlaschkeProduct& b, cplx lambda, double tol = kDefaultTolerance);
/// The degree-many solutions of B(z) = conj(λ) on the unit circle, counterclockwise from angle 0.
std::vector<cplx> solve(const BlaschkeProduct& b, cplx lambda, double tol = kDefaultTolerance);

/// Increment of arg B(e^{iθ}) over [theta0, theta1] by branch tracking:
/// adaptive steps keep the per-step change of the principal argument below π/4.
double unwrapped_arg_increment(const BlaschkeProduct& b, double theta0, double theta1);
/// The same increment by adaptive Gauss–Legendre quadrature of arg_derivative.
double integrated_arg_increment(const BlaschkeProduct& b, double theta0, double theta1);

}  // namespace porism::blaschke
