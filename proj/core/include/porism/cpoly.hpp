#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "porism/tolerance.hpp"

namespace porism {

/// Dense polynomial with complex coefficients, lowest degree first:
/// coeffs()[j] is the coefficient of z^j.
///
/// Trailing exact zeros are dropped on construction, so degree() is the index
/// of the last stored coefficient. The zero polynomial is stored as {0}.
class ComplexPoly {
public:
    ComplexPoly() : coeffs_{cplx{0.0}} {}
    ComplexPoly(std::initializer_list<cplx> c) : coeffs_(c) { normalize(); }
    explicit ComplexPoly(std::vector<cplx> c) : coeffs_(std::move(c)) { normalize(); }

    static ComplexPoly constant(cplx c) { return ComplexPoly({c}); }
    static ComplexPoly monomial(int degree, cplx c = 1.0);
    /// ∏ (z - r) over the given roots; the leading coefficient is stored as exactly 1.
    static ComplexPoly from_roots(std::span<const cplx> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx{0.0}; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    /// Coefficient of z^j; zero beyond the degree.
    cplx operator[](int j) const {
        return (j >= 0 && j <= degree()) ? coeffs_[static_cast<std::size_t>(j)] : cplx{0.0};
    }
    cplx leading() const { return coeffs_.back(); }
    double max_abs_coeff() const;

    /// Horner evaluation.
    cplx operator()(cplx z) const;
    /// Value and first derivative in one Horner pass.
    std::pair<cplx, cplx> eval_with_derivative(cplx z) const;

    ComplexPoly derivative() const;
    /// Multiply by z^k.
    ComplexPoly shifted(int k) const;
    /// Drop the constant term and divide by z. The caller has already checked
    /// that the constant term is negligible.
    ComplexPoly divided_by_z() const;
    ComplexPoly scaled(cplx s) const;
    /// Same polynomial with its leading coefficient set to exactly 1 after dividing by it.
    ComplexPoly monic() const;

    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator*(cplx s, const ComplexPoly& a) { return a.scaled(s); }

private:
    void normalize();
    std::vector<cplx> coeffs_;
};

/// Largest coefficientwise |a_j - b_j|.
double max_coeff_diff(const ComplexPoly& a, const ComplexPoly& b);

/// Reversed polynomial of formal degree n: coefficient j of the result is
/// conj(coefficient n-j of p). The result may have degree below n.
/// Throws std::invalid_argument if degree(p) > n.
ComplexPoly reverse(const ComplexPoly& p, int n);

/// Composition outer(inner(z)).
ComplexPoly compose(const ComplexPoly& outer, const ComplexPoly& inner);

struct RootOptions {
    double tol = kDefaultTolerance;
    int max_iterations = 800;
    std::uint64_t seed = 0x5eed;
};

/// All roots of p, repeated according to multiplicity, by Aberth–Ehrlich
/// simultaneous iteration followed by a Newton polish.
///
/// Accepts the roots when |p(r)| <= tol * (1+|r|)^deg * max|c_j| for every r.
/// Throws std::invalid_argument for degree < 1 and std::runtime_error when the
/// iteration fails to meet the residual bound.
std::vector<cplx> roots(const ComplexPoly& p, const RootOptions& opts = {});

/// Interpolating polynomial of the given degree through (node, value) samples.
/// Needs at least degree+1 samples with pairwise distinct nodes; only the
/// first degree+1 samples are used. Newton divided differences on a Leja
/// reordering of the nodes.
ComplexPoly interpolate(std::span<const std::pair<cplx, cplx>> samples, int degree);

}  // namespace porism
