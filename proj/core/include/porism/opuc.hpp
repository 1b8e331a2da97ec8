#pragma once

#include <span>
#include <vector>

#include "porism/cpoly.hpp"

namespace porism::opuc {

using FociSet = std::vector<cplx>;
/// α_0, …, α_{n-1}. The last entry may be unimodular (paraorthogonal case).
using VerblunskySeq = std::vector<cplx>;

/// ∏ (z - f_j); the constant 1 for an empty set.
ComplexPoly monic_from_foci(std::span<const cplx> foci);

struct SzegoPair {
    ComplexPoly phi;
    ComplexPoly phi_star;
};

/// One forward step of the recursion from Φ_k (monic, degree k):
///   Φ_{k+1}  = zΦ_k - conj(α) Φ_k*
///   Φ_{k+1}* = -α zΦ_k + Φ_k*
SzegoPair szego_step(const ComplexPoly& phi_k, cplx alpha);

/// Φ_n generated from Φ_0 = 1 by the given coefficients.
ComplexPoly szego_chain(std::span<const cplx> alphas);

/// Inverts the recursion. Throws std::invalid_argument if phi is not monic
/// and std::domain_error when some |α_k| >= 1 - tol, i.e. when phi has a
/// zero on or outside the unit circle.
VerblunskySeq verblunsky_from_poly(const ComplexPoly& phi, double tol = kDefaultTolerance);

/// zΦ(z) - conj(λ) Φ*(z) for unimodular λ.
ComplexPoly popuc(const ComplexPoly& phi, cplx lambda, double tol = kDefaultTolerance);

/// The n = |foci|+1 zeros of popuc(∏(z - f_j), λ), sorted by argument in [0, 2π).
std::vector<cplx> paraorthogonal_extension(std::span<const cplx> foci, cplx lambda,
                                           double tol = kDefaultTolerance);

/// Recovers Φ_{n-1} from two paraorthogonal extensions of it. Throws
/// std::invalid_argument when λ1 == λ2 or the sizes differ, and
/// std::domain_error when the two point sets are not extensions of a common
/// polynomial (consistency defect above tol).
ComplexPoly wendroff_recover(std::span<const cplx> z1, cplx lambda1, std::span<const cplx> z2, cplx lambda2,
                             double tol = 1e-8);

/// Sort points by argument in [0, 2π), stable on ties.
std::vector<cplx> sort_by_argument(std::vector<cplx> pts);

}  // namespace porism::opuc
