#pragma once

#include <span>
#include <vector>

#include "porism/cpoly.hpp"
#include "porism/matrix.hpp"

namespace porism::cmv {

/// [[conj(α), ρ], [ρ, -α]] with ρ = sqrt(1 - |α|²). Throws for |α| > 1.
ComplexMatrix theta_block(cplx alpha);

/// Principal n×n block of the CMV matrix of α_0, …, α_{n-1}. Every |α_k| must
/// be below 1 except the last, which may be unimodular.
ComplexMatrix cutoff_cmv(std::span<const cplx> alphas, double tol = kDefaultTolerance);

/// cutoff_cmv of (α_0, …, α_{n-2}, λ) for unimodular λ.
ComplexMatrix unitary_dilation(std::span<const cplx> alphas, cplx lambda, double tol = kDefaultTolerance);

/// det(zI - M), from LU determinants at n+1 points of the circle |z| = 2.
ComplexPoly char_poly(const ComplexMatrix& m);

/// Roots of char_poly, sorted by argument.
std::vector<cplx> eigenvalues(const ComplexMatrix& m);

/// Numerical rank of I - MM*, eigenvalues below 1e-8·n counting as zero.
int defect_rank(const ComplexMatrix& m);

/// Largest singular value by power iteration on M*M. Throws std::runtime_error
/// when the iteration stalls.
double operator_norm(const ComplexMatrix& m);

}  // namespace porism::cmv
