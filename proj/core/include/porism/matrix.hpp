#pragma once

#include <span>
#include <vector>

#include "porism/tolerance.hpp"

namespace porism {

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(std::span<const cplx> d);
    /// Nilpotent Jordan block: ones on the superdiagonal.
    static ComplexMatrix jordan(int n);

    int size() const { return n_; }
    cplx& operator()(int i, int j) { return a_[idx(i, j)]; }
    cplx operator()(int i, int j) const { return a_[idx(i, j)]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix block(int rows) const;  // leading rows×rows principal block
    double max_abs() const;
    bool all_finite() const;

    std::vector<cplx> apply(std::span<const cplx> x) const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    int n_ = 0;
    std::vector<cplx> a_;
};

/// Determinant by LU with partial pivoting.
cplx determinant(const ComplexMatrix& m);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column j belongs to values[j]
};

/// Cyclic complex Jacobi. Throws std::invalid_argument when h is not
/// Hermitian within tol relative to its largest entry.
HermitianEigen hermitian_eigs(const ComplexMatrix& h, double tol = 1e-10);

}  // namespace porism
