#include "porism/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace porism {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.size(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::jordan(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::block(int rows) const {
    if (rows < 0 || rows > n_) throw std::invalid_argument("block: size out of range");
    ComplexMatrix r(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) r(i, j) = (*this)(i, j);
    return r;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (cplx c : a_) m = std::max(m, std::abs(c));
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

std::vector<cplx> ComplexMatrix::apply(std::span<const cplx> x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<cplx> y(x.size(), 0.0);
    for (int i = 0; i < n_; ++i) {
        cplx acc = 0.0;
        for (int j = 0; j < n_; ++j) acc += (*this)(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix product: dimension mismatch");
    const int n = a.n_;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0}) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix sum: dimension mismatch");
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix difference: dimension mismatch");
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix r = a;
    for (cplx& c : r.a_) c *= s;
    return r;
}

cplx determinant(const ComplexMatrix& m) {
    const int n = m.size();
    ComplexMatrix lu = m;
    cplx det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
        if (lu(piv, k) == cplx{0.0}) return 0.0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            det = -det;
        }
        det *= lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx l = lu(i, k) / lu(k, k);
            if (l == cplx{0.0}) continue;
            for (int j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
        }
    }
    return det;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

}  // namespace porism

namespace porism {

HermitianEigen hermitian_eigs(const ComplexMatrix& h, double tol) {
    const int n = h.size();
    const double scale = std::max(1.0, h.max_abs());
    if (max_abs_diff(h, h.adjoint()) > tol * scale) throw std::invalid_argument("hermitian_eigs: matrix is not Hermitian");

    ComplexMatrix a = h;
    ComplexMatrix q = ComplexMatrix::identity(n);
    double frob = 0.0;
    for (int i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (int j = 0; j < n; ++j) frob += std::norm(a(i, j));
    }
    const double target = 1e-13 * std::sqrt(frob);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        if (std::sqrt(off) <= target) break;

        for (int p = 0; p < n; ++p)
            for (int r = p + 1; r < n; ++r) {
                const cplx g = a(p, r);
                const double ag = std::abs(g);
                if (ag <= 1e-300) continue;
                const cplx e = g / ag;
                const double tau = (a(r, r).real() - a(p, p).real()) / (2.0 * ag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx v00 = c, v01 = s, v10 = -s * std::conj(e), v11 = c * std::conj(e);

                for (int k = 0; k < n; ++k) {
                    const cplx kp = a(k, p), kr = a(k, r);
                    a(k, p) = kp * v00 + kr * v10;
                    a(k, r) = kp * v01 + kr * v11;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx pk = a(p, k), rk = a(r, k);
                    a(p, k) = std::conj(v00) * pk + std::conj(v10) * rk;
                    a(r, k) = std::conj(v01) * pk + std::conj(v11) * rk;
                }
                a(p, r) = 0.0;
                a(r, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(r, r) = a(r, r).real();
                for (int k = 0; k < n; ++k) {
                    const cplx kp = q(k, p), kr = q(k, r);
                    q(k, p) = kp * v00 + kr * v10;
                    q(k, r) = kp * v01 + kr * v11;
                }
            }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });
    HermitianEigen out{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n)};
    for (int j = 0; j < n; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        out.values[static_cast<std::size_t>(j)] = a(src, src).real();
        for (int i = 0; i < n; ++i) out.vectors(i, j) = q(i, src);
    }
    return out;
}

}  // namespace porism
