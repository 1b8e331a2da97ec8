#include "porism/cmv.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "porism/opuc.hpp"

namespace porism::cmv {

ComplexMatrix theta_block(cplx alpha) {
    const double mod2 = std::norm(alpha);
    if (mod2 > 1.0 + 2.0 * kDefaultTolerance) throw std::invalid_argument("theta_block: |alpha| > 1");
    const double rho = std::sqrt(std::max(0.0, 1.0 - mod2));
    ComplexMatrix t(2);
    t(0, 0) = std::conj(alpha);
    t(0, 1) = rho;
    t(1, 0) = rho;
    t(1, 1) = -alpha;
    return t;
}

ComplexMatrix cutoff_cmv(std::span<const cplx> alphas, double tol) {
    const int n = static_cast<int>(alphas.size());
    for (int k = 0; k < n; ++k) {
        const double mod = std::abs(alphas[static_cast<std::size_t>(k)]);
        const bool last = k == n - 1;
        if (last ? mod > 1.0 + tol : mod >= 1.0 - tol)
            throw std::invalid_argument("cutoff_cmv: invalid alpha_" + std::to_string(k));
    }
    const int size = n + 2;
    auto alpha = [&](int k) { return k < n ? alphas[static_cast<std::size_t>(k)] : cplx{0.0}; };
    auto place = [&](ComplexMatrix& m, int at, cplx a) {
        const ComplexMatrix t = theta_block(a);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (at + i < size && at + j < size) m(at + i, at + j) = t(i, j);
    };
    ComplexMatrix l(size);
    ComplexMatrix m(size);
    m(0, 0) = 1.0;
    for (int k = 0; k < size; k += 2) place(l, k, alpha(k));
    for (int k = 1; k < size; k += 2) place(m, k, alpha(k));
    return (l * m).block(n);
}

ComplexMatrix unitary_dilation(std::span<const cplx> alphas, cplx lambda, double tol) {
    if (std::abs(std::abs(lambda) - 1.0) > tol) throw std::invalid_argument("unitary_dilation: lambda is not unimodular");
    std::vector<cplx> ext(alphas.begin(), alphas.end());
    ext.push_back(lambda / std::abs(lambda));
    return cutoff_cmv(ext, tol);
}

ComplexPoly char_poly(const ComplexMatrix& m) {
    const int n = m.size();
    if (n == 0) return ComplexPoly::constant(1.0);
    std::vector<std::pair<cplx, cplx>> samples;
    samples.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const cplx z = std::polar(2.0, kTwoPi * k / (n + 1));
        ComplexMatrix a = -1.0 * m;
        for (int i = 0; i < n; ++i) a(i, i) += z;
        samples.emplace_back(z, determinant(a));
    }
    std::vector<cplx> c = interpolate(samples, n).coeffs();
    c.resize(static_cast<std::size_t>(n) + 1, 0.0);
    c.back() = 1.0;
    return ComplexPoly(std::move(c));
}

std::vector<cplx> eigenvalues(const ComplexMatrix& m) {
    if (m.size() == 0) return {};
    return opuc::sort_by_argument(roots(char_poly(m)));
}

int defect_rank(const ComplexMatrix& m) {
    const int n = m.size();
    const ComplexMatrix d = ComplexMatrix::identity(n) - m * m.adjoint();
    const HermitianEigen e = hermitian_eigs(d);
    int rank = 0;
    for (double v : e.values)
        if (std::abs(v) > 1e-8 * n) ++rank;
    return rank;
}

double operator_norm(const ComplexMatrix& m) {
    const int n = m.size();
    if (n == 0) return 0.0;
    const ComplexMatrix g = m.adjoint() * m;
    std::vector<cplx> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = cplx(1.0 + 0.1 * i, 0.05 * i);
    double lambda = 0.0;
    for (int it = 0; it < 100000; ++it) {
        double nx = 0.0;
        for (cplx v : x) nx += std::norm(v);
        nx = std::sqrt(nx);
        if (nx == 0.0) return 0.0;
        for (cplx& v : x) v /= nx;
        const std::vector<cplx> y = g.apply(x);
        double next = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) next += (std::conj(x[i]) * y[i]).real();
        x = y;
        if (it > 0 && std::abs(next - lambda) <= 1e-13 * std::max(1.0, next)) return std::sqrt(std::max(0.0, next));
        lambda = next;
    }
    throw std::runtime_error("operator_norm: power iteration did not converge");
}

}  // namespace porism::cmv
