#include "porism/opuc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace porism::opuc {

ComplexPoly monic_from_foci(std::span<const cplx> foci) { return ComplexPoly::from_roots(foci); }

SzegoPair szego_step(const ComplexPoly& phi_k, cplx alpha) {
    if (std::abs(alpha) > 1.0 + kDefaultTolerance)
        throw std::invalid_argument("szego_step: |alpha| > 1");
    const int k = phi_k.degree();
    const ComplexPoly zphi = phi_k.shifted(1);
    const ComplexPoly star = reverse(phi_k, k);
    return {zphi - std::conj(alpha) * star, star - alpha * zphi};
}

ComplexPoly szego_chain(std::span<const cplx> alphas) {
    ComplexPoly phi = ComplexPoly::constant(1.0);
    for (cplx a : alphas) phi = szego_step(phi, a).phi;
    return phi;
}

VerblunskySeq verblunsky_from_poly(const ComplexPoly& phi, double tol) {
    if (std::abs(phi.leading() - 1.0) > tol) throw std::invalid_argument("verblunsky_from_poly: polynomial is not monic");
    const int n = phi.degree();
    VerblunskySeq alphas(static_cast<std::size_t>(n));
    ComplexPoly cur = phi.monic();
    for (int k = n - 1; k >= 0; --k) {
        const cplx a = -std::conj(cur[0]);
        const double mod = std::abs(a);
        if (mod >= 1.0 - tol)
            throw std::domain_error("verblunsky_from_poly: |alpha_" + std::to_string(k) + "| = " +
                                    std::to_string(mod) + " (zero on or outside the unit circle)");
        alphas[static_cast<std::size_t>(k)] = a;
        const ComplexPoly num = cur + std::conj(a) * reverse(cur, k + 1);
        const double scale = 1.0 - mod * mod;
        if (std::abs(num[0]) > tol * std::max(1.0, num.max_abs_coeff()))
            throw std::runtime_error("verblunsky_from_poly: inexact division by z");
        std::vector<cplx> c(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(j)] = num[j + 1] / scale;
        c.back() = 1.0;
        cur = ComplexPoly(std::move(c));
    }
    return alphas;
}

ComplexPoly popuc(const ComplexPoly& phi, cplx lambda, double tol) {
    if (std::abs(std::abs(lambda) - 1.0) > tol) throw std::invalid_argument("popuc: lambda is not unimodular");
    const int k = phi.degree();
    std::vector<cplx> c = (phi.shifted(1) - std::conj(lambda) * reverse(phi, k)).coeffs();
    c.back() = 1.0;
    return ComplexPoly(std::move(c));
}

std::vector<cplx> sort_by_argument(std::vector<cplx> pts) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return arg_0_2pi(pts[a]) < arg_0_2pi(pts[b]); });
    std::vector<cplx> out;
    out.reserve(pts.size());
    for (std::size_t i : order) out.push_back(pts[i]);
    return out;
}

std::vector<cplx> paraorthogonal_extension(std::span<const cplx> foci, cplx lambda, double tol) {
    for (cplx f : foci)
        if (std::abs(f) >= 1.0) throw std::invalid_argument("paraorthogonal_extension: focus outside the open disk");
    const ComplexPoly p = popuc(monic_from_foci(foci), lambda, tol);
    std::vector<cplx> z = roots(p, RootOptions{.tol = tol});
    for (cplx& r : z) {
        if (std::abs(std::abs(r) - 1.0) > kOnCircleTolerance)
            throw std::runtime_error("paraorthogonal_extension: root off the unit circle");
        r /= std::abs(r);
    }
    return sort_by_argument(std::move(z));
}

ComplexPoly wendroff_recover(std::span<const cplx> z1, cplx lambda1, std::span<const cplx> z2, cplx lambda2,
                             double tol) {
    if (z1.size() != z2.size() || z1.empty()) throw std::invalid_argument("wendroff_recover: point sets differ in size");
    if (std::abs(lambda1 - lambda2) <= kDefaultTolerance)
        throw std::invalid_argument("wendroff_recover: lambda1 == lambda2");
    const int n = static_cast<int>(z1.size());
    const ComplexPoly p1 = ComplexPoly::from_roots(z1);
    const ComplexPoly p2 = ComplexPoly::from_roots(z2);
    const cplx l1 = std::conj(lambda1);
    const cplx l2 = std::conj(lambda2);
    const cplx den = l2 - l1;

    const ComplexPoly zphi = (l2 * p1 - l1 * p2).scaled(1.0 / den);
    const ComplexPoly star = (p1 - p2).scaled(1.0 / den);
    if (std::abs(zphi[0]) > tol) throw std::domain_error("wendroff_recover: inconsistent point sets");
    std::vector<cplx> c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = zphi[j + 1];
    c.back() = 1.0;
    ComplexPoly phi(std::move(c));
    if (std::abs(star[n]) > tol || max_coeff_diff(reverse(phi, n - 1), star) > tol)
        throw std::domain_error("wendroff_recover: inconsistent point sets");
    return phi;
}

}  // namespace porism::opuc
