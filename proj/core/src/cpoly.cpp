#include "porism/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace porism {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Σ |c_j| |z|^j, the scale of the rounding error in Horner's rule.
double horner_bound(const std::vector<cplx>& c, double r) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

}  // namespace

void ComplexPoly::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == cplx{0.0}) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

ComplexPoly ComplexPoly::monomial(int degree, cplx c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<cplx> v(static_cast<std::size_t>(degree) + 1, 0.0);
    v.back() = c;
    return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::from_roots(std::span<const cplx> roots) {
    std::vector<cplx> c{1.0};
    for (cplx r : roots) {
        std::vector<cplx> next(c.size() + 1, 0.0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= r * c[j];
        }
        c = std::move(next);
    }
    c.back() = 1.0;
    return ComplexPoly(std::move(c));
}

double ComplexPoly::max_abs_coeff() const {
    double m = 0.0;
    for (cplx c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

cplx ComplexPoly::operator()(cplx z) const {
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::pair<cplx, cplx> ComplexPoly::eval_with_derivative(cplx z) const {
    cplx p = 0.0;
    cplx dp = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

ComplexPoly ComplexPoly::derivative() const {
    if (degree() == 0) return ComplexPoly{};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = static_cast<double>(j) * coeffs_[j];
    return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    if (is_zero()) return *this;
    std::vector<cplx> v(static_cast<std::size_t>(k), 0.0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::divided_by_z() const {
    if (degree() == 0) return ComplexPoly{};
    return ComplexPoly(std::vector<cplx>(coeffs_.begin() + 1, coeffs_.end()));
}

ComplexPoly ComplexPoly::scaled(cplx s) const {
    std::vector<cplx> v = coeffs_;
    for (cplx& c : v) c *= s;
    return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic: zero polynomial");
    std::vector<cplx> v = coeffs_;
    const cplx lead = v.back();
    for (cplx& c : v) c /= lead;
    v.back() = 1.0;
    return ComplexPoly(std::move(v));
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    const int d = std::max(a.degree(), b.degree());
    std::vector<cplx> v(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) v[static_cast<std::size_t>(j)] = a[j] + b[j];
    return ComplexPoly(std::move(v));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
    const int d = std::max(a.degree(), b.degree());
    std::vector<cplx> v(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) v[static_cast<std::size_t>(j)] = a[j] - b[j];
    return ComplexPoly(std::move(v));
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    if (a.is_zero() || b.is_zero()) return ComplexPoly{};
    std::vector<cplx> v(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return ComplexPoly(std::move(v));
}

double max_coeff_diff(const ComplexPoly& a, const ComplexPoly& b) {
    double m = 0.0;
    for (int j = 0; j <= std::max(a.degree(), b.degree()); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

ComplexPoly reverse(const ComplexPoly& p, int n) {
    if (p.degree() > n)
        throw std::invalid_argument("reverse: degree " + std::to_string(p.degree()) +
                                    " exceeds formal degree " + std::to_string(n));
    std::vector<cplx> v(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = std::conj(p[n - j]);
    return ComplexPoly(std::move(v));
}

ComplexPoly compose(const ComplexPoly& outer, const ComplexPoly& inner) {
    ComplexPoly acc;
    const auto& c = outer.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + ComplexPoly::constant(*it);
    return acc;
}

std::vector<cplx> roots(const ComplexPoly& p, const RootOptions& opts) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("roots: polynomial must have degree >= 1");

    const ComplexPoly a = p.monic();
    const auto& c = a.coeffs();
    if (n == 1) return {-c[0]};

    double radius = 0.0;
    for (int j = 0; j < n; ++j) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(j)]));
    radius += 1.0;

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    const double offset = 0.4;  // keeps the starting circle off the real axis
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = (kTwoPi * (k + jitter(rng)) / n) + offset;
        z[static_cast<std::size_t>(k)] = std::polar(radius, t);
    }

    std::vector<bool> done(static_cast<std::size_t>(n), false);
    int remaining = n;
    for (int iter = 0; iter < opts.max_iterations && remaining > 0; ++iter) {
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (done[k]) continue;
            auto [pv, dpv] = a.eval_with_derivative(z[k]);
            const double bound = 8.0 * n * kEps * horner_bound(c, std::abs(z[k]));
            if (std::abs(pv) <= bound) {
                done[k] = true;
                --remaining;
                continue;
            }
            cplx repulsion = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const cplx ratio = pv / dpv;
            cplx step = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
            z[k] -= step;
            if (std::abs(step) <= 4.0 * kEps * std::abs(z[k])) {
                done[k] = true;
                --remaining;
            }
        }
    }

    // Newton polish, kept only when it lowers the residual.
    for (cplx& r : z) {
        for (int it = 0; it < 3; ++it) {
            auto [pv, dpv] = a.eval_with_derivative(r);
            if (dpv == cplx{0.0}) break;
            const cplx cand = r - pv / dpv;
            if (std::abs(a(cand)) < std::abs(pv)) r = cand;
            else break;
        }
    }

    const double scale = p.max_abs_coeff();
    for (cplx r : z) {
        const double res = std::abs(p(r));
        if (!(res <= opts.tol * std::pow(1.0 + std::abs(r), n) * scale))
            throw std::runtime_error("roots: Aberth iteration did not converge (residual " + std::to_string(res) +
                                     ")");
    }
    return z;
}

ComplexPoly interpolate(std::span<const std::pair<cplx, cplx>> samples, int degree) {
    if (degree < 0) throw std::invalid_argument("interpolate: negative degree");
    const std::size_t m = static_cast<std::size_t>(degree) + 1;
    if (samples.size() < m) throw std::invalid_argument("interpolate: need at least degree+1 samples");

    std::vector<std::pair<cplx, cplx>> pts(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(m));
    double scale = 1.0;
    for (const auto& [x, y] : pts) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::abs(pts[i].first - pts[j].first) <= 1e-14 * scale)
                throw std::invalid_argument("interpolate: duplicate nodes");

    // Leja ordering.
    std::size_t first = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (std::abs(pts[i].first) > std::abs(pts[first].first)) first = i;
    std::swap(pts[0], pts[first]);
    for (std::size_t k = 1; k < m; ++k) {
        std::size_t best = k;
        double best_val = -std::numeric_limits<double>::infinity();
        for (std::size_t i = k; i < m; ++i) {
            double prod = 0.0;
            for (std::size_t j = 0; j < k; ++j) prod += std::log(std::abs(pts[i].first - pts[j].first));
            if (prod > best_val) {
                best_val = prod;
                best = i;
            }
        }
        std::swap(pts[k], pts[best]);
    }

    std::vector<cplx> x(m), dd(m);
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = pts[i].first;
        dd[i] = pts[i].second;
    }
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - j]);
            if (i == j) break;
        }

    ComplexPoly acc = ComplexPoly::constant(dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) acc = acc * ComplexPoly({-x[i], 1.0}) + ComplexPoly::constant(dd[i]);
    return acc;
}

}  // namespace porism
