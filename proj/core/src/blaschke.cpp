#include "porism/blaschke.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace porism::blaschke {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_pi(double t) {
    t = std::remainder(t, kTwoPi);
    return t;
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular)
    : degree_(static_cast<int>(zeros.size())), zeros_(std::move(zeros)) {
    for (cplx f : zeros_)
        if (!(std::abs(f) < 1.0)) throw std::invalid_argument("BlaschkeProduct: zero outside the open unit disk");
    if (std::abs(std::abs(unimodular) - 1.0) > 1e-12) throw std::invalid_argument("BlaschkeProduct: constant is not unimodular");
    unimodular_ = unimodular / std::abs(unimodular);
    phase_ = std::arg(unimodular_);
}

BlaschkeProduct BlaschkeProduct::from_foci(std::span<const cplx> foci) {
    std::vector<cplx> z{0.0};
    z.insert(z.end(), foci.begin(), foci.end());
    return BlaschkeProduct(std::move(z));
}

cplx BlaschkeProduct::operator()(cplx z) const {
    if (outer_) return (*outer_)((*inner_)(z));
    cplx acc = unimodular_;
    for (cplx f : zeros_) acc *= (z - f) / (1.0 - std::conj(f) * z);
    return acc;
}

double BlaschkeProduct::lifted_arg(double theta) const {
    if (outer_) return outer_->lifted_arg(inner_->lifted_arg(theta));
    // (e^{iθ} - f)/(1 - conj(f)e^{iθ}) = e^{iθ}·w/conj(w) with w = 1 - f e^{-iθ}, Re w > 0.
    const cplx em = std::polar(1.0, -theta);
    double acc = phase_;
    for (cplx f : zeros_) acc += theta + 2.0 * std::arg(1.0 - f * em);
    return acc;
}

double BlaschkeProduct::arg_derivative(cplx z) const {
    if (std::abs(std::abs(z) - 1.0) > kOnCircleTolerance)
        throw std::invalid_argument("arg_derivative: point is not on the unit circle");
    if (outer_) {
        const cplx w = (*inner_)(z);
        return outer_->arg_derivative(w / std::abs(w)) * inner_->arg_derivative(z);
    }
    double acc = 0.0;
    for (cplx f : zeros_) acc += (1.0 - std::norm(f)) / std::norm(z - f);
    return acc;
}

double BlaschkeProduct::arg_derivative_at(double theta) const { return arg_derivative(unit(theta)); }

std::vector<cplx> BlaschkeProduct::zeros() const {
    if (!outer_) return zeros_;
    return expanded().zeros_;
}

BlaschkeProduct BlaschkeProduct::expanded() const {
    if (!outer_) return *this;
    const BlaschkeProduct in = inner_->expanded();
    const BlaschkeProduct out = outer_->expanded();
    const ComplexPoly n = in.numer();
    const ComplexPoly d = in.denom();
    const cplx c = in.unimodular_;
    // outer(I) = u_o ∏_g (I - g)/(1 - conj(g) I), I = c N/D, and each factor
    // equals (cN - gD)/(D - conj(g) c N).
    std::vector<cplx> zs;
    cplx constant = out.unimodular_;
    for (cplx g : out.zeros_) {
        if (g == cplx{0.0}) {
            zs.insert(zs.end(), in.zeros_.begin(), in.zeros_.end());
            constant *= c;
            continue;
        }
        const ComplexPoly p = c * n - g * d;
        const std::vector<cplx> r = roots(p);
        zs.insert(zs.end(), r.begin(), r.end());
        const cplx lead = p.leading();
        constant *= lead / std::conj(lead);
    }
    return BlaschkeProduct(std::move(zs), constant);
}

ComplexPoly BlaschkeProduct::numer() const {
    if (outer_) return expanded().numer();
    return ComplexPoly::from_roots(zeros_);
}

ComplexPoly BlaschkeProduct::denom() const { return reverse(numer(), degree_); }

cplx BlaschkeProduct::unimodular() const {
    if (outer_) return expanded().unimodular_;
    return unimodular_;
}

BlaschkeProduct compose(const BlaschkeProduct& outer, const BlaschkeProduct& inner) {
    BlaschkeProduct r;
    r.degree_ = outer.degree_ * inner.degree_;
    r.outer_ = std::make_shared<const BlaschkeProduct>(outer);
    r.inner_ = std::make_shared<const BlaschkeProduct>(inner);
    return r;
}

std::vector<double> solve_angles(const BlaschkeProduct& b, cplx lambda, double tol) {
    if (std::abs(std::abs(lambda) - 1.0) > tol) throw std::invalid_argument("solve: lambda is not unimodular");
    const int n = b.degree();
    if (n < 1) throw std::invalid_argument("solve: constant product");
    const double l0 = b.lifted_arg(0.0);
    const double target = std::arg(std::conj(lambda));
    double k0 = std::ceil((l0 - target) / kTwoPi);
    // Guard the rounding of ceil at an exact level.
    if (target + kTwoPi * (k0 - 1.0) >= l0) k0 -= 1.0;

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double level = target + kTwoPi * (k0 + j);
        double lo = 0.0;
        double hi = kTwoPi;
        double t = lo + (hi - lo) * (level - l0) / (kTwoPi * n);
        for (int it = 0; it < 200; ++it) {
            const double g = b.lifted_arg(t) - level;
            if (g > 0.0) hi = t;
            else lo = t;
            if (g == 0.0 || hi - lo <= 1e-15) break;
            double next = t - g / b.arg_derivative_at(t);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - t) <= 1e-15) {
                t = next;
                break;
            }
            t = next;
        }
        out.push_back(std::clamp(t, 0.0, std::nextafter(kTwoPi, 0.0)));
    }
    const cplx lb = std::conj(lambda);
    const double bound = std::max(tol, 64.0 * 2.2e-16 * n) ;
    for (double t : out)
        if (std::abs(b(unit(t)) - lb) > bound * std::max(1.0, b.arg_derivative_at(t)))
            throw std::runtime_error("solve: residual above tolerance");
    return out;
}

std::vector<cplx> solve(const BlaschkeProduct& b, cplx lambda, double tol) {
    std::vector<cplx> z;
    for (double t : solve_angles(b, lambda, tol)) z.push_back(unit(t));
    return z;
}

double unwrapped_arg_increment(const BlaschkeProduct& b, double theta0, double theta1) {
    const double dir = theta1 >= theta0 ? 1.0 : -1.0;
    double t = theta0;
    double prev = std::arg(b(unit(t)));
    double acc = 0.0;
    double h = kPi / (4.0 * b.degree());
    while (dir * (theta1 - t) > 0.0) {
        double step = std::min(h, dir * (theta1 - t));
        for (;;) {
            const double cur = std::arg(b(unit(t + dir * step)));
            const double d = wrap_pi(cur - prev);
            if (std::abs(d) < kPi / 4.0 || step < 1e-14) {
                acc += d;
                prev = cur;
                t += dir * step;
                break;
            }
            step *= 0.5;
        }
        h = std::max(step * 2.0, 1e-12);
    }
    return acc;
}

namespace {

// 7-point Gauss–Legendre on [a, b].
double gauss7(const BlaschkeProduct& b, double lo, double hi) {
    static constexpr std::array<double, 7> x = {0.0, 0.4058451513773972, -0.4058451513773972, 0.7415311855993945,
                                                -0.7415311855993945, 0.9491079123427585, -0.9491079123427585};
    static constexpr std::array<double, 7> w = {0.4179591836734694, 0.3818300505051189, 0.3818300505051189,
                                                0.2797053914892766, 0.2797053914892766, 0.1294849661688697,
                                                0.1294849661688697};
    const double c = 0.5 * (lo + hi);
    const double r = 0.5 * (hi - lo);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * b.arg_derivative_at(c + r * x[i]);
    return acc * r;
}

double adaptive(const BlaschkeProduct& b, double lo, double hi, double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double left = gauss7(b, lo, mid);
    const double right = gauss7(b, mid, hi);
    if (depth > 40 || std::abs(left + right - whole) <= tol) return left + right;
    return adaptive(b, lo, mid, left, 0.5 * tol, depth + 1) + adaptive(b, mid, hi, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrated_arg_increment(const BlaschkeProduct& b, double theta0, double theta1) {
    if (theta1 < theta0) return -integrated_arg_increment(b, theta1, theta0);
    if (theta1 == theta0) return 0.0;
    return adaptive(b, theta0, theta1, gauss7(b, theta0, theta1), 1e-12, 0);
}

}  // namespace porism::blaschke
