#include "porism/ellipse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

#include "porism/poncelet.hpp"

namespace porism::ellipse {

cplx b1(cplx z, cplx f) { return (z - f) / (1.0 - std::conj(f) * z); }

cplx b2(cplx z, cplx f1, cplx f2) { return b1(z, f1) * b1(z, f2); }

cplx phi2_star(cplx z, cplx f1, cplx f2) { return (1.0 - std::conj(f1) * z) * (1.0 - std::conj(f2) * z); }

cplx q_eval(cplx z, cplx w, const EllipseComponent& e) {
    if (e.degenerate()) {
        if (std::abs(1.0 - std::conj(e.f1) * z) == 0.0) throw std::domain_error("q_eval: vanishing denominator");
        return w + b1(z, e.f1);
    }
    const cplx d = phi2_star(z, e.f1, e.f2);
    if (std::abs(d) == 0.0) throw std::domain_error("q_eval: vanishing denominator");
    return (w + b1(z, e.f1)) * (w + b1(z, e.f2)) - 4.0 * e.s * e.s * z * w / d;
}

cplx q_poly(cplx z, cplx w, const EllipseComponent& e) {
    const cplx x1 = w * (1.0 - std::conj(e.f1) * z) + z - e.f1;
    if (e.degenerate()) return x1;
    const cplx x2 = w * (1.0 - std::conj(e.f2) * z) + z - e.f2;
    return x1 * x2 - 4.0 * e.s * e.s * z * w;
}

std::array<cplx, 2> q_roots(cplx z, const EllipseComponent& e) {
    const cplx d = phi2_star(z, e.f1, e.f2);
    if (std::abs(d) == 0.0) throw std::domain_error("q_roots: vanishing denominator");
    const cplx be1 = b1(z, e.f1);
    const cplx be2 = b1(z, e.f2);
    const cplx bcoef = be1 + be2 - 4.0 * e.s * e.s * z / d;
    const cplx ccoef = be1 * be2;
    const cplx sq = std::sqrt(bcoef * bcoef - 4.0 * ccoef);
    const cplx big = (std::conj(bcoef) * sq).real() >= 0.0 ? -0.5 * (bcoef + sq) : -0.5 * (bcoef - sq);
    if (big == cplx{0.0}) return {0.0, 0.0};
    return {big, ccoef / big};
}

namespace {

Orbit run_orbit(const EllipseComponent& e, cplx w0, int steps, std::optional<double> closure_tol, double tol) {
    if (!(e.s > 0.0)) throw std::invalid_argument("circular_iteration: needs s > 0");
    Orbit o;
    o.points.push_back(w0 / std::abs(w0));
    const cplx centre = 0.5 * (e.f1 + e.f2);
    for (int i = 0; i < steps; ++i) {
        const cplx cur = o.points.back();
        const auto r = q_roots(cur, e);
        if (std::abs(r[0] - r[1]) < 1e-6) throw std::domain_error("circular_iteration: coincident roots");
        cplx next;
        if (i == 0) {
            const bool first_ccw = (std::conj(r[0] - cur) * (centre - cur)).imag() > 0.0;
            next = first_ccw ? r[0] : r[1];
        } else {
            const cplx prev = o.points[o.points.size() - 2];
            next = std::abs(r[0] - prev) >= std::abs(r[1] - prev) ? r[0] : r[1];
        }
        const double off = std::abs(std::abs(next) - 1.0);
        o.max_off_circle = std::max(o.max_off_circle, off);
        if (off > tol) throw std::domain_error("circular_iteration: iterate left the unit circle");
        next /= std::abs(next);
        if (i > 0) {
            const cplx prev = o.points[o.points.size() - 2];
            o.max_vieta = std::max(o.max_vieta, std::abs(next * prev - b2(cur, e.f1, e.f2)));
        }
        o.turning += arg_0_2pi(next / cur);
        o.points.push_back(next);
        if (closure_tol && std::abs(next - o.points.front()) <= *closure_tol) {
            o.closure = i + 1;
            break;
        }
    }
    return o;
}

}  // namespace

Orbit circular_iteration(const EllipseComponent& e, cplx w0, int max_steps, double closure_tol, double tol) {
    return run_orbit(e, w0, max_steps, closure_tol, tol);
}

std::vector<cplx> inner_iteration(const EllipseComponent& e, int branch, int max_steps) {
    if (branch != 0 && branch != 1) throw std::invalid_argument("inner_iteration: branch must be 0 or 1");
    const cplx fi = branch == 0 ? e.f1 : e.f2;
    if (e.degenerate()) return {fi};
    const double s2 = e.s * e.s;
    auto sum_of_roots = [&](cplx z) { return 4.0 * s2 * z / phi2_star(z, e.f1, e.f2) - b1(z, e.f1) - b1(z, e.f2); };
    std::vector<cplx> w{0.0, fi};
    for (int k = 1; k < max_steps; ++k) {
        const cplx next = sum_of_roots(w[static_cast<std::size_t>(k)]) - w[static_cast<std::size_t>(k - 1)];
        if (k + 1 >= 3 && std::abs(next) <= 1e-8) return {w.begin() + 1, w.end()};
        if (!(std::abs(next) < 1.0)) throw std::runtime_error("inner_iteration: iterate left the unit disk");
        w.push_back(next);
    }
    throw std::runtime_error("inner_iteration: no return to 0 within the step bound");
}

double semiaxis_three(cplx f1, cplx f2) {
    return 0.5 * std::sqrt(1.0 - std::norm(f1) - std::norm(f2) + std::norm(f1 * f2));
}

double max_semiaxis(cplx f1, cplx f2) {
    auto g = [&](double t) {
        const cplx x = unit(t);
        return 0.5 * (std::abs(x - f1) + std::abs(x - f2));
    };
    constexpr int kSamples = 4096;
    const double h = kTwoPi / kSamples;
    int best = 0;
    for (int j = 1; j < kSamples; ++j)
        if (g(j * h) < g(best * h)) best = j;
    double lo = (best - 1) * h;
    double hi = (best + 1) * h;
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 100; ++it) {
        const double a = hi - ratio * (hi - lo);
        const double b = lo + ratio * (hi - lo);
        if (g(a) < g(b)) hi = b;
        else lo = a;
    }
    const double amax = g(0.5 * (lo + hi));
    const double c = 0.5 * std::abs(f1 - f2);
    return std::sqrt(std::max(0.0, amax * amax - c * c));
}

double closure_semiaxis(cplx f1, cplx f2, int n, double tol) {
    if (n < 3) throw std::invalid_argument("closure_semiaxis: n must be at least 3");
    if (!(std::abs(f1) < 1.0 && std::abs(f2) < 1.0)) throw std::invalid_argument("closure_semiaxis: focus outside the disk");
    double lo = 0.0;
    double hi = max_semiaxis(f1, f2);
    if (!(hi > 0.0)) throw std::domain_error("closure_semiaxis: no admissible semiaxis");
    bool bracketed_below = false;
    for (int it = 0; it < 200 && hi - lo > tol * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        bool too_large = true;
        try {
            const Orbit o = run_orbit({f1, f2, mid}, 1.0, n, std::nullopt, 1e-9);
            too_large = o.turning < kTwoPi;
            if (!too_large) bracketed_below = true;
        } catch (const std::domain_error&) {
        }
        (too_large ? hi : lo) = mid;
    }
    if (!bracketed_below) throw std::domain_error("closure_semiaxis: no admissible semiaxis");
    return 0.5 * (lo + hi);
}

std::vector<EllipseComponent> package_factor(std::span<const cplx> foci, double tol) {
    const int n = static_cast<int>(foci.size()) + 1;
    if (n < 2) throw std::invalid_argument("package_factor: need at least one focus");
    const poncelet::PonceletFamily fam(std::vector<cplx>(foci.begin(), foci.end()));
    const std::array<cplx, 3> probes = {unit(0.3), unit(1.9), unit(4.1)};
    std::vector<bool> used(foci.size(), false);
    std::vector<EllipseComponent> out;

    for (int k = 1; k <= (n - 1) / 2; ++k) {
        std::array<cplx, 3> ends;
        for (std::size_t p = 0; p < probes.size(); ++p) ends[p] = poncelet::tau(fam, probes[p], k);
        double best_res = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        EllipseComponent best{};
        for (std::size_t i = 0; i < foci.size(); ++i) {
            if (used[i]) continue;
            for (std::size_t j = i + 1; j < foci.size(); ++j) {
                if (used[j]) continue;
                const cplx z = probes[0];
                const cplx w = ends[0];
                const cplx s2 = (w + b1(z, foci[i])) * (w + b1(z, foci[j])) * phi2_star(z, foci[i], foci[j]) / (4.0 * z * w);
                if (std::abs(s2.imag()) > tol || s2.real() < -tol) continue;
                const EllipseComponent cand{foci[i], foci[j], std::sqrt(std::max(0.0, s2.real()))};
                if (cand.s == 0.0) continue;
                double res = 0.0;
                for (std::size_t p = 1; p < probes.size(); ++p)
                    res = std::max(res, std::abs(q_eval(probes[p], ends[p], cand)));
                if (res < best_res) {
                    best_res = res;
                    best = cand;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (!(best_res <= tol)) throw std::domain_error("package_factor: component is not an ellipse");
        used[bi] = used[bj] = true;
        out.push_back(best);
    }
    if (n % 2 == 0) {
        const auto it = std::find(used.begin(), used.end(), false);
        const cplx f = foci[static_cast<std::size_t>(it - used.begin())];
        const EllipseComponent point{f, f, 0.0};
        for (cplx z : probes)
            if (std::abs(q_eval(z, poncelet::tau(fam, z, n / 2), point)) > tol)
                throw std::domain_error("package_factor: middle component is not a point");
        out.push_back(point);
    }
    return out;
}

double factorization_residual(std::span<const cplx> foci, std::span<const EllipseComponent> comps, int points,
                              std::uint64_t seed) {
    const poncelet::BezoutianP p = poncelet::bezoutian_build(foci);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    auto draw = [&] { return std::polar(std::sqrt(radius(rng)), angle(rng)); };
    auto product = [&](cplx z, cplx w) {
        cplx acc = 1.0;
        for (const EllipseComponent& e : comps) acc *= q_poly(z, w, e);
        return acc;
    };
    const cplx z0 = draw();
    const cplx w0 = draw();
    const cplx c = p(z0, w0) / product(z0, w0);
    double worst = 0.0;
    double scale = 0.0;
    for (int i = 0; i < points; ++i) {
        const cplx z = draw();
        const cplx w = draw();
        const cplx pv = p(z, w);
        worst = std::max(worst, std::abs(pv - c * product(z, w)));
        scale = std::max(scale, std::abs(pv));
    }
    return worst / scale;
}

}  // namespace porism::ellipse
