#include "porism/poncelet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace porism::poncelet {

namespace {

std::vector<cplx> checked_foci(std::vector<cplx> foci) {
    for (cplx f : foci)
        if (!(std::abs(f) < 1.0)) throw std::invalid_argument("PonceletFamily: focus outside the open unit disk");
    return foci;
}

int wrap_index(long i, int n) { return static_cast<int>(((i % n) + n) % n); }

}  // namespace

PonceletFamily::PonceletFamily(std::vector<cplx> foci)
    : foci_(checked_foci(std::move(foci))),
      n_(static_cast<int>(foci_.size()) + 1),
      b_(blaschke::BlaschkeProduct::from_foci(foci_)),
      alphas_(opuc::verblunsky_from_poly(opuc::monic_from_foci(foci_))) {}

std::vector<cplx> PonceletFamily::polygon(cplx lambda) const { return blaschke::solve(b_, lambda); }

cplx tau(const PonceletFamily& fam, cplx z, int k) {
    const cplx bz = fam.product()(z);
    const std::vector<double> t = blaschke::solve_angles(fam.product(), std::conj(bz / std::abs(bz)));
    const double tz = arg_0_2pi(z);
    std::size_t best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double d = std::abs(std::remainder(t[i] - tz, kTwoPi));
        if (d < dist) {
            dist = d;
            best = i;
        }
    }
    if (dist > 1e-8) throw std::runtime_error("tau: point not recovered in its polygon");
    return unit(t[static_cast<std::size_t>(wrap_index(static_cast<long>(best) + k, fam.n()))]);
}

double tau_rate(const PonceletFamily& fam, cplx z, int k) {
    const cplx w = tau(fam, z, k);
    return fam.product().arg_derivative(z) / fam.product().arg_derivative(w);
}

double tau_rate_fd(const PonceletFamily& fam, cplx z, int k, double h) {
    const cplx wp = tau(fam, z * unit(h), k);
    const cplx wm = tau(fam, z * unit(-h), k);
    return std::arg(wp / wm) / (2.0 * h);
}

Pole chord_pole(cplx z, cplx w) {
    const cplx s = z + w;
    if (std::abs(s) <= 1e-12) {
        const cplx d = w - z;
        return {cplx(std::numeric_limits<double>::infinity(), 0.0), true, d / std::abs(d)};
    }
    return {2.0 * z * w / s, false, 0.0};
}

Pole chord_pole(const PonceletFamily& fam, cplx z, int k) { return chord_pole(z, tau(fam, z, k)); }

cplx envelope_point(const PonceletFamily& fam, cplx z, int k) {
    const double theta = std::arg(z);
    struct Line {
        cplx normal;
        double offset;
    };
    auto line = [&](double t) {
        const cplx a = unit(t);
        const cplx w = tau(fam, a, k);
        const cplx nrm = cplx(0.0, 1.0) * (w - a);
        return Line{nrm, (std::conj(nrm) * a).real()};
    };
    auto diff = [&](double h) {
        const Line p = line(theta + h);
        const Line m = line(theta - h);
        return Line{(p.normal - m.normal) / (2.0 * h), (p.offset - m.offset) / (2.0 * h)};
    };
    const Line l0 = line(theta);
    if (std::abs(l0.normal) <= 1e-12) throw std::runtime_error("envelope_point: degenerate chord");
    const Line d1 = diff(1e-3);
    const Line d2 = diff(5e-4);
    const Line d{(4.0 * d2.normal - d1.normal) / 3.0, (4.0 * d2.offset - d1.offset) / 3.0};

    const double a11 = l0.normal.real(), a12 = l0.normal.imag();
    const double a21 = d.normal.real(), a22 = d.normal.imag();
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) <= 1e-14 * std::abs(l0.normal) * std::max(1e-300, std::abs(d.normal)))
        throw std::runtime_error("envelope_point: degenerate chord");
    return {(l0.offset * a22 - a12 * d.offset) / det, (a11 * d.offset - a21 * l0.offset) / det};
}

double chord_distance_sq(cplx z, cplx w, double wdot) {
    const double num = (1.0 + wdot) * (1.0 + wdot);
    return num / std::norm(z + wdot * w);
}

cplx BezoutianP::operator()(cplx z, cplx w) const { return slice(z)(w); }

ComplexPoly BezoutianP::slice(cplx z0) const {
    std::vector<cplx> c(static_cast<std::size_t>(N), 0.0);
    for (int j = 0; j < N; ++j) {
        cplx acc = 0.0;
        for (int i = N - 1; i >= 0; --i) acc = acc * z0 + coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(j)] = acc;
    }
    return ComplexPoly(std::move(c));
}

BezoutianP bezoutian_build(std::span<const cplx> foci, double tol) {
    BezoutianP out;
    out.foci.assign(foci.begin(), foci.end());
    out.N = static_cast<int>(foci.size()) + 1;
    for (cplx f : foci) {
        const double r = std::abs(f);
        if (std::abs(r - 1.0) <= kOnCircleTolerance) ++out.d;
        else if (r > 1.0) ++out.m;
    }
    const int N = out.N;
    const ComplexPoly phi = opuc::monic_from_foci(foci);
    const ComplexPoly a = phi.shifted(1);
    const ComplexPoly b = reverse(phi, N - 1);

    auto sz = static_cast<std::size_t>(N);
    std::vector<std::vector<cplx>> p(sz, std::vector<cplx>(sz, 0.0));
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N - 1; ++j) {
            const cplx t = a[i] * b[j];
            if (t == cplx{0.0}) continue;
            if (i > j)
                for (int r = 0; r < i - j; ++r) p[static_cast<std::size_t>(i - 1 - r)][static_cast<std::size_t>(j + r)] += t;
            else if (i < j)
                for (int r = 0; r < j - i; ++r) p[static_cast<std::size_t>(j - 1 - r)][static_cast<std::size_t>(i + r)] -= t;
        }
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i + 1; j < sz; ++j) {
            const cplx avg = 0.5 * (p[i][j] + p[j][i]);
            p[i][j] = avg;
            p[j][i] = avg;
        }

    // Remainder guard: (w - z)·P must reproduce the numerator.
    const std::size_t m1 = sz + 1;
    std::vector<std::vector<cplx>> r(m1, std::vector<cplx>(m1, 0.0));
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            const cplx t = a[i] * b[j];
            r[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] += t;
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= t;
        }
    double scale = 1.0;
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j) {
            r[i][j + 1] -= p[i][j];
            r[i + 1][j] += p[i][j];
            scale = std::max(scale, std::abs(p[i][j]));
        }
    for (const auto& row : r)
        for (cplx v : row)
            if (std::abs(v) > tol * scale) throw std::runtime_error("bezoutian_build: inexact division by (w - z)");
    out.coeffs = std::move(p);
    return out;
}

OnCircleResult on_circle_solutions(const BezoutianP& p, cplx z0) {
    if (std::abs(std::abs(z0) - 1.0) > kOnCircleTolerance)
        throw std::invalid_argument("on_circle_solutions: z0 is not on the unit circle");
    OnCircleResult out;
    out.z0 = z0 / std::abs(z0);
    out.expected = p.N - 1 - 2 * p.m - p.d;
    ComplexPoly s = p.slice(out.z0);
    for (int tries = 0; s.degree() < p.N - 1 || std::abs(s.leading()) <= 1e-12 * s.max_abs_coeff(); ++tries) {
        if (tries >= 8) throw std::runtime_error("on_circle_solutions: slice degree keeps dropping");
        out.z0 *= unit(1e-9);
        out.perturbed = true;
        s = p.slice(out.z0);
    }
    if (s.degree() < 1) return out;
    for (cplx w : roots(s)) {
        if (std::abs(std::abs(w) - 1.0) <= kOnCircleTolerance) out.on_circle.push_back(w);
        else out.off_circle.push_back(w);
    }
    out.on_circle = opuc::sort_by_argument(std::move(out.on_circle));
    return out;
}

MirmanResult mirman_condition(std::span<const cplx> foci, int samples) {
    if (samples < 1) throw std::invalid_argument("mirman_condition: need samples >= 1");
    for (cplx f : foci)
        if (std::abs(std::abs(f) - 1.0) <= kOnCircleTolerance)
            throw std::invalid_argument("mirman_condition: focus on the unit circle");
    auto value = [&](cplx z) {
        double acc = 1.0;
        for (cplx f : foci) acc += (1.0 - std::norm(f)) / std::norm(z - f);
        return acc;
    };
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < samples; ++j) best = std::min(best, value(unit(kTwoPi * j / samples)));
    for (cplx f : foci)
        if (std::abs(f) > 1.0) best = std::min(best, value(f / std::abs(f)));
    return {best > 0.0, best};
}

std::pair<int, int> component_rank(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("component_rank: need 1 <= k <= n-1");
    const int g = std::gcd(n, k);
    return {n / g, k / g};
}

int totient_count(int n, int d) {
    if (d < 1 || n % d != 0) throw std::invalid_argument("totient_count: d must divide n");
    int count = 0;
    for (int k = 1; k <= n / 2; ++k)
        if (n / std::gcd(k, n) == d) ++count;
    return count;
}

int euler_phi(int d) {
    int count = 0;
    for (int k = 1; k <= d; ++k)
        if (std::gcd(k, d) == 1) ++count;
    return count;
}

std::vector<CurveSample> sample_package(const PonceletFamily& fam, int samples) {
    if (samples < 1) throw std::invalid_argument("sample_package: need samples >= 1");
    std::vector<CurveSample> out;
    for (int k = 1; k <= fam.n() / 2; ++k)
        for (int j = 0; j < samples; ++j) {
            const double theta = kTwoPi * j / samples;
            const cplx z = unit(theta);
            const cplx w = tau(fam, z, k);
            out.push_back({k, theta, envelope_point(fam, z, k), chord_pole(z, w)});
        }
    return out;
}

}  // namespace porism::poncelet
