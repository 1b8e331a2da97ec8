#include "porism/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>


namespace porism::numrange {

ComplexMatrix hermitian_part(const ComplexMatrix& a, double phi) {
    const cplx e = unit(-phi);
    ComplexMatrix h = 0.5 * e * a + (0.5 * std::conj(e)) * a.adjoint();
    for (int i = 0; i < h.size(); ++i) h(i, i) = h(i, i).real();
    for (int i = 0; i < h.size(); ++i)
        for (int j = i + 1; j < h.size(); ++j) h(j, i) = std::conj(h(i, j));
    return h;
}

SupportSample support_point(const ComplexMatrix& a, double phi) {
    const HermitianEigen e = hermitian_eigs(hermitian_part(a, phi));
    const int n = a.size();
    const int top = n - 1;
    std::vector<cplx> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = e.vectors(i, top);
    const std::vector<cplx> ax = a.apply(x);
    cplx p = 0.0;
    double nn = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        p += std::conj(x[i]) * ax[i];
        nn += std::norm(x[i]);
    }
    return {phi, e.values.back(), p / nn};
}

std::vector<SupportSample> boundary(const ComplexMatrix& a, int samples) {
    if (samples < 3) throw std::invalid_argument("boundary: need at least 3 samples");
    std::vector<SupportSample> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) out.push_back(support_point(a, kTwoPi * j / samples));
    return out;
}

cplx kippenhahn_eval(const ComplexMatrix& a, cplx u1, cplx u2, cplx u3) {
    const int n = a.size();
    const ComplexMatrix ad = a.adjoint();
    const ComplexMatrix re = 0.5 * (a + ad);
    const ComplexMatrix im = cplx(0.0, -0.5) * (a - ad);
    ComplexMatrix k = u1 * re + u2 * im;
    for (int i = 0; i < n; ++i) k(i, i) -= u3;
    return determinant(k);
}

ellipse::EllipseComponent ellipse_range_2x2(const ComplexMatrix& a, double tol) {
    if (a.size() != 2) throw std::invalid_argument("ellipse_range_2x2: matrix is not 2x2");
    const cplx tr = a(0, 0) + a(1, 1);
    const cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    const cplx f1 = 0.5 * (tr + disc);
    const cplx f2 = 0.5 * (tr - disc);
    double frob = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) frob += std::norm(a(i, j));
    const double rad = frob - std::norm(f1) - std::norm(f2);
    if (rad < -tol * std::max(1.0, frob)) throw std::domain_error("ellipse_range_2x2: negative radicand");
    return {f1, f2, 0.5 * std::sqrt(std::max(0.0, rad))};
}

std::vector<HalfPlane> polygon_halfplanes(std::span<const cplx> ccw) {
    std::vector<HalfPlane> out;
    const std::size_t n = ccw.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx a = ccw[i];
        const cplx b = ccw[(i + 1) % n];
        const double len = std::abs(b - a);
        if (len == 0.0) continue;
        const cplx nrm = cplx(0.0, -1.0) * (b - a) / len;
        out.push_back({nrm, (std::conj(nrm) * a).real()});
    }
    return out;
}

namespace {

constexpr double kBox = 1e4;

std::vector<cplx> clip(const std::vector<cplx>& poly, const HalfPlane& h) {
    std::vector<cplx> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx p = poly[i];
        const cplx q = poly[(i + 1) % n];
        const double dp = (std::conj(h.normal) * p).real() - h.offset;
        const double dq = (std::conj(h.normal) * q).real() - h.offset;
        if (dp <= 0.0) out.push_back(p);
        if ((dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0)) out.push_back(p + (q - p) * (dp / (dp - dq)));
    }
    std::vector<cplx> dedup;
    for (cplx v : out)
        if (dedup.empty() || std::abs(v - dedup.back()) > 1e-13) dedup.push_back(v);
    while (dedup.size() > 1 && std::abs(dedup.front() - dedup.back()) <= 1e-13) dedup.pop_back();
    return dedup;
}

}  // namespace

std::vector<cplx> halfplane_intersection(std::span<const HalfPlane> planes) {
    if (planes.size() < 3) throw std::invalid_argument("halfplane_intersection: need at least 3 half-planes");
    std::vector<HalfPlane> merged;
    for (const HalfPlane& h : planes) {
        const HalfPlane u{h.normal / std::abs(h.normal), h.offset / std::abs(h.normal)};
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const HalfPlane& m) { return std::abs(m.normal - u.normal) < 1e-10; });
        if (it == merged.end()) merged.push_back(u);
        else it->offset = std::min(it->offset, u.offset);
    }
    std::vector<cplx> poly = {{-kBox, -kBox}, {kBox, -kBox}, {kBox, kBox}, {-kBox, kBox}};
    for (const HalfPlane& h : merged) {
        poly = clip(poly, h);
        if (poly.size() < 3) throw std::domain_error("halfplane_intersection: empty intersection");
    }
    for (cplx v : poly)
        if (std::max(std::abs(v.real()), std::abs(v.imag())) >= kBox * (1.0 - 1e-9))
            throw std::domain_error("halfplane_intersection: unbounded intersection");
    return poly;
}

namespace {

double point_segment(cplx p, cplx a, cplx b) {
    const cplx d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp((std::conj(d) * (p - a)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

double directed(std::span<const cplx> a, std::span<const cplx> b) {
    double worst = 0.0;
    for (cplx p : a) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < b.size(); ++i) best = std::min(best, point_segment(p, b[i], b[(i + 1) % b.size()]));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff: empty polyline");
    return std::max(directed(a, b), directed(b, a));
}

bool contains(std::span<const cplx> ccw, cplx p, double tol) {
    for (const HalfPlane& h : polygon_halfplanes(ccw))
        if ((std::conj(h.normal) * p).real() - h.offset > tol) return false;
    return true;
}

}  // namespace porism::numrange
