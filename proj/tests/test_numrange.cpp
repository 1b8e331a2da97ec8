#include <doctest.h>

#include <random>

#include "porism/cmv.hpp"
#include "porism/numrange.hpp"
#include "porism/opuc.hpp"

using porism::ComplexMatrix;
using porism::cplx;
using porism::unit;
namespace nr = porism::numrange;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

ComplexMatrix random_unitary(std::mt19937_64& rng, int n) {
    ComplexMatrix h = random_matrix(rng, n);
    h = h + h.adjoint();
    return nr::hermitian_eigs(h).vectors;
}

std::vector<cplx> boundary_points(const ComplexMatrix& a, int samples) {
    std::vector<cplx> out;
    for (const auto& s : nr::boundary(a, samples)) out.push_back(s.point);
    return out;
}

}  // namespace

TEST_CASE("Jordan block ranges are disks") {
    for (int n : {2, 5}) {
        const double r = std::cos(std::numbers::pi / (n + 1));
        for (const auto& s : nr::boundary(ComplexMatrix::jordan(n), 90)) {
            CHECK(std::abs(std::abs(s.point) - r) <= 1e-10);
            CHECK(std::abs(s.lambda_phi - r) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(nr::boundary(ComplexMatrix::jordan(2), 2), std::invalid_argument);
}

TEST_CASE("normal matrices give the convex hull of the spectrum") {
    const std::vector<cplx> d = {1.0, cplx(-0.5, 0.8), cplx(-0.5, -0.8)};
    const auto a = ComplexMatrix::diagonal(d);
    for (const auto& s : nr::boundary(a, 64)) {
        CHECK(nr::contains(d, s.point, 1e-12));
        double best = 0.0;
        for (cplx v : d) best = std::max(best, (unit(-s.phi) * v).real());
        CHECK(std::abs(s.lambda_phi - best) <= 1e-12);
    }
}

TEST_CASE("support points lie on the Kippenhahn curve") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_matrix(rng, 2 + t % 4);
        for (const auto& s : nr::boundary(a, 24)) {
            const cplx v = nr::kippenhahn_eval(a, std::cos(s.phi), std::sin(s.phi), s.lambda_phi);
            CHECK(std::abs(v) <= 1e-9 * std::pow(1.0 + a.max_abs(), a.size()));
            CHECK(std::abs((unit(-s.phi) * s.point).real() - s.lambda_phi) <= 1e-10 * (1.0 + a.max_abs()));
        }
    }
    const ComplexMatrix j = ComplexMatrix::jordan(2);
    CHECK(std::abs(nr::kippenhahn_eval(j, 1.0, 0.0, 0.5)) <= 1e-15);
    CHECK(std::abs(nr::kippenhahn_eval(j, 1.0, 0.0, 0.0) + 0.25) <= 1e-15);
}

TEST_CASE("ellipse_range_2x2") {
    auto e = nr::ellipse_range_2x2(ComplexMatrix::jordan(2));
    CHECK(std::abs(e.f1) == 0.0);
    CHECK(std::abs(e.f2) == 0.0);
    CHECK(std::abs(e.s - 0.5) <= 1e-15);

    const std::vector<cplx> pm = {0.5, -0.5};
    const auto m = porism::cmv::cutoff_cmv(porism::opuc::verblunsky_from_poly(porism::opuc::monic_from_foci(pm)));
    e = nr::ellipse_range_2x2(m);
    const double f = std::max(std::abs(e.f1), std::abs(e.f2));
    CHECK(std::abs(f - 0.5) <= 1e-12);
    CHECK(std::abs(e.f1 + e.f2) <= 1e-12);
    CHECK(std::abs(e.s - 0.375) <= 1e-12);

    const std::vector<cplx> d = {0.3, cplx(0.0, 0.2)};
    e = nr::ellipse_range_2x2(ComplexMatrix::diagonal(d));
    CHECK(e.s == 0.0);
    CHECK_THROWS_AS(nr::ellipse_range_2x2(ComplexMatrix::jordan(3)), std::invalid_argument);
}

TEST_CASE("unitary invariance and compression monotonicity") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 6; ++t) {
        const int n = 3 + t % 3;
        const auto a = random_matrix(rng, n);
        const auto u = random_unitary(rng, n);
        const auto b = u.adjoint() * a * u;
        const auto sa = nr::boundary(a, 48);
        const auto sb = nr::boundary(b, 48);
        for (std::size_t i = 0; i < sa.size(); ++i) CHECK(std::abs(sa[i].lambda_phi - sb[i].lambda_phi) <= 1e-9);

        const auto c = a.block(n - 1);
        const auto sc = nr::boundary(c, 48);
        for (std::size_t i = 0; i < sa.size(); ++i) CHECK(sc[i].lambda_phi <= sa[i].lambda_phi + 1e-10);
    }
}

TEST_CASE("half-plane intersection") {
    const std::vector<cplx> sq = {cplx(-1, -1), cplx(1, -1), cplx(1, 1), cplx(-1, 1)};
    const auto hp = nr::polygon_halfplanes(sq);
    REQUIRE(hp.size() == 4);
    for (const auto& h : hp) {
        CHECK(std::abs(std::abs(h.normal) - 1.0) <= 1e-15);
        CHECK(std::abs(h.offset - 1.0) <= 1e-15);
    }
    CHECK(std::abs(hp[0].normal - cplx(0.0, -1.0)) <= 1e-15);
    auto poly = nr::halfplane_intersection(hp);
    CHECK(poly.size() == 4);
    CHECK(nr::hausdorff(poly, sq) <= 1e-12);

    std::vector<nr::HalfPlane> tri = {{cplx(0, -1), 0.0}, {cplx(-1, 0), 0.0}, {unit(std::numbers::pi / 4), std::sqrt(0.5)}};
    poly = nr::halfplane_intersection(tri);
    const std::vector<cplx> want = {0.0, 1.0, cplx(0.0, 1.0)};
    CHECK(nr::hausdorff(poly, want) <= 1e-12);

    std::vector<nr::HalfPlane> dup = tri;
    dup.push_back({cplx(0, -1), -2.0});
    CHECK_THROWS_AS(nr::halfplane_intersection(dup), std::domain_error);
    std::vector<nr::HalfPlane> open = {{cplx(0, -1), 0.0}, {cplx(0, 1), 1.0}, {cplx(-1, 0), 0.0}};
    CHECK_THROWS_AS(nr::halfplane_intersection(open), std::domain_error);
    CHECK_THROWS_AS(nr::halfplane_intersection(std::span(tri).first(2)), std::invalid_argument);
}

TEST_CASE("hausdorff and contains") {
    const std::vector<cplx> a = {0.0, 1.0};
    const std::vector<cplx> b = {cplx(0.0, 0.5), cplx(1.0, 0.5)};
    CHECK(std::abs(nr::hausdorff(a, b) - 0.5) <= 1e-15);
    const std::vector<cplx> c = {0.5};
    CHECK(std::abs(nr::hausdorff(a, c) - 0.5) <= 1e-15);
    const std::vector<cplx> empty;
    CHECK_THROWS_AS(nr::hausdorff(a, empty), std::invalid_argument);
    const std::vector<cplx> tri = {0.0, 1.0, cplx(0.0, 1.0)};
    CHECK(nr::contains(tri, cplx(0.2, 0.2)));
    CHECK_FALSE(nr::contains(tri, cplx(0.6, 0.6)));
}
