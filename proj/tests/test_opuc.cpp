#include <doctest.h>

#include <algorithm>
#include <random>

#include "porism/blaschke.hpp"
#include "porism/opuc.hpp"

using porism::ComplexPoly;
using porism::cplx;
namespace opuc = porism::opuc;

namespace {

std::vector<cplx> random_disk(std::mt19937_64& rng, int n, double r) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> out;
    for (int i = 0; i < n; ++i) out.push_back(std::polar(r * std::sqrt(u(rng)), porism::kTwoPi * u(rng)));
    return out;
}

}  // namespace

TEST_CASE("monic_from_foci") {
    const std::vector<cplx> pm = {0.5, -0.5};
    CHECK(porism::max_coeff_diff(opuc::monic_from_foci(pm), ComplexPoly({-0.25, 0.0, 1.0})) == 0.0);
    const double a = 0.7;
    const std::vector<cplx> f = {0.0, 0.0, 0.0, a};
    CHECK(porism::max_coeff_diff(opuc::monic_from_foci(f), ComplexPoly({0.0, 0.0, 0.0, -a, 1.0})) == 0.0);
    CHECK(opuc::monic_from_foci({}).degree() == 0);
    CHECK(opuc::monic_from_foci({})[0] == cplx(1.0));
}

TEST_CASE("szego_step") {
    auto s = opuc::szego_step(ComplexPoly::constant(1.0), 0.0);
    CHECK(porism::max_coeff_diff(s.phi, ComplexPoly::monomial(1)) == 0.0);
    const cplx a(0.2, 0.6);
    s = opuc::szego_step(ComplexPoly::constant(1.0), std::conj(a));
    CHECK(porism::max_coeff_diff(s.phi, ComplexPoly({-a, 1.0})) <= 1e-16);
    CHECK(porism::max_coeff_diff(s.phi_star, porism::reverse(s.phi, 1)) <= 1e-16);
    s = opuc::szego_step(ComplexPoly::monomial(1), 0.0);
    CHECK(porism::max_coeff_diff(s.phi, ComplexPoly::monomial(2)) == 0.0);
    CHECK_THROWS_AS(opuc::szego_step(ComplexPoly::constant(1.0), 1.5), std::invalid_argument);
}

TEST_CASE("verblunsky_from_poly") {
    const cplx a(0.3, -0.4);
    auto al = opuc::verblunsky_from_poly(ComplexPoly({-a, 1.0}));
    REQUIRE(al.size() == 1);
    CHECK(std::abs(al[0] - std::conj(a)) <= 1e-16);

    const std::vector<cplx> f = {0.0, 0.0, 0.0, a};
    al = opuc::verblunsky_from_poly(opuc::monic_from_foci(f));
    REQUIRE(al.size() == 4);
    CHECK(std::abs(al[0] - std::conj(a)) <= 1e-15);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(al[static_cast<std::size_t>(k)]) <= 1e-15);

    al = opuc::verblunsky_from_poly(ComplexPoly::monomial(6));
    CHECK(al.size() == 6);
    for (cplx x : al) CHECK(x == cplx(0.0));

    CHECK_THROWS_AS(opuc::verblunsky_from_poly(ComplexPoly({-1.2, 1.0})), std::domain_error);
    CHECK_THROWS_AS(opuc::verblunsky_from_poly(ComplexPoly({-1.0, 1.0})), std::domain_error);
    CHECK_THROWS_AS(opuc::verblunsky_from_poly(ComplexPoly({-0.5, 2.0})), std::invalid_argument);
}

TEST_CASE("szego chain round trip") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const auto alphas = random_disk(rng, 1 + t % 12, 0.95);
        const auto back = opuc::verblunsky_from_poly(opuc::szego_chain(alphas));
        REQUIRE(back.size() == alphas.size());
        for (std::size_t k = 0; k < alphas.size(); ++k) CHECK(std::abs(back[k] - alphas[k]) <= 1e-9);
    }
}

TEST_CASE("popuc") {
    CHECK(porism::max_coeff_diff(opuc::popuc(ComplexPoly::monomial(2), 1.0), ComplexPoly({-1.0, 0.0, 0.0, 1.0})) == 0.0);
    CHECK(porism::max_coeff_diff(opuc::popuc(ComplexPoly({-0.5, 1.0}), 1.0), ComplexPoly({-1.0, 0.0, 1.0})) <= 1e-16);
    CHECK_THROWS_AS(opuc::popuc(ComplexPoly::monomial(1), 0.5), std::invalid_argument);
}

TEST_CASE("popuc of a single focus matches the 2x2 closed form") {
    // Eigenvalues of [[f, conj(λ)ρ], [ρ, -conj(f λ)]].
    const cplx f(0.3, 0.4);
    const cplx lambda = porism::unit(1.1);
    const double rho = std::sqrt(1.0 - std::norm(f));
    const cplx tr = f - std::conj(f * lambda);
    const cplx det = -f * std::conj(f * lambda) - std::conj(lambda) * rho * rho;
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    const std::vector<cplx> want = {0.5 * (tr + disc), 0.5 * (tr - disc)};
    const std::vector<cplx> foci = {f};
    const auto got = opuc::paraorthogonal_extension(foci, lambda);
    REQUIRE(got.size() == 2);
    for (cplx w : want) {
        const double d = std::min(std::abs(w - got[0]), std::abs(w - got[1]));
        CHECK(d <= 1e-12);
    }
}

TEST_CASE("paraorthogonal_extension") {
    const std::vector<cplx> zz = {0.0, 0.0};
    auto z = opuc::paraorthogonal_extension(zz, 1.0);
    REQUIRE(z.size() == 3);
    CHECK(std::abs(z[0] - 1.0) <= 1e-14);
    CHECK(std::abs(z[1] - porism::unit(porism::kTwoPi / 3)) <= 1e-14);
    CHECK(std::abs(z[2] - porism::unit(2 * porism::kTwoPi / 3)) <= 1e-14);

    const std::vector<cplx> half = {0.5};
    z = opuc::paraorthogonal_extension(half, 1.0);
    REQUIRE(z.size() == 2);
    CHECK(std::abs(z[0] - 1.0) <= 1e-14);
    CHECK(std::abs(z[1] + 1.0) <= 1e-14);

    const std::vector<cplx> f = {0.0, 0.0, 0.0, 0.9};
    z = opuc::paraorthogonal_extension(f, 1.0);
    REQUIRE(z.size() == 5);
    for (cplx p : z) CHECK(std::abs(std::abs(p) - 1.0) <= 1e-12);
    const auto b = porism::blaschke::solve(porism::blaschke::BlaschkeProduct::from_foci(f), 1.0);
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(z[i] - b[i]) <= 1e-9);

    const std::vector<cplx> outside = {1.2};
    CHECK_THROWS_AS(opuc::paraorthogonal_extension(outside, 1.0), std::invalid_argument);
}

TEST_CASE("paraorthogonal zeros are simple, unimodular and interlace") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, porism::kTwoPi);
    for (int t = 0; t < 40; ++t) {
        const auto f = random_disk(rng, 1 + t % 8, 0.95);
        const cplx l1 = porism::unit(u(rng));
        const cplx l2 = porism::unit(u(rng));
        const auto z1 = opuc::paraorthogonal_extension(f, l1);
        const auto z2 = opuc::paraorthogonal_extension(f, l2);
        double gap = 1.0;
        for (std::size_t i = 0; i < z1.size(); ++i) {
            CHECK(std::abs(std::abs(z1[i]) - 1.0) <= 1e-12);
            gap = std::min(gap, std::abs(z1[i] - z1[(i + 1) % z1.size()]));
        }
        CHECK(gap > 0.0);
        // Each arc (z1[i], z1[i+1]) holds exactly one point of z2.
        const std::size_t n = z1.size();
        for (std::size_t i = 0; i < n; ++i) {
            const double lo = porism::arg_0_2pi(z1[i]);
            double width = porism::arg_0_2pi(z1[(i + 1) % n]) - lo;
            if (width <= 0.0) width += porism::kTwoPi;
            int inside = 0;
            for (cplx w : z2) {
                double d = porism::arg_0_2pi(w) - lo;
                if (d < 0.0) d += porism::kTwoPi;
                if (d > 0.0 && d < width) ++inside;
            }
            CHECK(inside == 1);
        }
    }
}

TEST_CASE("wendroff_recover") {
    const std::vector<cplx> zz = {0.0, 0.0};
    auto z1 = opuc::paraorthogonal_extension(zz, 1.0);
    auto z2 = opuc::paraorthogonal_extension(zz, cplx(0.0, 1.0));
    CHECK(porism::max_coeff_diff(opuc::wendroff_recover(z1, 1.0, z2, cplx(0.0, 1.0)), ComplexPoly::monomial(2)) <= 1e-12);

    const std::vector<cplx> f = {0.3, cplx(0.0, -0.2)};
    z1 = opuc::paraorthogonal_extension(f, 1.0);
    z2 = opuc::paraorthogonal_extension(f, cplx(0.0, 1.0));
    const ComplexPoly want({cplx(0.0, -0.06), -cplx(0.3, -0.2), 1.0});
    CHECK(porism::max_coeff_diff(opuc::wendroff_recover(z1, 1.0, z2, cplx(0.0, 1.0)), want) <= 1e-9);

    CHECK_THROWS_AS(opuc::wendroff_recover(z1, 1.0, z1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(opuc::wendroff_recover(z1, 1.0, z1, cplx(0.0, 1.0)), std::domain_error);
}

TEST_CASE("wendroff round trip on random foci") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        const auto f = random_disk(rng, 1 + t % 7, 0.9);
        const cplx l1 = porism::unit(0.4 + t), l2 = porism::unit(1.9 + 1.1 * t);
        const auto phi = opuc::wendroff_recover(opuc::paraorthogonal_extension(f, l1), l1,
                                                opuc::paraorthogonal_extension(f, l2), l2);
        CHECK(porism::max_coeff_diff(phi, opuc::monic_from_foci(f)) <= 1e-9);
    }
}
