#include <doctest.h>

#include <random>

#include "porism/blaschke.hpp"

using porism::cplx;
using porism::unit;
using porism::blaschke::BlaschkeProduct;
namespace bl = porism::blaschke;

namespace {

std::vector<cplx> random_disk(std::mt19937_64& rng, int n, double r) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> out;
    for (int i = 0; i < n; ++i) out.push_back(std::polar(r * std::sqrt(u(rng)), porism::kTwoPi * u(rng)));
    return out;
}

}  // namespace

TEST_CASE("unimodular on the circle") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const BlaschkeProduct b(random_disk(rng, 1 + t % 9, 0.97), unit(0.3 * t));
        for (int k = 0; k < 50; ++k) CHECK(std::abs(std::abs(b(unit(0.13 * k))) - 1.0) <= 1e-13);
        CHECK(std::abs(b(0.0)) < 1.0);
    }
    CHECK_THROWS_AS(BlaschkeProduct({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(BlaschkeProduct({0.2}, 2.0), std::invalid_argument);
}

TEST_CASE("from_foci prepends the origin") {
    const std::vector<cplx> f = {0.5};
    const auto b = BlaschkeProduct::from_foci(f);
    CHECK(b.degree() == 2);
    CHECK(b.zeros()[0] == cplx(0.0));
    CHECK(std::abs(b.arg_derivative(1.0) - 4.0) <= 1e-14);
    CHECK(std::abs(b.arg_derivative(-1.0) - (1.0 + 0.75 / 2.25)) <= 1e-14);
    CHECK_THROWS_AS(b.arg_derivative(0.5), std::invalid_argument);
}

TEST_CASE("lifted argument is increasing with total increase 2πn") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const BlaschkeProduct b(random_disk(rng, 1 + t % 7, 0.95), unit(1.0 + t));
        CHECK(std::abs(b.lifted_arg(porism::kTwoPi) - b.lifted_arg(0.0) - porism::kTwoPi * b.degree()) <= 1e-12);
        double prev = b.lifted_arg(0.0);
        for (int k = 1; k <= 400; ++k) {
            const double th = porism::kTwoPi * k / 400.0;
            const double cur = b.lifted_arg(th);
            CHECK(cur > prev);
            prev = cur;
            CHECK(std::abs(std::arg(b(unit(th)) * std::polar(1.0, -cur))) <= 1e-12);
        }
    }
}

TEST_CASE("three routes to the argument increment agree") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        const BlaschkeProduct b(random_disk(rng, 2 + t % 5, 0.9));
        const double a0 = 0.2 + 0.1 * t, a1 = a0 + 4.0;
        const double closed = b.lifted_arg(a1) - b.lifted_arg(a0);
        CHECK(std::abs(bl::unwrapped_arg_increment(b, a0, a1) - closed) <= 1e-9);
        CHECK(std::abs(bl::integrated_arg_increment(b, a0, a1) - closed) <= 1e-9);
    }
}

TEST_CASE("solve") {
    const BlaschkeProduct z3({0.0, 0.0, 0.0});
    const auto z = bl::solve(z3, cplx(0.0, 1.0));
    REQUIRE(z.size() == 3);
    CHECK(std::abs(z[0] - cplx(0.0, 1.0)) <= 1e-14);
    CHECK(std::abs(z[1] - unit(7.0 * std::numbers::pi / 6.0)) <= 1e-14);
    CHECK(std::abs(z[2] - unit(-std::numbers::pi / 6.0)) <= 1e-14);
    CHECK_THROWS_AS(bl::solve(z3, 0.5), std::invalid_argument);

    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(0.0, porism::kTwoPi);
    for (int t = 0; t < 50; ++t) {
        const BlaschkeProduct b(random_disk(rng, 1 + t % 10, 0.97), unit(u(rng)));
        const cplx lambda = unit(u(rng));
        const auto ang = bl::solve_angles(b, lambda);
        REQUIRE(static_cast<int>(ang.size()) == b.degree());
        for (std::size_t i = 0; i < ang.size(); ++i) {
            CHECK(std::abs(b(unit(ang[i])) - std::conj(lambda)) <= 1e-10);
            if (i > 0) CHECK(ang[i] > ang[i - 1]);
        }
    }
}

TEST_CASE("composition") {
    const BlaschkeProduct z2({0.0, 0.0});
    const BlaschkeProduct z3({0.0, 0.0, 0.0});
    const auto c = bl::compose(z2, z3);
    CHECK(c.is_composite());
    CHECK(c.degree() == 6);
    const auto e = c.expanded();
    CHECK_FALSE(e.is_composite());
    for (cplx r : e.zeros()) CHECK(std::abs(r) <= 1e-12);
    CHECK(std::abs(c(unit(0.7)) - unit(4.2)) <= 1e-14);

    const BlaschkeProduct id({0.0});
    const BlaschkeProduct inner({cplx(0.3, 0.1), -0.5}, unit(0.4));
    const auto same = bl::compose(id, inner).expanded();
    CHECK(std::abs(same.unimodular() - inner.unimodular()) <= 1e-14);
    for (int k = 0; k < 20; ++k) CHECK(std::abs(same(unit(0.3 * k)) - inner(unit(0.3 * k))) <= 1e-13);

    const BlaschkeProduct outer({0.0, cplx(0.2, -0.4)});
    const BlaschkeProduct in3({0.0, 0.5, cplx(0.0, 0.6)});
    const auto comp = bl::compose(outer, in3);
    const auto flat = comp.expanded();
    CHECK(flat.degree() == 6);
    for (int k = 0; k < 40; ++k) {
        const cplx z = unit(0.157 * k);
        CHECK(std::abs(flat(z) - comp(z)) <= 1e-12);
        CHECK(std::abs(flat.arg_derivative(z) - comp.arg_derivative(z)) <= 1e-9);
    }
    const auto a = bl::solve(comp, unit(1.3));
    const auto b = bl::solve(flat, unit(1.3));
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-9);
    CHECK(std::abs(comp.lifted_arg(porism::kTwoPi) - comp.lifted_arg(0.0) - 6.0 * porism::kTwoPi) <= 1e-11);
}
