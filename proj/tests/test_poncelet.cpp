#include <doctest.h>

#include <random>

#include "porism/poncelet.hpp"

using porism::ComplexPoly;
using porism::cplx;
using porism::unit;
namespace pc = porism::poncelet;

namespace {

std::vector<cplx> random_disk(std::mt19937_64& rng, int n, double r) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> out;
    for (int i = 0; i < n; ++i) out.push_back(std::polar(r * std::sqrt(u(rng)), porism::kTwoPi * u(rng)));
    return out;
}

}  // namespace

TEST_CASE("family basics") {
    const pc::PonceletFamily fam({0.0, 0.0});
    CHECK(fam.n() == 3);
    CHECK(fam.product().degree() == 3);
    CHECK(fam.alphas().size() == 2);
    const auto poly = fam.polygon(1.0);
    REQUIRE(poly.size() == 3);
    CHECK(std::abs(poly[1] - unit(porism::kTwoPi / 3)) <= 1e-14);
    CHECK_THROWS_AS(pc::PonceletFamily({1.0}), std::invalid_argument);
}

TEST_CASE("tau") {
    const pc::PonceletFamily fam({0.0, 0.0});
    CHECK(std::abs(pc::tau(fam, 1.0, 1) - unit(porism::kTwoPi / 3)) <= 1e-14);
    CHECK(std::abs(pc::tau(fam, 1.0, 2) - unit(2 * porism::kTwoPi / 3)) <= 1e-14);
    CHECK(std::abs(pc::tau(fam, unit(0.4), 3) - unit(0.4)) <= 1e-14);
    CHECK(std::abs(pc::tau(fam, unit(0.4), -1) - unit(0.4 - porism::kTwoPi / 3)) <= 1e-14);
    CHECK(std::abs(pc::tau_rate(fam, unit(0.4), 1) - 1.0) <= 1e-14);

    std::mt19937_64 rng(12);
    for (int t = 0; t < 10; ++t) {
        const pc::PonceletFamily f(random_disk(rng, 2 + t % 5, 0.9));
        for (int j = 0; j < 8; ++j) {
            const cplx z = unit(0.77 * j + 0.1);
            const cplx w = pc::tau(f, z, 1);
            CHECK(std::abs(f.product()(w) - f.product()(z)) <= 1e-10);
            CHECK(std::abs(pc::tau(f, w, f.n() - 1) - z) <= 1e-10);
            CHECK(std::abs(pc::tau_rate(f, z, 1) - pc::tau_rate_fd(f, z, 1)) <= 1e-6);
            CHECK(pc::tau_rate(f, z, 1) > 0.0);
        }
    }
}

TEST_CASE("chord poles") {
    auto p = pc::chord_pole(1.0, cplx(0.0, 1.0));
    CHECK_FALSE(p.infinite);
    CHECK(std::abs(p.value - cplx(1.0, 1.0)) <= 1e-15);
    p = pc::chord_pole(1.0, 1.0);
    CHECK(std::abs(p.value - 1.0) <= 1e-15);
    p = pc::chord_pole(1.0, -1.0);
    CHECK(p.infinite);
    CHECK(std::abs(std::abs(p.direction) - 1.0) <= 1e-15);
    CHECK(std::abs(p.direction.imag()) <= 1e-15);

    const pc::PonceletFamily fam({0.0, 0.0, 0.0});
    CHECK(pc::chord_pole(fam, unit(0.3), 2).infinite);
    p = pc::chord_pole(fam, 1.0, 1);
    CHECK(std::abs(p.value - cplx(1.0, 1.0)) <= 1e-13);
}

TEST_CASE("envelopes of the rotation families are circles") {
    const pc::PonceletFamily f3({0.0, 0.0});
    const pc::PonceletFamily f5({0.0, 0.0, 0.0, 0.0});
    for (int j = 0; j < 12; ++j) {
        const cplx z = unit(0.5 * j);
        CHECK(std::abs(std::abs(pc::envelope_point(f3, z, 1)) - 0.5) <= 1e-8);
        CHECK(std::abs(std::abs(pc::envelope_point(f5, z, 1)) - std::cos(std::numbers::pi / 5)) <= 1e-8);
        CHECK(std::abs(std::abs(pc::envelope_point(f5, z, 2)) - std::cos(2 * std::numbers::pi / 5)) <= 1e-8);
    }
}

TEST_CASE("three-periodic family with foci ±1/2 inscribes the ellipse with minor semi-axis 3/8") {
    const pc::PonceletFamily fam({0.5, -0.5});
    const double a = std::sqrt(0.375 * 0.375 + 0.25);
    for (int j = 0; j < 24; ++j) {
        const cplx p = pc::envelope_point(fam, unit(0.26 * j + 0.05), 1);
        CHECK(std::abs(std::abs(p - 0.5) + std::abs(p + 0.5) - 2.0 * a) <= 1e-7);
    }
}

TEST_CASE("chord_distance_sq") {
    CHECK(std::abs(pc::chord_distance_sq(1.0, 1.0, 1.0) - 1.0) <= 1e-15);
    CHECK(std::abs(pc::chord_distance_sq(1.0, -1.0, 3.0) - 4.0) <= 1e-15);
    CHECK(std::abs(pc::chord_distance_sq(1.0, -1.0, -0.5) - 1.0 / 9.0) <= 1e-15);
    const pc::PonceletFamily fam({0.0, 0.0});
    const cplx z = unit(0.2);
    const cplx w = pc::tau(fam, z, 1);
    CHECK(std::abs(pc::chord_distance_sq(z, w, pc::tau_rate(fam, z, 1)) - 4.0) <= 1e-12);
}

TEST_CASE("bezoutian") {
    const std::vector<cplx> zero = {0.0};
    auto p = pc::bezoutian_build(zero);
    CHECK(p.N == 2);
    CHECK(p.n() == 2);
    CHECK(std::abs(p(0.3, cplx(0.0, 0.2)) - cplx(0.3, 0.2)) <= 1e-15);

    const std::vector<cplx> zz = {0.0, 0.0};
    p = pc::bezoutian_build(zz);
    CHECK(std::abs(p(0.5, 2.0) - (4.0 + 1.0 + 0.25)) <= 1e-14);

    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int t = 0; t < 10; ++t) {
        auto foci = random_disk(rng, 1 + t % 5, 0.95);
        if (t % 2) foci.push_back(2.0 * unit(0.3 * t));
        p = pc::bezoutian_build(foci);
        const ComplexPoly phi = ComplexPoly::from_roots(foci);
        const ComplexPoly star = porism::reverse(phi, static_cast<int>(foci.size()));
        CHECK(p.m == t % 2);
        for (int j = 0; j < 5; ++j) {
            const cplx z(u(rng), u(rng)), w(u(rng), u(rng));
            const cplx direct = (w * phi(w) * star(z) - z * phi(z) * star(w)) / (w - z);
            CHECK(std::abs(p(z, w) - direct) <= 1e-9 * (1.0 + std::abs(direct)));
            CHECK(std::abs(p(z, w) - p(w, z)) <= 1e-10 * (1.0 + std::abs(direct)));
        }
        const auto r = porism::roots(p.slice(0.0));
        for (cplx f : foci) {
            double best = 1e9;
            for (cplx x : r) best = std::min(best, std::abs(x - f));
            CHECK(best <= 1e-7);
        }
    }
}

TEST_CASE("on-circle solution counts") {
    auto count = [](double a, cplx z0) {
        const std::vector<cplx> f = {0.0, 0.0, 0.0, a};
        return pc::on_circle_solutions(pc::bezoutian_build(f), z0);
    };
    auto r = count(0.9, 1.0);
    CHECK(r.expected == 4);
    CHECK(r.matches());
    r = count(1.5, -1.0);
    CHECK(r.expected == 2);
    CHECK(r.on_circle.size() == 2);
    r = count(1.5, 1.0);
    CHECK(r.on_circle.size() == 4);
    CHECK_FALSE(r.matches());
    r = count(2.4, 1.0);
    CHECK(r.on_circle.size() == 2);
    const std::vector<cplx> f = {0.0};
    CHECK_THROWS_AS(pc::on_circle_solutions(pc::bezoutian_build(f), 0.5), std::invalid_argument);
}

TEST_CASE("mirman_condition") {
    const std::vector<cplx> f15 = {0.0, 0.0, 0.0, 1.5};
    auto m = pc::mirman_condition(f15, 720);
    CHECK_FALSE(m.holds);
    CHECK(std::abs(m.min_value + 1.0) <= 1e-12);
    const std::vector<cplx> f24 = {0.0, 0.0, 0.0, 2.4};
    m = pc::mirman_condition(f24, 720);
    CHECK(m.holds);
    CHECK(std::abs(m.min_value - (4.0 - 4.76 / 1.96)) <= 1e-12);
    const std::vector<cplx> f09 = {0.0, 0.0, 0.0, 0.9};
    CHECK(pc::mirman_condition(f09, 720).holds);
    const std::vector<cplx> on = {1.0};
    CHECK_THROWS_AS(pc::mirman_condition(on, 10), std::invalid_argument);
}

TEST_CASE("ranks and counts") {
    CHECK(pc::component_rank(6, 2) == std::pair{3, 1});
    CHECK(pc::component_rank(6, 4) == std::pair{3, 2});
    CHECK(pc::component_rank(5, 2) == std::pair{5, 2});
    CHECK_THROWS_AS(pc::component_rank(5, 5), std::invalid_argument);
    CHECK(pc::totient_count(6, 6) == 1);
    CHECK(pc::totient_count(6, 3) == 1);
    CHECK(pc::totient_count(6, 2) == 1);
    CHECK(pc::totient_count(24, 24) == 4);
    CHECK_THROWS_AS(pc::totient_count(6, 4), std::invalid_argument);
    CHECK(pc::euler_phi(1) == 1);
    CHECK(pc::euler_phi(5) == 4);
    CHECK(pc::euler_phi(12) == 4);
    for (int n = 3; n <= 30; ++n)
        for (int d = 3; d <= n; ++d)
            if (n % d == 0) CHECK(pc::totient_count(n, d) == pc::euler_phi(d) / 2);
}

TEST_CASE("sample_package") {
    const pc::PonceletFamily fam({0.0, 0.0, 0.0, 0.0});
    const auto s = pc::sample_package(fam, 10);
    REQUIRE(s.size() == 20);
    for (std::size_t i = 1; i < s.size(); ++i) {
        const bool ordered = s[i - 1].k < s[i].k || (s[i - 1].k == s[i].k && s[i - 1].theta < s[i].theta);
        CHECK(ordered);
    }
    CHECK(s[0].k == 1);
    CHECK(s[10].k == 2);
    CHECK(std::abs(std::abs(s[3].point) - std::cos(std::numbers::pi / 5)) <= 1e-8);
    CHECK(std::abs(std::abs(s[13].pole.value) - 1.0 / std::cos(2 * std::numbers::pi / 5)) <= 1e-10);
    CHECK_THROWS_AS(pc::sample_package(fam, 0), std::invalid_argument);
}
